import hypothesis.strategies as st
import pytest
from hypothesis import settings

from freeap.core import Table, TestCommand, extensional_eq, run_form_eq
from freeap.free import Ap, Pure
from freeap.laws import VALUE, fn, normal_form
from freeap.left import ApL, PureL

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

TAGS = ("t0", "t1", "t2")
RES = (0, 1, 2)


def values(kind=VALUE):
    if kind == VALUE:
        return st.sampled_from(RES)
    return st.tuples(*[values(kind[1])] * len(RES)).map(lambda vs: Table(dict(zip(RES, vs))))


def tables():
    return values(fn(VALUE))


def commands(kind=VALUE):
    return st.builds(
        TestCommand,
        st.sampled_from(TAGS),
        st.tuples(*[values(kind)] * len(RES)).map(lambda vs: Table(dict(zip(RES, vs)))),
    )


@st.composite
def frees(draw, kind=VALUE, max_size=5):
    n = draw(st.integers(0, max_size))
    u = Pure(draw(values(kind if n == 0 else VALUE)))
    for i in range(n):
        k = kind if i == n - 1 else VALUE
        u = Ap(draw(commands(fn(k))), u)
    return u


@st.composite
def lefts(draw, kind=VALUE, max_size=4):
    n = draw(st.integers(0, max_size))
    kinds = [kind]
    for _ in range(n):
        kinds.append(fn(kinds[-1]))
    u = PureL(draw(values(kinds[-1])))
    for _ in range(n):
        u = ApL(u, draw(commands()))
    return u


same_values = extensional_eq(RES)


def obs_eq(a, b):
    """Observational equality of two free structures over test commands."""
    return run_form_eq(normal_form(a), normal_form(b), RES, same_values)


@pytest.fixture
def blog_fixture(tmp_path):
    path = tmp_path / "fixture.json"
    path.write_text('{"myblog.com": "a.com/1 b.com/2 a.com/3", "src.com/data": "payload"}')
    return path


_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion, then assert it."""

    def record(name: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        _CRITERIA.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
