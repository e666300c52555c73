"""Executable law checks for the free applicative construction.

Structures are generated over :class:`~freeap.core.TestCommand` with small
finite tag and result domains.  Every function involved (effect results,
mapped functions, pure values of function type) is a :class:`Table`, so two
structures can be compared exactly: both are reduced to their normal form
(tag sequence plus evaluator) by :func:`normal_form`, and the evaluators are
compared on every possible vector of results.

Each checker takes an :class:`Ops` bundle.  The default bundle holds the real
operations; :data:`MUTANTS` holds deliberately broken variants, and the
suite is expected to catch every one of them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from functools import partial
from typing import Any, Callable

from freeap import free, left, transform
from freeap.core import (
    CONCAT,
    IDENTITY,
    RUN_FORM,
    SUM,
    Const,
    Identity,
    RunForm,
    Table,
    TestCommand,
    compose,
    extensional_eq,
    identity,
    interpret_command,
    run_form_eq,
)
from freeap.free import Ap, FreeA, Pure
from freeap.left import ApL, FreeAL, PureL

VALUE = "v"


def fn(kind):
    """Kind of tables from the value domain to ``kind``."""
    return ("fn", kind)


@dataclass(frozen=True)
class GenConfig:
    max_size: int = 5
    tag_alphabet_size: int = 3
    result_domain_size: int = 3
    cases: int = 200
    seed: int = 0

    @property
    def tags(self) -> tuple:
        return tuple(f"t{i}" for i in range(self.tag_alphabet_size))

    @property
    def results(self) -> tuple:
        return tuple(range(self.result_domain_size))


@dataclass(frozen=True)
class LawReport:
    law: str
    cases: int
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.law} ({self.cases} cases)"
        if self.counterexample is not None:
            line += f"\n  counterexample: {self.counterexample}"
        return line


class Gen:
    """Seeded generator of commands, tables and structures.

    Results and plain values share one domain, ``range(result_domain_size)``.
    """

    def __init__(self, config: GenConfig):
        self.config = config
        self.rng = random.Random(config.seed)
        self.values = config.results

    def value(self, kind=VALUE):
        if kind == VALUE:
            return self.rng.choice(self.values)
        return Table({a: self.value(kind[1]) for a in self.values})

    def table(self):
        return self.value(fn(VALUE))

    def tag(self):
        return self.rng.choice(self.config.tags)

    def command(self, kind=VALUE) -> TestCommand:
        return TestCommand(self.tag(), Table({r: self.value(kind) for r in self.config.results}))

    def free(self, n: int, kind=VALUE) -> FreeA:
        if n == 0:
            return Pure(self.value(kind))
        return Ap(self.command(fn(kind)), self.free(n - 1))

    def left(self, n: int, kind=VALUE) -> FreeAL:
        if n == 0:
            return PureL(self.value(kind))
        return ApL(self.left(n - 1, fn(kind)), self.command())

    def size(self) -> int:
        return self.rng.randint(0, self.config.max_size)

    def split(self, parts: int) -> list[int]:
        """Sizes for ``parts`` structures whose total is at most ``max_size``."""
        total = self.size()
        cuts = sorted(self.rng.randint(0, total) for _ in range(parts - 1))
        bounds = [0, *cuts, total]
        return [b - a for a, b in zip(bounds, bounds[1:])]

    def renaming(self):
        """A tag-renaming natural transformation and its tag table."""
        table = Table({t: self.tag() for t in self.config.tags})
        return (lambda c: TestCommand(table(c.tag), c.resume)), table


# -- the oracle -------------------------------------------------------------


def normal_form(u: FreeA) -> RunForm:
    """Reduce a structure over test commands to its normal form directly."""
    heads = []
    while isinstance(u, Ap):
        heads.append(u.head)
        u = u.tail
    value = u.value

    def evaluate(rs):
        out = value
        for head, r in zip(reversed(heads), reversed(rs)):
            out = head.resume(r)(out)
        return out

    return RunForm(tuple(h.tag for h in heads), evaluate)


class Oracle:
    def __init__(self, config: GenConfig):
        self.results = config.results
        self.value_eq = extensional_eq(config.results)

    def forms(self, a: RunForm, b: RunForm) -> bool:
        return run_form_eq(a, b, self.results, self.value_eq)

    def free(self, a: FreeA, b: FreeA) -> bool:
        return self.forms(normal_form(a), normal_form(b))


# -- operation bundles and mutants ------------------------------------------


@dataclass(frozen=True)
class Ops:
    pure_fa: Callable = free.pure_fa
    map_fa: Callable = free.map_fa
    ap_fa: Callable = free.ap_fa
    one: Callable = free.one
    size: Callable = free.size
    count: Callable = free.count
    map_fal: Callable = left.map_fal
    r2l: Callable = left.r2l
    l2r: Callable = left.l2r
    lift_t: Callable = transform.lift_t
    raise_: Callable = transform.raise_

    def lower(self, t):
        return transform.lower(t, self.one)


REFERENCE = Ops()


def _map_drop_node(g, u):
    # Runs the head with a fixed result instead of keeping it as an effect.
    if isinstance(u, Ap):
        f = u.head.resume(0)
        return free.map_fa(lambda b: g(f(b)), u.tail)
    return free.map_fa(g, u)


def _ap_swap(u, v):
    # Lawful on its own (effects of v first), but not the free construction.
    return free.ap_fa(free.map_fa(lambda x: lambda f: f(x), v), u)


def _r2l_no_flip(u):
    heads = []
    while isinstance(u, Ap):
        heads.append(u.head)
        u = u.tail
    out = PureL(u.value)
    for head in reversed(heads):
        out = ApL(out, head)
    return out


def _one_twice(effect):
    return free.lift2(lambda a, _b: a, free.one(effect), free.one(effect))


def _lift_t_skip_last(k, u):
    heads, value = free.spine(u)
    out = Pure(value)
    for i, head in reversed(list(enumerate(heads))):
        out = Ap(head if i == len(heads) - 1 else k(head), out)
    return out


MUTANTS: dict[str, Ops] = {
    "map_drop_node": replace(REFERENCE, map_fa=_map_drop_node),
    "ap_swap": replace(REFERENCE, ap_fa=_ap_swap),
    "r2l_no_flip": replace(REFERENCE, r2l=_r2l_no_flip),
    "one_twice": replace(REFERENCE, one=_one_twice),
    "lift_t_skip_last": replace(REFERENCE, lift_t=_lift_t_skip_last),
}


# -- checker driver ---------------------------------------------------------


def _run(law: str, config: GenConfig, body: Callable[[Gen, Oracle], Any]) -> LawReport:
    """Run ``body`` for each case; it yields ``(label, inputs, check)`` triples."""
    gen = Gen(config)
    oracle = Oracle(config)
    for case in range(config.cases):
        for label, inputs, check in body(gen, oracle):
            try:
                ok = check()
                note = ""
            except Exception as exc:  # a crash is a counterexample too
                ok = False
                note = f" raised {type(exc).__name__}: {exc}"
            if not ok:
                return LawReport(law, case + 1, f"[{label}] {inputs}{note}")
    return LawReport(law, config.cases)


def _curried_compose(g):
    return lambda f: compose(g, f)


def check_functor_laws(config: GenConfig = GenConfig(), ops: Ops = REFERENCE) -> LawReport:
    def body(gen: Gen, eq: Oracle):
        u = gen.free(gen.size())
        w = gen.left(gen.size())
        f, g = gen.table(), gen.table()

        def eq_left(a, b):
            return eq.free(ops.l2r(a), ops.l2r(b))

        yield "identity", f"u={u!r}", lambda: eq.free(ops.map_fa(identity, u), u)
        yield (
            "composition",
            f"f={f!r} g={g!r} u={u!r}",
            lambda: eq.free(ops.map_fa(compose(g, f), u), ops.map_fa(g, ops.map_fa(f, u))),
        )
        yield "left identity", f"w={w!r}", lambda: eq_left(ops.map_fal(identity, w), w)
        yield (
            "left composition",
            f"f={f!r} g={g!r} w={w!r}",
            lambda: eq_left(ops.map_fal(compose(g, f), w), ops.map_fal(g, ops.map_fal(f, w))),
        )

    return _run("functor", config, body)


def check_applicative_laws(config: GenConfig = GenConfig(), ops: Ops = REFERENCE) -> LawReport:
    ap, pure, fmap = ops.ap_fa, ops.pure_fa, ops.map_fa

    def body(gen: Gen, eq: Oracle):
        u = gen.free(gen.size())
        yield "identity", f"u={u!r}", lambda: eq.free(ap(pure(identity), u), u)

        a, b, c = gen.split(3)
        uf, vf, x = gen.free(a, fn(VALUE)), gen.free(b, fn(VALUE)), gen.free(c)
        yield (
            "composition",
            f"u={uf!r} v={vf!r} x={x!r}",
            lambda: eq.free(ap(ap(ap(pure(_curried_compose), uf), vf), x), ap(uf, ap(vf, x))),
        )

        f, xv = gen.table(), gen.value()
        yield (
            "homomorphism",
            f"f={f!r} x={xv!r}",
            lambda: eq.free(ap(pure(f), pure(xv)), pure(f(xv))),
        )

        ui = gen.free(gen.size(), fn(VALUE))
        yield (
            "interchange",
            f"u={ui!r} x={xv!r}",
            lambda: eq.free(ap(ui, pure(xv)), ap(pure(lambda h: h(xv)), ui)),
        )

        b, c = gen.split(2)
        g, vl, xl = gen.table(), gen.free(b, fn(VALUE)), gen.free(c)
        yield (
            "map over ap",
            f"u={g!r} v={vl!r} x={xl!r}",
            lambda: eq.free(fmap(g, ap(vl, xl)), ap(fmap(partial(compose, g), vl), xl)),
        )

    return _run("applicative", config, body)


def check_naturality(config: GenConfig = GenConfig(), ops: Ops = REFERENCE) -> LawReport:
    def body(gen: Gen, eq: Oracle):
        h = gen.table()
        n = gen.size()

        def precompose(f):
            return compose(f, h)

        g = gen.command(fn(VALUE))
        u = gen.free(max(n - 1, 0))
        yield (
            "free constructor",
            f"h={h!r} g={g!r} u={u!r}",
            lambda: eq.free(Ap(g.map(precompose), u), Ap(g, ops.map_fa(h, u))),
        )

        gl = gen.left(max(n - 1, 0), fn(VALUE))
        c = gen.command()
        yield (
            "left constructor",
            f"h={h!r} g={gl!r} u={c!r}",
            lambda: eq.free(ops.l2r(ApL(ops.map_fal(precompose, gl), c)), ops.l2r(ApL(gl, c.map(h)))),
        )

        w = gen.left(n)
        yield (
            "l2r",
            f"h={h!r} u={w!r}",
            lambda: eq.free(ops.l2r(ops.map_fal(h, w)), ops.map_fa(h, ops.l2r(w))),
        )

        v = gen.free(n)
        yield (
            "r2l",
            f"h={h!r} u={v!r}",
            lambda: eq.free(ops.l2r(ops.r2l(ops.map_fa(h, v))), ops.l2r(ops.map_fal(h, ops.r2l(v)))),
        )

    return _run("naturality", config, body)


def check_iso(config: GenConfig = GenConfig(), ops: Ops = REFERENCE) -> LawReport:
    def body(gen: Gen, eq: Oracle):
        u = gen.free(gen.size(), gen.rng.choice([VALUE, fn(VALUE)]))
        yield "l2r . r2l", f"u={u!r}", lambda: eq.free(ops.l2r(ops.r2l(u)), u)
        yield "r2l length", f"u={u!r}", lambda: left.length(ops.r2l(u)) == free.size(u)

        w = gen.left(gen.size())

        def left_round_trip():
            back = ops.r2l(ops.l2r(w))
            return left.length(back) == left.length(w) and eq.free(ops.l2r(back), ops.l2r(w))

        yield "r2l . l2r", f"w={w!r}", left_round_trip

    return _run("isomorphism", config, body)


@dataclass
class Target:
    """An applicative target with a transformation into it and a direct
    interpretation that does not go through ``raise_``."""

    name: str
    dict: Any
    nat: Callable
    direct: Callable[[FreeA], Any]
    eq: Callable[[Any, Any], bool] = field(default=lambda a, b: a == b)


def targets(gen: Gen, eq: Oracle) -> list[Target]:
    picks = Table({t: gen.rng.choice(gen.config.results) for t in gen.config.tags})
    weights = Table({t: gen.rng.randint(0, 4) for t in gen.config.tags})

    def run_identity(u):
        heads, value = free.spine(u)
        for head in reversed(heads):
            value = head.resume(picks(head.tag))(value)
        return Identity(value)

    return [
        Target(
            "identity",
            IDENTITY,
            lambda c: Identity(c.resume(picks(c.tag))),
            run_identity,
            lambda a, b: eq.value_eq(a.value, b.value),
        ),
        Target(
            "const-sum",
            SUM,
            lambda c: Const(weights(c.tag)),
            lambda u: Const(sum(weights(h.tag) for h in free.spine(u)[0])),
        ),
        Target(
            "const-list",
            CONCAT,
            lambda c: Const([c.tag]),
            lambda u: Const([h.tag for h in free.spine(u)[0]]),
        ),
        Target("run-form", RUN_FORM, interpret_command, normal_form, eq.forms),
    ]


def check_adjunction(config: GenConfig = GenConfig(), ops: Ops = REFERENCE) -> LawReport:
    def body(gen: Gen, eq: Oracle):
        n = gen.size()
        u = gen.free(n)
        a, b = gen.split(2)
        h, x = gen.free(a, fn(VALUE)), gen.free(b)
        xv = gen.value()
        c = gen.command()
        for t in targets(gen, eq):
            raised = partial(ops.raise_, t.nat, t.dict)
            yield (
                f"{t.name}: raise . lower",
                f"u={u!r}",
                lambda t=t: t.eq(ops.raise_(ops.lower(t.direct), t.dict, u), t.direct(u)),
            )
            yield (
                f"{t.name}: lower . raise",
                f"e={c!r}",
                lambda t=t, raised=raised: t.eq(ops.lower(raised)(c), t.nat(c)),
            )
            yield (
                f"{t.name}: raise agrees with direct interpretation",
                f"u={u!r}",
                lambda t=t, raised=raised: t.eq(raised(u), t.direct(u)),
            )
            yield (
                f"{t.name}: raise preserves pure",
                f"x={xv!r}",
                lambda t=t, raised=raised: t.eq(raised(ops.pure_fa(xv)), t.dict.pure(xv)),
            )
            yield (
                f"{t.name}: raise preserves ap",
                f"h={h!r} x={x!r}",
                lambda t=t, raised=raised: t.eq(
                    raised(ops.ap_fa(h, x)), t.dict.ap(raised(h), raised(x))
                ),
            )

        g = gen.command(fn(VALUE))
        yield "one ap is cons", f"g={g!r} x={x!r}", lambda: eq.free(ops.ap_fa(ops.one(g), x), Ap(g, x))

        k1, r1 = gen.renaming()
        k2, r2 = gen.renaming()
        yield "lift_t id", f"u={u!r}", lambda: eq.free(ops.lift_t(transform.nat_id, u), u)
        yield (
            "lift_t composition",
            f"t={r1!r} s={r2!r} u={u!r}",
            lambda: eq.free(
                ops.lift_t(transform.nat_compose(k1, k2), u),
                ops.lift_t(k1, ops.lift_t(k2, u)),
            ),
        )
        yield (
            "lift_t renames tags",
            f"t={r1!r} u={u!r}",
            lambda: normal_form(ops.lift_t(k1, u)).tags == tuple(map(r1, normal_form(u).tags)),
        )
        yield (
            "lift_t preserves pure",
            f"x={xv!r}",
            lambda: eq.free(ops.lift_t(k1, ops.pure_fa(xv)), ops.pure_fa(xv)),
        )
        yield (
            "lift_t preserves ap",
            f"t={r1!r} h={h!r} x={x!r}",
            lambda: eq.free(
                ops.lift_t(k1, ops.ap_fa(h, x)),
                ops.ap_fa(ops.lift_t(k1, h), ops.lift_t(k1, x)),
            ),
        )

    return _run("adjunction", config, body)


def check_size_laws(config: GenConfig = GenConfig(), ops: Ops = REFERENCE) -> LawReport:
    def body(gen: Gen, eq: Oracle):
        a, b = gen.split(2)
        u, v, f = gen.free(a, fn(VALUE)), gen.free(b), gen.table()
        yield "size of map", f"u={v!r}", lambda: ops.size(ops.map_fa(f, v)) == ops.size(v)
        yield (
            "size of ap",
            f"u={u!r} v={v!r}",
            lambda: ops.size(ops.ap_fa(u, v)) == ops.size(u) + ops.size(v),
        )
        yield (
            "count is a const interpretation",
            f"u={u!r}",
            lambda: ops.count(u) == ops.raise_(lambda _e: Const(1), SUM, u).accumulated,
        )

    return _run("size", config, body)


CHECKERS = (
    check_functor_laws,
    check_applicative_laws,
    check_naturality,
    check_iso,
    check_adjunction,
    check_size_laws,
)


def run_all(config: GenConfig = GenConfig(), ops: Ops = REFERENCE) -> list[LawReport]:
    return [check(config, ops) for check in CHECKERS]


def mutation_matrix(config: GenConfig = GenConfig()) -> dict[str, list[LawReport]]:
    return {name: run_all(config, ops) for name, ops in MUTANTS.items()}
