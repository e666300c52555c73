from functools import partial

from hypothesis import given
import hypothesis.strategies as st

from freeap.core import IDENTITY, SUM, Const, TestCommand, compose, identity
from freeap.free import Ap, FreeA, Pure, ap_fa, count, lift2, lift3, map_fa, one, pure_fa, size
from freeap.laws import VALUE, fn, normal_form
from freeap.optparse import user_parser
from freeap.transform import raise_

from conftest import RES, commands, frees, obs_eq, tables


def test_pure():
    assert pure_fa(3) == Pure(3)
    assert size(pure_fa(3)) == 0
    assert pure_fa(()) == Pure(())
    assert raise_(identity, IDENTITY, pure_fa(5)).value == 5


def test_map_pure():
    assert map_fa(lambda x: x + 1, Pure(2)) == Pure(3)


@given(frees())
def test_map_identity(u):
    assert obs_eq(map_fa(identity, u), u)


@given(frees(), tables(), tables())
def test_map_composition(u, f, g):
    assert obs_eq(map_fa(compose(g, f), u), map_fa(g, map_fa(f, u)))


@given(frees(), tables())
def test_map_preserves_size(u, f):
    assert size(map_fa(f, u)) == size(u)


@given(frees())
def test_ap_identity(u):
    assert obs_eq(ap_fa(Pure(identity), u), u)


def test_ap_pure_pure():
    assert ap_fa(Pure(abs), Pure(-4)) == Pure(4)


def test_ap_orders_effects_left_to_right():
    u = ap_fa(one(TestCommand("t0", lambda r: lambda b: (r, b))), one(TestCommand("t1", identity)))
    rf = normal_form(u)
    assert rf.tags == ("t0", "t1")
    for r0 in RES:
        for r1 in RES:
            assert rf.eval((r0, r1)) == (r0, r1)


@given(frees(fn(VALUE), max_size=3), frees(max_size=3))
def test_ap_adds_sizes(u, v):
    assert size(ap_fa(u, v)) == size(u) + size(v)


@given(commands(fn(VALUE)), frees(max_size=4))
def test_naturality_of_constructor(g, u):
    # Ap(g . (. h), u) and Ap(g, fmap h u) cannot be told apart.
    h = lambda x: (x + 1) % 3
    assert obs_eq(Ap(g.map(lambda f: compose(f, h)), u), Ap(g, map_fa(h, u)))


def test_one():
    u = one(TestCommand("t0", identity))
    assert size(u) == 1
    assert isinstance(u, Ap) and u.tail == Pure(())
    rf = normal_form(u)
    assert rf.tags == ("t0",) and [rf.eval((r,)) for r in RES] == list(RES)


@given(commands(fn(VALUE)), frees(max_size=4))
def test_one_then_ap_is_constructor(g, x):
    assert obs_eq(ap_fa(one(g), x), Ap(g, x))


def test_size_and_count():
    assert size(Pure("x")) == 0 == count(Pure("x"))
    assert size(one(TestCommand("t0", identity))) == 1
    assert size(user_parser()) == 3


@given(st.integers(0, 5))
def test_count_of_k_effects(k):
    prog = Pure(0)
    for _ in range(k):
        prog = lift2(lambda a, b: a + b, one(TestCommand("t0", identity)), prog)
    assert count(prog) == k


@given(frees())
def test_count_is_const_interpretation(u):
    assert count(u) == raise_(lambda _e: Const(1), SUM, u).accumulated


def test_lift2_pure():
    assert lift2(lambda a, b: (a, b), Pure(1), Pure(2)) == Pure((1, 2))


@given(frees(fn(VALUE), max_size=3), frees(max_size=2))
def test_ap_is_lift2_apply(g, x):
    assert obs_eq(ap_fa(g, x), lift2(lambda f, a: f(a), g, x))


def test_lift2_and_lift3_order_effects():
    cmds = [one(TestCommand(t, identity)) for t in ("t2", "t0", "t1")]
    assert normal_form(lift2(lambda a, b: (a, b), cmds[0], cmds[1])).tags == ("t2", "t0")
    rf = normal_form(lift3(lambda a, b, c: (a, b, c), *cmds))
    assert rf.tags == ("t2", "t0", "t1")
    assert rf.eval((0, 1, 2)) == (0, 1, 2)


def test_lift3_pure():
    assert lift3(lambda a, b, c: a * 100 + b * 10 + c, Pure(1), Pure(2), Pure(3)) == Pure(123)


def test_match_visitor_exposes_head_and_tail_together():
    u = one(TestCommand("t1", identity))
    seen = u.match(pure=lambda x: None, ap=lambda head, tail: (head.tag, tail))
    assert seen == ("t1", Pure(()))
    assert Pure(4).match(pure=lambda x: x, ap=None) == 4


def test_large_structures_do_not_hit_recursion_limit():
    n = 10_000
    u = Pure(0)
    for _ in range(n):
        u = Ap(TestCommand("t0", lambda r: partial(int.__add__, r)), u)
    assert size(u) == n
    v = ap_fa(map_fa(lambda a: lambda b: a - b, u), u)
    assert size(v) == 2 * n
    assert raise_(lambda c: IDENTITY.pure(c.resume(1)), IDENTITY, v).value == 0
