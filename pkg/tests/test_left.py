from hypothesis import given

from freeap.core import TestCommand, compose, const, identity
from freeap.free import Pure, map_fa, one, size
from freeap.laws import VALUE, fn
from freeap.left import ApL, PureL, flip_apply, l2r, length, map_fal, r2l

from conftest import RES, commands, frees, lefts, obs_eq, tables


def left_eq(a, b):
    return obs_eq(l2r(a), l2r(b))


def test_map_fal_pure():
    assert map_fal(lambda x: x + 1, PureL(2)) == PureL(3)


@given(lefts())
def test_map_fal_identity(w):
    assert left_eq(map_fal(identity, w), w)


@given(lefts(), tables(), tables())
def test_map_fal_composition(w, f, g):
    assert left_eq(map_fal(compose(g, f), w), map_fal(g, map_fal(f, w)))


@given(lefts(), tables())
def test_l2r_is_natural(w, h):
    assert obs_eq(l2r(map_fal(h, w)), map_fa(h, l2r(w)))


@given(frees(), tables())
def test_r2l_is_natural(u, h):
    assert left_eq(r2l(map_fa(h, u)), map_fal(h, r2l(u)))


@given(lefts(fn(VALUE), max_size=3), commands(), tables())
def test_left_constructor_naturality(g, c, h):
    lhs = ApL(map_fal(lambda f: compose(f, h), g), c)
    assert left_eq(lhs, ApL(g, c.map(h)))


def test_pure_conversions():
    assert r2l(Pure(7)) == PureL(7)
    assert l2r(PureL(7)) == Pure(7)


def test_r2l_of_one_unfolds():
    cmd = TestCommand("t0", identity)
    w = r2l(one(cmd))
    assert isinstance(w, ApL) and isinstance(w.init, PureL)
    assert w.last.tag == "t0"
    # init is PureL(flip ($) ()), i.e. a function that feeds () to its argument
    assert w.init.value(const(5)) == 5
    for r in RES:
        assert w.last.resume(r)(()) == r


@given(frees())
def test_r2l_preserves_node_count(u):
    assert length(r2l(u)) == size(u)


@given(frees())
def test_round_trip_right(u):
    assert obs_eq(l2r(r2l(u)), u)


@given(frees(fn(VALUE)))
def test_round_trip_right_function_valued(u):
    assert obs_eq(l2r(r2l(u)), u)


@given(lefts())
def test_round_trip_left(w):
    back = r2l(l2r(w))
    assert length(back) == length(w)
    assert left_eq(back, w)


def test_flip_apply():
    assert flip_apply(3)(lambda x: x * 2) == 6
