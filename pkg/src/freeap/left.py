"""Left-nested free applicative and the conversions to and from ``FreeA``.

``PureL(h)`` followed by ``ApL`` nodes mirrors the idiom-bracket shape
``pure h <*> x1 <*> ... <*> xn``.  There is deliberately no applicative
instance here; interpret a left-nested value by converting it with
:func:`l2r` first.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Any, Generic, TypeVar

from freeap.core import compose
from freeap.free import Ap, FreeA, Pure

A = TypeVar("A")


class FreeAL(Generic[A]):
    __slots__ = ()

    def match(self, pure, ap):
        raise NotImplementedError

    def map(self, g):
        return map_fal(g, self)


@dataclass(frozen=True, repr=False)
class PureL(FreeAL[A]):
    value: A

    def match(self, pure, ap):
        return pure(self.value)

    def __repr__(self):
        return f"PureL({self.value!r})"


@dataclass(frozen=True, repr=False)
class ApL(FreeAL[A]):
    init: FreeAL
    last: Any

    def match(self, pure, ap):
        return ap(self.init, self.last)

    def __repr__(self):
        return f"({self.init!r}) :*: {self.last!r}"


def flip_apply(a):
    return lambda f: f(a)


def length(u: FreeAL) -> int:
    n = 0
    while isinstance(u, ApL):
        n += 1
        u = u.init
    return n


def map_fal(g, u: FreeAL) -> FreeAL:
    # fmap g (h :*: x) = fmap (g .) h :*: x, unrolled down to the PureL.
    lasts = []
    while isinstance(u, ApL):
        lasts.append(u.last)
        g = partial(compose, g)
        u = u.init
    out: FreeAL = PureL(g(u.value))
    for last in reversed(lasts):
        out = ApL(out, last)
    return out


def r2l(u: FreeA) -> FreeAL:
    heads = []
    while isinstance(u, Ap):
        heads.append(u.head)
        u = u.tail
    out: FreeAL = PureL(u.value)
    for head in reversed(heads):
        out = ApL(map_fal(flip_apply, out), head)
    return out


def l2r(u: FreeAL) -> FreeA:
    heads = []
    while isinstance(u, ApL):
        heads.append(u.last.map(flip_apply))
        u = u.init
    out: FreeA = Pure(u.value)
    for head in reversed(heads):
        out = Ap(head, out)
    return out
