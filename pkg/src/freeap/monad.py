"""The free monad over an effect family, and the embedding of ``FreeA`` into it."""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Generic, TypeVar

from freeap.core import compose
from freeap.free import FreeA, spine

A = TypeVar("A")
B = TypeVar("B")


class FreeM(Generic[A]):
    __slots__ = ()

    def bind(self, f):
        return bind(self, f)

    __rshift__ = bind

    def map(self, f):
        return map_fm(f, self)


@dataclass(frozen=True)
class Return(FreeM[A]):
    value: A


@dataclass(frozen=True)
class Step(FreeM[A]):
    """One effect whose result is the rest of the program."""

    effect: Any


def return_fm(x: A) -> FreeM[A]:
    return Return(x)


def bind(m: FreeM[A], f: Callable[[A], FreeM[B]]) -> FreeM[B]:
    if isinstance(m, Return):
        return f(m.value)
    return Step(m.effect.map(lambda rest: bind(rest, f)))


def map_fm(f: Callable[[A], B], m: FreeM[A]) -> FreeM[B]:
    return bind(m, compose(Return, f))


def lift_effect(effect) -> FreeM:
    return Step(effect.map(Return))


def sequence_(programs) -> FreeM[tuple]:
    """Run ``programs`` in order, discarding their results."""
    out: FreeM = Return(())
    for m in reversed(list(programs)):
        out = bind(m, partial(_then, out))
    return out


def _then(rest, _):
    return rest


def lift_a2m(u: FreeA[A]) -> FreeM[A]:
    """Embed an applicative program; its effects run head first."""
    heads, value = spine(u)
    out: FreeM = Return(value)
    for head in reversed(heads):
        out = Step(head.map(partial(_map_over, out)))
    return out


def _map_over(m, f):
    return map_fm(f, m)
