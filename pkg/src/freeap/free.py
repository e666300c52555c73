"""The free applicative functor, in right-nested form.

A value is either ``Pure(x)`` or ``Ap(head, tail)`` where ``head`` is an
effect yielding a function and ``tail`` is another free applicative whose
result that function consumes.  The head runs before the tail's effects.

The type consumed by ``head`` is existential.  Code outside this package
should reach ``head`` and ``tail`` together, either through
:meth:`FreeA.match` or a ``match`` statement on ``Ap(head, tail)``, and never
assume anything about the hidden type.  Under that discipline
``Ap(g.map(lambda f: compose(f, h)), u)`` and ``Ap(g, map_fa(h, u))`` are
indistinguishable.

All operations walk the spine iteratively, so structures of any size are safe
from the interpreter's recursion limit.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Generic, TypeVar

from freeap.core import ApplicativeDict, compose, const

A = TypeVar("A")
B = TypeVar("B")


class FreeA(Generic[A]):
    __slots__ = ()

    def match(self, pure: Callable[[Any], Any], ap: Callable[[Any, Any], Any]):
        """Dispatch on the constructor; ``ap`` receives head and tail jointly."""
        raise NotImplementedError

    def map(self, g):
        return map_fa(g, self)


@dataclass(frozen=True, repr=False)
class Pure(FreeA[A]):
    value: A

    def match(self, pure, ap):
        return pure(self.value)

    def __repr__(self):
        return f"Pure({self.value!r})"


@dataclass(frozen=True, repr=False)
class Ap(FreeA[A]):
    head: Any
    tail: FreeA

    def match(self, pure, ap):
        return ap(self.head, self.tail)

    def __repr__(self):
        return f"{self.head!r} :$: {self.tail!r}"


def spine(u: FreeA) -> tuple[list, Any]:
    """Split ``u`` into its list of heads (execution order) and final value."""
    heads = []
    while isinstance(u, Ap):
        heads.append(u.head)
        u = u.tail
    return heads, u.value


def pure_fa(x: A) -> FreeA[A]:
    return Pure(x)


def map_fa(g: Callable[[A], B], u: FreeA[A]) -> FreeA[B]:
    if isinstance(u, Pure):
        return Pure(g(u.value))
    return Ap(u.head.map(partial(compose, g)), u.tail)


def _uncurry(f):
    return lambda pair: f(pair[0])(pair[1])


def _pairing(x):
    return lambda y: (x, y)


def ap_fa(u: FreeA[Callable[[A], B]], v: FreeA[A]) -> FreeA[B]:
    """Applicative application; the effects of ``u`` come before those of ``v``.

    Unrolls ``(h :$: x) <*> v = fmap uncurry h :$: ((,) <$> x <*> v)`` along
    the spine of ``u``.
    """
    heads = []
    while isinstance(u, Ap):
        heads.append(u.head.map(_uncurry))
        u = map_fa(_pairing, u.tail)
    out = map_fa(u.value, v)
    for head in reversed(heads):
        out = Ap(head, out)
    return out


def one(effect) -> FreeA:
    """Embed a single effect."""
    return Ap(effect.map(const), Pure(()))


def size(u: FreeA) -> int:
    n = 0
    while isinstance(u, Ap):
        n += 1
        u = u.tail
    return n


# Same measure under the name used for static effect counting.
count = size


def _apply(f, x):
    return f(x)


def lift2(h: Callable[[Any, Any], Any], x: FreeA, y: FreeA) -> FreeA:
    """Lift the two-argument function ``h`` over two computations."""
    return ap_fa(map_fa(lambda a: partial(h, a), x), y)


def lift3(h: Callable[[Any, Any, Any], Any], x: FreeA, y: FreeA, z: FreeA) -> FreeA:
    return lift2(_apply, lift2(lambda a, b: partial(h, a, b), x, y), z)


FREE_APPLICATIVE = ApplicativeDict(pure=pure_fa, ap=ap_fa, name="free-applicative")
