"""Natural transformations, and the raise/lower correspondence.

A natural transformation is any callable taking an effect to an effect (or to
a value of an applicative target) without looking at the effect's result
type.  Python cannot enforce that, so naturality is left to the law checks.

``raise_`` turns a transformation out of the effect family into an
applicative morphism out of ``FreeA``; ``lower`` goes back by restricting a
morphism to single effects.  The two are mutually inverse.
"""
from __future__ import annotations

from typing import Any, Callable

from freeap.core import ApplicativeDict
from freeap.free import Ap, FreeA, Pure, one, spine

NatTrans = Callable[[Any], Any]
AppMorphism = Callable[[FreeA], Any]


def nat_id(effect):
    return effect


def nat_compose(t: NatTrans, u: NatTrans) -> NatTrans:
    return lambda effect: t(u(effect))


def lift_t(k: NatTrans, u: FreeA) -> FreeA:
    """Replace every effect of ``u`` by its image under ``k``."""
    heads, value = spine(u)
    out: FreeA = Pure(value)
    for head in reversed(heads):
        out = Ap(k(head), out)
    return out


def raise_(k: NatTrans, target: ApplicativeDict, u: FreeA):
    """Interpret ``u`` in ``target``, translating each effect with ``k``.

    ``Pure x`` becomes ``target.pure(x)`` and ``g :$: x`` becomes
    ``target.ap(k(g), raise_(k, target, x))``.
    """
    heads, value = spine(u)
    out = target.pure(value)
    for head in reversed(heads):
        out = target.ap(k(head), out)
    return out


def raising(k: NatTrans, target: ApplicativeDict) -> AppMorphism:
    """``raise_`` with its first two arguments fixed."""
    return lambda u: raise_(k, target, u)


def lower(t: AppMorphism, embed=one) -> NatTrans:
    """Restrict ``t`` to single effects, embedded with ``embed``."""
    return lambda effect: t(embed(effect))
