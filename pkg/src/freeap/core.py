"""Applicative targets, the finite test effect family and the normal-form oracle.

Effect families are plain classes exposing ``map(f)``; that method plays the
role of the functor dictionary.  Applicative targets that are not classes of
our own (``Optional``, bare monoid values) are described by an
:class:`ApplicativeDict` instead.
"""
from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Any, Callable, Generic, Hashable, Iterable, Sequence, TypeVar

A = TypeVar("A")
B = TypeVar("B")
M = TypeVar("M")


def identity(x):
    return x


def compose(g, f):
    """Return ``g . f``."""
    return lambda x: g(f(x))


def const(x):
    return lambda _: x


@dataclass(frozen=True)
class ApplicativeDict:
    """The ``pure``/``ap`` pair of an applicative target type."""

    pure: Callable[[Any], Any]
    ap: Callable[[Any, Any], Any]
    name: str = "applicative"

    def map(self, f, x):
        return self.ap(self.pure(f), x)


# -- Identity ---------------------------------------------------------------


@dataclass(frozen=True)
class Identity(Generic[A]):
    value: A


IDENTITY = ApplicativeDict(
    pure=Identity,
    ap=lambda f, x: Identity(f.value(x.value)),
    name="identity",
)


# -- Const ------------------------------------------------------------------


@dataclass(frozen=True)
class Const(Generic[M]):
    """Carries a monoid element and ignores the result type."""

    accumulated: M


def const_applicative(unit, combine: Callable[[Any, Any], Any], name="const") -> ApplicativeDict:
    """Applicative structure of ``Const`` over the monoid ``(unit, combine)``."""
    return ApplicativeDict(
        pure=lambda _x: Const(unit),
        ap=lambda f, x: Const(combine(f.accumulated, x.accumulated)),
        name=name,
    )


SUM = const_applicative(0, operator.add, name="const-sum")
CONCAT = const_applicative([], operator.add, name="const-list")


# -- Optional ---------------------------------------------------------------

# ``None`` is the absent value, so this target cannot carry ``None`` results.
OPTIONAL = ApplicativeDict(
    pure=identity,
    ap=lambda f, x: None if f is None or x is None else f(x),
    name="optional",
)


# -- Finite lookup tables ---------------------------------------------------


class Table:
    """A function on a finite domain stored as an explicit lookup table.

    Tables compare and hash by their graph, which makes generated functions
    decidable for equality and gives them a stable ``repr``.
    """

    __slots__ = ("_items", "_lookup")

    def __init__(self, mapping: dict | Iterable[tuple[Hashable, Any]]):
        items = mapping.items() if isinstance(mapping, dict) else mapping
        self._items = tuple(sorted(items, key=lambda kv: repr(kv[0])))
        self._lookup = dict(self._items)

    def __call__(self, x):
        return self._lookup[x]

    @property
    def items(self):
        return self._items

    def __eq__(self, other):
        return isinstance(other, Table) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        body = ", ".join(f"{k!r}: {v!r}" for k, v in self._items)
        return "{" + body + "}"


# -- Test commands and their normal form ------------------------------------


@dataclass(frozen=True)
class TestCommand(Generic[A]):
    """An effect drawn from a finite tag alphabet returning a finite result.

    ``resume`` maps the observed result (an element of the result domain) to
    the value the command yields.
    """

    __test__ = False  # not a pytest class

    tag: str
    resume: Callable[[Any], A]

    def map(self, g: Callable[[A], B]) -> TestCommand[B]:
        return TestCommand(self.tag, compose(g, self.resume))

    def __repr__(self):
        return f"cmd({self.tag}, {self.resume!r})"


@dataclass(frozen=True)
class RunForm(Generic[A]):
    """Normal form of an applicative computation over test commands.

    ``tags`` lists the effects in execution order and ``eval`` computes the
    final value from the tuple of their results.
    """

    tags: tuple
    eval: Callable[[tuple], A]

    def map(self, g):
        return RunForm(self.tags, compose(g, self.eval))


def _run_form_ap(f: RunForm, x: RunForm) -> RunForm:
    split = len(f.tags)
    return RunForm(
        f.tags + x.tags,
        lambda rs: f.eval(rs[:split])(x.eval(rs[split:])),
    )


RUN_FORM = ApplicativeDict(
    pure=lambda x: RunForm((), const(x)),
    ap=_run_form_ap,
    name="run-form",
)


def interpret_command(cmd: TestCommand[A]) -> RunForm[A]:
    return RunForm((cmd.tag,), lambda rs: cmd.resume(rs[0]))


def extensional_eq(domain: Sequence) -> Callable[[Any, Any], bool]:
    """Equality that compares callables pointwise over ``domain``, recursively."""

    def eq(a, b):
        if isinstance(a, Table) and isinstance(b, Table):
            return a == b
        if callable(a) and callable(b):
            return all(eq(a(d), b(d)) for d in domain)
        return a == b

    return eq


def run_form_eq(a: RunForm, b: RunForm, results: Sequence, value_eq=operator.eq) -> bool:
    """Decide observational equality by enumerating every result vector."""
    if tuple(a.tags) != tuple(b.tags):
        return False
    for rs in itertools.product(results, repeat=len(a.tags)):
        if not value_eq(a.eval(rs), b.eval(rs)):
            return False
    return True
