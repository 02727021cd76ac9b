"""Supplement calculus: the hereditary ∈/∉ mirror and the elements-operators."""

from __future__ import annotations

from typing import Callable

from .coset import UNIVERSE, EMPTY, CoSet, complement, fin, is_antifounded, is_founded, make
from .errors import NotRepresentable

__all__ = [
    "supplement",
    "elements_op",
    "fund",
    "anfd",
    "complements_iteration",
    "singleton",
    "identity",
    "UNARY_OPS",
    "INVOLUTIONS",
    "unary_op",
]


def supplement(a: CoSet) -> CoSet:
    """Swap the constructor at every level of the code."""
    s = a._cache.get("S")
    if s is None:
        s = make(not a.cofin, (supplement(x) for x in a.support))
        a._cache["S"] = s
        s._cache["S"] = a
    return s


def singleton(a: CoSet) -> CoSet:
    return fin(a)


def identity(a: CoSet) -> CoSet:
    return a


UNARY_OPS: dict[str, Callable[[CoSet], CoSet]] = {
    "supplement": supplement,
    "complement": complement,
    "singleton": singleton,
    "identity": identity,
}
# identity is an involution too; its image of a cofinite set is itself
INVOLUTIONS = frozenset({"supplement", "complement", "identity"})

_ALIASES = {"S": "supplement", "~": "complement", "k": "complement", "id": "identity", "sing": "singleton"}


def unary_op(name: str) -> str:
    """Resolve a surface alias (``S``, ``~``, ``id``...) to a canonical operator name."""
    name = _ALIASES.get(name, name)
    if name not in UNARY_OPS:
        raise ValueError(f"unknown unary operator {name!r}")
    return name


def elements_op(o: str, a: CoSet) -> CoSet:
    """Image ``{o(x) : x ∈ a}``.

    For a cofinite ``a`` the image is only cofinite when ``o`` is a bijection;
    the involutions qualify, with the image of ``CoFin(S)`` being
    ``CoFin(o[S])``.
    """
    o = unary_op(o)
    f = UNARY_OPS[o]
    if a.cofin and o not in INVOLUTIONS:
        raise NotRepresentable(f"image of cofinite {a} under {o} is neither finite nor cofinite")
    return make(a.cofin, (f(x) for x in a.support))


def fund(a: CoSet) -> CoSet:
    return a if is_founded(a) else EMPTY


def anfd(a: CoSet) -> CoSet:
    return a if is_antifounded(a) else UNIVERSE


def complements_iteration(a: CoSet) -> CoSet:
    """``(¬)a := ¬{(¬)}a``, unfolded literally over the support.

    Deliberately shares no code with :func:`supplement`; the two are
    compared against each other by the identity suite.
    """
    # {(¬)}a keeps the constructor and maps the support; ¬ then swaps it.
    image = make(a.cofin, (complements_iteration(x) for x in a.support))
    return complement(image)
