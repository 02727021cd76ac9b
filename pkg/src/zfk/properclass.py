"""Classes with a decidable membership test but no finite-or-cofinite code.

A :class:`ClassView` is only an oracle.  Class equality is not provided;
classes are compared pointwise on an explicit test universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from . import algebra as alg
from .coset import CoSet, complement, fin, make, member
from .duality import supplement
from .errors import UndecidableFragment
from .logic.evaluate import Evaluator
from .logic.parser import parse_formula, to_text
from .logic.syntax import (
    And,
    Apply,
    BoundedExists,
    BoundedForAll,
    Equal,
    Exists,
    ForAll,
    Iff,
    Implies,
    Member,
    Not,
    Or,
    Pred,
    Var,
    free_vars,
)

__all__ = [
    "ClassView",
    "Representable",
    "Unknown",
    "class_of",
    "comprehend",
    "omega",
    "wset",
    "russell",
    "pairs",
    "non_pairs",
    "subsets_of",
    "diagonal_class",
    "probe_representation",
    "probe_pool",
]


@dataclass(frozen=True)
class ClassView:
    oracle: Callable[[CoSet], bool]
    name: str = "class"

    def __contains__(self, y: CoSet) -> bool:
        return bool(self.oracle(y))

    def __call__(self, y: CoSet) -> bool:
        return bool(self.oracle(y))

    def __repr__(self):
        return f"ClassView({self.name})"


def class_of(a: CoSet) -> ClassView:
    return ClassView(lambda y: member(y, a), str(a))


def _guarded(f) -> bool:
    """Syntactic check that every unbounded quantifier has a finite-candidate guard."""
    if isinstance(f, (Member, Equal, Pred)):
        return True
    if isinstance(f, Not):
        return _guarded(f.body)
    if isinstance(f, (And, Or, Implies, Iff)):
        return _guarded(f.left) and _guarded(f.right)
    if isinstance(f, (BoundedForAll, BoundedExists)):
        return _guarded(f.body)
    if isinstance(f, (ForAll, Exists)):
        x = Var(f.var)
        body = f.body
        if type(body) is type(f):
            # Kuratowski-style pair of quantifiers
            pat = Apply("op", (x, Var(body.var)))
            if any(pat in (getattr(a, "left", None), getattr(a, "right", None)) for a in _atoms(body.body)):
                return _guarded(body.body)
        for a in _atoms(body):
            if isinstance(a, (Member, Equal)) and x in (a.left,) and f.var not in free_vars(a.right):
                return _guarded(body)
            if isinstance(a, Equal) and a.right == x and f.var not in free_vars(a.left):
                return _guarded(body)
            if isinstance(a, Pred) and a.name in ("subset", "psubset") and a.args[0] == x:
                return _guarded(body)
        return False
    return False


def _atoms(f):
    if isinstance(f, (Member, Equal, Pred)):
        yield f
    elif isinstance(f, Not):
        yield from _atoms(f.body)
    elif isinstance(f, (And, Or, Implies, Iff)):
        yield from _atoms(f.left)
        yield from _atoms(f.right)


def comprehend(var: str, body, env: Optional[dict] = None, preds=None, funcs=None) -> ClassView:
    """``{var : body}`` as a class; ``body`` may be text or a Formula."""
    if isinstance(body, str):
        body = parse_formula(body)
    env = dict(env or {})
    extra = free_vars(body) - {var} - set(env)
    if extra:
        raise UndecidableFragment(f"free variables {sorted(extra)} are not bound")
    if not _guarded(body):
        raise UndecidableFragment(f"{to_text(body)} has an unguarded quantifier")
    ev = Evaluator(preds=preds or {}, funcs=funcs or {})
    return ClassView(lambda y: ev.eval(body, {**env, var: y}), f"{{ {var} : {to_text(body)} }}")


def omega() -> ClassView:
    return ClassView(alg.is_finite_ordinal, "omega")


def wset() -> ClassView:
    """Everything that is not the supplement of a finite ordinal."""
    return ClassView(lambda y: not alg.is_finite_ordinal(supplement(y)), "wset")


def russell() -> ClassView:
    return ClassView(lambda y: not member(y, y), "russell")


def pairs() -> ClassView:
    return ClassView(lambda y: alg.unpair(y) is not None, "pairs")


def non_pairs() -> ClassView:
    return ClassView(lambda y: alg.unpair(y) is None, "non-pairs")


def subsets_of(a: CoSet) -> ClassView:
    return ClassView(lambda y: alg.subset(y, a), f"subsets of {a}")


def diagonal_class(f) -> ClassView:
    m = alg.MapSpec.of(f)
    return ClassView(lambda x: not member(x, m(x)), "diagonal")


# -- representability probe --------------------------------------------------


@dataclass(frozen=True)
class Representable:
    code: CoSet
    caveat: str = "verified on the test universe and its one-step extension"


@dataclass(frozen=True)
class Unknown:
    witness_in: Optional[CoSet]
    witness_out: Optional[CoSet]


def probe_pool(universe: Iterable[CoSet]) -> list:
    """Codes one construction step outside ``universe``.

    Singletons, double singletons, successors and pairs with low-rank codes
    of every element, plus their complements and supplements.
    """
    U = list(universe)
    inside = set(U)
    low = [a for a in U if a.rank <= 1]
    out = {}
    for x in U:
        base = [fin(x), fin(fin(x)), alg.successor(x)]
        for z in low:
            base.append(alg.opair(x, z))
            base.append(alg.opair(z, x))
        for b in base:
            for c in (b, complement(b), supplement(b)):
                if c not in inside:
                    out[c] = None
    return sorted(out)


def probe_representation(C: ClassView, U, pool: Optional[list] = None) -> Union[Representable, Unknown]:
    """Look for a code with support in ``U`` that matches ``C``.

    Only two codes can match ``C`` on ``U``: ``Fin(C ∩ U)`` and
    ``CoFin(U - C)``.  Each is tested on the codes one step outside ``U``;
    the survivor with the least code wins.  If both fail, the refuting
    elements are returned: a member of ``C`` missed by the finite candidate
    and a non-member admitted by the cofinite one.  ``pool`` may pass a
    precomputed ``probe_pool(U)``.
    """
    elems = list(getattr(U, "elements", U))
    inside = [y for y in elems if y in C]
    outside = [y for y in elems if y not in C]
    fin_cand = make(False, inside)
    cofin_cand = make(True, outside)
    witness_in = witness_out = None
    for y in probe_pool(elems) if pool is None else pool:
        c = y in C
        if c and witness_in is None and not member(y, fin_cand):
            witness_in = y
        if not c and witness_out is None and member(y, cofin_cand):
            witness_out = y
        if witness_in is not None and witness_out is not None:
            break
    survivors = []
    if witness_in is None:
        survivors.append(fin_cand)
    if witness_out is None:
        survivors.append(cofin_cand)
    if survivors:
        return Representable(min(survivors))
    return Unknown(witness_in, witness_out)
