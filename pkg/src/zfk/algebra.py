"""Set-forming operations of the Proto and Anti theories on finite-or-cofinite codes.

Every operation either returns the exact result or raises
:class:`~zfk.errors.NotRepresentable`; nothing is approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Optional

from .coset import (
    EMPTY,
    UNIVERSE,
    CoSet,
    complement,
    fin,
    is_founded,
    make,
    subset,
)
from .duality import UNARY_OPS, anfd, fund, supplement, unary_op
from .errors import ChoiceViolation, NotAFunction, NotRepresentable

__all__ = [
    "MapSpec",
    "empty",
    "universe",
    "pair",
    "pair_exclusion",
    "opair",
    "anti_opair",
    "unpair",
    "boolean",
    "union",
    "intersection",
    "difference",
    "big_union",
    "comp_intersection",
    "subset",
    "proper_subset",
    "powerset",
    "richard",
    "separation",
    "confiscation",
    "replacement",
    "anti_replacement",
    "cartesian",
    "anti_cartesian",
    "successor",
    "ordinal",
    "is_finite_ordinal",
    "anti_ordinal",
    "equipollent",
    "slim",
    "direct_product",
    "anti_direct_product",
    "choice",
    "diagonal",
]


def empty() -> CoSet:
    return EMPTY


def universe() -> CoSet:
    return UNIVERSE


# -- pairs --------------------------------------------------------------------


def pair(a: CoSet, b: CoSet) -> CoSet:
    return fin(a, b)


def pair_exclusion(a: CoSet, b: CoSet) -> CoSet:
    return make(True, (a, b))


def opair(a: CoSet, b: CoSet) -> CoSet:
    """Kuratowski pair ``{{a}, {a, b}}``."""
    return fin(fin(a), fin(a, b))


def anti_opair(a: CoSet, b: CoSet) -> CoSet:
    # Kuratowski's pair with every brace replaced by pair exclusion.
    return pair_exclusion(pair_exclusion(a, a), pair_exclusion(a, b))


def unpair(y: CoSet) -> Optional[tuple[CoSet, CoSet]]:
    """Return ``(u, v)`` when ``y`` is the Kuratowski pair ``⟨u, v⟩``, else None."""
    if y.cofin or not 1 <= len(y.support) <= 2:
        return None
    if any(p.cofin for p in y.support):
        return None
    if len(y.support) == 1:
        (p,) = y.support
        if len(p.support) == 1:
            return p.support[0], p.support[0]
        return None
    p, q = y.support
    if len(p.support) == 2:
        p, q = q, p
    if len(p.support) != 1 or len(q.support) != 2:
        return None
    (u,) = p.support
    if u not in q.members:
        return None
    v = q.support[0] if q.support[1] == u else q.support[1]
    return u, v


# -- boolean lattice ----------------------------------------------------------


def union(a: CoSet, b: CoSet) -> CoSet:
    if not a.cofin and not b.cofin:
        return make(False, a.members | b.members)
    if a.cofin and b.cofin:
        return make(True, a.members & b.members)
    f, c = (a, b) if b.cofin else (b, a)
    return make(True, c.members - f.members)


def intersection(a: CoSet, b: CoSet) -> CoSet:
    if not a.cofin and not b.cofin:
        return make(False, a.members & b.members)
    if a.cofin and b.cofin:
        return make(True, a.members | b.members)
    f, c = (a, b) if b.cofin else (b, a)
    return make(False, f.members - c.members)


def difference(a: CoSet, b: CoSet) -> CoSet:
    return intersection(a, complement(b))


_BOOLEAN = {"union": union, "intersection": intersection, "difference": difference}


def boolean(a: CoSet, kind: str, b: CoSet) -> CoSet:
    try:
        op = _BOOLEAN[kind]
    except KeyError:
        raise ValueError(f"unknown boolean operation {kind!r}") from None
    return op(a, b)


def big_union(a: CoSet) -> CoSet:
    if a.cofin:
        # each y lies in infinitely many sets, only finitely many are excluded
        return UNIVERSE
    out = EMPTY
    for z in a.support:
        out = union(out, z)
    return out


def comp_intersection(a: CoSet) -> CoSet:
    """Intersection of every member of the complement of ``a``."""
    if not a.cofin:
        # the family is cofinite; for each y some member of it misses y
        return EMPTY
    out = UNIVERSE
    for z in a.support:
        out = intersection(out, z)
    return out


# -- power set and Richard set ------------------------------------------------


def proper_subset(y: CoSet, a: CoSet) -> bool:
    return y != a and subset(y, a)


def powerset(a: CoSet) -> CoSet:
    if a.cofin:
        if not a.support:
            return UNIVERSE
        raise NotRepresentable(f"the subsets of cofinite {a} form neither a finite nor a cofinite class")
    s = a.support
    return make(False, (make(False, c) for k in range(len(s) + 1) for c in combinations(s, k)))


def richard(a: CoSet) -> CoSet:
    """The non-subsets of ``a``."""
    return complement(powerset(a))


# -- separation / confiscation ------------------------------------------------

Predicate = Callable[[CoSet], bool]


def separation(a: CoSet, p: Predicate) -> CoSet:
    a = fund(a)
    return make(False, (y for y in a.support if p(y)))


def confiscation(a: CoSet, p: Predicate) -> CoSet:
    """``anfd(a) ∪ {y : p(y)}``; the enlarged set stays cofinite."""
    a = anfd(a)
    return make(True, (t for t in a.support if not p(t)))


# -- replacement --------------------------------------------------------------


@dataclass(frozen=True)
class MapSpec:
    """A unary map given as a Kuratowski graph, a builtin name, or a callable.

    Graph maps send points outside their domain to 0.
    """

    graph: Optional[CoSet] = None
    name: Optional[str] = None
    fn: Optional[Callable[[CoSet], CoSet]] = None

    def __post_init__(self):
        if sum(x is not None for x in (self.graph, self.name, self.fn)) != 1:
            raise ValueError("MapSpec needs exactly one of graph, name, fn")
        if self.name is not None:
            object.__setattr__(self, "name", unary_op(self.name))
        if self.graph is not None:
            object.__setattr__(self, "_table", graph_table(self.graph))

    @classmethod
    def of(cls, f) -> "MapSpec":
        if isinstance(f, MapSpec):
            return f
        if isinstance(f, CoSet):
            return cls(graph=f)
        if isinstance(f, str):
            return cls(name=f)
        if callable(f):
            return cls(fn=f)
        raise TypeError(f"cannot use {f!r} as a map")

    def __call__(self, x: CoSet) -> CoSet:
        if self.graph is not None:
            return self._table.get(x, EMPTY)
        if self.name is not None:
            return UNARY_OPS[self.name](x)
        return self.fn(x)

    def domain(self) -> tuple:
        if self.graph is None:
            raise ValueError("only graph maps have a finite domain")
        return tuple(sorted(self._table))


def graph_table(g: CoSet) -> dict:
    """Decode a functional Kuratowski graph into ``{argument: value}``."""
    if g.cofin:
        raise NotAFunction(f"{g} is cofinite, not a finite graph")
    table = {}
    for p in g.support:
        uv = unpair(p)
        if uv is None:
            raise NotAFunction(f"{p} in {g} is not an ordered pair")
        u, v = uv
        if u in table and table[u] != v:
            raise NotAFunction(f"{g} maps {u} to both {table[u]} and {v}")
        table[u] = v
    return table


def replacement(a: CoSet, f) -> CoSet:
    f = MapSpec.of(f)
    a = fund(a)
    return make(False, (f(z) for z in a.support))


def anti_replacement(a: CoSet, f) -> CoSet:
    """Complement of the image of the complement of ``anfd(a)``."""
    f = MapSpec.of(f)
    a = anfd(a)
    return make(True, (f(z) for z in a.support))


# -- cartesian products -------------------------------------------------------


def cartesian(a: CoSet, b: CoSet) -> CoSet:
    if a == EMPTY or b == EMPTY:
        return EMPTY
    if a.cofin or b.cofin:
        raise NotRepresentable(f"{a} × {b} has infinitely many pairs and non-pairs")
    return make(False, (opair(u, v) for u in a.support for v in b.support))


def anti_cartesian(a: CoSet, b: CoSet) -> CoSet:
    return complement(cartesian(complement(a), complement(b)))


# -- ordinals -----------------------------------------------------------------


def successor(a: CoSet) -> CoSet:
    return union(a, fin(a))


def ordinal(n: int) -> CoSet:
    if n < 0:
        raise ValueError("ordinals are natural numbers here")
    out = EMPTY
    for _ in range(n):
        out = successor(out)
    return out


def is_finite_ordinal(y: CoSet) -> bool:
    if not is_founded(y):
        return False
    s = y.support
    for x in s:
        if not x.members <= y.members:
            return False
    for x, z in combinations(s, 2):
        if not (x in z.members or z in x.members):
            return False
    return True


def anti_ordinal(n: int) -> CoSet:
    return supplement(ordinal(n))


def equipollent(a: CoSet, b: CoSet) -> bool:
    if a.cofin != b.cofin:
        return False
    return a.cofin or len(a.support) == len(b.support)


def slim(a: CoSet) -> bool:
    return not a.cofin


# -- choice -------------------------------------------------------------------


def _family(index: CoSet, family) -> list:
    if index.cofin:
        raise NotRepresentable(f"index set {index} is cofinite")
    f = MapSpec.of(family)
    out = []
    for i in index.support:
        ai = f(i)
        if ai.cofin:
            raise NotRepresentable(f"family member a_{i} = {ai} is cofinite")
        out.append((i, ai))
    return out


def direct_product(index: CoSet, family) -> CoSet:
    """All choice-function graphs ``{⟨i, f(i)⟩ : i ∈ index}`` with ``f(i) ∈ a_i``."""
    members = _family(index, family)
    idx = [i for i, _ in members]
    choices = [ai.support for _, ai in members]
    return make(False, (make(False, map(opair, idx, pick)) for pick in product(*choices)))


def anti_direct_product(index: CoSet, family) -> CoSet:
    """Complement of the direct product of the complemented family."""
    f = MapSpec.of(family)
    return complement(direct_product(index, MapSpec(fn=lambda i: complement(f(i)))))


def choice(family_set: CoSet) -> CoSet:
    """A selector meeting every member exactly once (picks code-order minima)."""
    if family_set.cofin:
        raise NotRepresentable(f"family {family_set} is cofinite")
    members = family_set.support
    for y in members:
        if y.cofin:
            raise NotRepresentable(f"family member {y} is cofinite")
        if not y.support:
            raise ChoiceViolation("family contains the empty set")
    for y1, y2 in combinations(members, 2):
        if not y1.members.isdisjoint(y2.members):
            raise ChoiceViolation(f"members {y1} and {y2} overlap")
    return make(False, (y.support[0] for y in members))


def diagonal(f) -> CoSet:
    """``{x : x ∉ f(x)}`` for a finite graph, with ``f(x) = 0`` off its domain."""
    if isinstance(f, MapSpec):
        if f.graph is None:
            raise NotAFunction("diagonal needs a finite graph")
        table = f._table
    else:
        table = graph_table(f)
    return make(True, (x for x, fx in table.items() if x in fx))
