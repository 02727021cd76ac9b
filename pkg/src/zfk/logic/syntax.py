"""Abstract syntax for formulas over ∈ and = and for set terms.

All nodes are frozen dataclasses, so ASTs hash, compare structurally and
can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..coset import CoSet


# -- terms --------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lit:
    value: CoSet


@dataclass(frozen=True)
class SetBuilder:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Lambda:
    """``x -> body`` argument of sep/conf/repl/arepl; body is a Formula or a Term."""

    var: str
    body: object


@dataclass(frozen=True)
class OpName:
    """A bare unary-operator name, used as the first argument of ``eo``."""

    name: str


@dataclass(frozen=True)
class Apply:
    name: str
    args: tuple = ()


Term = Union[Var, Lit, SetBuilder, Apply, Lambda, OpName]


# -- formulas -----------------------------------------------------------------


@dataclass(frozen=True)
class Member:
    left: Term
    right: Term


@dataclass(frozen=True)
class Equal:
    left: Term
    right: Term


@dataclass(frozen=True)
class Pred:
    """Defined predicates (subset, psubset, equi) and schema letters like ``B(y)``."""

    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class BoundedForAll:
    var: str
    bound: Term
    body: "Formula"


@dataclass(frozen=True)
class BoundedExists:
    var: str
    bound: Term
    body: "Formula"


Formula = Union[Member, Equal, Pred, Not, And, Or, Implies, Iff, ForAll, Exists, BoundedForAll, BoundedExists]

ATOMS = (Member, Equal, Pred)
BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (ForAll, Exists)
BOUNDED = (BoundedForAll, BoundedExists)
TERMS = (Var, Lit, SetBuilder, Apply, Lambda, OpName)

# infix predicate keywords
INFIX_PREDS = ("subset", "psubset", "equi")


def is_formula(node) -> bool:
    return isinstance(node, ATOMS + BINARY + QUANTIFIERS + BOUNDED + (Not,))


def conj(*parts):
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(*parts):
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def free_vars(node) -> frozenset:
    """Free variable names of a formula or term."""
    if isinstance(node, Var):
        return frozenset({node.name})
    if isinstance(node, (Lit, OpName)):
        return frozenset()
    if isinstance(node, (SetBuilder, Lambda, ForAll, Exists)):
        return free_vars(node.body) - {node.var}
    if isinstance(node, BOUNDED):
        return free_vars(node.bound) | (free_vars(node.body) - {node.var})
    if isinstance(node, (Apply, Pred)):
        out = frozenset()
        for a in node.args:
            out |= free_vars(a)
        return out
    if isinstance(node, (Member, Equal) + BINARY):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, Not):
        return free_vars(node.body)
    raise TypeError(f"not an AST node: {node!r}")


def substitute(node, var: str, term):
    """Replace free occurrences of ``var`` by ``term``.

    Raises ValueError rather than capture a free variable of ``term``.
    """
    fv = free_vars(term)

    def go(n):
        if isinstance(n, Var):
            return term if n.name == var else n
        if isinstance(n, (Lit, OpName)):
            return n
        if isinstance(n, (SetBuilder, Lambda, ForAll, Exists)):
            if n.var == var:
                return n
            if n.var in fv and var in free_vars(n.body):
                raise ValueError(f"substituting for {var} would capture {n.var}")
            return type(n)(n.var, go(n.body))
        if isinstance(n, BOUNDED):
            bound = go(n.bound)
            if n.var == var:
                return type(n)(n.var, bound, n.body)
            if n.var in fv and var in free_vars(n.body):
                raise ValueError(f"substituting for {var} would capture {n.var}")
            return type(n)(n.var, bound, go(n.body))
        if isinstance(n, (Apply, Pred)):
            return type(n)(n.name, tuple(go(a) for a in n.args))
        if isinstance(n, (Member, Equal) + BINARY):
            return type(n)(go(n.left), go(n.right))
        if isinstance(n, Not):
            return Not(go(n.body))
        raise TypeError(f"not an AST node: {n!r}")

    return go(node)
