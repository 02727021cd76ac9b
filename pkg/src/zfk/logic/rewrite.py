"""Meta-operators on formulas and terms.

``contravaluate`` flips every membership atom, ``dualize`` swaps the
connectives and quantifiers, and the two are tied by ``CV(A) ≡ ¬D(A)``.
``nnf`` pushes negations down to the atoms and ``term_complement`` moves the
negation of a set term into its defining formula.
"""

from __future__ import annotations

from ..coset import complement
from .syntax import (
    ATOMS,
    And,
    Apply,
    BoundedExists,
    BoundedForAll,
    Equal,
    Exists,
    ForAll,
    Iff,
    Implies,
    Lambda,
    Lit,
    Member,
    Not,
    OpName,
    Or,
    Pred,
    SetBuilder,
    Var,
    is_formula,
)

__all__ = [
    "contravaluate",
    "dualize",
    "nnf",
    "expand_connectives",
    "strip_double_negation",
    "term_complement",
    "negate",
]


def _map_terms(t, on_formula):
    """Rebuild a term, applying ``on_formula`` to every embedded formula."""
    if isinstance(t, (Var, Lit, OpName)):
        return t
    if isinstance(t, SetBuilder):
        return SetBuilder(t.var, on_formula(t.body))
    if isinstance(t, Lambda):
        body = on_formula(t.body) if is_formula(t.body) else _map_terms(t.body, on_formula)
        return Lambda(t.var, body)
    if isinstance(t, Apply):
        return Apply(t.name, tuple(_map_terms(a, on_formula) for a in t.args))
    raise TypeError(f"not a term: {t!r}")


def contravaluate(f):
    """Replace ∈ by ∉ everywhere; nothing else changes.

    A bounded quantifier ``∀x∈t`` hides the atom ``x ∈ t``, so its bound
    becomes ``~t``.
    """
    cv = contravaluate
    if isinstance(f, Member):
        return Not(Member(_map_terms(f.left, cv), _map_terms(f.right, cv)))
    if isinstance(f, Equal):
        return Equal(_map_terms(f.left, cv), _map_terms(f.right, cv))
    if isinstance(f, Pred):
        return Pred(f.name, tuple(_map_terms(a, cv) for a in f.args))
    if isinstance(f, Not):
        return Not(cv(f.body))
    if isinstance(f, (And, Or, Implies, Iff)):
        return type(f)(cv(f.left), cv(f.right))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, cv(f.body))
    if isinstance(f, (BoundedForAll, BoundedExists)):
        return type(f)(f.var, Apply("~", (_map_terms(f.bound, cv),)), cv(f.body))
    raise TypeError(f"not a formula: {f!r}")


def expand_connectives(f):
    """Rewrite ``->`` and ``<->`` with ``!``, ``&``, ``|``."""
    e = expand_connectives
    if isinstance(f, ATOMS):
        return f
    if isinstance(f, Not):
        return Not(e(f.body))
    if isinstance(f, (And, Or)):
        return type(f)(e(f.left), e(f.right))
    if isinstance(f, Implies):
        return Or(Not(e(f.left)), e(f.right))
    if isinstance(f, Iff):
        a, b = e(f.left), e(f.right)
        return And(Or(Not(a), b), Or(Not(b), a))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, e(f.body))
    if isinstance(f, (BoundedForAll, BoundedExists)):
        return type(f)(f.var, f.bound, e(f.body))
    raise TypeError(f"not a formula: {f!r}")


def dualize(f):
    """Swap ∧/∨ and ∀/∃, keep ∈ atoms, negate = atoms.

    This atom convention is the one under which ``CV(A) ≡ ¬D(A)`` holds for
    the whole {∈, =} language.  Embedded set-builder bodies are contravalued,
    matching how CV treats them.
    """
    return _dual(expand_connectives(f))


def _dual(f):
    cv = contravaluate
    if isinstance(f, Member):
        return Member(_map_terms(f.left, cv), _map_terms(f.right, cv))
    if isinstance(f, Equal):
        return Not(Equal(_map_terms(f.left, cv), _map_terms(f.right, cv)))
    if isinstance(f, Pred):
        # predicates carry no ∈ of their own at this level
        return Not(Pred(f.name, tuple(_map_terms(a, cv) for a in f.args)))
    if isinstance(f, Not):
        return Not(_dual(f.body))
    if isinstance(f, And):
        return Or(_dual(f.left), _dual(f.right))
    if isinstance(f, Or):
        return And(_dual(f.left), _dual(f.right))
    if isinstance(f, ForAll):
        return Exists(f.var, _dual(f.body))
    if isinstance(f, Exists):
        return ForAll(f.var, _dual(f.body))
    # ∀x∈t.A = ∀x(¬x∈t ∨ A) dualizes to ∃x(¬x∈t ∧ D(A)) = ∃x∈~t. D(A)
    bound = Apply("~", (_map_terms(f.bound, cv),))
    if isinstance(f, BoundedForAll):
        return BoundedExists(f.var, bound, _dual(f.body))
    if isinstance(f, BoundedExists):
        return BoundedForAll(f.var, bound, _dual(f.body))
    raise TypeError(f"not a formula: {f!r}")


def nnf(f):
    """Negation normal form: ``!`` only in front of atoms.

    ``->`` becomes ``|``; ``<->`` is kept, with a negation moved onto its
    right side.
    """
    return _nnf(f, False)


def _nnf(f, neg):
    if isinstance(f, ATOMS):
        return Not(f) if neg else f
    if isinstance(f, Not):
        return _nnf(f.body, not neg)
    if isinstance(f, And):
        return (Or if neg else And)(_nnf(f.left, neg), _nnf(f.right, neg))
    if isinstance(f, Or):
        return (And if neg else Or)(_nnf(f.left, neg), _nnf(f.right, neg))
    if isinstance(f, Implies):
        if neg:
            return And(_nnf(f.left, False), _nnf(f.right, True))
        return Or(_nnf(f.left, True), _nnf(f.right, False))
    if isinstance(f, Iff):
        return Iff(_nnf(f.left, False), _nnf(f.right, neg))
    if isinstance(f, ForAll):
        return (Exists if neg else ForAll)(f.var, _nnf(f.body, neg))
    if isinstance(f, Exists):
        return (ForAll if neg else Exists)(f.var, _nnf(f.body, neg))
    if isinstance(f, BoundedForAll):
        return (BoundedExists if neg else BoundedForAll)(f.var, f.bound, _nnf(f.body, neg))
    if isinstance(f, BoundedExists):
        return (BoundedForAll if neg else BoundedExists)(f.var, f.bound, _nnf(f.body, neg))
    raise TypeError(f"not a formula: {f!r}")


def strip_double_negation(f):
    s = strip_double_negation
    if isinstance(f, Not):
        if isinstance(f.body, Not):
            return s(f.body.body)
        return Not(s(f.body))
    if isinstance(f, ATOMS):
        return f
    if isinstance(f, (And, Or, Implies, Iff)):
        return type(f)(s(f.left), s(f.right))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, s(f.body))
    if isinstance(f, (BoundedForAll, BoundedExists)):
        return type(f)(f.var, f.bound, s(f.body))
    raise TypeError(f"not a formula: {f!r}")


def negate(f):
    return nnf(Not(f))


def _comp(t):
    return Apply("~", (t,))


def _eo_comp(t):
    return Apply("eo", (OpName("~"), t))


def term_complement(t):
    """A term denoting the complement of ``t``."""
    if isinstance(t, SetBuilder):
        return SetBuilder(t.var, negate(t.body))
    if isinstance(t, Lit):
        return Lit(complement(t.value))
    if isinstance(t, Apply):
        n, args = t.name, t.args
        if n == "~":
            return args[0]
        swaps = {"pow": "rich", "rich": "pow", "pair": "pexcl", "pexcl": "pair", "set": "coset", "coset": "set"}
        if n in swaps:
            return Apply(swaps[n], args)
        if n in ("prod", "aprod"):
            return Apply("aprod" if n == "prod" else "prod", tuple(_comp(a) for a in args))
        if n == "cup":
            return Apply("cap", tuple(_comp(a) for a in args))
        if n == "cap":
            return Apply("cup", tuple(_comp(a) for a in args))
        if n == "minus":
            a, b = args
            return Apply("cup", (_comp(a), b))
        if n == "Union":
            # ~⋃a = ⋂{~z : z ∈ a}
            return Apply("CInter", (_comp(_eo_comp(args[0])),))
        if n == "CInter":
            return Apply("Union", (_eo_comp(_comp(args[0])),))
        if n == "S":
            return Apply("eo", (OpName("S"), args[0]))
        if n == "eo" and isinstance(args[0], OpName) and args[0].name in ("S", "supplement"):
            return Apply("S", (args[1],))
        return _comp(t)
    if isinstance(t, Var):
        return _comp(t)
    raise TypeError(f"cannot complement {t!r}")
