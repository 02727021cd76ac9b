"""Evaluation of formulas and terms over the code universe.

Atoms, bounded quantifiers over finite terms, and *guarded* unbounded
quantifiers are decided exactly.  A quantifier is guarded when its body pins
the variable down to finitely many candidates, e.g. ``exists z. (z in a & ...)``
with ``a`` finite, ``forall z. (z in a | ...)`` with ``a`` cofinite, or the
Kuratowski pattern ``exists u. exists v. (y = op(u, v) & ...)``.  Anything
else needs an explicit finite domain; the evaluator then ranges over it and
records that the answer is only an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from .. import algebra as alg
from ..coset import EMPTY, UNIVERSE, CoSet, complement, fin, make, subset
from ..duality import anfd, complements_iteration, elements_op, fund, supplement, unary_op
from ..errors import NotRepresentable, UndecidableFragment, ZFKError
from .syntax import (
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
    free_vars,
)

__all__ = ["Evaluator", "PredSpec", "evaluate", "eval_term", "term_member", "OPERATORS"]

# subsets of larger supports are not enumerated as quantifier candidates
MAX_SUBSET_SUPPORT = 12


def _asucc(v: CoSet) -> CoSet:
    return alg.intersection(v, make(True, (v,)))


def _ord(t: CoSet) -> CoSet:
    if not alg.is_finite_ordinal(t):
        raise ZFKError(f"{t} is not a finite ordinal")
    return t


OPERATORS: dict[str, Callable] = {
    "pair": alg.pair,
    "pexcl": alg.pair_exclusion,
    "op": alg.opair,
    "aop": alg.anti_opair,
    "cup": alg.union,
    "cap": alg.intersection,
    "minus": alg.difference,
    "Union": alg.big_union,
    "CInter": alg.comp_intersection,
    "pow": alg.powerset,
    "rich": alg.richard,
    "prod": alg.cartesian,
    "aprod": alg.anti_cartesian,
    "ord": _ord,
    "diag": alg.diagonal,
    "choice": alg.choice,
    "S": supplement,
    "fund": fund,
    "anfd": anfd,
    "citer": complements_iteration,
    "~": complement,
    "succ": alg.successor,
    "asucc": _asucc,
    "sing": fin,
}
# handled inside Evaluator.apply
SPECIAL_OPERATORS = frozenset({"set", "coset", "eo", "sep", "conf", "repl", "arepl"})
# builtin relations; EOn is the finite-ordinal test (the only E-ordinals here)
RELATIONS: dict[str, Callable] = {
    "subset": subset,
    "psubset": alg.proper_subset,
    "equi": alg.equipollent,
    "EOn": alg.is_finite_ordinal,
    "slim": alg.slim,
}


def _flatten(f, kind):
    if isinstance(f, kind):
        return _flatten(f.left, kind) + _flatten(f.right, kind)
    return [f]


def _disjuncts(f):
    out = []
    for d in _flatten(f, Or):
        if isinstance(d, Implies):
            out.extend(_disjuncts(Not(d.left)))
            out.extend(_disjuncts(d.right))
        elif isinstance(d, Not) and isinstance(d.body, Not):
            out.extend(_disjuncts(d.body.body))
        else:
            out.append(d)
    return out


def _strip(f):
    """Return ``(positive?, atom)`` for a possibly negated literal."""
    pos = True
    while isinstance(f, Not):
        pos = not pos
        f = f.body
    return pos, f


@dataclass
class Evaluator:
    """Evaluates formulas and terms; ``approximate`` records any domain-bounded step."""

    domain: Optional[tuple] = None
    preds: dict = field(default_factory=dict)
    funcs: dict = field(default_factory=dict)
    approximate: bool = False

    def __post_init__(self):
        if self.domain is not None:
            self.domain = tuple(self.domain)

    # -- terms ------------------------------------------------------------------

    def term(self, t, env) -> CoSet:
        if isinstance(t, Lit):
            return t.value
        if isinstance(t, Var):
            try:
                return env[t.name]
            except KeyError:
                raise ZFKError(f"unbound variable {t.name!r}") from None
        if isinstance(t, SetBuilder):
            return self.denote(t.var, t.body, env)
        if isinstance(t, Apply):
            return self.apply(t, env)
        raise ZFKError(f"{t!r} is not a set term")

    def apply(self, t: Apply, env) -> CoSet:
        n, args = t.name, t.args
        if n in self.funcs:
            return self.funcs[n](*(self.term(a, env) for a in args))
        if n in ("set", "coset"):
            return make(n == "coset", (self.term(a, env) for a in args))
        if n == "eo":
            op, a = args
            if not isinstance(op, OpName):
                raise ZFKError("eo expects an operator name first")
            return elements_op(op.name, self.term(a, env))
        if n in ("sep", "conf"):
            a, lam = args
            p = self._lambda_pred(lam, env)
            return (alg.separation if n == "sep" else alg.confiscation)(self.term(a, env), p)
        if n in ("repl", "arepl"):
            a, f = args
            m = self._map(f, env)
            return (alg.replacement if n == "repl" else alg.anti_replacement)(self.term(a, env), m)
        try:
            op = OPERATORS[n]
        except KeyError:
            raise ZFKError(f"unknown operator {n!r}") from None
        return op(*(self.term(a, env) for a in args))

    def _lambda_pred(self, lam, env):
        if not isinstance(lam, Lambda):
            raise ZFKError("expected 'x -> formula'")
        return PredSpec(lam.var, lam.body, dict(env), self)

    def _map(self, f, env):
        if isinstance(f, Lambda):
            return alg.MapSpec(fn=lambda z: self.term(f.body, {**env, f.var: z}))
        if isinstance(f, (Var, OpName)) and f.name not in env:
            return alg.MapSpec(name=unary_op(f.name))
        return alg.MapSpec(graph=self.term(f, env))

    def member(self, y: CoSet, t, env) -> bool:
        """``y ∈ t``; set-builders are read as classes, so need no code."""
        if isinstance(t, SetBuilder):
            return self.eval(t.body, {**env, t.var: y})
        return y in self.term(t, env)

    def denote(self, x: str, body, env) -> CoSet:
        """The code of ``{x : body}``, or NotRepresentable."""
        d = lambda f: self.denote(x, f, env)
        if x not in free_vars(body):
            return UNIVERSE if self.eval(body, env) else EMPTY
        if isinstance(body, Member):
            if body.left == Var(x) and x not in free_vars(body.right):
                if isinstance(body.right, SetBuilder):
                    inner = body.right
                    return self.denote(inner.var, inner.body, env)
                return self.term(body.right, env)
            raise NotRepresentable(f"{{{x} : ...}} with {x} on the right of ∈ has no finite-or-cofinite code")
        if isinstance(body, Equal):
            for a, b in ((body.left, body.right), (body.right, body.left)):
                if a == Var(x) and x not in free_vars(b):
                    return fin(self.term(b, env))
            raise UndecidableFragment(f"cannot solve the equation for {x}")
        if isinstance(body, Pred) and body.name in ("subset", "psubset") and len(body.args) == 2:
            a, b = body.args
            if a == Var(x) and x not in free_vars(b):
                B = self.term(b, env)
                p = alg.powerset(B)
                return p if body.name == "subset" else alg.difference(p, fin(B))
            raise NotRepresentable(f"supersets of a set form no finite-or-cofinite class")
        if isinstance(body, Not):
            return complement(d(body.body))
        if isinstance(body, And):
            return alg.intersection(d(body.left), d(body.right))
        if isinstance(body, Or):
            return alg.union(d(body.left), d(body.right))
        if isinstance(body, Implies):
            return alg.union(complement(d(body.left)), d(body.right))
        if isinstance(body, Iff):
            a, b = d(body.left), d(body.right)
            return alg.union(alg.intersection(a, b), alg.intersection(complement(a), complement(b)))
        if isinstance(body, (BoundedExists, BoundedForAll)) and x not in free_vars(body.bound):
            bound = self.term(body.bound, env)
            if bound.cofin:
                raise UndecidableFragment(f"quantifier over cofinite {bound}")
            exists = isinstance(body, BoundedExists)
            out = EMPTY if exists else UNIVERSE
            for c in bound.support:
                part = self.denote(x, body.body, {**env, body.var: c})
                out = alg.union(out, part) if exists else alg.intersection(out, part)
            return out
        raise UndecidableFragment(f"cannot compute a code for {{{x} : ...}}")

    # -- formulas ---------------------------------------------------------------

    def eval(self, f, env) -> bool:
        if isinstance(f, Member):
            return self.member(self.term(f.left, env), f.right, env)
        if isinstance(f, Equal):
            return self.term(f.left, env) == self.term(f.right, env)
        if isinstance(f, Pred):
            return self.relation(f, env)
        if isinstance(f, Not):
            return not self.eval(f.body, env)
        if isinstance(f, And):
            return self.eval(f.left, env) and self.eval(f.right, env)
        if isinstance(f, Or):
            return self.eval(f.left, env) or self.eval(f.right, env)
        if isinstance(f, Implies):
            return (not self.eval(f.left, env)) or self.eval(f.right, env)
        if isinstance(f, Iff):
            return self.eval(f.left, env) == self.eval(f.right, env)
        if isinstance(f, (BoundedForAll, BoundedExists)):
            bound = self.term(f.bound, env)
            if bound.cofin:
                if self.domain is None:
                    raise UndecidableFragment(f"quantifier over cofinite {bound} needs a domain")
                self.approximate = True
                cands = [c for c in self.domain if c in bound]
            else:
                cands = bound.support
            return self._quantify(isinstance(f, BoundedForAll), f.var, cands, f.body, env)
        if isinstance(f, (ForAll, Exists)):
            return self.quantifier(f, env)
        raise TypeError(f"not a formula: {f!r}")

    def relation(self, f: Pred, env) -> bool:
        if f.name in self.preds:
            return bool(self.preds[f.name](*(self.term(a, env) for a in f.args)))
        if f.name in RELATIONS:
            return RELATIONS[f.name](*(self.term(a, env) for a in f.args))
        raise UndecidableFragment(f"predicate {f.name!r} is not interpreted")

    def _quantify(self, universal, var, cands, body, env):
        e = dict(env)
        for c in cands:
            e[var] = c
            if self.eval(body, e) != universal:
                return not universal
        return universal

    def quantifier(self, f, env) -> bool:
        universal = isinstance(f, ForAll)
        kp = self._kuratowski(f, env)
        if kp is not None:
            return kp
        cands = self._guard(f, env)
        if cands is None:
            if self.domain is None:
                raise UndecidableFragment(f"unguarded quantifier over {f.var!r} needs a domain")
            self.approximate = True
            cands = self.domain
        return self._quantify(universal, f.var, cands, f.body, env)

    def _literals(self, f):
        if isinstance(f, ForAll):
            return [(not pos, a) for pos, a in map(_strip, _disjuncts(f.body))]
        # for ∃ the guard is a conjunct taken as is
        return [_strip(c) for c in _flatten(f.body, And)]

    def _guard(self, f, env):
        """Finite candidate list for the quantified variable, if the body pins it down.

        For ∀ a disjunct ``L`` means the body holds wherever ``L`` does, so the
        candidates are where ``¬L`` holds; for ∃ a conjunct ``L`` restricts
        witnesses to where ``L`` holds.  ``_literals`` normalizes both to
        "candidates satisfy (pos, atom)".
        """
        x = Var(f.var)
        for pos, atom in self._literals(f):
            if isinstance(atom, Member) and atom.left == x and f.var not in free_vars(atom.right):
                if isinstance(atom.right, SetBuilder):
                    continue
                t = self.term(atom.right, env)
                if t.cofin != pos:
                    return t.support
            elif isinstance(atom, Equal) and pos:
                for a, b in ((atom.left, atom.right), (atom.right, atom.left)):
                    if a == x and f.var not in free_vars(b):
                        return (self.term(b, env),)
            elif (
                isinstance(atom, Pred)
                and pos
                and atom.name in ("subset", "psubset")
                and atom.args[0] == x
                and f.var not in free_vars(atom.args[1])
            ):
                t = self.term(atom.args[1], env)
                if not t.cofin and len(t.support) <= MAX_SUBSET_SUPPORT:
                    s = t.support
                    return [make(False, c) for k in range(len(s) + 1) for c in combinations(s, k)]
        return None

    def _kuratowski(self, f, env):
        """Exact ``∃u∃v (s = op(u,v) ∧ …)`` / ``∀u∀v (s ≠ op(u,v) ∨ …)``."""
        inner = f.body
        if type(inner) is not type(f):
            return None
        u, v = f.var, inner.var
        pattern = Apply("op", (Var(u), Var(v)))
        universal = isinstance(f, ForAll)
        lits = self._literals(inner)
        for pos, atom in lits:
            if not (pos and isinstance(atom, Equal)):
                continue
            for a, b in ((atom.left, atom.right), (atom.right, atom.left)):
                if a == pattern and not ({u, v} & free_vars(b)):
                    uv = alg.unpair(self.term(b, env))
                    if uv is None:
                        return universal
                    return self.eval(inner.body, {**env, u: uv[0], v: uv[1]})
        return None


@dataclass
class PredSpec:
    """``var -> body`` closed over ``env``; callable on codes."""

    var: str
    body: object
    env: dict = field(default_factory=dict)
    evaluator: Optional[Evaluator] = None

    def __call__(self, y: CoSet) -> bool:
        ev = self.evaluator or Evaluator()
        return ev.eval(self.body, {**self.env, self.var: y})


def evaluate(f, env=None, domain: Optional[Iterable[CoSet]] = None, preds=None, funcs=None) -> bool:
    """Truth of ``f`` under ``env``; unguarded quantifiers range over ``domain``."""
    return Evaluator(domain=domain, preds=preds or {}, funcs=funcs or {}).eval(f, env or {})


def eval_term(t, env=None, domain=None, funcs=None) -> CoSet:
    return Evaluator(domain=domain, funcs=funcs or {}).term(t, env or {})


def term_member(y: CoSet, t, env=None, domain=None) -> bool:
    return Evaluator(domain=domain).member(y, t, env or {})
