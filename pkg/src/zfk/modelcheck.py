"""Finite slices of the code universe and the axiom/identity check suites."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb, prod
from typing import Callable, Iterable, Optional

from . import algebra as alg
from . import properclass as pc
from .coset import EMPTY, UNIVERSE, CoSet, complement, encode, fin, is_antifounded, is_founded, make, member
from .duality import anfd, complements_iteration, elements_op, fund, identity, singleton, supplement
from .errors import ChoiceViolation, NotRepresentable, SizeLimit, UndecidableFragment
from .logic.axioms import PROTO, characterization, derive_anti_axiom
from .logic.evaluate import Evaluator
from .logic.parser import parse_formula, to_text
from .logic.rewrite import contravaluate, dualize, term_complement
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
    Lit,
    Member,
    Not,
    OpName,
    Or,
    Pred,
    SetBuilder,
    Var,
    substitute,
)

__all__ = [
    "TestUniverse",
    "CheckEntry",
    "CheckReport",
    "enumerate_universe",
    "universe_size",
    "inductive_witnesses",
    "eval",
    "check_characterization",
    "run_axiom_suite",
    "check_identity_suite",
    "check_supplement_laws",
    "check_lattice_laws",
    "check_cv_dual",
    "check_term_complement",
    "random_formula",
    "random_builder",
    "random_term",
    "SAMPLE_PREDICATES",
    "SAMPLE_MAPS",
    "DEFAULT_CAP",
    "DEFAULT_TUPLE_CAP",
]

DEFAULT_CAP = 5000
DEFAULT_TUPLE_CAP = 20000


# -- universes ----------------------------------------------------------------


@dataclass(frozen=True)
class TestUniverse:
    rank_bound: int
    width_bound: int
    elements: tuple

    __test__ = False  # not a pytest class

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self._set

    @property
    def _set(self):
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_cached_set", s)
        return s


def universe_size(rank_bound: int, width_bound: int) -> int:
    """Closed-form count: each level is both constructors over small subsets of the last."""
    n = 2
    for _ in range(rank_bound):
        n = 2 * sum(comb(n, k) for k in range(min(width_bound, n) + 1))
    return n


def enumerate_universe(rank_bound: int, width_bound: int, cap: int = DEFAULT_CAP) -> TestUniverse:
    """All codes of rank at most ``rank_bound`` whose supports never exceed ``width_bound``."""
    if rank_bound < 0 or width_bound < 0:
        raise ValueError("bounds must be non-negative")
    size = universe_size(rank_bound, width_bound)
    if size > cap:
        raise SizeLimit(f"U({rank_bound},{width_bound}) has {size} elements, cap is {cap}")
    level = [EMPTY, UNIVERSE]
    for _ in range(rank_bound):
        subsets = [c for k in range(min(width_bound, len(level)) + 1) for c in combinations(level, k)]
        level = [make(cf, s) for s in subsets for cf in (False, True)]
    return TestUniverse(rank_bound, width_bound, tuple(sorted(set(level))))


# -- reports ------------------------------------------------------------------


def _code_json(a: CoSet):
    return json.loads(encode(a))


@dataclass
class CheckEntry:
    label: str
    verdict: str = "pass"
    counterexample: Optional[dict] = None
    coverage: float = 1.0
    detail: str = ""
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        # elapsed time is left out so that reports are byte-reproducible
        cx = None
        if self.counterexample is not None:
            cx = {k: _code_json(v) if isinstance(v, CoSet) else v for k, v in self.counterexample.items()}
        return {
            "label": self.label,
            "verdict": self.verdict,
            "counterexample": cx,
            "coverage": round(self.coverage, 6),
            "detail": self.detail,
        }

    def line(self) -> str:
        s = f"{self.verdict.upper():7} {self.label}"
        if self.coverage < 1:
            s += f"  [coverage {self.coverage:.3f}]"
        if self.detail:
            s += f"  ({self.detail})"
        if self.counterexample:
            s += "  counterexample: " + ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
        return s


@dataclass
class CheckReport:
    title: str
    entries: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, entry: CheckEntry):
        self.entries.append(entry)

    def extend(self, other: "CheckReport"):
        self.entries.extend(other.entries)

    @property
    def failed(self) -> list:
        return [e for e in self.entries if e.verdict == "fail"]

    @property
    def partial(self) -> list:
        return [e for e in self.entries if e.verdict == "partial"]

    def ok(self, strict: bool = False) -> bool:
        if strict:
            return all(e.verdict == "pass" for e in self.entries)
        return not self.failed

    def counts(self) -> dict:
        out = {"pass": 0, "partial": 0, "fail": 0}
        for e in self.entries:
            out[e.verdict] += 1
        return out

    def to_json(self) -> str:
        doc = {
            "title": self.title,
            **self.meta,
            "entries": [e.as_dict() for e in self.entries],
            "summary": self.counts(),
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_text(self, timings: bool = False) -> str:
        lines = [self.title]
        for k, v in sorted(self.meta.items()):
            lines.append(f"  {k}: {v}")
        for e in self.entries:
            lines.append(e.line() + (f"  {e.elapsed:.3f}s" if timings else ""))
        c = self.counts()
        lines.append(f"{c['pass']} pass, {c['partial']} partial, {c['fail']} fail")
        return "\n".join(lines)


# -- evaluation ---------------------------------------------------------------


def eval(formula, env: Optional[dict] = None, domain: Iterable[CoSet] = (), preds=None, funcs=None) -> bool:  # noqa: A001
    """Domain-relative truth: unguarded quantifiers range over ``domain``."""
    if isinstance(formula, str):
        formula = parse_formula(formula)
    dom = tuple(domain.elements if isinstance(domain, TestUniverse) else domain)
    return Evaluator(domain=dom, preds=preds or {}, funcs=funcs or {}).eval(formula, env or {})


def _matrix(m):
    return parse_formula(m) if isinstance(m, str) else m


def check_characterization(
    witness: CoSet, var: str, matrix, U, env=None, preds=None, funcs=None, label="characterization"
) -> CheckEntry:
    """``member(y, witness) ⇔ matrix(y)`` for every ``y`` in ``U``."""
    matrix = _matrix(matrix)
    env = dict(env or {})
    ev = Evaluator(domain=tuple(U), preds=preds or {}, funcs=funcs or {})
    t0 = time.perf_counter()
    for y in U:
        if member(y, witness) != ev.eval(matrix, {**env, var: y}):
            return CheckEntry(label, "fail", {**env, var: y}, elapsed=time.perf_counter() - t0)
    verdict = "partial" if ev.approximate else "pass"
    return CheckEntry(label, verdict, elapsed=time.perf_counter() - t0)


def _tuples(U, k: int, cap: int, seed: int):
    """All ``k``-tuples from ``U``, or a seeded sample of ``cap`` of them."""
    elems = tuple(U)
    total = len(elems) ** k
    if total <= cap:
        return list(product(elems, repeat=k)), 1.0
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(total), cap))
    out = []
    for p in picks:
        t = []
        for _ in range(k):
            p, r = divmod(p, len(elems))
            t.append(elems[r])
        out.append(tuple(reversed(t)))
    return out, cap / total


# -- axiom suite --------------------------------------------------------------

SAMPLE_PREDICATES: dict = {
    "finite": lambda y: not y.cofin,
    "founded": is_founded,
    "self-member": lambda y: member(y, y),
    "empty": lambda y: y == EMPTY,
}

SAMPLE_MAPS: dict = {
    "identity": identity,
    "singleton": singleton,
    "complement": complement,
    "supplement": supplement,
    "zero": lambda y: EMPTY,
}


def _eps(a: CoSet) -> CoSet:
    """Choice function for the epsilon row: least member, or 0 if there is none."""
    if a.cofin:
        # least code not excluded; the support is finite so one exists among its neighbours
        for c in sorted((EMPTY, UNIVERSE) + a.support + tuple(fin(s) for s in a.support)):
            if c not in a.members:
                return c
    return a.support[0] if a.support else EMPTY


@dataclass(frozen=True)
class _Row:
    label: str
    params: tuple
    witness: Callable
    variants: tuple = (("", {}, {}),)


def _variants():
    bs = tuple((f"B={k}", {"B": v}, {}) for k, v in SAMPLE_PREDICATES.items())
    fs = tuple((f"F={k}", {}, {"F": v}) for k, v in SAMPLE_MAPS.items())
    return bs, fs


def _proto_rows():
    bs, fs = _variants()
    return [
        _Row("1", (), lambda e, v: alg.empty()),
        _Row("2", ("a", "b"), lambda e, v: alg.pair(e["a"], e["b"])),
        _Row("3", ("a", "b"), lambda e, v: alg.cartesian(e["a"], e["b"])),
        _Row("4", ("a",), lambda e, v: alg.big_union(e["a"])),
        _Row("5", ("a",), lambda e, v: alg.separation(e["a"], v[1]["B"]), bs),
        _Row("6", ("a",), lambda e, v: alg.powerset(e["a"])),
        _Row("7", ("a",), lambda e, v: alg.replacement(e["a"], v[2]["F"]), fs),
    ]


def _anti_rows():
    bs, fs = _variants()
    return [
        _Row("1", (), lambda e, v: alg.universe()),
        _Row("2", ("a", "b"), lambda e, v: alg.pair_exclusion(e["a"], e["b"])),
        _Row("3", ("a", "b"), lambda e, v: alg.anti_cartesian(e["a"], e["b"])),
        _Row("4", ("a",), lambda e, v: alg.comp_intersection(e["a"])),
        _Row("5", ("a",), lambda e, v: alg.confiscation(e["a"], v[1]["B"]), bs),
        _Row("6", ("a",), lambda e, v: alg.richard(e["a"])),
        _Row("7", ("a",), lambda e, v: alg.anti_replacement(e["a"], v[2]["F"]), fs),
    ]


def _check_row(label, row: _Row, var, matrix, U, tuple_cap, seed) -> CheckEntry:
    t0 = time.perf_counter()
    tuples, coverage = _tuples(U, len(row.params), tuple_cap, seed)
    elems = tuple(U)
    verdict = "pass"
    fallbacks = 0
    pool = None
    for tag, preds, funcs in row.variants:
        ev = Evaluator(domain=elems, preds=preds, funcs=funcs)
        for tup in tuples:
            env = dict(zip(row.params, tup))
            try:
                w = row.witness(env, (tag, preds, funcs))
            except NotRepresentable:
                # no code exists; the matrix must at least define a genuine proper class
                try:
                    C = pc.comprehend(var, matrix, env, preds, funcs)
                    if pool is None:
                        pool = pc.probe_pool(elems)
                    probe = pc.probe_representation(C, elems, pool)
                except UndecidableFragment as exc:
                    return CheckEntry(label, "fail", env, coverage, f"{tag} fallback undecidable: {exc}".strip(),
                                      time.perf_counter() - t0)
                if isinstance(probe, pc.Representable):
                    cx = {**env, "code": probe.code}
                    return CheckEntry(label, "fail", cx, coverage, f"{tag} NotRepresentable but probe found a code",
                                      time.perf_counter() - t0)
                fallbacks += 1
                continue
            for y in elems:
                if member(y, w) != ev.eval(matrix, {**env, var: y}):
                    detail = f"{tag} witness {w}".strip()
                    return CheckEntry(label, "fail", {**env, var: y}, coverage, detail, time.perf_counter() - t0)
        if ev.approximate:
            verdict = "partial"
    detail = f"{fallbacks} properclass fallbacks" if fallbacks else ""
    return CheckEntry(label, verdict, None, coverage, detail, time.perf_counter() - t0)


def _predecessor_chain(y: CoSet) -> frozenset:
    """``y`` and everything that reaches ``y`` by repeated successor steps."""
    seen = {y}
    todo = [y]
    while todo:
        t = todo.pop()
        cands = (t,) if t.cofin else t.support
        for v in cands:
            if v not in seen and alg.successor(v) == t:
                seen.add(v)
                todo.append(v)
            elif v == t and alg.successor(v) == t:
                seen.add(v)
    return frozenset(seen)


def inductive_witnesses(U) -> tuple:
    """``V`` minus the predecessor chain of each element, and the supplements.

    ``V - chain(y)`` is an inductive set exactly when ``y`` is not a finite
    ordinal, so these are the sets the infinity matrix needs to see beyond U.
    """
    out = set()
    for y in U:
        c = make(True, _predecessor_chain(y))
        out.add(c)
        out.add(supplement(c))
    return tuple(sorted(out - set(U)))


def _check_class(label, var, matrix, C, U, detail="", extra=()) -> CheckEntry:
    t0 = time.perf_counter()
    ev = Evaluator(domain=tuple(U) + tuple(extra))
    for y in U:
        if ev.eval(matrix, {var: y}) != (y in C):
            return CheckEntry(label, "fail", {var: y}, 1.0, detail, time.perf_counter() - t0)
    return CheckEntry(label, "partial" if ev.approximate else "pass", None, 1.0, detail, time.perf_counter() - t0)


def _check_closed(label, formula, params, U, tuple_cap, seed, funcs=None) -> CheckEntry:
    t0 = time.perf_counter()
    tuples, coverage = _tuples(U, len(params), tuple_cap, seed)
    ev = Evaluator(domain=tuple(U), funcs=funcs or {})
    for tup in tuples:
        env = dict(zip(params, tup))
        if not ev.eval(formula, env):
            return CheckEntry(label, "fail", env, coverage, "", time.perf_counter() - t0)
    return CheckEntry(label, "partial" if ev.approximate else "pass", None, coverage, "", time.perf_counter() - t0)


def _families(U, max_members=2):
    """Finite families: sets of at most ``max_members`` codes drawn from ``U``."""
    elems = tuple(U)
    for k in range(max_members + 1):
        for c in combinations(elems, k):
            yield make(False, c)


def _check_products(label, U, anti: bool) -> CheckEntry:
    """Self-indexed products over finite families.

    Proto: ``prod_{i in s} fund(i)`` is 0 iff some factor is 0, and otherwise
    has one graph per combination of choices.  Anti mirrors this with anfd
    factors and V.
    """
    t0 = time.perf_counter()
    n = 0
    for s in _families(U):
        n += 1
        if anti:
            fam = alg.MapSpec(fn=anfd)
            p = alg.anti_direct_product(s, fam)
            expect_trivial = any(anfd(i) == UNIVERSE for i in s.support)
            ok = (p == UNIVERSE) == expect_trivial
        else:
            fam = alg.MapSpec(fn=fund)
            p = alg.direct_product(s, fam)
            expect_trivial = any(fund(i) == EMPTY for i in s.support)
            ok = (p == EMPTY) == expect_trivial
            if ok and not expect_trivial:
                ok = len(p.support) == prod(len(fund(i).support) for i in s.support)
        if not ok:
            return CheckEntry(label, "fail", {"s": s}, 1.0, f"product {p}", time.perf_counter() - t0)
    return CheckEntry(label, "pass", None, 1.0, f"{n} families", time.perf_counter() - t0)


def _check_ac(label, U) -> CheckEntry:
    """Choice sets for founded families of non-empty pairwise disjoint sets."""
    t0 = time.perf_counter()
    n = 0
    for s in _families(U):
        if not is_founded(s):
            continue
        try:
            c = alg.choice(s)
        except ChoiceViolation:
            continue
        n += 1
        union = alg.big_union(s)
        if not alg.subset(c, union) or any(len(c.members & z.members) != 1 for z in s.support):
            return CheckEntry(label, "fail", {"s": s}, 1.0, f"choice {c}", time.perf_counter() - t0)
    return CheckEntry(label, "pass", None, 1.0, f"{n} families", time.perf_counter() - t0)


def _mirror(matrix, var):
    """``¬matrix[var := S(var)]``: the anti-class through the supplement."""
    return Not(substitute(matrix, var, Apply("S", (Var(var),))))


def run_axiom_suite(U, tuple_cap: int = DEFAULT_TUPLE_CAP, seed: int = 0) -> CheckReport:
    report = CheckReport(
        "axiom suite",
        meta={"rank": getattr(U, "rank_bound", None), "width": getattr(U, "width_bound", None),
              "size": len(U), "seed": seed, "tuple_cap": tuple_cap},
    )
    for side, rows in (("proto", _proto_rows()), ("anti", _anti_rows())):
        for row in rows:
            schema = PROTO[row.label] if side == "proto" else derive_anti_axiom(PROTO[row.label])
            var, matrix = characterization(schema)
            label = f"{side}-{row.label} {schema.name}"
            report.add(_check_row(label, row, var, matrix, U, tuple_cap, seed))

        # infinity: no set witness; compare with the class oracle
        extra = inductive_witnesses(U)
        if side == "proto":
            for key in ("8", "8a"):
                var, matrix = characterization(PROTO[key])
                report.add(_check_class(f"proto-{key} {PROTO[key].name}", var, matrix, pc.omega(), U, "vs omega", extra))
        else:
            var, matrix = characterization(derive_anti_axiom(PROTO["8"]))
            report.add(_check_class("anti-8 infinity", var, matrix, pc.wset(), U, "vs wset", extra))
            var, matrix = characterization(PROTO["8a"])
            report.add(_check_class("anti-8a omega", var, _mirror(matrix, var), pc.wset(), U,
                                    "supplement mirror vs wset"))

        schema9 = PROTO["9"] if side == "proto" else derive_anti_axiom(PROTO["9"])
        report.add(_check_closed(f"{side}-9 epsilon", schema9.shape, ("a",), U, tuple_cap, seed, {"eps": _eps}))
        report.add(_check_products(f"{side}-9 product", U, anti=(side == "anti")))

        schema10 = PROTO["10"] if side == "proto" else derive_anti_axiom(PROTO["10"])
        report.add(_check_closed(f"{side}-10 extensionality", schema10.shape, ("a", "b"), U, tuple_cap, seed))

    report.add(_check_ac("proto-11 choice", U))
    return report


# -- random corpora -------------------------------------------------------------

_VARS = ("x", "y", "z")


def random_formula(rng: random.Random, depth: int = 5, variables=_VARS, consts=(EMPTY, UNIVERSE)):
    """A random {∈, =} formula over ``variables``; quantifiers rebind them."""

    def term():
        if consts and rng.random() < 0.2:
            return Lit(rng.choice(consts))
        return Var(rng.choice(variables))

    def go(d):
        if d == 0 or rng.random() < 0.25:
            return (Member if rng.random() < 0.7 else Equal)(term(), term())
        k = rng.randrange(9)
        if k == 0:
            return Not(go(d - 1))
        if k <= 4:
            return (And, Or, Implies, Iff)[k - 1](go(d - 1), go(d - 1))
        v = rng.choice(variables)
        if k <= 6:
            return (ForAll, Exists)[k - 5](v, go(d - 1))
        bound = Var(rng.choice([w for w in variables if w != v]))
        return (BoundedForAll, BoundedExists)[k - 7](v, bound, go(d - 1))

    return go(depth)


def _const_term(rng, U, depth=2):
    """A random closed term over codes from ``U`` built with the named operators."""
    if depth == 0 or rng.random() < 0.35:
        return Lit(rng.choice(U))
    op = rng.choice(["pair", "pexcl", "cup", "cap", "minus", "Union", "CInter", "pow", "rich", "S", "eoS", "~",
                     "set", "coset"])
    if op in ("pair", "pexcl", "cup", "cap", "minus"):
        return Apply(op, (_const_term(rng, U, depth - 1), _const_term(rng, U, depth - 1)))
    if op == "eoS":
        return Apply("eo", (OpName("S"), _const_term(rng, U, depth - 1)))
    if op in ("set", "coset"):
        return Apply(op, tuple(_const_term(rng, U, depth - 1) for _ in range(rng.randrange(3))))
    return Apply(op, (_const_term(rng, U, depth - 1),))


def random_term(rng: random.Random, U, depth: int = 2):
    return _const_term(rng, tuple(U), depth)


def random_builder(rng: random.Random, U, depth: int = 3, var: str = "y"):
    """``{y : φ}`` with φ decidable: atoms on ``y`` and closed terms, bounded quantifiers over finite codes."""
    elems = tuple(U)
    finite = [a for a in elems if not a.cofin] or [EMPTY]
    bound_vars = ("u", "v")

    def atom(scope):
        target = Var(rng.choice(scope))
        k = rng.randrange(5)
        if k == 0:
            return Member(target, _const_term(rng, elems, 1))
        if k == 1:
            return Member(Lit(rng.choice(elems)), target)
        if k == 2:
            return Equal(target, _const_term(rng, elems, 1))
        if k == 3:
            return Pred("subset", (target, _const_term(rng, elems, 1)))
        return Member(target, Var(rng.choice(scope)))

    def go(d, scope):
        if d == 0 or rng.random() < 0.3:
            return atom(scope)
        k = rng.randrange(6)
        if k == 0:
            return Not(go(d - 1, scope))
        if k <= 3:
            return (And, Or, Iff)[k - 1](go(d - 1, scope), go(d - 1, scope))
        free = [b for b in bound_vars if b not in scope]
        if not free:
            return Not(go(d - 1, scope))
        b = free[0]
        q = (BoundedForAll, BoundedExists)[k - 4]
        return q(b, Lit(rng.choice(finite)), go(d - 1, scope + (b,)))

    return SetBuilder(var, go(depth, (var,)))


# -- identity suite -------------------------------------------------------------


def _pointwise(label, U, k, law, tuple_cap, seed) -> CheckEntry:
    """``law(*t)`` must hold for every ``k``-tuple ``t``; it returns True or raises."""
    t0 = time.perf_counter()
    tuples, coverage = _tuples(U, k, tuple_cap, seed)
    names = ("a", "b", "c")[:k]
    for t in tuples:
        if not law(*t):
            return CheckEntry(label, "fail", dict(zip(names, t)), coverage, "", time.perf_counter() - t0)
    return CheckEntry(label, "pass", None, coverage, "", time.perf_counter() - t0)


def _supplement_laws():
    S, C, eo = supplement, complement, elements_op
    return [
        ("S1 idempotency", lambda a: S(S(a)) == a),
        ("S2 based-ness", lambda a: S(EMPTY) == UNIVERSE),
        ("S3 recursivity", lambda a: S(a) == eo("supplement", S(eo("supplement", a)))),
        ("S4 recursivity with complement", lambda a: S(a) == C(eo("supplement", a))),
        ("S5 elements-supplement", lambda a: eo("supplement", a) == C(S(a))),
        ("S6 complements-iteration of 0", lambda a: complements_iteration(EMPTY) == UNIVERSE),
        ("S7 supplement as co-iteration", lambda a: complements_iteration(a) == S(a)),
        ("K2", lambda a: C(a) == eo("supplement", S(a)) == S(eo("supplement", a))),
        ("EO complement-complement", lambda a: C(eo("complement", C(a))) == eo("complement", a)),
        ("EO complement-supplement", lambda a: C(eo("supplement", C(a))) == eo("supplement", a)),
        ("mirror founded/anti-founded", lambda a: is_founded(a) == is_antifounded(S(a))),
    ]


def _lattice_laws():
    C, U_, I = complement, alg.union, alg.intersection
    return [
        ("lattice involution", 1, lambda a: C(C(a)) == a),
        ("lattice De Morgan", 2, lambda a, b: C(U_(a, b)) == I(C(a), C(b)) and C(I(a, b)) == U_(C(a), C(b))),
        ("lattice absorption", 2, lambda a, b: U_(a, I(a, b)) == a and I(a, U_(a, b)) == a),
        ("lattice a|~a = V", 1, lambda a: U_(a, C(a)) == UNIVERSE),
        ("lattice a&~a = 0", 1, lambda a: I(a, C(a)) == EMPTY),
    ]


def check_supplement_laws(U, tuple_cap=DEFAULT_TUPLE_CAP, seed=0) -> CheckReport:
    report = CheckReport("supplement calculus", meta={"size": len(U)})
    for label, law in _supplement_laws():
        report.add(_pointwise(label, U, 1, law, tuple_cap, seed))
    return report


def check_lattice_laws(U, tuple_cap=DEFAULT_TUPLE_CAP, seed=0) -> CheckReport:
    report = CheckReport("boolean lattice", meta={"size": len(U)})
    for label, k, law in _lattice_laws():
        report.add(_pointwise(label, U, k, law, tuple_cap, seed))
    return report


def check_cv_dual(U, formulas: int = 500, assignments: int = 216, seed: int = 0, depth: int = 5) -> CheckEntry:
    """``CV(A)`` and ``¬D(A)`` agree on random formulas under random assignments."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    elems = tuple(U)
    tuples, coverage = _tuples(elems, len(_VARS), assignments, seed)
    for _ in range(formulas):
        f = random_formula(rng, depth)
        cv, nd = contravaluate(f), Not(dualize(f))
        ev = Evaluator(domain=elems)
        for t in tuples:
            env = dict(zip(_VARS, t))
            if ev.eval(cv, env) != ev.eval(nd, env):
                return CheckEntry("CV(A) = !D(A)", "fail", {**env, "formula": to_text(f)}, coverage, "",
                                  time.perf_counter() - t0)
    detail = f"{formulas} formulas x {len(tuples)} assignments"
    return CheckEntry("CV(A) = !D(A)", "pass", None, coverage, detail, time.perf_counter() - t0)


def check_term_complement(U, builders: int = 100, terms: int = 100, seed: int = 0) -> list:
    """``y in t`` iff ``y notin term_complement(t)`` for every ``y`` in ``U``."""
    rng = random.Random(seed)
    elems = tuple(U)
    out = []
    for label, gen, n in (
        ("term complement (set-builders)", lambda: random_builder(rng, elems), builders),
        ("term complement (operator terms)", lambda: random_term(rng, elems), terms),
    ):
        t0 = time.perf_counter()
        ev = Evaluator()
        done = skipped = 0
        entry = None
        # draw until n terms have been checked; non-representable draws do not count
        for _ in range(20 * n):
            if done == n:
                break
            t = gen()
            tc = term_complement(t)
            try:
                for y in elems:
                    if ev.member(y, t, {}) == ev.member(y, tc, {}):
                        entry = CheckEntry(label, "fail", {"y": y, "term": to_text(t)}, 1.0, f"complement {to_text(tc)}",
                                           time.perf_counter() - t0)
                        break
            except NotRepresentable:
                skipped += 1
                continue
            if entry:
                break
            done += 1
        if entry is None:
            detail = f"{done} terms" + (f", {skipped} not representable" if skipped else "")
            entry = CheckEntry(label, "pass" if done == n else "fail", None, 1.0, detail, time.perf_counter() - t0)
        out.append(entry)
    return out


def check_identity_suite(
    U, tuple_cap: int = DEFAULT_TUPLE_CAP, seed: int = 0, formulas: int = 500, assignments: int = 216,
    builders: int = 100, terms: int = 100,
) -> CheckReport:
    report = CheckReport(
        "identity suite",
        meta={"rank": getattr(U, "rank_bound", None), "width": getattr(U, "width_bound", None),
              "size": len(U), "seed": seed, "tuple_cap": tuple_cap},
    )
    report.extend(check_supplement_laws(U, tuple_cap, seed))
    report.extend(check_lattice_laws(U, tuple_cap, seed))
    report.add(check_cv_dual(U, formulas, assignments, seed))
    for e in check_term_complement(U, builders, terms, seed):
        report.add(e)
    return report
