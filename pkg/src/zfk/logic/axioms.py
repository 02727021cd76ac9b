"""The Proto axiom schemas and the mechanical derivation of their Anti forms.

Deriving an Anti axiom takes the contra-valuation of the Proto axiom, swaps
each defined symbol for the one whose definition is the contra-valuation of
its own (``fund``/``anfd``, ``0``/``V``, ``succ``/``asucc``), moves the
negation off the left atom of the ``y in x <-> ...`` matrix and puts the
right side in negation normal form.  Defined predicates (``subset``,
``equi``, ``EOn``) and the pair term ``op`` are left as they are, matching the
hand-written Anti forms below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..coset import EMPTY, UNIVERSE
from .parser import parse_formula, to_text
from .rewrite import contravaluate, nnf
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
    is_formula,
    substitute,
)

__all__ = [
    "AxiomSchema",
    "PROTO",
    "ANTI_TRANSCRIBED",
    "ROW_NAMES",
    "anti_correspondence",
    "derive_anti_axiom",
    "normalize",
    "alpha_canonical",
    "complement_bound",
    "lookup",
    "characterization",
    "canonical_text",
    "transcribed_anti",
    "COMPLEMENTED_BOUND",
]


@dataclass(frozen=True)
class AxiomSchema:
    label: str
    name: str
    shape: object
    side: str = "Proto"

    @property
    def text(self) -> str:
        return to_text(self.shape)


# Proto schemas by label, in the surface syntax.  Label 8 is the ∩-infinity
# form, 8a the omega form and 9 the epsilon form.
_PROTO_TEXT = {
    "1": ("empty", "exists x. forall y. !(y in x)"),
    "2": ("pair", "exists x. forall y. (y in x <-> y = a | y = b)"),
    "3": ("cartesian", "exists x. forall y. (y in x <-> exists u. exists v. (y = op(u, v) & u in a & v in b))"),
    "4": ("union", "exists x. forall y. (y in x <-> exists z. (y in z & z in a))"),
    "5": ("separation", "exists x. forall y. (y in x <-> y in fund(a) & B(y))"),
    "6": ("power", "exists x. forall y. (y in x <-> y subset a)"),
    "7": ("replacement", "exists x. forall y. (y in x <-> exists z. (y = F(z) & z in fund(a)))"),
    "8": (
        "infinity",
        "exists x. forall y. (y in x <-> forall w. (0 in w & (forall v. (v in w -> succ(v) in w)) -> y in w))",
    ),
    "8a": ("omega", "exists x. forall y. (y in x <-> EOn(y) & !(exists z. (z psubset y & z equi y)))"),
    "9": ("epsilon", "(exists u. u in fund(a)) <-> eps(fund(a)) in fund(a)"),
    "10": ("extensionality", "a = b <-> (forall x. (x in a <-> x in b))"),
}

# The Anti column as written, for comparison with the generated forms.
_ANTI_TEXT = {
    "1": "exists x. forall y. y in x",
    "2": "exists x. forall y. (y in x <-> y != a & y != b)",
    "3": "exists x. forall y. (y in x <-> forall u. forall v. (y != op(u, v) | u in a | v in b))",
    "4": "exists x. forall y. (y in x <-> forall z. (z in ~a -> y in z))",
    "5": "exists x. forall y. (y in x <-> y in anfd(a) | B(y))",
    "6": "exists x. forall y. (y in x <-> !(y subset a))",
    "7": "exists x. forall y. (y in x <-> !(exists z. (y = F(z) & z in ~anfd(a))))",
    "8": "exists x. forall y. (y in x <-> exists u. ((V in u & (forall v. (v in u -> asucc(v) in u))) & y in ~u))",
    "9": "(exists u. u in ~anfd(a)) <-> eps(~anfd(a)) in ~anfd(a)",
    "10": "a = b <-> (forall x. (x in a <-> x in b))",
}

# The infinity transcription names the quantified set by its complement.
COMPLEMENTED_BOUND = {"8": "u"}

ROW_NAMES = {name: label for label, (name, _) in _PROTO_TEXT.items()}
ROW_NAMES.update({"universal": "1", "pexcl": "2", "anticartesian": "3", "cinter": "4", "confiscation": "5",
                  "richard": "6", "antireplacement": "7", "wset": "8a", "choice": "9"})

PROTO = {label: AxiomSchema(label, name, parse_formula(text)) for label, (name, text) in _PROTO_TEXT.items()}
ANTI_TRANSCRIBED = {label: AxiomSchema(label, PROTO[label].name, parse_formula(text), "Anti")
                    for label, text in _ANTI_TEXT.items()}


def lookup(key: str) -> AxiomSchema:
    """Find a Proto row by label (``"2"``) or name (``"pair"``)."""
    key = key.strip()
    label = key if key in PROTO else ROW_NAMES.get(key.lower()) or ROW_NAMES.get(key)
    if label is None:
        raise KeyError(f"no axiom row {key!r}")
    return PROTO[label]


# -- anti-correspondence ------------------------------------------------------

_SYMBOL_SWAP = {"fund": "anfd", "anfd": "fund", "succ": "asucc", "asucc": "succ"}


def _anti_term(t):
    if isinstance(t, Lit):
        if t.value == EMPTY:
            return Lit(UNIVERSE)
        if t.value == UNIVERSE:
            return Lit(EMPTY)
        return t
    if isinstance(t, (Var, OpName)):
        return t
    if isinstance(t, SetBuilder):
        return SetBuilder(t.var, anti_correspondence(t.body))
    if isinstance(t, Lambda):
        body = anti_correspondence(t.body) if is_formula(t.body) else _anti_term(t.body)
        return Lambda(t.var, body)
    if isinstance(t, Apply):
        args = tuple(_anti_term(a) for a in t.args)
        if t.name == "eps":
            # the anti choice operator chooses from the complement
            return Apply("eps", tuple(Apply("~", (a,)) for a in args))
        return Apply(_SYMBOL_SWAP.get(t.name, t.name), args)
    raise TypeError(f"not a term: {t!r}")


def anti_correspondence(f):
    """Contra-valuation extended to defined symbols and schema letters.

    Membership atoms are negated as in plain contra-valuation; a schema
    letter ``B(y)`` stands for an arbitrary formula, so it is negated too.
    """
    a = anti_correspondence
    if isinstance(f, Member):
        return Not(Member(_anti_term(f.left), _anti_term(f.right)))
    if isinstance(f, Equal):
        return Equal(_anti_term(f.left), _anti_term(f.right))
    if isinstance(f, Pred):
        p = Pred(f.name, tuple(_anti_term(t) for t in f.args))
        return Not(p) if _is_schema_letter(f.name) else p
    if isinstance(f, Not):
        return Not(a(f.body))
    if isinstance(f, (And, Or, Implies, Iff)):
        return type(f)(a(f.left), a(f.right))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, a(f.body))
    if isinstance(f, (BoundedForAll, BoundedExists)):
        return type(f)(f.var, Apply("~", (_anti_term(f.bound),)), a(f.body))
    raise TypeError(f"not a formula: {f!r}")


def _is_schema_letter(name: str) -> bool:
    return len(name) == 1 and name.isupper()


# -- normalization ------------------------------------------------------------


def _elim_complement_membership(f):
    """``t in ~s`` becomes ``!(t in s)``."""
    e = _elim_complement_membership
    if isinstance(f, Member):
        r = f.right
        if isinstance(r, Apply) and r.name == "~":
            return Not(e(Member(f.left, r.args[0])))
        return f
    if isinstance(f, (Equal, Pred)):
        return f
    if isinstance(f, Not):
        return Not(e(f.body))
    if isinstance(f, (And, Or, Implies, Iff)):
        return type(f)(e(f.left), e(f.right))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, e(f.body))
    return type(f)(f.var, f.bound, e(f.body))


def _transfer(f):
    """Move a negation off the left side of every ``<->``."""
    t = _transfer
    if isinstance(f, Iff):
        left, right = t(f.left), t(f.right)
        if isinstance(left, Not):
            return Iff(left.body, nnf(Not(right)))
        return Iff(left, right)
    if isinstance(f, (And, Or, Implies)):
        return type(f)(t(f.left), t(f.right))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, t(f.body))
    if isinstance(f, (BoundedForAll, BoundedExists)):
        return type(f)(f.var, f.bound, t(f.body))
    if isinstance(f, Not):
        return Not(t(f.body))
    return f


def _flat(f, kind):
    if isinstance(f, kind):
        return _flat(f.left, kind) + _flat(f.right, kind)
    return [f]


def _sort_ac(f):
    """Flatten ``&``/``|`` chains and order their operands by printed text."""
    s = _sort_ac
    if isinstance(f, (And, Or)):
        kind = type(f)
        parts = sorted((s(p) for p in _flat(f, kind)), key=to_text)
        out = parts[0]
        for p in parts[1:]:
            out = kind(out, p)
        return out
    if isinstance(f, (Implies, Iff)):
        return type(f)(s(f.left), s(f.right))
    if isinstance(f, (ForAll, Exists)):
        return type(f)(f.var, s(f.body))
    if isinstance(f, (BoundedForAll, BoundedExists)):
        return type(f)(f.var, f.bound, s(f.body))
    if isinstance(f, Not):
        return Not(s(f.body))
    return f


def normalize(f):
    """Complement-membership elimination, NNF, left-negation transfer, operand order."""
    f = nnf(_elim_complement_membership(f))
    f = nnf(_transfer(f))
    return _sort_ac(f)


def derive_anti_axiom(p: AxiomSchema) -> AxiomSchema:
    if p.side != "Proto":
        raise ValueError("derive_anti_axiom expects a Proto schema")
    return AxiomSchema(p.label, p.name, normalize(anti_correspondence(p.shape)), "Anti")


def complement_bound(f, var: str):
    """Rename the quantified set ``var`` to its complement: ``Qvar.φ(var)`` ↦ ``Qvar.φ(~var)``.

    Sound because complement is a bijection of the universe.
    """
    def go(n):
        if isinstance(n, (ForAll, Exists)):
            if n.var == var:
                return type(n)(n.var, substitute(n.body, var, Apply("~", (Var(var),))))
            return type(n)(n.var, go(n.body))
        if isinstance(n, (BoundedForAll, BoundedExists)):
            return type(n)(n.var, n.bound, go(n.body))
        if isinstance(n, (And, Or, Implies, Iff)):
            return type(n)(go(n.left), go(n.right))
        if isinstance(n, Not):
            return Not(go(n.body))
        return n

    return go(f)


def alpha_canonical(f):
    """Rename bound variables to ``_1, _2, ...`` in order of binding."""
    counter = [0]

    def rn(n, ren):
        if isinstance(n, Var):
            return Var(ren.get(n.name, n.name))
        if isinstance(n, (Lit, OpName)):
            return n
        if isinstance(n, (ForAll, Exists, SetBuilder, Lambda)):
            counter[0] += 1
            new = f"_{counter[0]}"
            body = rn(n.body, {**ren, n.var: new})
            return type(n)(new, body)
        if isinstance(n, (BoundedForAll, BoundedExists)):
            bound = rn(n.bound, ren)
            counter[0] += 1
            new = f"_{counter[0]}"
            return type(n)(new, bound, rn(n.body, {**ren, n.var: new}))
        if isinstance(n, (Apply, Pred)):
            return type(n)(n.name, tuple(rn(a, ren) for a in n.args))
        if isinstance(n, (Member, Equal, And, Or, Implies, Iff)):
            return type(n)(rn(n.left, ren), rn(n.right, ren))
        if isinstance(n, Not):
            return Not(rn(n.body, ren))
        raise TypeError(f"not an AST node: {n!r}")

    return rn(f, {})


def characterization(schema: AxiomSchema) -> Optional[tuple[str, object]]:
    """Split ``∃x∀y[y∈x ↔ φ]`` into ``("y", φ)``; None for other shapes.

    ``∀y y∉x`` and ``∀y y∈x`` become matrices ``y != y`` and ``y = y``.
    """
    f = schema.shape
    if not (isinstance(f, Exists) and isinstance(f.body, ForAll)):
        return None
    x, y, body = f.var, f.body.var, f.body.body
    here = Member(Var(y), Var(x))
    if isinstance(body, Iff) and body.left == here and x not in free_vars(body.right):
        return y, body.right
    if body == here:
        return y, Equal(Var(y), Var(y))
    if body == Not(here):
        return y, Not(Equal(Var(y), Var(y)))
    return None


def canonical_text(f) -> str:
    """Printed form up to NNF, operand order and bound-variable names.

    Sorting and renaming feed into each other, so both are repeated until
    the text stops changing.
    """
    prev = None
    text = to_text(f)
    while text != prev:
        prev = text
        f = alpha_canonical(normalize(f))
        text = to_text(f)
    return text


def transcribed_anti(label: str):
    """The hand-transcribed Anti row, with the infinity axiom's bound set renamed to its complement."""
    f = ANTI_TRANSCRIBED[label].shape
    if label in COMPLEMENTED_BOUND:
        f = complement_bound(f, COMPLEMENTED_BOUND[label])
    return f
