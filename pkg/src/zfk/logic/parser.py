"""Recursive-descent parser and pretty-printer for the surface language.

Formulas::

    t in t    t = t    t != t    t subset t    t psubset t    t equi t    B(t, ...)
    ! A    A & B    A | B    A -> B    A <-> B
    forall x. A    exists x. A    forall x in t. A    exists x in t. A

Terms::

    0  V  2  x  {a, b}  co{a, b}  ~t  { x : A }  name(t, ...)  sep(a, x -> A)  repl(a, x -> t)

Binding strength from loosest: quantifiers (extend right), ``<->``, ``->``
(right associative), ``|``, ``&``, ``!``.  ``and``/``or``/``not`` are
accepted as spellings of ``&``/``|``/``!``.
"""

from __future__ import annotations

import re

from ..coset import UNIVERSE, make
from ..errors import ParseError
from .syntax import (
    INFIX_PREDS,
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

__all__ = ["parse_formula", "parse_term", "parse", "to_text"]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym><->|->|!=|[!&|=~(){},.:]))"
)
_KEYWORDS = {"forall", "exists", "in", "and", "or", "not"} | set(INFIX_PREDS)
_ALIASES = {"and": "&", "or": "|", "not": "!"}
# operators whose lambda argument has a formula body
FORMULA_LAMBDAS = {"sep", "conf"}
TERM_LAMBDAS = {"repl", "arepl"}


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "ident" and value in _ALIASES:
            kind, value = "sym", _ALIASES[value]
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    # token helpers
    def peek(self, k=0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def at(self, value, k=0):
        kind, v, _ = self.peek(k)
        return kind != "eof" and v == value

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.peek()
        if v != value or kind == "eof":
            raise ParseError(f"expected {value!r}, found {v if v is not None else 'end of input'!r}", pos)
        return self.next()

    def ident(self):
        kind, v, pos = self.peek()
        if kind != "ident" or v in _KEYWORDS:
            raise ParseError(f"expected a variable name, found {v!r}", pos)
        self.next()
        return v

    def finish(self):
        kind, v, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected {v!r} after end of expression", pos)

    # formulas
    def formula(self):
        if self.at("forall") or self.at("exists"):
            return self.quantifier()
        left = self.implication()
        while self.at("<->"):
            self.next()
            left = Iff(left, self.rhs(self.implication))
        return left

    def rhs(self, rule):
        # a quantifier may close any binary chain, swallowing the rest
        if self.at("forall") or self.at("exists"):
            return self.quantifier()
        return rule()

    def quantifier(self):
        q = self.next()[1]
        var = self.ident()
        bound = None
        if self.at("in"):
            self.next()
            bound = self.term()
        self.expect(".")
        body = self.formula()
        if bound is None:
            return (ForAll if q == "forall" else Exists)(var, body)
        return (BoundedForAll if q == "forall" else BoundedExists)(var, bound, body)

    def implication(self):
        left = self.disjunction()
        if self.at("->"):
            self.next()
            right = self.rhs(self.implication)
            return Implies(left, right)
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.at("|"):
            self.next()
            left = Or(left, self.rhs(self.conjunction))
        return left

    def conjunction(self):
        left = self.unary()
        while self.at("&"):
            self.next()
            left = And(left, self.rhs(self.unary))
        return left

    def unary(self):
        if self.at("!"):
            self.next()
            if self.at("forall") or self.at("exists"):
                return Not(self.quantifier())
            return Not(self.unary())
        if self.at("("):
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        if self.at("forall") or self.at("exists"):
            return self.quantifier()
        return self.atom()

    def atom(self):
        pos = self.peek()[2]
        left = self.term()
        if self.at("in"):
            self.next()
            return Member(left, self.term())
        if self.at("="):
            self.next()
            return Equal(left, self.term())
        if self.at("!="):
            self.next()
            return Not(Equal(left, self.term()))
        for name in INFIX_PREDS:
            if self.at(name):
                self.next()
                return Pred(name, (left, self.term()))
        if isinstance(left, Apply) and left.name not in ("set", "coset", "~"):
            return Pred(left.name, left.args)
        raise ParseError("expected a relation after term", pos)

    # terms
    def term(self):
        kind, v, pos = self.peek()
        if v == "~" and kind == "sym":
            self.next()
            return Apply("~", (self.term(),))
        if kind == "num":
            self.next()
            from ..algebra import ordinal

            return Lit(ordinal(int(v)))
        if v == "{" and kind == "sym":
            return self.braces(cofin=False)
        if kind == "ident" and v == "co" and self.at("{", 1):
            self.next()
            return self.braces(cofin=True)
        if kind == "ident" and v == "V" and not self.at("(", 1):
            self.next()
            return Lit(UNIVERSE)
        if kind == "ident" and v not in _KEYWORDS:
            self.next()
            if self.at("("):
                return self.application(v)
            return Var(v)
        raise ParseError(f"expected a term, found {v if v is not None else 'end of input'!r}", pos)

    def braces(self, cofin):
        self.expect("{")
        if not cofin and self.peek()[0] == "ident" and self.at(":", 1):
            var = self.ident()
            self.expect(":")
            body = self.formula()
            self.expect("}")
            return SetBuilder(var, body)
        items = []
        if not self.at("}"):
            items.append(self.term())
            while self.at(","):
                self.next()
                items.append(self.term())
        self.expect("}")
        if all(isinstance(t, Lit) for t in items):
            return Lit(make(cofin, (t.value for t in items)))
        return Apply("coset" if cofin else "set", tuple(items))

    def application(self, name):
        self.expect("(")
        args = []
        if not self.at(")"):
            args.append(self.argument(name, 0))
            while self.at(","):
                self.next()
                args.append(self.argument(name, len(args)))
        self.expect(")")
        return Apply(name, tuple(args))

    def argument(self, name, index):
        kind, v, _ = self.peek()
        if name == "eo" and index == 0:
            if v == "~" or (kind == "ident" and self.at(",", 1)):
                self.next()
                return OpName(v)
        if kind == "ident" and self.at("->", 1):
            var = self.ident()
            self.expect("->")
            body = self.formula() if name in FORMULA_LAMBDAS or name not in TERM_LAMBDAS and self._formula_ahead() else self.term()
            return Lambda(var, body)
        return self.term()

    def _formula_ahead(self):
        # decide by trial whether a lambda body is a formula
        save = self.i
        try:
            self.formula()
            ok = self.at(")") or self.at(",")
        except ParseError:
            ok = False
        self.i = save
        return ok


def parse_formula(text: str):
    p = _Parser(text)
    f = p.formula()
    p.finish()
    return f


def parse_term(text: str):
    p = _Parser(text)
    t = p.term()
    p.finish()
    return t


def parse(text: str):
    """Parse either a formula or a term, preferring the formula reading.

    Operator applications such as ``pow(a)`` read as terms.
    """
    try:
        f = parse_formula(text)
    except ParseError as first:
        try:
            return parse_term(text)
        except ParseError:
            raise first from None
    # a bare application of a set operator, e.g. S(0), is a term
    if isinstance(f, Pred) and f.name not in INFIX_PREDS:
        from .evaluate import OPERATORS, SPECIAL_OPERATORS

        if f.name in OPERATORS or f.name in SPECIAL_OPERATORS:
            return parse_term(text)
    return f


# -- printing -----------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYM = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def _prec(f):
    if isinstance(f, (ForAll, Exists, BoundedForAll, BoundedExists)):
        return 0
    return _PREC.get(type(f), 5)


def _formula_text(f) -> str:
    if isinstance(f, Member):
        return f"{_term_text(f.left)} in {_term_text(f.right)}"
    if isinstance(f, Equal):
        return f"{_term_text(f.left)} = {_term_text(f.right)}"
    if isinstance(f, Pred):
        if f.name in INFIX_PREDS and len(f.args) == 2:
            return f"{_term_text(f.args[0])} {f.name} {_term_text(f.args[1])}"
        return f"{f.name}({', '.join(_term_text(a) for a in f.args)})"
    if isinstance(f, Not):
        inner = f.body
        if isinstance(inner, Equal):
            return f"{_term_text(inner.left)} != {_term_text(inner.right)}"
        s = _formula_text(inner)
        bare = (isinstance(inner, Pred) and inner.name not in INFIX_PREDS) or (
            isinstance(inner, Not) and not isinstance(inner.body, Equal)
        )
        return "!" + s if bare else f"!({s})"
    if isinstance(f, (ForAll, Exists)):
        q = "forall" if isinstance(f, ForAll) else "exists"
        return f"{q} {f.var}. {_formula_text(f.body)}"
    if isinstance(f, (BoundedForAll, BoundedExists)):
        q = "forall" if isinstance(f, BoundedForAll) else "exists"
        return f"{q} {f.var} in {_term_text(f.bound)}. {_formula_text(f.body)}"
    p = _PREC[type(f)]
    right_assoc = isinstance(f, Implies)
    lp, rp = _prec(f.left), _prec(f.right)
    ls = _formula_text(f.left)
    rs = _formula_text(f.right)
    if lp < p or (lp == p and right_assoc) or lp == 0:
        ls = f"({ls})"
    if rp < p or (rp == p and not right_assoc) or rp == 0:
        rs = f"({rs})"
    return f"{ls} {_SYM[type(f)]} {rs}"


def _term_text(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lit):
        return str(t.value)
    if isinstance(t, OpName):
        return t.name
    if isinstance(t, SetBuilder):
        return f"{{ {t.var} : {_formula_text(t.body)} }}"
    if isinstance(t, Lambda):
        body = _formula_text(t.body) if is_formula(t.body) else _term_text(t.body)
        return f"{t.var} -> {body}"
    if isinstance(t, Apply):
        args = ", ".join(_term_text(a) for a in t.args)
        if t.name == "set":
            return "{" + args + "}"
        if t.name == "coset":
            return "co{" + args + "}"
        if t.name == "~" and len(t.args) == 1:
            return "~" + _term_text(t.args[0])
        return f"{t.name}({args})"
    raise TypeError(f"not a term: {t!r}")


def to_text(node) -> str:
    """Pretty-print a formula or term in the surface syntax."""
    if is_formula(node):
        return _formula_text(node)
    return _term_text(node)
