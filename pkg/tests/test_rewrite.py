import random

import pytest

from zfk import EMPTY, UNIVERSE
from zfk.logic import parse_formula, parse_term, to_text
from zfk.logic.evaluate import Evaluator
from zfk.logic.rewrite import contravaluate, dualize, nnf, strip_double_negation, term_complement
from zfk.logic.syntax import Lit, Not
from zfk.modelcheck import random_builder, random_formula, random_term


def txt(f):
    return to_text(f)


def test_cv_examples():
    assert txt(contravaluate(parse_formula("y in x"))) == "!(y in x)"
    assert txt(contravaluate(parse_formula("y = a"))) == "y = a"


def test_dual_example():
    assert txt(dualize(parse_formula("exists x. forall y. y in x"))) == "forall x. exists y. y in x"


@pytest.mark.parametrize(
    "src, out",
    [
        ("!(A(x) & B(x))", "!A(x) | !B(x)"),
        ("!(forall y. y in x)", "exists y. !(y in x)"),
        ("!(y = a | y in b)", "y != a & !(y in b)"),
        ("!(A(x) -> B(x))", "A(x) & !B(x)"),
        ("!!(y in x)", "y in x"),
    ],
)
def test_nnf_examples(src, out):
    assert txt(nnf(parse_formula(src))) == out


def test_strip_double_negation():
    assert strip_double_negation(Not(Not(parse_formula("y in x")))) == parse_formula("y in x")


def test_term_complement_examples():
    t = parse_term("{x : x in a or x = b}")
    assert txt(term_complement(t)) == "{ x : !(x in a) & x != b }"
    assert term_complement(Lit(EMPTY)) == Lit(UNIVERSE)
    assert txt(term_complement(parse_term("pow(a)"))) == "rich(a)"
    assert txt(term_complement(parse_term("~a"))) == "a"


def test_cv_equals_not_dual_on_corpus(U11):
    rng = random.Random(7)
    ev = Evaluator(domain=tuple(U11))
    elems = list(U11)
    for _ in range(60):
        f = random_formula(rng, 4)
        cv, nd = contravaluate(f), Not(dualize(f))
        for _ in range(20):
            env = {v: rng.choice(elems) for v in "xyz"}
            assert ev.eval(cv, env) == ev.eval(nd, env), txt(f)


def test_term_complement_is_pointwise(U21):
    rng = random.Random(3)
    ev = Evaluator()
    for gen in (lambda: random_builder(rng, U21), lambda: random_term(rng, U21)):
        checked = 0
        for _ in range(80):
            t = gen()
            tc = term_complement(t)
            try:
                assert all(ev.member(y, t, {}) != ev.member(y, tc, {}) for y in U21), txt(t)
            except Exception as exc:  # noqa: BLE001
                if type(exc).__name__ != "NotRepresentable":
                    raise
                continue
            checked += 1
        assert checked >= 50
