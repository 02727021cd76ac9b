from hypothesis import given, settings
from hypothesis import strategies as st

from zfk import EMPTY, UNIVERSE, complement, decode, encode, make, member
from zfk import algebra as alg
from zfk.coset import subset
from zfk.duality import supplement
from zfk.logic import parse_term, to_text
from zfk.logic.evaluate import Evaluator
from zfk.logic.rewrite import contravaluate, nnf
from zfk.logic.syntax import Lit

codes = st.recursive(
    st.sampled_from([EMPTY, UNIVERSE]),
    lambda kids: st.builds(make, st.booleans(), st.lists(kids, max_size=3)),
    max_leaves=12,
)


@given(codes)
def test_involutions(a):
    assert complement(complement(a)) is a
    assert supplement(supplement(a)) is a


@given(codes, codes)
def test_complement_flips_membership(y, a):
    assert member(y, complement(a)) != member(y, a)


@given(codes, codes)
def test_supplement_mirrors_membership(y, a):
    assert member(y, supplement(a)) == (not member(supplement(y), a))


@given(codes, codes)
def test_supplement_turns_unions_into_intersections(a, b):
    assert supplement(alg.union(a, b)) == alg.intersection(supplement(a), supplement(b))


@given(codes, codes)
def test_de_morgan(a, b):
    assert complement(alg.union(a, b)) == alg.intersection(complement(a), complement(b))


@given(codes, codes)
def test_subset_is_inclusion_on_a_probe_set(a, b):
    probes = set(a.support) | set(b.support) | {make(False, a.support + b.support + (a, b))}
    if subset(a, b):
        assert all(member(z, b) for z in probes if member(z, a))
    if subset(a, b) and subset(b, a):
        assert a == b


@given(codes)
def test_encode_round_trip(a):
    assert decode(encode(a)) is a


@given(codes)
def test_print_parse_round_trip(a):
    assert parse_term(to_text(Lit(a))) == Lit(a)


@given(codes, codes)
def test_unpair(a, b):
    assert alg.unpair(alg.opair(a, b)) == (a, b)


@settings(max_examples=50)
@given(st.randoms(use_true_random=False))
def test_nnf_and_double_cv_preserve_truth(rnd):
    from zfk.modelcheck import enumerate_universe, random_formula

    U = tuple(enumerate_universe(1, 1))
    f = random_formula(rnd, 3)
    ev = Evaluator(domain=U)
    env = {v: rnd.choice(U) for v in "xyz"}
    assert ev.eval(nnf(f), env) == ev.eval(f, env)
    assert ev.eval(contravaluate(contravaluate(f)), env) == ev.eval(f, env)
