import pickle

import oracles as O
import pytest

from zfk import (
    EMPTY,
    UNIVERSE,
    ParseError,
    canonicalize,
    cofin,
    complement,
    decode,
    encode,
    equal,
    fin,
    is_antifounded,
    is_founded,
    make,
    member,
    rank,
)
from zfk.algebra import richard
from zfk.coset import subset

Z, V = EMPTY, UNIVERSE


def test_canonicalize_removes_duplicates_and_sorts():
    assert canonicalize(("fin", [("fin", []), ("fin", [])])) == fin(Z)
    assert canonicalize(("cofin", [("fin", []), ("fin", [])])) == cofin(Z)
    c = canonicalize(("fin", [("cofin", []), ("fin", [])]))
    assert c.support == (Z, V)


def test_canonicalize_rejects_garbage():
    with pytest.raises(TypeError):
        canonicalize(("set", []))
    with pytest.raises(TypeError):
        canonicalize(42)


def test_interning_gives_identity():
    assert fin(Z, V) is make(False, [V, Z, V])
    assert pickle.loads(pickle.dumps(fin(Z))) is fin(Z)


def test_member_examples():
    assert member(Z, V)
    assert not member(Z, cofin(Z))
    assert member(V, V)


def test_equal_examples():
    assert equal(make(False, []), Z)
    assert not equal(Z, V)
    assert equal(cofin(Z), richard(Z))


def test_complement_examples(U22):
    assert complement(Z) == V
    assert complement(cofin(Z, fin(Z))) == fin(Z, fin(Z))
    assert all(complement(complement(a)) == a for a in U22)


def test_rank_examples():
    assert rank(Z) == 0 and rank(V) == 0
    assert rank(fin(cofin(Z))) == 2


def test_foundedness_examples():
    assert is_founded(fin(Z, fin(Z)))
    assert not is_founded(V) and is_antifounded(V)
    assert is_antifounded(cofin(V)) and not is_antifounded(fin(V))


def test_encode_examples(U22):
    assert encode(Z) == '{"fin":[]}'
    assert encode(V) == '{"cofin":[]}'
    assert all(decode(encode(a)) is a for a in U22)


@pytest.mark.parametrize("bad", ["", "[]", '{"fin":[], "cofin":[]}', '{"set":[]}', '{"fin":{}}', '{"fin":[1]}'])
def test_decode_errors(bad):
    with pytest.raises(ParseError):
        decode(bad)


def test_printing():
    assert str(Z) == "0" and str(V) == "V"
    assert str(fin(Z, V)) == "{0, V}"
    assert str(cofin(fin(Z))) == "co{{0}}"


def test_code_order_is_total_and_rank_first(U22):
    xs = list(U22)
    assert xs == sorted(xs)
    assert all(a.rank <= b.rank for a, b in zip(xs, xs[1:]))


def test_immutable():
    with pytest.raises(AttributeError):
        Z.cofin = True


# oracle comparisons


def test_membership_complement_supplement_match_oracle(U22):
    from zfk.duality import supplement

    for a in U22:
        oa = O.from_coset(a)
        assert O.from_coset(complement(a)) == O.complement(oa)
        assert O.from_coset(supplement(a)) == O.supplement(oa)
        assert rank(a) == O.rank(oa)
        assert is_founded(a) == O.is_founded(oa)
        assert is_antifounded(a) == O.is_antifounded(oa)
        for y in U22:
            assert member(y, a) == O.member(O.from_coset(y), oa)


def test_subset_matches_oracle(U22):
    for y in U22:
        for a in U22:
            assert subset(y, a) == O.subset(O.from_coset(y), O.from_coset(a)), (y, a)


def test_self_membership_iff_cofinite(U22):
    assert all(member(a, a) == a.cofin for a in U22)
