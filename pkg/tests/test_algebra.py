import oracles as O
import pytest

from zfk import EMPTY as Z
from zfk import UNIVERSE as V
from zfk import ChoiceViolation, NotAFunction, NotRepresentable, cofin, complement, fin, member
from zfk import algebra as alg
from zfk.duality import singleton

one = fin(Z)


def test_pairs():
    assert alg.pair(Z, Z) == one
    pe = alg.pair_exclusion(Z, V)
    assert pe == cofin(Z, V)
    assert member(one, pe) and not member(V, pe)
    assert alg.opair(Z, Z) == fin(one)
    assert alg.anti_opair(Z, Z) == cofin(cofin(Z))


def test_unpair_inverts_opair(U21):
    for a in U21:
        for b in U21:
            assert alg.unpair(alg.opair(a, b)) == (a, b)
    assert alg.unpair(Z) is None
    assert alg.unpair(V) is None


def test_pair_ops_match_oracle(U21):
    for a in U21:
        for b in U21:
            oa, ob = O.from_coset(a), O.from_coset(b)
            assert O.from_coset(alg.pair(a, b)) == O.pair(oa, ob)
            assert O.from_coset(alg.pair_exclusion(a, b)) == O.pair_exclusion(oa, ob)
            assert O.from_coset(alg.opair(a, b)) == O.opair(oa, ob)


def test_boolean_examples(U22):
    assert alg.boolean(Z, "union", V) == V
    assert alg.boolean(cofin(Z), "intersection", cofin(one)) == cofin(Z, one)
    assert all(alg.boolean(a, "union", complement(a)) == V for a in U22)
    with pytest.raises(ValueError):
        alg.boolean(Z, "xor", V)


def test_boolean_matches_oracle(U22):
    for a in U22:
        for b in U22:
            oa, ob = O.from_coset(a), O.from_coset(b)
            assert O.from_coset(alg.union(a, b)) == O.union(oa, ob)
            assert O.from_coset(alg.intersection(a, b)) == O.intersection(oa, ob)
            assert alg.difference(a, b) == alg.intersection(a, complement(b))


def test_big_union_and_comp_intersection():
    assert alg.big_union(fin(one)) == one
    assert alg.big_union(V) == V
    assert alg.big_union(fin(cofin(Z), one)) == V
    assert alg.comp_intersection(V) == V
    assert alg.comp_intersection(cofin(one)) == one
    assert alg.comp_intersection(Z) == Z


def test_big_union_oracle(U21):
    # y in Union(a) iff some z in a contains y; cofinite a always has such a z
    for a in U21:
        u = alg.big_union(a)
        for y in U21:
            if a.cofin:
                assert member(y, u)
            else:
                assert member(y, u) == any(member(y, z) for z in a.support)


def test_powerset_richard():
    assert alg.powerset(Z) == one
    assert alg.richard(Z) == cofin(Z)
    assert alg.richard(V) == Z
    assert alg.powerset(V) == V
    with pytest.raises(NotRepresentable):
        alg.powerset(cofin(Z))


def test_richard_matches_oracle(U22):
    for a in U22:
        if not a.cofin:
            assert O.from_coset(alg.richard(a)) == O.richard_fin(O.from_coset(a))
            assert alg.powerset(a) == complement(alg.richard(a))


def test_separation_confiscation():
    assert alg.separation(fin(Z, one), lambda y: y == Z) == one
    assert alg.separation(V, lambda y: not member(y, y)) == Z
    # the exclusion-list rule, on an anti-founded input
    cv = cofin(V)
    assert alg.confiscation(cofin(V, cv), lambda y: y == V) == cofin(cv)
    # co{0, {0}} is not anti-founded, so it is first coerced to V
    assert alg.confiscation(cofin(Z, one), lambda y: y == Z) == V


def test_replacement():
    assert alg.replacement(fin(Z, one), singleton) == fin(one, fin(one))
    assert alg.replacement(V, singleton) == Z
    assert alg.anti_replacement(cofin(V), singleton) == cofin(fin(V))
    assert alg.anti_replacement(cofin(Z), singleton) == V  # co{0} is coerced to V first
    g = fin(alg.opair(Z, one))
    assert alg.replacement(fin(Z, one), g) == fin(one, Z)  # off-domain points map to 0


def test_graph_table_rejects_non_functions():
    with pytest.raises(NotAFunction):
        alg.graph_table(fin(alg.opair(Z, Z), alg.opair(Z, one)))
    with pytest.raises(NotAFunction):
        alg.graph_table(fin(V))
    with pytest.raises(NotAFunction):
        alg.graph_table(V)


def test_cartesian():
    assert alg.cartesian(one, one) == fin(fin(one))
    assert alg.anti_cartesian(V, V) == V
    with pytest.raises(NotRepresentable):
        alg.anti_cartesian(Z, Z)
    with pytest.raises(NotRepresentable):
        alg.cartesian(V, one)
    assert alg.cartesian(V, Z) == Z


def test_ordinals():
    assert alg.ordinal(2) == fin(Z, one)
    assert not alg.is_finite_ordinal(fin(one))
    assert alg.anti_ordinal(0) == V


def test_finite_ordinal_matches_oracle(U22):
    for y in U22:
        assert alg.is_finite_ordinal(y) == O.is_finite_ordinal(O.from_coset(y))


def test_equipollent_slim():
    assert alg.equipollent(one, fin(V))
    assert not alg.equipollent(Z, V)
    assert not alg.slim(cofin(Z))
    assert alg.slim(one)


def test_direct_product():
    assert alg.direct_product(one, alg.MapSpec(fn=lambda i: Z)) == Z
    fam = fin(alg.opair(Z, one), alg.opair(one, fin(Z, one)))
    p = alg.direct_product(fin(Z, one), fam)
    assert len(p.support) == 2
    for g in p.support:
        t = alg.graph_table(g)
        assert t[Z] in one.members and t[one] in fin(Z, one).members
    assert alg.direct_product(Z, fam) == one


def test_choice():
    assert alg.choice(fin(one, fin(V))) == fin(Z, V)
    with pytest.raises(ChoiceViolation):
        alg.choice(fin(Z, one))
    with pytest.raises(ChoiceViolation):
        alg.choice(fin(fin(Z, V), one))
    with pytest.raises(NotRepresentable):
        alg.choice(V)


def test_diagonal():
    assert alg.diagonal(fin(alg.opair(Z, Z))) == V
    assert alg.diagonal(fin(alg.opair(Z, one))) == cofin(Z)


def test_diagonal_escapes_every_small_graph(U11):
    # every functional graph on a domain of size <= 2 with values in U11
    from itertools import combinations, product

    elems = list(U11)
    for k in range(3):
        for dom in combinations(elems, k):
            for vals in product(elems, repeat=k):
                g = fin(*(alg.opair(x, v) for x, v in zip(dom, vals)))
                d = alg.diagonal(g)
                assert all(alg.MapSpec.of(g)(x) != d for x in elems)
