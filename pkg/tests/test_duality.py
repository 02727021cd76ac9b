import pytest

from zfk import EMPTY as Z
from zfk import UNIVERSE as V
from zfk import NotRepresentable, cofin, complement, fin, is_antifounded, is_founded
from zfk.duality import anfd, complements_iteration, elements_op, fund, supplement, unary_op


def test_supplement_examples(U22):
    assert supplement(Z) == V
    assert supplement(fin(Z)) == cofin(V)
    assert all(supplement(supplement(a)) == a for a in U22)


def test_elements_op_examples():
    assert elements_op("complement", fin(Z, V)) == fin(Z, V)
    assert elements_op("supplement", cofin(Z)) == cofin(V)
    with pytest.raises(NotRepresentable):
        elements_op("singleton", cofin(Z))


def test_elements_op_on_finite_sets_is_the_image(U22):
    for a in U22:
        if not a.cofin:
            assert elements_op("singleton", a) == fin(*(fin(x) for x in a.support))
            assert elements_op("identity", a) == a


def test_unary_op_aliases():
    assert unary_op("S") == "supplement"
    assert unary_op("~") == "complement"
    with pytest.raises(ValueError):
        unary_op("powerset")


def test_fund_anfd_examples():
    assert fund(fin(Z, fin(Z))) == fin(Z, fin(Z))
    assert fund(V) == Z
    assert anfd(Z) == V


def test_fund_anfd_are_coercions(U22):
    for a in U22:
        assert fund(a) == (a if is_founded(a) else Z)
        assert anfd(a) == (a if is_antifounded(a) else V)
        assert anfd(supplement(a)) == supplement(fund(a))


def test_complements_iteration(U22):
    assert complements_iteration(Z) == V
    assert complements_iteration(V) == Z
    assert all(complements_iteration(a) == supplement(a) for a in U22)


def test_supplement_calculus(U22):
    eo = elements_op
    for a in U22:
        assert supplement(a) == eo("supplement", supplement(eo("supplement", a)))
        assert supplement(a) == complement(eo("supplement", a))
        assert eo("supplement", a) == complement(supplement(a))
        assert complement(a) == eo("supplement", supplement(a)) == supplement(eo("supplement", a))


def test_mirror_founded_antifounded(U22):
    for a in U22:
        assert is_founded(a) == is_antifounded(supplement(a))
