import json

import oracles as O
import pytest

from zfk import EMPTY, UNIVERSE, SizeLimit, cofin, complement, fin
from zfk import algebra as alg
from zfk.duality import supplement
from zfk.logic.axioms import PROTO, characterization, derive_anti_axiom
from zfk.modelcheck import (
    CheckEntry,
    CheckReport,
    check_characterization,
    check_identity_suite,
    enumerate_universe,
    inductive_witnesses,
    run_axiom_suite,
    universe_size,
)

# frozen from the closure oracle in oracles.py
SIZES = {(0, 0): 2, (0, 3): 2, (1, 1): 6, (1, 2): 8, (2, 1): 14, (2, 2): 74}


@pytest.mark.parametrize("rw, n", sorted(SIZES.items()))
def test_universe_sizes_match_closure_oracle(rw, n):
    U = enumerate_universe(*rw)
    assert len(U) == n
    assert {O.from_coset(a) for a in U} == O.universe_by_closure(*rw)


def test_universe_examples():
    assert list(enumerate_universe(0, 5)) == [EMPTY, UNIVERSE]
    assert set(enumerate_universe(1, 1)) == {EMPTY, UNIVERSE, fin(EMPTY), cofin(EMPTY), fin(UNIVERSE), cofin(UNIVERSE)}


def test_size_limit_and_large_count():
    # 2 * (1 + 74 + C(74, 2)) codes of rank <= 3 and width <= 2
    assert universe_size(3, 2) == 5552
    with pytest.raises(SizeLimit):
        enumerate_universe(3, 2)
    with pytest.raises(ValueError):
        enumerate_universe(-1, 2)


def test_universe_closure_and_order(U22):
    xs = list(U22)
    assert len(set(xs)) == len(xs)
    assert xs == sorted(xs)
    for a in U22:
        assert complement(a) in U22 and supplement(a) in U22


def test_characterization_examples(U21):
    for a in U21:
        for b in U21:
            e = check_characterization(alg.pair_exclusion(a, b), "y", "y != a & y != b", U21, {"a": a, "b": b})
            assert e.verdict == "pass"
    for a in U21:
        if not a.cofin:
            assert check_characterization(alg.richard(a), "y", "!(y subset a)", U21, {"a": a}).verdict == "pass"
    a, b = EMPTY, fin(EMPTY)
    e = check_characterization(alg.pair(a, b), "y", "y != a & y != b", U21, {"a": a, "b": b})
    assert e.verdict == "fail" and e.counterexample["y"] == a


def test_anti_union_against_comp_intersection(U21):
    var, m = characterization(derive_anti_axiom(PROTO["4"]))
    for a in U21:
        e = check_characterization(alg.comp_intersection(a), var, m, U21, {"a": a})
        assert e.verdict in ("pass", "partial")


def test_product_of_family_containing_zero():
    fam = alg.MapSpec(fn=lambda i: i)
    assert alg.direct_product(fin(EMPTY, fin(EMPTY)), fam) == EMPTY


def test_axiom_suite_passes(U21):
    r = run_axiom_suite(U21)
    assert not r.failed, r.to_text()
    assert len(r.entries) == 25


def test_identity_suite_passes(U11):
    r = check_identity_suite(U11, formulas=100)
    assert all(e.verdict == "pass" for e in r.entries), r.to_text()


def test_inductive_witnesses_exclude_non_ordinals(U21):
    w = inductive_witnesses(U21)
    assert cofin(fin(fin(EMPTY))) in w
    assert all(x not in U21 for x in w)


def test_report_json_is_deterministic(U21):
    a = run_axiom_suite(U21).to_json()
    b = run_axiom_suite(U21).to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["summary"]["fail"] == 0
    assert {"label", "verdict", "counterexample", "coverage", "detail"} == set(doc["entries"][0])


def test_failing_entry_carries_counterexample():
    r = CheckReport("t")
    r.add(CheckEntry("x", "fail", {"y": EMPTY}))
    r.add(CheckEntry("z", "partial"))
    assert not r.ok()
    doc = json.loads(r.to_json())
    assert doc["entries"][0]["counterexample"] == {"y": {"fin": []}}
    assert "FAIL" in r.to_text()


def test_strict_mode():
    r = CheckReport("t", [CheckEntry("z", "partial")])
    assert r.ok() and not r.ok(strict=True)


def test_tuple_cap_samples_deterministically(U21):
    r1 = run_axiom_suite(U21, tuple_cap=50, seed=1)
    r2 = run_axiom_suite(U21, tuple_cap=50, seed=1)
    assert r1.to_json() == r2.to_json()
    covs = {e.label: e.coverage for e in r1.entries}
    assert covs["proto-2 pair"] == pytest.approx(50 / 196)
    assert not r1.failed
