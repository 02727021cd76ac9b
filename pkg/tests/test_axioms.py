from pathlib import Path

import pytest

from zfk.logic import parse_formula, to_text
from zfk.logic.axioms import (
    ANTI_TRANSCRIBED,
    PROTO,
    alpha_canonical,
    anti_correspondence,
    canonical_text,
    characterization,
    derive_anti_axiom,
    lookup,
    normalize,
    transcribed_anti,
)

GOLDEN = Path(__file__).parent / "golden"


def test_row_examples():
    assert derive_anti_axiom(PROTO["1"]).text == "exists x. forall y. y in x"
    assert derive_anti_axiom(PROTO["2"]).text == "exists x. forall y. y in x <-> y != a & y != b"
    var, m = characterization(derive_anti_axiom(PROTO["6"]))
    assert to_text(m) == "!(y subset a)"


@pytest.mark.parametrize("label", sorted(ANTI_TRANSCRIBED, key=int))
def test_derived_rows_match_golden_files(label):
    golden = (GOLDEN / f"anti_row_{label}.txt").read_text().strip()
    assert canonical_text(derive_anti_axiom(PROTO[label]).shape) == golden


@pytest.mark.parametrize("label", sorted(ANTI_TRANSCRIBED, key=int))
def test_golden_files_come_from_the_transcription(label):
    golden = (GOLDEN / f"anti_row_{label}.txt").read_text().strip()
    assert canonical_text(transcribed_anti(label)) == golden


def test_anti_correspondence_symbol_swaps():
    f = parse_formula("fund(a) = succ(0) & B(y) & y subset eps(a)")
    g = anti_correspondence(f)
    assert to_text(g) == "anfd(a) = asucc(V) & !B(y) & y subset eps(~a)"


def test_normalize_transfers_negation_off_iff():
    f = parse_formula("!(y in x) <-> y = a")
    assert to_text(normalize(f)) == "y in x <-> y != a"


def test_alpha_canonical():
    f = parse_formula("exists p. forall q. q in p")
    g = parse_formula("exists x. forall y. y in x")
    assert alpha_canonical(f) == alpha_canonical(g)


def test_lookup():
    assert lookup("pair") is PROTO["2"]
    assert lookup("2") is PROTO["2"]
    assert lookup("richard") is PROTO["6"]
    with pytest.raises(KeyError):
        lookup("nonsense")


def test_characterization_shapes():
    assert to_text(characterization(PROTO["1"])[1]) == "y != y"
    assert characterization(PROTO["10"]) is None


def test_derivation_only_from_proto():
    with pytest.raises(ValueError):
        derive_anti_axiom(derive_anti_axiom(PROTO["2"]))
