"""Pairs of characters with equal parabolic restrictions, and their separation."""

import json

import pytest

from weylhc.hcseries import (
    EXCEPTIONAL_FAMILIES,
    ExceptionalFamilyRecord,
    PairReport,
    check_type,
    g2_separation_witness,
    pairs_equal_on_proper_parabolics,
    reducible_factor_check,
    run_proposition_check,
    separate_pair,
)
from weylhc.plots import prime_powers

CRYSTALLOGRAPHIC_EMPTY = [f"A{n}" for n in range(2, 8)] + [f"B{n}" for n in range(2, 7)] + [
    f"C{n}" for n in range(3, 5)] + [f"D{n}" for n in range(4, 7)] + ["F4"]


@pytest.mark.parametrize("t", CRYSTALLOGRAPHIC_EMPTY)
def test_no_pairs_for_crystallographic_types(t):
    assert pairs_equal_on_proper_parabolics(t) == []


def test_e6_has_no_pairs():
    assert pairs_equal_on_proper_parabolics("E6") == []


def test_a1_pair_and_schur_separation():
    assert pairs_equal_on_proper_parabolics("A1") == [("[2]", "[1,1]")]
    for k in range(1, 11):
        rep = separate_pair("A1", ("[2]", "[1,1]"), k)
        assert rep.verdict == "separated-by-schur"


def test_g2_pair():
    assert pairs_equal_on_proper_parabolics("G2") == [("phi2,1", "phi2,2")]
    for k in (1, 2, 5):
        r = check_type("G2", k)
        assert r.matches_expectation and r.all_resolved
        assert r.separations[0].verdict == "separated-by-schur"


def test_g2_without_parameters_is_expected_but_unresolved():
    r = check_type("G2")
    assert r.matches_expectation and not r.all_resolved
    assert r.separations[0].note == "no Hecke parameters supplied"


def test_all_parabolics_agrees_with_maximal():
    for t in ("A3", "B3", "G2", "H3"):
        assert pairs_equal_on_proper_parabolics(t, all_parabolics=True) == pairs_equal_on_proper_parabolics(t)


def test_non_crystallographic_pairs_exist():
    """Observed behaviour outside the Weyl groups; see the acceptance suite."""
    assert pairs_equal_on_proper_parabolics("I2(5)") == [("phi2,1", "phi2,2")]
    assert len(pairs_equal_on_proper_parabolics("H3")) == 1
    r = check_type("I2(5)", 1)
    assert not r.matches_expectation
    assert r.all_resolved  # the dihedral Schur elements still tell the pair apart


def test_documented_exceptions():
    for t, dim in (("E7", 512), ("E8", 4096)):
        r = check_type(t)
        assert r.exceptional == EXCEPTIONAL_FAMILIES[t]
        assert r.exceptional.dimension == dim
        assert "Geck" in r.exceptional.citation
        assert r.matches_expectation
    with pytest.raises(ValueError):
        ExceptionalFamilyRecord("E6", 512)


def test_pair_report_validation():
    with pytest.raises(ValueError):
        PairReport(("a", "b"), "separated-by-schur", "schur", (2, 2), ("x", "x"))
    with pytest.raises(ValueError):
        PairReport(("a", "b"), "bogus", "none", (2, 2))


def test_batch_records_errors_in_order():
    reps = run_proposition_check(["A2", "Q7", "E8", "B4"], k=1, bound=100)
    assert [r.type_name for r in reps] == ["A2", "Q7", "E8", "B4"]
    assert reps[1].error.startswith("InvalidTypeError")
    assert reps[3].error.startswith("BoundExceededError")
    assert reps[0].matches_expectation and not reps[1].matches_expectation


def test_report_json_is_exact_strings():
    r = check_type("G2", 2, emit_vectors=True)
    doc = r.to_json()
    assert doc["format"] == "hcreport-v1"
    json.dumps(doc)
    assert set(doc["restriction_vectors"]) == {"1", "2"}


def test_reducible_types():
    assert reducible_factor_check("A2xA1")
    assert reducible_factor_check("A1xA1")
    assert pairs_equal_on_proper_parabolics("A2xA1") == []


@pytest.mark.parametrize("k", [1, 2, 5])
def test_g2_witness_every_prime_power(k):
    for qv in prime_powers(100):
        w = g2_separation_witness(k, qv)
        assert w["distinct"]
        if w["method"] == "zsigmondy":
            assert w["valuations"][0] != w["valuations"][1]
    assert g2_separation_witness(1, 2)["method"] == "direct evaluation"
