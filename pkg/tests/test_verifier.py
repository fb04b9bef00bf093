"""Verifier checks: statuses, documented discrepancies, report determinism."""

import json

import pytest

from twistspin.presentations import WirtingerPresentation
from twistspin.verifier import (
    DOCUMENTED,
    FAIL,
    PASS,
    check_decomposition,
    check_derived_power_relators,
    check_dihedral_counts,
    check_keylemma,
    check_quasiconj,
    check_sl2z3_counts,
    check_sl2z3_presentation_witness,
    run_suite,
)


def test_decomposition_documents_the_two_misfiled_entries():
    result = check_decomposition()
    assert result.status == DOCUMENTED
    d = result.details
    assert d["group_order"] == 24
    assert d["class_sizes"] == {
        "identity": 1,
        "minus-identity": 1,
        "order-four": 6,
        "order-three": 8,
        "order-six": 8,
    }
    assert d["partition_covers_group"]
    misfiled = {
        (x["entry"], x["listed_under"], x["classified_as"])
        for x in d["reference_list_discrepancies"]
    }
    # the two entries printed under the order-four list actually have order 6,
    # and the two true order-four elements are absent from that list
    assert ("[[0,1],[-1,1]]", "order-four", "order-six") in misfiled
    assert ("[[0,-1],[1,1]]", "order-four", "order-six") in misfiled
    assert ("[[0,1],[-1,0]]", None, "order-four") in misfiled
    assert ("[[0,-1],[1,0]]", None, "order-four") in misfiled
    dupes = {x["entry"] for x in d["reference_list_duplicates"]}
    assert dupes == {"[[0,1],[-1,1]]", "[[0,-1],[1,1]]"}


def test_quasiconjugation_rule_holds_with_one_bad_reference_cell():
    result = check_quasiconj()
    assert result.status == DOCUMENTED
    assert result.details["pairs_checked"] == 36
    assert result.details["rule_violations"] == []
    diffs = result.details["reference_table_cell_diffs"]
    assert len(diffs) == 1
    only = diffs[0]
    assert only["row"] == only["column"] == "[[-1,1],[1,1]]"
    assert only["listed"] == "[[1,-1],[1,-1]]"  # determinant 0: a misprint
    assert only["computed"] == "[[1,-1],[-1,-1]]"


def test_keylemma_sweep_passes():
    result = check_keylemma()
    assert result.status == PASS
    assert result.details["failures"] == []
    assert result.details["powers_checked"] > 1000


def test_presentation_witness():
    result = check_sl2z3_presentation_witness()
    assert result.status == PASS
    d = result.details
    assert d["group_order"] == 24
    assert d["generating_witnesses"] == 24
    assert d["witnesses_with_noncentral_value"] == []
    assert d["witness"]["common_value"] == "[[-1,0],[0,-1]]"


def test_sl2z3_counts_pass_and_record_uncovered():
    result = check_sl2z3_counts(m_range=(-6, 6), n_max=3)
    assert result.status == PASS
    assert result.details["mismatches"] == []
    assert result.details["structure_failures"] == []
    uncovered = result.details["uncovered_m_counts"]
    assert any(" m=3 " in key for key in uncovered)
    assert uncovered["trefoil m=3 n=1"] == 33


def test_dihedral_counts_documented_with_orbit_explanation():
    result = check_dihedral_counts(m_range=(-4, 4), k_range=(1, 4), n_max=2)
    assert result.status == DOCUMENTED
    d = result.details
    assert d["enumeration_vs_hom_closed_form_failures"] == []
    assert d["structure_failures"] == []
    assert d["published_formula_discrepancy_cells"] > 0
    assert all(x["orbit_pairing_explains"] for x in d["published_formula_discrepancies"])
    cells = {(x["m"], x["k"]): x for x in d["published_formula_discrepancies"]}
    assert cells[(3, 3)]["enumerated"] == 3
    assert cells[(3, 3)]["published_closed_form"] == 2
    assert cells[(4, 2)]["enumerated"] == 0
    assert cells[(4, 2)]["published_closed_form"] == 1


def test_derived_power_relators_pass():
    result = check_derived_power_relators(m_range=(-4, 4), k_range=(1, 4), n_max=2)
    assert result.status == PASS
    assert result.details["violations"] == []
    assert result.details["representations_checked"] > 100


def test_corrupted_catalog_fails_with_counterexample(monkeypatch):
    """A presentation that is not a knot group must surface as a hard failure."""
    from twistspin import verifier

    fake = WirtingerPresentation(2, (), name="corrupted")  # free group, not a knot
    monkeypatch.setattr(verifier, "get_knot", lambda name: fake)
    result = check_dihedral_counts(m_range=(2, 2), k_range=(2, 2), knots=["corrupted"], n_max=1)
    assert result.status == FAIL
    bad = result.details["enumeration_vs_hom_closed_form_failures"]
    assert bad and bad[0]["knot"] == "corrupted"
    assert bad[0]["enumerated"] != bad[0]["hom_closed_form"]


def test_run_suite_composition_and_order():
    lemmas = run_suite("lemmas")
    assert [r.check_id for r in lemmas.results] == sorted(r.check_id for r in lemmas.results)
    assert len(lemmas.results) == 4
    theorems = run_suite("theorems", m_range=(-3, 3), k_range=(1, 3))
    assert len(theorems.results) == 3
    assert theorems.overall_pass  # documented discrepancies do not fail the suite
    statuses = {r.check_id: r.status for r in theorems.results}
    assert statuses["dihedral-count-formula"] == DOCUMENTED
    assert statuses["sl2z3-count-formula"] == PASS


def test_report_serialization_is_deterministic_and_timing_free():
    a = run_suite("lemmas").to_json_dict()
    b = run_suite("lemmas").to_json_dict()
    assert json.dumps(a) == json.dumps(b)
    assert all(r["runtime_ms"] is None for r in a["results"])
    timed = run_suite("lemmas").to_json_dict(include_runtime=True)
    assert all(isinstance(r["runtime_ms"], float) for r in timed["results"])


def test_run_suite_rejects_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("everything")
