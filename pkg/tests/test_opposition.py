import pytest

from twosquares.analytic import IMPORT_ON
from twosquares.errors import SemanticsError
from twosquares.formula import parse, render, schema_of
from twosquares.opposition import (
    AnalyticSemantics,
    RelationKind,
    SyntheticSemantics,
    analytic_square,
    catalog_entries,
    classify_pair,
    run_catalog,
    synthetic_square,
    verify_square,
)
from twosquares.synthetic import DIRECT_EMPTY_OK, DIRECT_NONEMPTY
from twosquares.verdicts import Counterexample, Valid

ANALYTIC = AnalyticSemantics(IMPORT_ON)
SYNTHETIC = SyntheticSemantics(DIRECT_NONEMPTY)


def test_analytic_a_e_contrary():
    rel = classify_pair(schema_of("S a P"), schema_of("S e P"), ANALYTIC, 3)
    assert rel.kind is RelationKind.CONTRARY
    assert rel.both_true is None and rel.both_false is not None


def test_synthetic_a_i_contrary():
    rel = classify_pair(schema_of("S sa P"), schema_of("S si P"), SYNTHETIC, 3)
    assert rel.kind is RelationKind.CONTRARY


def test_synthetic_a_o_contradictory():
    rel = classify_pair(schema_of("S sa P"), schema_of("S so P"), SYNTHETIC, 3)
    assert rel.kind is RelationKind.CONTRADICTORY
    assert rel.both_true is None and rel.both_false is None


def test_classify_rejects_copula_family_mismatch():
    with pytest.raises(SemanticsError):
        classify_pair(schema_of("S a P"), schema_of("S e P"), SYNTHETIC, 2)


def test_classify_rejects_metavariable_mismatch():
    with pytest.raises(ValueError):
        classify_pair(schema_of("S sa P"), schema_of("S si Q"), SYNTHETIC, 2)


def test_relation_symmetry_of_the_symmetric_kinds():
    pairs = [("S sa P", "S si P"), ("S sa P", "S so P"), ("S se P", "S so P")]
    for left, right in pairs:
        ab = classify_pair(schema_of(left), schema_of(right), SYNTHETIC, 2)
        ba = classify_pair(schema_of(right), schema_of(left), SYNTHETIC, 2)
        assert ab.kind is ba.kind


def test_subalternation_flips_orientation():
    fwd = classify_pair(schema_of("S sa P"), schema_of("S se P"), SYNTHETIC, 2)
    back = classify_pair(schema_of("S se P"), schema_of("S sa P"), SYNTHETIC, 2)
    assert fwd.kind is RelationKind.SUBALTERNATION_FORWARD
    assert back.kind is RelationKind.SUBALTERNATION_BACKWARD


def test_classifier_sound_against_validity():
    # a contradictory pair makes both the exclusion and the covering valid
    rel = classify_pair(schema_of("S sa P"), schema_of("S so P"), SYNTHETIC, 3)
    assert rel.kind is RelationKind.CONTRADICTORY
    assert SYNTHETIC.decide(parse("~(S sa P & S so P)"), 3) == Valid(3)
    assert SYNTHETIC.decide(parse("S sa P | S so P"), 3) == Valid(3)
    # a contrary pair validates the exclusion only
    assert SYNTHETIC.decide(parse("~(S sa P & S si P)"), 3) == Valid(3)
    assert isinstance(SYNTHETIC.decide(parse("S sa P | S si P"), 3), Counterexample)
    # a subcontrary pair validates the covering only
    assert SYNTHETIC.decide(parse("S se P | S so P"), 3) == Valid(3)
    assert isinstance(SYNTHETIC.decide(parse("~(S se P & S so P)"), 3), Counterexample)
    # a forward subalternation validates the implication, not its converse
    assert SYNTHETIC.decide(parse("S sa P -> S se P"), 3) == Valid(3)
    assert isinstance(SYNTHETIC.decide(parse("S se P -> S sa P"), 3), Counterexample)


def test_analytic_square_passes():
    report = verify_square(analytic_square(), ANALYTIC, 3)
    assert report.passed
    assert {(p.first, p.second): p.relation.kind for p in report.pairs} == {
        ("a", "e"): RelationKind.CONTRARY,
        ("i", "o"): RelationKind.SUBCONTRARY,
        ("a", "o"): RelationKind.CONTRADICTORY,
        ("e", "i"): RelationKind.CONTRADICTORY,
        ("a", "i"): RelationKind.SUBALTERNATION_FORWARD,
        ("e", "o"): RelationKind.SUBALTERNATION_FORWARD,
    }


def test_synthetic_square_passes():
    report = verify_square(synthetic_square(), SYNTHETIC, 3)
    assert report.passed
    assert {(p.first, p.second): p.relation.kind for p in report.pairs} == {
        ("a", "i"): RelationKind.CONTRARY,
        ("e", "o"): RelationKind.SUBCONTRARY,
        ("a", "o"): RelationKind.CONTRADICTORY,
        ("e", "i"): RelationKind.CONTRADICTORY,
        ("a", "e"): RelationKind.SUBALTERNATION_FORWARD,
        ("i", "o"): RelationKind.SUBALTERNATION_FORWARD,
    }


def test_synthetic_square_fails_with_empty_universe_admitted():
    report = verify_square(synthetic_square(), SyntheticSemantics(DIRECT_EMPTY_OK), 3)
    assert not report.passed
    contrariety = next(p for p in report.pairs if (p.first, p.second) == ("a", "i"))
    assert not contrariety.ok
    assert contrariety.relation.both_true is not None
    assert contrariety.relation.both_true.universe == ()


def test_catalog_ids_and_sources():
    entries = catalog_entries()
    assert [e.id for e in entries] == [f"T{n:02d}" for n in range(1, 21)] + ["A5", "A6", "A7", "A8"]
    assert all(e.source == "theorem-list" for e in entries[:20])
    assert all(e.source == "axiom" for e in entries[20:])


def test_run_catalog_default_expectations_met():
    results = run_catalog(3)
    assert all(r.status == "met" for r in results)
    by_id = {r.entry.id: r for r in results}
    assert isinstance(by_id["T01"].verdict, Valid)
    assert isinstance(by_id["A5"].verdict, Valid)
    assert isinstance(by_id["A7"].verdict, Valid)
    assert len(by_id["A6"].verdict.model.universe) == 1
    assert len(by_id["A8"].verdict.model.universe) == 2


def test_run_catalog_inconclusive_below_witness_size():
    by_id = {r.entry.id: r for r in run_catalog(1)}
    assert by_id["A6"].status == "met"
    assert isinstance(by_id["A8"].verdict, Valid)
    assert by_id["A8"].status == "inconclusive"


def test_run_catalog_empty_universe_breaks_contrariety_entry():
    by_id = {r.entry.id: r for r in run_catalog(3, DIRECT_EMPTY_OK)}
    verdict = by_id["T19"].verdict
    assert isinstance(verdict, Counterexample)
    assert verdict.model.universe == ()


def test_counterexamples_persist_at_larger_bounds():
    f = parse("S so P -> P so S")
    small = SYNTHETIC.decide(f, 1)
    for bound in (2, 3):
        larger = SYNTHETIC.decide(f, bound)
        assert isinstance(larger, Counterexample)
        assert larger.model == small.model  # enumeration order is stable


def test_entry_schemas_render_round_trip():
    for entry in catalog_entries():
        assert parse(render(entry.schema.formula)) == entry.schema.formula
