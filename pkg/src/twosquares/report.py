"""Whole-catalog verification run and its deterministic report.

`run_verify_paper` executes every check the package makes about the two
squares: the conventional square under Venn semantics, the synthetic
square and claim catalog under the direct reading, the twelve-case
sweep, the two-square classification and matrix properties on the
nonstandard carrier, the bridge satisfaction tables, and the bundled
derivations.  The result is a plain dict that serializes byte-stably:
all iteration is over explicitly ordered data, and no timestamps or
environment details are recorded.
"""

from __future__ import annotations

import json

from . import __version__
from .analytic import IMPORT_OFF, IMPORT_ON
from .errors import BoundError, TwoSquaresError
from .formula import Atom, Copula, parse, render
from .opposition import (
    AnalyticSemantics,
    CatalogResult,
    SquareReport,
    SyntheticSemantics,
    analytic_square,
    catalog_entries,
    catalog_formula,
    run_catalog,
    synthetic_square,
    verify_square,
)
from .proofs import (
    AXIOM5_WITH_DEFINITIONS,
    bundled_theorem_derivations,
    check_proves,
)
from .starb import (
    BridgeModel,
    Column,
    FiniteBooleanAlgebra,
    Filter,
    MatrixLogic,
    OrderMode,
    Strict,
    UltraElement,
    all_elements,
    bridge_satisfies,
    classify_cases,
    fneg,
    join,
    leq,
    matrix_imp,
    matrix_neg,
    meet,
    mk_standard,
    verify_two_squares,
)
from .synthetic import DIRECT_EMPTY_OK, DIRECT_NONEMPTY
from .verdicts import Counterexample, Valid, Verdict

ANALYTIC_SQUARE_BOUND = 4  # the conventional-square claim is about |D| <= 4
MAX_MODEL_BOUND = 4
MAX_ATOM_COUNT = 3

_NOTES = (
    "universal-affirmative: the bare-existence disjunct is implemented literally, "
    "so `S sa P` is true whenever anything is S",
    "carrier order: nonstandard-vs-nonstandard comparisons in the fiat mode "
    "fall back to the pointwise order",
    "strict designation is never met by a nonstandard atom value; the filter "
    "policy is reported alongside",
    "all validity verdicts are bounded; no unbounded claim is made",
)


def _verdict_dict(verdict: Verdict) -> dict:
    if isinstance(verdict, Valid):
        return {"status": verdict.describe()}
    return {
        "status": "counterexample",
        "witness": verdict.model.to_dict(),
        "witness_summary": verdict.model.summary(),
        "atom_values": {atom: value for atom, value in verdict.atom_trace},
    }


def square_dict(report: SquareReport) -> dict:
    pairs = []
    for pv in report.pairs:
        row = {
            "corners": f"{pv.first}-{pv.second}",
            "expected": pv.expected.value,
            "actual": pv.relation.kind.value,
            "ok": pv.ok,
            "witnesses": {
                name: model.to_dict() for name, model in pv.relation.witnesses().items()
            },
        }
        pairs.append(row)
    return {
        "name": report.name,
        "semantics": report.semantics_label,
        "bound": report.bound,
        "corners": dict(report.corner_text),
        "pairs": pairs,
        "pass": report.passed,
    }


class _Expectations:
    def __init__(self) -> None:
        self.rows: list[dict] = []

    def add(self, check_id: str, description: str, status) -> None:
        if isinstance(status, bool):
            status = "met" if status else "failed"
        self.rows.append({"id": check_id, "description": description, "status": status})

    @property
    def all_met(self) -> bool:
        return all(row["status"] == "met" for row in self.rows)


def _analytic_section(expect: _Expectations) -> dict:
    report = verify_square(analytic_square(), AnalyticSemantics(IMPORT_ON), ANALYTIC_SQUARE_BOUND)
    expect.add(
        "analytic-square",
        f"conventional square holds with import on, |D| <= {ANALYTIC_SQUARE_BOUND}",
        report.passed,
    )
    subalt = AnalyticSemantics(IMPORT_OFF).decide(parse("S a P -> S i P"), ANALYTIC_SQUARE_BOUND)
    fails_without_import = isinstance(subalt, Counterexample)
    empty_subject = fails_without_import and not subalt.model.extension("S")
    expect.add(
        "analytic-subalternation-import-off",
        "a=>i fails without import, empty-subject witness",
        fails_without_import and empty_subject,
    )
    return {
        "square": square_dict(report),
        "subalternation_without_import": {
            "formula": "S a P -> S i P",
            **_verdict_dict(subalt),
            "empty_subject_witness": empty_subject,
        },
    }


def _synthetic_square_section(expect: _Expectations, model_bound: int) -> dict:
    report = verify_square(synthetic_square(), SyntheticSemantics(DIRECT_NONEMPTY), model_bound)
    expect.add(
        "synthetic-square",
        f"synthetic square holds, direct reading, 1 <= |U| <= {model_bound}",
        report.passed,
    )
    return square_dict(report)


def _catalog_row(result: CatalogResult) -> dict:
    row = {
        "id": result.entry.id,
        "schema": render(result.entry.schema.formula),
        "source": result.entry.source,
        "semantics": "synthetic(direct, nonempty)",
        "expected": result.entry.expected.label(),
        **_verdict_dict(result.verdict),
        "met": result.status,
    }
    if result.status == "inconclusive" and isinstance(result.verdict, Valid):
        row["status"] = f"no counterexample found up to bound {result.verdict.bound}"
    return row


def _catalog_section(expect: _Expectations, model_bound: int) -> dict:
    results = run_catalog(model_bound)
    for result in results:
        expect.add(
            result.entry.id,
            f"{render(result.entry.schema.formula)} expected {result.entry.expected.label()}",
            result.status,
        )
    with_empty = run_catalog(model_bound, DIRECT_EMPTY_OK)
    boundary = next(r for r in with_empty if r.entry.id == "T19")
    boundary_failed = (
        isinstance(boundary.verdict, Counterexample)
        and len(boundary.verdict.model.universe) == 0
    )
    expect.add(
        "catalog-empty-boundary",
        "admitting the empty universe breaks a-i contrariety (T19) with witness U = {}",
        boundary_failed,
    )
    return {
        "bound": model_bound,
        "entries": [_catalog_row(r) for r in results],
        "empty_universe_boundary": _catalog_row(boundary),
    }


def _case_section(expect: _Expectations, atom_count: int) -> dict:
    alg = FiniteBooleanAlgebra(atom_count)
    rows = []
    violations = 0
    hypothesis_counts = [0] * 12
    for x in all_elements(alg):
        for outcome in classify_cases(x):
            if outcome.hypothesis_holds:
                hypothesis_counts[outcome.case_id - 1] += 1
                if not outcome.conclusion_holds:
                    violations += 1
    for case_id, count in enumerate(hypothesis_counts, start=1):
        rows.append({"case": case_id, "hypothesis_holds_for": count})
    standard_ok = all(
        meet(x, fneg(x)).standard and join(x, fneg(x)).standard for x in all_elements(alg)
    )
    expect.add(
        "case-sweep",
        f"cases 1-12 conclusions hold for every hypothesis-satisfying element ({atom_count} atoms)",
        violations == 0,
    )
    expect.add(
        "inf-sup-standard",
        "inf(x, x-flip) and sup(x, x-flip) are standard for every x",
        standard_ok,
    )
    return {
        "atom_count": atom_count,
        "elements": alg.size * alg.size,
        "cases": rows,
        "conclusion_violations": violations,
        "inf_sup_standard": standard_ok,
    }


def _proposition1_section(expect: _Expectations, atom_count: int) -> dict:
    reports = [verify_two_squares(FiniteBooleanAlgebra(k)) for k in range(1, atom_count + 1)]
    sweeps = []
    for report in reports:
        expect.add(
            f"proposition1-{report.atom_count}atom",
            f"two-square sweep passes over the {report.atom_count}-atom carrier",
            report.passed,
        )
        sweeps.append(
            {
                "atom_count": report.atom_count,
                "elements": report.total_elements,
                "conventional": {
                    "condition": report.conventional.condition,
                    "satisfied_by": report.conventional.satisfied_by,
                    "nonstandard_satisfiers": report.conventional.nonstandard_satisfiers,
                    "violations": list(report.conventional.violations),
                },
                "synthetic": {
                    "condition": report.synthetic.condition,
                    "satisfied_by": report.synthetic.satisfied_by,
                    "nonstandard_satisfiers": report.synthetic.nonstandard_satisfiers,
                    "violations": list(report.synthetic.violations),
                },
                "hypothesis_equivalences_ok": report.hypothesis_equivalences_ok,
                "alternative_hypothesis": {
                    "condition": "[f¬] ≤ [f]",
                    "generates_conventional_square": report.proof_bullet_generates_conventional,
                    "witness": report.proof_bullet_witness,
                },
            }
        )
    expect.add(
        "prop1-conventional-nonstandard",
        "the conventional-square condition is realizable by nonstandard elements",
        all(r.conventional_nonstandard_realizable for r in reports),
    )
    expect.add(
        "prop1-synthetic-standard-only",
        "the synthetic-square condition forces [f] = [f¬] in this carrier",
        all(r.synthetic_forces_standard for r in reports),
    )
    return {"sweeps": sweeps}


def _matrix_section(expect: _Expectations, atom_count: int) -> dict:
    alg = FiniteBooleanAlgebra(atom_count)
    ml = MatrixLogic(alg)
    elems = all_elements(alg)
    top = mk_standard(alg, alg.top)
    double_negation = all(matrix_neg(matrix_neg(x)) == x for x in elems)
    imp_top_identity = all(matrix_imp(top, x) == x for x in elems)
    modus_ponens = all(
        y == top
        for x in elems
        for y in elems
        if x == top and matrix_imp(x, y) == top
    )
    designation_order = all(
        ml.is_designated(matrix_imp(x, y)) == leq(x, y, OrderMode.POINTWISE)
        for x in elems
        for y in elems
    )
    checks = {
        "double_negation": double_negation,
        "imp_top_identity": imp_top_identity,
        "modus_ponens_preservation": modus_ponens,
        "designation_order_compatibility": designation_order,
    }
    for name, ok in checks.items():
        expect.add(f"matrix-{name.replace('_', '-')}", f"matrix logic: {name}", ok)
    return {"atom_count": atom_count, "elements": len(elems), **checks}


def _bridge_table(bm: BridgeModel) -> dict:
    atom_values = {}
    satisfied = {}
    for copula in ("sa", "se", "si", "so"):
        atom = Atom("S", Copula(copula), "P")
        value = bm.interpret(atom)
        atom_values[copula] = str(value)
        satisfied[copula] = bridge_satisfies(bm, atom)
    axiom5_shape = bridge_satisfies(bm, parse("S sa P -> S se P"))
    policy = bm.policy.label() if isinstance(bm.policy, (Strict, Filter)) else str(bm.policy)
    return {
        "generator": str(bm.generator),
        "column": bm.column.value,
        "policy": policy,
        "atom_values": atom_values,
        "satisfied": satisfied,
        "axiom5_shape_satisfied": axiom5_shape,
    }


def _bridge_section(expect: _Expectations, atom_count: int) -> dict:
    alg = FiniteBooleanAlgebra(atom_count)
    nonstandard = UltraElement(alg, 1, 0)  # meets the conventional-square condition
    top = mk_standard(alg, alg.top)
    tables = []
    for generator in (nonstandard, top):
        for column in (Column.PRIMARY, Column.ALTERNATE):
            for policy in (Strict(), Filter(generator)):
                tables.append(_bridge_table(BridgeModel(generator, column, policy)))
    strict_nonstandard = _bridge_table(BridgeModel(nonstandard, Column.PRIMARY, Strict()))
    strict_top = _bridge_table(BridgeModel(top, Column.PRIMARY, Strict()))
    expect.add(
        "bridge-strict-nonstandard-atom",
        "strict designation leaves the nonstandard a-form atom unsatisfied",
        not strict_nonstandard["satisfied"]["sa"],
    )
    expect.add(
        "bridge-strict-axiom5-shape",
        "the axiom-5 shape is satisfied in the strict nonstandard model",
        strict_nonstandard["axiom5_shape_satisfied"],
    )
    expect.add(
        "bridge-strict-top-atom",
        "the a-form atom is satisfied when the generator is *1",
        strict_top["satisfied"]["sa"],
    )
    return {"atom_count": atom_count, "tables": tables}


def _derivations_section(expect: _Expectations, model_bound: int) -> dict:
    semantics = SyntheticSemantics(DIRECT_NONEMPTY)
    targets = {
        entry.id: catalog_formula(entry)
        for entry in catalog_entries()
        if entry.source == "theorem-list"
    }
    rows = []
    all_ok = True
    all_valid = True
    for tid, derivation in sorted(bundled_theorem_derivations().items()):
        result = check_proves(derivation, targets[tid], AXIOM5_WITH_DEFINITIONS)
        verdict = semantics.decide(targets[tid], model_bound)
        ok = result.ok
        valid = isinstance(verdict, Valid)
        all_ok = all_ok and ok
        all_valid = all_valid and valid
        rows.append(
            {
                "id": tid,
                "lines": len(derivation.lines),
                "check": result.describe(),
                "semantic_status": verdict.describe(),
            }
        )
    expect.add(
        "derivations-ok",
        "all bundled theorem derivations check under axiom5 + definitional schemas",
        all_ok,
    )
    expect.add(
        "derivations-sound",
        "every bundled conclusion is confirmed valid by the model checker",
        all_valid,
    )
    return {"axiom_set": "axiom5 + definitional schemas", "entries": rows}


def run_verify_paper(model_bound: int = 3, atom_count: int = 2) -> dict:
    """Run the full verification and return the report dict.

    `model_bound` caps the synthetic-model sweeps (catalog, axioms, the
    synthetic square); the analytic square always runs at domain bound
    4, which is what its claim is about.  `atom_count` sizes the
    carrier sweeps.  Section failures are recorded in the expectation
    table; the report's "pass" is true iff every expectation is met.
    """
    if not 1 <= model_bound <= MAX_MODEL_BOUND:
        raise BoundError(f"model bound {model_bound} outside 1..{MAX_MODEL_BOUND}")
    if not 1 <= atom_count <= MAX_ATOM_COUNT:
        raise BoundError(f"atom count {atom_count} outside 1..{MAX_ATOM_COUNT}")
    expect = _Expectations()
    sections: dict = {}
    builders = (
        ("analytic_square", lambda: _analytic_section(expect)),
        ("synthetic_square", lambda: _synthetic_square_section(expect, model_bound)),
        ("theorem_catalog", lambda: _catalog_section(expect, model_bound)),
        ("case_sweep", lambda: _case_section(expect, atom_count)),
        ("proposition1", lambda: _proposition1_section(expect, atom_count)),
        ("matrix_properties", lambda: _matrix_section(expect, atom_count)),
        ("bridge_models", lambda: _bridge_section(expect, atom_count)),
        ("derivations", lambda: _derivations_section(expect, model_bound)),
    )
    for name, build in builders:
        try:
            sections[name] = build()
        except TwoSquaresError as exc:  # partial report with a failure marker
            sections[name] = {"error": str(exc)}
            expect.add(f"section-{name}", f"section {name} completed", False)
    return {
        "title": "two squares of opposition: verification report",
        "version": __version__,
        "bounds": {"model_bound": model_bound, "atom_count": atom_count},
        "sections": sections,
        "expectations": expect.rows,
        "notes": list(_NOTES),
        "pass": expect.all_met,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def report_text(report: dict) -> str:
    """Plain-text summary: one line per expectation plus the headline."""
    marks = {"met": "[ OK ]", "failed": "[FAIL]", "inconclusive": "[ ?? ]"}
    lines = [
        report["title"],
        "version %s; synthetic model bound %d; algebra atoms %d"
        % (report["version"], report["bounds"]["model_bound"], report["bounds"]["atom_count"]),
        "",
    ]
    for row in report["expectations"]:
        lines.append(f"{marks[row['status']]} {row['id']}: {row['description']}")
    lines.append("")
    lines.append("overall: %s" % ("PASS" if report["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"
