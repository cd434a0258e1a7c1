"""Opposition classification, square verification, and the claim catalog.

A pair of schemas is classified by its truth-pair profile over every
model at the bound: which of both-true / both-false / first-only /
second-only are possible.  The mapping is

    neither both-true nor both-false        -> contradictory
    no both-true, both-false possible       -> contrary
    no both-false, both-true possible       -> subcontrary
    first => second valid, converse fails   -> subalternation (forward)
    second => first valid, converse fails   -> subalternation (backward)
    anything else                           -> independent

so every relation claim is falsifiable by a concrete witness model.
Verdicts are always relative to the bound; no unbounded validity is
claimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator, Mapping

from .analytic import (
    IMPORT_ON,
    ImportPolicy,
    decide_analytic_validity,
    enumerate_analytic_models,
    eval_analytic,
)
from .errors import SemanticsError
from .formula import Formula, Schema, copulas, instantiate, render, schema_of
from .synthetic import (
    DIRECT_NONEMPTY,
    Reading,
    SyntheticOptions,
    decide_synthetic_validity,
    enumerate_copula_structures,
    enumerate_synthetic_models,
    eval_synthetic,
)
from .verdicts import Counterexample, Valid, Verdict


@dataclass(frozen=True)
class AnalyticSemantics:
    policy: ImportPolicy = IMPORT_ON

    def label(self) -> str:
        return f"analytic(import={self.policy.label()})"

    def to_dict(self) -> dict:
        return {"family": "analytic", "existential_import": self.policy.existential_import}

    def accepts(self, f: Formula) -> bool:
        return all(c.analytic for c in copulas(f))

    def models(self, terms: tuple[str, ...], bound: int) -> Iterator[Any]:
        return enumerate_analytic_models(terms, bound)

    def evaluate(self, model: Any, f: Formula) -> bool:
        return eval_analytic(model, f, self.policy)

    def decide(self, f: Formula, bound: int) -> Verdict:
        return decide_analytic_validity(f, bound, self.policy)


@dataclass(frozen=True)
class SyntheticSemantics:
    options: SyntheticOptions = DIRECT_NONEMPTY

    def label(self) -> str:
        return f"synthetic({self.options.label()})"

    def to_dict(self) -> dict:
        return {
            "family": "synthetic",
            "reading": self.options.reading.value,
            "allow_empty_universe": self.options.allow_empty_universe,
        }

    def accepts(self, f: Formula) -> bool:
        return all(c.synthetic for c in copulas(f))

    def models(self, terms: tuple[str, ...], bound: int) -> Iterator[Any]:
        if self.options.reading is Reading.DIRECT:
            return enumerate_synthetic_models(terms, bound, self.options)
        return enumerate_copula_structures(terms, bound, self.options)

    def evaluate(self, model: Any, f: Formula) -> bool:
        return eval_synthetic(model, f, self.options)

    def decide(self, f: Formula, bound: int) -> Verdict:
        return decide_synthetic_validity(f, bound, self.options)


Semantics = AnalyticSemantics | SyntheticSemantics


class RelationKind(Enum):
    CONTRADICTORY = "contradictory"
    CONTRARY = "contrary"
    SUBCONTRARY = "subcontrary"
    SUBALTERNATION_FORWARD = "subalternation-forward"
    SUBALTERNATION_BACKWARD = "subalternation-backward"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class OppositionRelation:
    """Classification of a schema pair with the first witness model found
    for each truth-pair category that is possible at the bound."""

    kind: RelationKind
    bound: int
    both_true: Any | None = None
    both_false: Any | None = None
    first_only: Any | None = None
    second_only: Any | None = None

    def witnesses(self) -> dict[str, Any]:
        out = {}
        for name in ("both_true", "both_false", "first_only", "second_only"):
            model = getattr(self, name)
            if model is not None:
                out[name] = model
        return out


def classify_pair(
    phi: Schema, psi: Schema, semantics: Semantics, bound: int
) -> OppositionRelation:
    """Classify the opposition relation between two schemas over the same
    two metavariables by exhaustive search at the bound."""
    if set(phi.metavars) != set(psi.metavars) or len(phi.metavars) != 2:
        raise ValueError("schemas must share the same two metavariables")
    identity = {m: m for m in phi.metavars}
    left = instantiate(phi, identity)
    right = instantiate(psi, identity)
    for f in (left, right):
        if not semantics.accepts(f):
            raise SemanticsError("mixed copula families: formula does not fit the semantics")
    terms = tuple(sorted(phi.metavars))

    both_true = both_false = first_only = second_only = None
    for model in semantics.models(terms, bound):
        p = semantics.evaluate(model, left)
        q = semantics.evaluate(model, right)
        if p and q and both_true is None:
            both_true = model
        elif p and not q and first_only is None:
            first_only = model
        elif q and not p and second_only is None:
            second_only = model
        elif not p and not q and both_false is None:
            both_false = model

    if both_true is None and both_false is None:
        kind = RelationKind.CONTRADICTORY
    elif both_true is None:
        kind = RelationKind.CONTRARY
    elif both_false is None:
        kind = RelationKind.SUBCONTRARY
    elif first_only is None and second_only is not None:
        kind = RelationKind.SUBALTERNATION_FORWARD
    elif second_only is None and first_only is not None:
        kind = RelationKind.SUBALTERNATION_BACKWARD
    else:
        kind = RelationKind.INDEPENDENT
    return OppositionRelation(kind, bound, both_true, both_false, first_only, second_only)


# --- squares ---------------------------------------------------------------

@dataclass(frozen=True)
class SquareSpec:
    """Four corner schemas plus the expected relation for each of the six
    corner pairs.  Pair order matters for subalternation: the expected
    forward arrow runs first -> second."""

    name: str
    corners: Mapping[str, Schema]
    expected: tuple[tuple[str, str, RelationKind], ...]

    def __post_init__(self) -> None:
        pairs = {frozenset((a, b)) for a, b, _ in self.expected}
        if len(pairs) != 6 or len(self.expected) != 6:
            raise ValueError("a square needs exactly the six corner pairs")


@dataclass(frozen=True)
class PairVerdict:
    first: str
    second: str
    expected: RelationKind
    relation: OppositionRelation

    @property
    def ok(self) -> bool:
        return self.relation.kind is self.expected


@dataclass(frozen=True)
class SquareReport:
    name: str
    semantics_label: str
    bound: int
    pairs: tuple[PairVerdict, ...]
    corner_text: Mapping[str, str]

    @property
    def passed(self) -> bool:
        return all(p.ok for p in self.pairs)


def verify_square(spec: SquareSpec, semantics: Semantics, bound: int) -> SquareReport:
    """Classify all six corner pairs and compare against the expectations."""
    pairs = []
    for first, second, expected in spec.expected:
        relation = classify_pair(spec.corners[first], spec.corners[second], semantics, bound)
        pairs.append(PairVerdict(first, second, expected, relation))
    corner_text = {label: render(spec.corners[label].formula) for label in sorted(spec.corners)}
    return SquareReport(spec.name, semantics.label(), bound, tuple(pairs), corner_text)


def analytic_square() -> SquareSpec:
    """The conventional square: a-e contrary, i-o subcontrary, the two
    diagonals contradictory, and downward subalternations a->i, e->o."""
    return SquareSpec(
        name="analytic",
        corners={
            "a": schema_of("S a P"),
            "e": schema_of("S e P"),
            "i": schema_of("S i P"),
            "o": schema_of("S o P"),
        },
        expected=(
            ("a", "e", RelationKind.CONTRARY),
            ("i", "o", RelationKind.SUBCONTRARY),
            ("a", "o", RelationKind.CONTRADICTORY),
            ("e", "i", RelationKind.CONTRADICTORY),
            ("a", "i", RelationKind.SUBALTERNATION_FORWARD),
            ("e", "o", RelationKind.SUBALTERNATION_FORWARD),
        ),
    )


def synthetic_square() -> SquareSpec:
    """The synthetic square: a-i contrary, e-o subcontrary, a-o and e-i
    contradictory, subalternations a->e and i->o."""
    return SquareSpec(
        name="synthetic",
        corners={
            "a": schema_of("S sa P"),
            "e": schema_of("S se P"),
            "i": schema_of("S si P"),
            "o": schema_of("S so P"),
        },
        expected=(
            ("a", "i", RelationKind.CONTRARY),
            ("e", "o", RelationKind.SUBCONTRARY),
            ("a", "o", RelationKind.CONTRADICTORY),
            ("e", "i", RelationKind.CONTRADICTORY),
            ("a", "e", RelationKind.SUBALTERNATION_FORWARD),
            ("i", "o", RelationKind.SUBALTERNATION_FORWARD),
        ),
    )


# --- claim catalog ---------------------------------------------------------

@dataclass(frozen=True)
class ExpectedStatus:
    valid: bool
    countermodel_size: int | None = None

    def label(self) -> str:
        if self.valid:
            return "valid"
        return f"counterexample at size {self.countermodel_size}"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    schema: Schema
    source: str  # "axiom" | "theorem-list"
    expected: ExpectedStatus


@dataclass(frozen=True)
class CatalogResult:
    entry: CatalogEntry
    verdict: Verdict
    status: str  # "met" | "failed" | "inconclusive"


_THEOREM_TEXTS = (
    ("T01", "S sa P -> ~(S so P)"),
    ("T02", "~(S so P) -> S sa P"),
    ("T03", "S si P -> ~(S se P)"),
    ("T04", "~(S se P) -> S si P"),
    ("T05", "S se P -> ~(S si P)"),
    ("T06", "~(S si P) -> S se P"),
    ("T07", "S so P -> ~(S sa P)"),
    ("T08", "~(S sa P) -> S so P"),
    ("T09", "S sa P -> ~(S si P)"),
    ("T10", "S si P -> ~(S sa P)"),
    ("T11", "~(S se P) -> S so P"),
    ("T12", "~(S so P) -> S se P"),
    ("T13", "S sa P -> S se P"),
    ("T14", "S si P -> S so P"),
    ("T15", "S se P | S si P"),
    ("T16", "~(S se P & S si P)"),
    ("T17", "S sa P | S so P"),
    ("T18", "~(S sa P & S so P)"),
    ("T19", "~(S sa P & S si P)"),
    ("T20", "S se P | S so P"),
)

_AXIOM_TEXTS = (
    ("A5", "S sa P -> S se P", ExpectedStatus(True)),
    ("A6", "S so P -> P so S", ExpectedStatus(False, 1)),
    ("A7", "(M sa P & S sa M) -> S sa P", ExpectedStatus(True)),
    ("A8", "(M sa P & S se M) -> S se P", ExpectedStatus(False, 2)),
)


def catalog_entries() -> tuple[CatalogEntry, ...]:
    """The fixed catalog: theorems T01-T20 and axioms A5-A8, in id order."""
    entries = [
        CatalogEntry(tid, schema_of(text), "theorem-list", ExpectedStatus(True))
        for tid, text in _THEOREM_TEXTS
    ]
    entries.extend(
        CatalogEntry(aid, schema_of(text), "axiom", expected)
        for aid, text, expected in _AXIOM_TEXTS
    )
    return tuple(entries)


def catalog_formula(entry: CatalogEntry) -> Formula:
    return instantiate(entry.schema, {m: m for m in entry.schema.metavars})


def _entry_status(entry: CatalogEntry, verdict: Verdict, bound: int) -> str:
    if entry.expected.valid:
        return "met" if isinstance(verdict, Valid) else "failed"
    size = entry.expected.countermodel_size
    if isinstance(verdict, Counterexample):
        return "met" if len(verdict.model.universe) == size else "failed"
    return "inconclusive" if bound < size else "failed"


def run_catalog(
    bound: int = 3, options: SyntheticOptions = DIRECT_NONEMPTY
) -> tuple[CatalogResult, ...]:
    """Evaluate every catalog entry under the given synthetic options.

    Failures are data, not errors: each result carries the verdict and
    whether it met the entry's recorded expectation (which is stated for
    the default nonempty direct reading)."""
    semantics = SyntheticSemantics(options)
    results = []
    for entry in catalog_entries():
        verdict = semantics.decide(catalog_formula(entry), bound)
        results.append(CatalogResult(entry, verdict, _entry_status(entry, verdict, bound)))
    return tuple(results)
