import pytest

from twosquares.errors import BoundError
from twosquares.formula import Not, parse
from twosquares.opposition import SyntheticSemantics, catalog_entries, catalog_formula
from twosquares.proofs import (
    AXIOM5_WITH_DEFINITIONS,
    AxiomInstance,
    AxiomSet,
    Derivation,
    DerivationLine,
    ModusPonens,
    bundled_theorem_derivations,
    bundled_theorem_scripts,
    check_derivation,
    check_proves,
    format_script,
    is_tautology,
    parse_script,
)
from twosquares.verdicts import Valid

ALL_SOURCES = AxiomSet()


def test_tautology_contraposition_schema():
    assert is_tautology(parse("(S sa P -> S se P) -> (~(S se P) -> ~(S sa P))"))


def test_tautology_excluded_middle():
    assert is_tautology(parse("S sa P | ~(S sa P)"))


def test_distinct_atoms_are_independent():
    assert not is_tautology(parse("S sa P -> S se P"))


def test_tautology_atom_budget():
    big = " | ".join(f"X{i} sa Y{i}" for i in range(13))
    with pytest.raises(BoundError):
        is_tautology(parse(big))


def test_axiom_set_requires_a_source():
    with pytest.raises(ValueError):
        AxiomSet(
            use_axiom5=False,
            use_axiom6=False,
            use_axiom7=False,
            use_axiom8=False,
            use_definitional_schemas=False,
        )


def _t09_derivation():
    # S sa P -> ~(S si P) from an axiom-5 instance and the e-definition
    return parse_script(
        """
        1. S sa P -> S se P ; axiom5 S:=S P:=P
        2. (S se P -> ~(S si P)) & (~(S si P) -> S se P) ; def-e S P
        3. (S sa P -> S se P) -> (((S se P -> ~(S si P)) & (~(S si P) -> S se P)) -> (S sa P -> ~(S si P))) ; taut
        4. ((S se P -> ~(S si P)) & (~(S si P) -> S se P)) -> (S sa P -> ~(S si P)) ; mp 1 3
        5. S sa P -> ~(S si P) ; mp 2 4
        """
    )


def test_accepts_theorem_derivation():
    result = check_derivation(_t09_derivation(), AXIOM5_WITH_DEFINITIONS)
    assert result.ok
    assert result.refuted_axioms_used == ()


def test_rejects_when_mp_premise_missing():
    d = _t09_derivation()
    without_line_2 = Derivation(tuple(l for l in d.lines if l.index != 2))
    result = check_derivation(without_line_2, AXIOM5_WITH_DEFINITIONS)
    assert not result.ok
    assert result.line == 5  # first line whose cited premise is gone
    assert "missing" in result.reason


def test_rejects_wrong_schema_shape():
    d = Derivation(
        (
            DerivationLine(
                1,
                parse("P sa S -> S sa P"),
                AxiomInstance("axiom5", (("S", "S"), ("P", "P"))),
            ),
        )
    )
    result = check_derivation(d, ALL_SOURCES)
    assert not result.ok and result.line == 1
    assert "instance" in result.reason


def test_rejects_disabled_source():
    d = _t09_derivation()
    no_defs = AxiomSet(use_definitional_schemas=False)
    result = check_derivation(d, no_defs)
    assert not result.ok and result.line == 2
    assert "disabled" in result.reason


def test_rejects_empty_and_bad_index_order():
    assert not check_derivation(Derivation(()), ALL_SOURCES).ok
    lines = _t09_derivation().lines
    shuffled = Derivation((lines[1], lines[0]) + lines[2:])
    assert not check_derivation(shuffled, ALL_SOURCES).ok


def test_flags_semantically_refuted_axioms():
    d = Derivation(
        (
            DerivationLine(
                1,
                parse("S so P -> P so S"),
                AxiomInstance("axiom6", (("S", "S"), ("P", "P"))),
            ),
        )
    )
    result = check_derivation(d, ALL_SOURCES)
    assert result.ok
    assert result.refuted_axioms_used == ("axiom6",)
    assert "unsound" in result.describe() or "refuted" in result.describe()


def test_check_is_independent_of_annotation_details():
    # renumbering lines (keeping order and fixing citations) changes nothing
    d = _t09_derivation()
    renumber = {line.index: 10 * line.index for line in d.lines}
    relabeled = []
    for line in d.lines:
        j = line.justification
        if isinstance(j, ModusPonens):
            j = ModusPonens(renumber[j.antecedent], renumber[j.implication])
        relabeled.append(DerivationLine(renumber[line.index], line.formula, j))
    assert check_derivation(Derivation(tuple(relabeled)), AXIOM5_WITH_DEFINITIONS).ok


def test_script_round_trip():
    d = _t09_derivation()
    assert parse_script(format_script(d)) == d


def test_three_line_derivation_from_the_o_definition():
    script = """
    1. (S so P -> ~(S sa P)) & (~(S sa P) -> S so P) ; def-o S P
    2. ((S so P -> ~(S sa P)) & (~(S sa P) -> S so P)) -> (S sa P -> ~(S so P)) ; taut
    3. S sa P -> ~(S so P) ; mp 1 2
    """
    result = check_derivation(parse_script(script), AXIOM5_WITH_DEFINITIONS)
    assert result.ok


# --- the bundled catalog derivations -----------------------------------------

def _targets():
    return {
        e.id: catalog_formula(e) for e in catalog_entries() if e.source == "theorem-list"
    }


def test_bundle_covers_all_twenty_theorems():
    derivations = bundled_theorem_derivations()
    assert sorted(derivations) == [f"T{n:02d}" for n in range(1, 21)]


def test_every_bundled_derivation_checks_and_proves_its_theorem():
    targets = _targets()
    for tid, d in bundled_theorem_derivations().items():
        result = check_proves(d, targets[tid], AXIOM5_WITH_DEFINITIONS)
        assert result.ok, f"{tid}: {result.describe()}"


def test_bundled_scripts_reparse_and_recheck():
    targets = _targets()
    for tid, script in bundled_theorem_scripts().items():
        d = parse_script(script)
        assert check_proves(d, targets[tid], AXIOM5_WITH_DEFINITIONS).ok


def _mutations(d: Derivation):
    """Deterministic single-line mutations: negate a formula, bump a modus
    ponens citation, drop the line."""
    for k, line in enumerate(d.lines):
        yield Derivation(
            d.lines[:k]
            + (DerivationLine(line.index, Not(line.formula), line.justification),)
            + d.lines[k + 1:]
        )
        if isinstance(line.justification, ModusPonens):
            j = line.justification
            yield Derivation(
                d.lines[:k]
                + (
                    DerivationLine(
                        line.index, line.formula, ModusPonens(j.antecedent, j.antecedent)
                    ),
                )
                + d.lines[k + 1:]
            )
        yield Derivation(d.lines[:k] + d.lines[k + 1:])


def test_single_line_mutations_break_every_bundled_derivation():
    targets = _targets()
    for tid, d in bundled_theorem_derivations().items():
        for mutant in _mutations(d):
            result = check_proves(mutant, targets[tid], AXIOM5_WITH_DEFINITIONS)
            assert not result.ok, f"{tid} survived a mutation"


def test_kernel_accepted_formulas_are_model_checked_valid():
    semantics = SyntheticSemantics()
    targets = _targets()
    for tid, d in bundled_theorem_derivations().items():
        assert check_proves(d, targets[tid], AXIOM5_WITH_DEFINITIONS).ok
        assert semantics.decide(d.conclusion, 3) == Valid(3), tid
