import pytest

from twosquares.errors import BoundError, SemanticsError
from twosquares.formula import parse
from twosquares.synthetic import (
    DIRECT_EMPTY_OK,
    DIRECT_NONEMPTY,
    CopulaStructure,
    Reading,
    SyntheticModel,
    SyntheticOptions,
    decide_synthetic_validity,
    derived_copula,
    enumerate_copula_structures,
    enumerate_synthetic_models,
    eval_synthetic,
)
from twosquares.verdicts import Counterexample, Valid

DERIVED = SyntheticOptions(Reading.DERIVED_LITERAL)
CHARITABLE = SyntheticOptions(Reading.DERIVED_CHARITABLE)


def model(universe, **terms):
    facts = {(a, t) for t, members in terms.items() for a in members}
    return SyntheticModel(tuple(universe), frozenset(facts))


# Independent oracle: the unexpanded quantifier forms.  The a- and i-forms
# are transcribed directly; o and e are taken as the negations of a and i
# (their unexpanded shape), so comparing against the implementation's
# expanded forms is a genuine dual-route check.
def oracle_sa(m, s, p):
    return any(m.holds(a, s) for a in m.universe) or all(
        m.holds(a, p) and m.holds(a, s) for a in m.universe
    )


def oracle_si(m, s, p):
    return all(m.holds(a, p) and not m.holds(a, s) for a in m.universe)


def oracle_so(m, s, p):
    return not oracle_sa(m, s, p)


def oracle_se(m, s, p):
    return not oracle_si(m, s, p)


def test_single_individual_p_only():
    m = model("u", P="u")
    assert eval_synthetic(m, parse("S si P")) is True
    assert eval_synthetic(m, parse("S sa P")) is False
    assert eval_synthetic(m, parse("S so P")) is True
    assert eval_synthetic(m, parse("S se P")) is False


def test_empty_universe_makes_both_universals_true():
    m = model("")
    assert eval_synthetic(m, parse("S si P"), DIRECT_EMPTY_OK) is True
    assert eval_synthetic(m, parse("S sa P"), DIRECT_EMPTY_OK) is True


def test_empty_universe_rejected_when_disallowed():
    with pytest.raises(SemanticsError):
        eval_synthetic(model(""), parse("S sa P"), DIRECT_NONEMPTY)


def test_bare_existence_disjunct_suffices_for_a_form():
    m = model("u", S="u")
    assert eval_synthetic(m, parse("S sa P")) is True


def test_rejects_analytic_copula_and_model_mismatch():
    m = model("u", S="u")
    with pytest.raises(SemanticsError):
        eval_synthetic(m, parse("S a P"))
    with pytest.raises(SemanticsError):
        eval_synthetic(m, parse("S sa P"), DERIVED)


def test_expanded_forms_match_unexpanded_oracle_everywhere():
    sa, si, so, se = (parse(f"S {c} P") for c in ("sa", "si", "so", "se"))
    for m in enumerate_synthetic_models(("P", "S"), 2, DIRECT_EMPTY_OK):
        assert eval_synthetic(m, sa, DIRECT_EMPTY_OK) == oracle_sa(m, "S", "P")
        assert eval_synthetic(m, si, DIRECT_EMPTY_OK) == oracle_si(m, "S", "P")
        assert eval_synthetic(m, so, DIRECT_EMPTY_OK) == oracle_so(m, "S", "P")
        assert eval_synthetic(m, se, DIRECT_EMPTY_OK) == oracle_se(m, "S", "P")


def test_definitional_negations_hold_bit_for_bit_direct():
    sa, si, so, se = (parse(f"S {c} P") for c in ("sa", "si", "so", "se"))
    for m in enumerate_synthetic_models(("P", "S"), 3, DIRECT_EMPTY_OK):
        assert eval_synthetic(m, so, DIRECT_EMPTY_OK) == (
            not eval_synthetic(m, sa, DIRECT_EMPTY_OK)
        )
        assert eval_synthetic(m, se, DIRECT_EMPTY_OK) == (
            not eval_synthetic(m, si, DIRECT_EMPTY_OK)
        )


def test_definitional_negations_hold_in_derived_readings():
    sa, si, so, se = (parse(f"S {c} P") for c in ("sa", "si", "so", "se"))
    for opts in (DERIVED, CHARITABLE):
        for c in enumerate_copula_structures(("P", "S"), 2, opts):
            assert eval_synthetic(c, so, opts) == (not eval_synthetic(c, sa, opts))
            assert eval_synthetic(c, se, opts) == (not eval_synthetic(c, si, opts))


def test_nonempty_synthetic_square_profile():
    sa, si, so, se = (parse(f"S {c} P") for c in ("sa", "si", "so", "se"))
    for m in enumerate_synthetic_models(("P", "S"), 3, DIRECT_NONEMPTY):
        va, vi = eval_synthetic(m, sa), eval_synthetic(m, si)
        ve, vo = eval_synthetic(m, se), eval_synthetic(m, so)
        assert not (va and vi)          # contrary top edge
        assert ve or vo                 # subcontrary bottom edge
        assert va != vo and ve != vi    # diagonals
        assert (not va) or ve           # a => e
        assert (not vi) or vo           # i => o


def test_empty_universe_breaks_contrariety():
    m = model("")
    sa, si = parse("S sa P"), parse("S si P")
    assert eval_synthetic(m, sa, DIRECT_EMPTY_OK) and eval_synthetic(m, si, DIRECT_EMPTY_OK)


# --- the composite copula ----------------------------------------------------

def structure(universe, prim, **denote):
    return CopulaStructure(tuple(universe), frozenset(prim), dict(denote))


def test_derived_copula_needs_reflexive_witness():
    c = structure("cab", {("c", "a"), ("c", "b")})
    # uniqueness clause instantiated at C = D = c requires c prim c
    assert derived_copula(c, "a", "b", charitable=False) is False
    assert derived_copula(c, "a", "b", charitable=True) is False


def test_derived_copula_charitable_vs_literal():
    c = structure("cab", {("c", "a"), ("c", "b"), ("c", "c")})
    assert derived_copula(c, "a", "b", charitable=True) is True
    # the literal third conjunct demands every individual witness both sides
    assert derived_copula(c, "a", "b", charitable=False) is False


def test_derived_copula_empty_relation():
    c = structure("cab", set())
    assert derived_copula(c, "a", "b", charitable=False) is False
    assert derived_copula(c, "a", "b", charitable=True) is False


def test_derived_copula_unknown_individual():
    c = structure("ab", set())
    with pytest.raises(SemanticsError):
        derived_copula(c, "a", "z", charitable=True)


# --- enumeration --------------------------------------------------------------

def test_model_counts():
    assert len(list(enumerate_synthetic_models(("P", "S"), 1, DIRECT_EMPTY_OK))) == 5
    assert len(list(enumerate_synthetic_models(("P", "S"), 2, DIRECT_NONEMPTY))) == 20
    assert len(list(enumerate_synthetic_models(("M", "P", "S"), 2, DIRECT_NONEMPTY))) == 2**3 + 2**6
    assert len(list(enumerate_synthetic_models(("M", "P", "S"), 2, DIRECT_EMPTY_OK))) == 2**3 + 2**6 + 1


def test_enumeration_bound_guards():
    with pytest.raises(BoundError):
        list(enumerate_synthetic_models(("S",), 5, DIRECT_NONEMPTY))
    with pytest.raises(BoundError):
        list(enumerate_synthetic_models(("S",), 4, DERIVED))
    with pytest.raises(BoundError):
        list(enumerate_copula_structures(("S",), 4, DERIVED))


def test_enumeration_monotone_and_deterministic():
    small = list(enumerate_synthetic_models(("P", "S"), 1, DIRECT_NONEMPTY))
    large = list(enumerate_synthetic_models(("P", "S"), 2, DIRECT_NONEMPTY))
    assert large[: len(small)] == small


# --- validity -----------------------------------------------------------------

def test_axiom5_instance_valid():
    assert decide_synthetic_validity(parse("S sa P -> S se P"), 3) == Valid(3)


def test_axiom6_instance_has_size_one_countermodel():
    verdict = decide_synthetic_validity(parse("S so P -> P so S"), 3)
    assert isinstance(verdict, Counterexample)
    expected = model("u", P="u")
    assert verdict.model == expected
    # oracle confirmation by quantifier expansion on the witness
    assert oracle_so(expected, "S", "P") and not oracle_so(expected, "P", "S")


def test_axiom8_instance_has_size_two_countermodel():
    f = parse("(M sa P & S se M) -> S se P")
    verdict = decide_synthetic_validity(f, 3)
    assert isinstance(verdict, Counterexample)
    expected = model("uv", M="u", P="uv")
    assert verdict.model == expected
    # oracle confirmation: antecedent true, consequent false
    assert oracle_sa(expected, "M", "P")
    assert oracle_se(expected, "S", "M")
    assert not oracle_se(expected, "S", "P")


def test_counterexample_reevaluates_false():
    f = parse("S so P -> P so S")
    verdict = decide_synthetic_validity(f, 3)
    assert eval_synthetic(verdict.model, f) is False
    assert dict(verdict.atom_trace) == {"S so P": True, "P so S": False}


def test_model_json_round_trip():
    m = model("uv", P="uv", M="u")
    data = m.to_dict()
    assert data == {"universe": ["u", "v"], "is": {"u": ["M", "P"], "v": ["P"]}}
    assert SyntheticModel.from_dict(data) == m


def test_structure_json_round_trip():
    c = structure("ab", {("a", "b")}, S="a", P="b")
    data = c.to_dict()
    assert data == {
        "universe": ["a", "b"],
        "isPrim": [["a", "b"]],
        "denote": {"P": "b", "S": "a"},
    }
    assert CopulaStructure.from_dict(data) == c
