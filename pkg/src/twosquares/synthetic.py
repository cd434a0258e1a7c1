"""Semantics for the synthetic copulas over a primitive "is" relation.

The four synthetic forms are quantifier expressions over a bound
individual variable A:

    S sa P :  (exists A. A is S)  or  (forall A. A is P and A is S)
    S si P :  forall A. A is P and not (A is S)
    S so P :  (forall A. not (A is S)) and (exists A. not (A is P) or not (A is S))
    S se P :  exists A. not (A is P) or (A is S)

`so` and `se` are by construction the negations of `sa` and `si`.
Note the first disjunct of `sa` does not mention P at all; it is
implemented literally and the resulting behaviour is surfaced in
reports rather than repaired.

Three readings of "A is S" are supported.  Direct treats it as a
primitive relation given by the model.  The two Derived readings route
it through the composite copula definition over a structure with a
primitive relation between individuals plus a denotation for each term;
they differ in the last conjunct (Literal demands forall C. (C prim a
and C prim b), Charitable weakens it to forall C. (C prim a -> C prim
b)).  Neither derived reading is preferred; they exist to probe the
composite definition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping

from .errors import BoundError, SemanticsError
from .formula import And, Atom, Copula, Formula, Not, Or, atoms, render, term_names
from .verdicts import Counterexample, Valid, Verdict

_INDIVIDUALS = ("u", "v", "w", "x")
MAX_UNIVERSE_DIRECT = 4
MAX_UNIVERSE_DERIVED = 3


class Reading(Enum):
    DIRECT = "direct"
    DERIVED_LITERAL = "derived"
    DERIVED_CHARITABLE = "derived-charitable"


@dataclass(frozen=True)
class SyntheticOptions:
    reading: Reading = Reading.DIRECT
    allow_empty_universe: bool = False

    def label(self) -> str:
        return f"{self.reading.value}, {'empty-allowed' if self.allow_empty_universe else 'nonempty'}"


DIRECT_NONEMPTY = SyntheticOptions()
DIRECT_EMPTY_OK = SyntheticOptions(allow_empty_universe=True)


@dataclass(frozen=True)
class SyntheticModel:
    """Finite universe plus the set of true (individual, term) facts."""

    universe: tuple[str, ...]
    facts: frozenset[tuple[str, str]]

    def holds(self, individual: str, term: str) -> bool:
        return (individual, term) in self.facts

    def summary(self) -> str:
        parts = ["U={%s}" % ",".join(self.universe)]
        for term in sorted({t for _, t in self.facts}):
            members = sorted(a for a, t in self.facts if t == term)
            parts.append("%s={%s}" % (term, ",".join(members)))
        return "; ".join(parts)

    def to_dict(self) -> dict:
        return {
            "universe": list(self.universe),
            "is": {a: sorted(t for b, t in self.facts if b == a) for a in self.universe},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> SyntheticModel:
        universe = tuple(data["universe"])
        facts = set()
        for individual, terms in data.get("is", {}).items():
            if individual not in universe:
                raise SemanticsError(f"individual {individual!r} outside the universe")
            for t in terms:
                facts.add((individual, t))
        return cls(universe, frozenset(facts))


@dataclass(frozen=True)
class CopulaStructure:
    """Carrier for the composite copula: a primitive relation between
    individuals and a denoting individual per term."""

    universe: tuple[str, ...]
    is_prim: frozenset[tuple[str, str]]
    denote: Mapping[str, str]

    def prim(self, a: str, b: str) -> bool:
        return (a, b) in self.is_prim

    def denotation(self, term: str) -> str:
        try:
            return self.denote[term]
        except KeyError:
            raise SemanticsError(f"term {term!r} has no denotation") from None

    def summary(self) -> str:
        prim = ",".join(f"({a},{b})" for a, b in sorted(self.is_prim))
        den = ",".join(f"{t}->{self.denote[t]}" for t in sorted(self.denote))
        return "U={%s}; prim={%s}; %s" % (",".join(self.universe), prim, den)

    def to_dict(self) -> dict:
        return {
            "universe": list(self.universe),
            "isPrim": [list(pair) for pair in sorted(self.is_prim)],
            "denote": {t: self.denote[t] for t in sorted(self.denote)},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> CopulaStructure:
        universe = tuple(data["universe"])
        pairs = frozenset((a, b) for a, b in data.get("isPrim", []))
        denote = dict(data.get("denote", {}))
        for a, b in pairs:
            if a not in universe or b not in universe:
                raise SemanticsError(f"primitive pair ({a!r}, {b!r}) outside the universe")
        for term, ind in denote.items():
            if ind not in universe:
                raise SemanticsError(f"denotation of {term!r} outside the universe")
        return cls(universe, pairs, denote)


def derived_copula(c: CopulaStructure, a: str, b: str, charitable: bool) -> bool:
    """The composite "a is b" over the primitive relation.

    Literal mode:  (exists C. C prim a)
                   and (forall C, D. (C prim a and D prim a) -> C prim D)
                   and (forall C. C prim a and C prim b).
    Charitable mode replaces the last conjunct by
    forall C. (C prim a -> C prim b).
    """
    if a not in c.universe or b not in c.universe:
        raise SemanticsError(f"unknown individual in copula: {a!r}, {b!r}")
    u = c.universe
    if not any(c.prim(x, a) for x in u):
        return False
    if not all(
        c.prim(x, y)
        for x in u
        for y in u
        if c.prim(x, a) and c.prim(y, a)
    ):
        return False
    if charitable:
        return all(c.prim(x, b) for x in u if c.prim(x, a))
    return all(c.prim(x, a) and c.prim(x, b) for x in u)


def _atom_truth(copula: Copula, is_s, is_p, universe) -> bool:
    if copula is Copula.SA:
        return any(is_s(a) for a in universe) or all(is_p(a) and is_s(a) for a in universe)
    if copula is Copula.SI:
        return all(is_p(a) and not is_s(a) for a in universe)
    if copula is Copula.SO:
        return all(not is_s(a) for a in universe) and any(
            not is_p(a) or not is_s(a) for a in universe
        )
    # SE
    return any(not is_p(a) or is_s(a) for a in universe)


def eval_synthetic(
    model: SyntheticModel | CopulaStructure,
    f: Formula,
    opts: SyntheticOptions = DIRECT_NONEMPTY,
) -> bool:
    """Evaluate a synthetic-only formula under the chosen reading."""
    direct = opts.reading is Reading.DIRECT
    if direct and not isinstance(model, SyntheticModel):
        raise SemanticsError("direct reading expects a SyntheticModel")
    if not direct and not isinstance(model, CopulaStructure):
        raise SemanticsError("derived readings expect a CopulaStructure")
    if not model.universe and not opts.allow_empty_universe:
        raise SemanticsError("empty universe disallowed by the evaluation options")
    charitable = opts.reading is Reading.DERIVED_CHARITABLE

    def evaluate(g: Formula) -> bool:
        if isinstance(g, Atom):
            if not g.copula.synthetic:
                raise SemanticsError(
                    f"analytic copula {g.copula.value!r} under synthetic semantics"
                )
            if direct:
                is_s = lambda a: model.holds(a, g.subject)
                is_p = lambda a: model.holds(a, g.predicate)
            else:
                den_s = model.denotation(g.subject)
                den_p = model.denotation(g.predicate)
                is_s = lambda a: derived_copula(model, a, den_s, charitable)
                is_p = lambda a: derived_copula(model, a, den_p, charitable)
            return _atom_truth(g.copula, is_s, is_p, model.universe)
        if isinstance(g, Not):
            return not evaluate(g.operand)
        if isinstance(g, And):
            return evaluate(g.left) and evaluate(g.right)
        if isinstance(g, Or):
            return evaluate(g.left) or evaluate(g.right)
        return (not evaluate(g.left)) or evaluate(g.right)

    return evaluate(f)


def _check_universe_bound(max_u: int, opts: SyntheticOptions) -> None:
    cap = MAX_UNIVERSE_DIRECT if opts.reading is Reading.DIRECT else MAX_UNIVERSE_DERIVED
    if not 0 <= max_u <= cap:
        raise BoundError(f"universe bound {max_u} outside 0..{cap} for {opts.reading.value}")


def enumerate_synthetic_models(
    terms: tuple[str, ...], max_u: int, opts: SyntheticOptions = DIRECT_NONEMPTY
) -> Iterator[SyntheticModel]:
    """All models with |U| <= max_u, smallest universe first, then
    lexicographic fact assignments; the empty universe comes first when
    allowed."""
    _check_universe_bound(max_u, opts)
    start = 0 if opts.allow_empty_universe else 1
    for size in range(start, max_u + 1):
        universe = _INDIVIDUALS[:size]
        for masks in itertools.product(range(1 << size), repeat=len(terms)):
            facts = frozenset(
                (universe[i], t)
                for k, t in enumerate(terms)
                for i in range(size)
                if masks[k] >> i & 1
            )
            yield SyntheticModel(universe, facts)


def enumerate_copula_structures(
    terms: tuple[str, ...], max_u: int, opts: SyntheticOptions
) -> Iterator[CopulaStructure]:
    """All copula structures with |U| <= max_u: every primitive relation,
    every denotation assignment.  A nonempty term list admits no empty
    structure (denotations need a target), so size 0 is skipped."""
    _check_universe_bound(max_u, opts)
    start = 0 if opts.allow_empty_universe else 1
    for size in range(start, max_u + 1):
        universe = _INDIVIDUALS[:size]
        if size == 0:
            if not terms:
                yield CopulaStructure((), frozenset(), {})
            continue
        pairs = [(a, b) for a in universe for b in universe]
        for prim_mask in range(1 << len(pairs)):
            prim = frozenset(p for i, p in enumerate(pairs) if prim_mask >> i & 1)
            for denote_choice in itertools.product(range(size), repeat=len(terms)):
                denote = {t: universe[denote_choice[k]] for k, t in enumerate(terms)}
                yield CopulaStructure(universe, prim, denote)


def _trace(model, f: Formula, opts: SyntheticOptions) -> tuple[tuple[str, bool], ...]:
    return tuple((render(a), eval_synthetic(model, a, opts)) for a in atoms(f))


def decide_synthetic_validity(
    f: Formula, bound: int, opts: SyntheticOptions = DIRECT_NONEMPTY
) -> Verdict:
    """Valid up to `bound`, or the first (minimal) countermodel."""
    terms = term_names(f)
    if opts.reading is Reading.DIRECT:
        models = enumerate_synthetic_models(terms, bound, opts)
    else:
        models = enumerate_copula_structures(terms, bound, opts)
    for model in models:
        if not eval_synthetic(model, f, opts):
            return Counterexample(model, _trace(model, f, opts))
    return Valid(bound)
