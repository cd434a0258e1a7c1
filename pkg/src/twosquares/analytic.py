"""Set-theoretic (Venn) semantics for the analytic copulas over finite models.

An atom `S a P` compares the extent of S with the extent of P.  With
existential import on (the default), the universal affirmative also
requires a nonempty subject extent; `o` is its negation, while `e` and
`i` are import-free.  That is the minimal convention under which all
six relations of the conventional square hold at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import BoundError, SemanticsError
from .formula import And, Atom, Copula, Formula, Not, Or, atoms, render, term_names
from .verdicts import Counterexample, Valid, Verdict

_INDIVIDUALS = ("1", "2", "3", "4", "5", "6")
MAX_DOMAIN = 6


@dataclass(frozen=True)
class ImportPolicy:
    existential_import: bool = True

    def label(self) -> str:
        return "on" if self.existential_import else "off"


IMPORT_ON = ImportPolicy(True)
IMPORT_OFF = ImportPolicy(False)


@dataclass(frozen=True)
class AnalyticModel:
    """Finite domain plus one extent per term."""

    domain: tuple[str, ...]
    ext: Mapping[str, frozenset[str]]

    def extension(self, term: str) -> frozenset[str]:
        try:
            return self.ext[term]
        except KeyError:
            raise SemanticsError(f"term {term!r} has no extent in this model") from None

    def summary(self) -> str:
        parts = ["D={%s}" % ",".join(self.domain)]
        for term in sorted(self.ext):
            parts.append("%s={%s}" % (term, ",".join(sorted(self.ext[term]))))
        return "; ".join(parts)

    def to_dict(self) -> dict:
        return {
            "domain": list(self.domain),
            "ext": {t: sorted(self.ext[t]) for t in sorted(self.ext)},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> AnalyticModel:
        domain = tuple(data["domain"])
        ext = {t: frozenset(members) for t, members in data["ext"].items()}
        for term, members in ext.items():
            if not members <= set(domain):
                raise SemanticsError(f"extent of {term!r} leaves the domain")
        return cls(domain, ext)


def eval_analytic(model: AnalyticModel, f: Formula, policy: ImportPolicy = IMPORT_ON) -> bool:
    """Evaluate an analytic-only formula in `model` under `policy`."""
    if isinstance(f, Atom):
        if not f.copula.analytic:
            raise SemanticsError(f"synthetic copula {f.copula.value!r} under analytic semantics")
        s = model.extension(f.subject)
        p = model.extension(f.predicate)
        if f.copula is Copula.A:
            return (bool(s) or not policy.existential_import) and s <= p
        if f.copula is Copula.E:
            return not (s & p)
        if f.copula is Copula.I:
            return bool(s & p)
        return not eval_analytic(model, Atom(f.subject, Copula.A, f.predicate), policy)
    if isinstance(f, Not):
        return not eval_analytic(model, f.operand, policy)
    if isinstance(f, And):
        return eval_analytic(model, f.left, policy) and eval_analytic(model, f.right, policy)
    if isinstance(f, Or):
        return eval_analytic(model, f.left, policy) or eval_analytic(model, f.right, policy)
    return (not eval_analytic(model, f.left, policy)) or eval_analytic(model, f.right, policy)


def enumerate_analytic_models(terms: tuple[str, ...], max_domain: int) -> Iterator[AnalyticModel]:
    """All models with |domain| <= max_domain, smallest domain first, then
    lexicographic extension assignments (subset bitmasks ascending, the
    first term varying slowest)."""
    if not 0 <= max_domain <= MAX_DOMAIN:
        raise BoundError(f"domain bound {max_domain} outside 0..{MAX_DOMAIN}")
    for size in range(max_domain + 1):
        domain = _INDIVIDUALS[:size]
        for masks in itertools.product(range(1 << size), repeat=len(terms)):
            ext = {
                t: frozenset(domain[i] for i in range(size) if masks[k] >> i & 1)
                for k, t in enumerate(terms)
            }
            yield AnalyticModel(domain, ext)


def _trace(model: AnalyticModel, f: Formula, policy: ImportPolicy) -> tuple[tuple[str, bool], ...]:
    return tuple((render(a), eval_analytic(model, a, policy)) for a in atoms(f))


def decide_analytic_validity(f: Formula, bound: int, policy: ImportPolicy = IMPORT_ON) -> Verdict:
    """Valid up to `bound`, or the first (minimal) countermodel."""
    for model in enumerate_analytic_models(term_names(f), bound):
        if not eval_analytic(model, f, policy):
            return Counterexample(model, _trace(model, f, policy))
    return Valid(bound)
