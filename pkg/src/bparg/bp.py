"""Second-stage labelling under burdens of persuasion, its completions and grounding.

The BP-labelling conditions are a constraint system over the first-stage UND
arguments. A candidate may have several models or none; the solver returns
the model with fewest IN* arguments, and when no model exists it falls back
to a candidate violating as few biconditionals as possible, flagged
``approximate``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .arguments import Argument, ArgumentationGraph, ResourceLimitError, prefers
from .grounded import DEFAULT_ENUMERATION_CAP, complete_extensions
from .labelling import (
    BPLabelling,
    Label,
    Labelling,
    StarLabel,
    TriLabelling,
    allowed_values,
    is_label,
    k_and,
    k_any,
    k_not,
    k_or,
    search,
)
from .theory import Literal, check_burdens, complement

DEFAULT_MAX_UND = 20
STAR = tuple(StarLabel)
IN, OUT, UND = STAR


@dataclass(frozen=True)
class SolverDiagnostics:
    exact: bool
    violation_count: int
    model_count: int
    approximate: bool

    def __post_init__(self):
        if self.exact and (self.violation_count or self.approximate):
            raise ValueError("an exact result has no violations and is not approximate")

    def as_dict(self) -> dict:
        return {
            "exact": self.exact,
            "violationCount": self.violation_count,
            "modelCount": self.model_count,
            "approximate": self.approximate,
        }


class _Context:
    """Per-argument counterarguments split by preference, and direct subs."""

    def __init__(self, g: ArgumentationGraph, burdens: Iterable[Literal]):
        self.g = g
        self.phi = check_burdens(burdens)
        by_conc: dict[Literal, list[Argument]] = {}
        for a in g.arguments:
            by_conc.setdefault(a.conclusion, []).append(a)
        t = g.theory
        self.stronger: dict[str, list[str]] = {}
        self.not_weaker: dict[str, list[str]] = {}
        self.subs: dict[str, list[str]] = {}
        self.burdened: dict[str, bool] = {}
        self.favoured: dict[str, bool] = {}
        for a in g.arguments:
            counters = by_conc.get(complement(a.conclusion), [])
            # B > A and, separately, A not > B
            self.stronger[a.signature] = [b.signature for b in counters if prefers(b, a, t)]
            self.not_weaker[a.signature] = [b.signature for b in counters if not prefers(a, b, t)]
            self.subs[a.signature] = [s.signature for s in a.direct_subs]
            self.burdened[a.signature] = a.conclusion in self.phi
            self.favoured[a.signature] = complement(a.conclusion) in self.phi

    def cond_in(self, sig: str, lab: Mapping) -> bool | None:
        subs = self.subs[sig]
        if self.favoured[sig]:
            return k_and(
                k_not(k_any(is_label(lab, b, IN) for b in self.stronger[sig])),
                k_not(k_any(is_label(lab, s, OUT) for s in subs)),
            )
        return k_and(
            k_and(*(is_label(lab, b, OUT) for b in self.not_weaker[sig])),
            k_and(*(is_label(lab, s, IN) for s in subs)),
        )

    def cond_out(self, sig: str, lab: Mapping) -> bool | None:
        subs = self.subs[sig]
        if self.burdened[sig]:
            return k_or(
                k_any(k_not(is_label(lab, b, OUT)) for b in self.not_weaker[sig]),
                k_any(k_not(is_label(lab, s, IN)) for s in subs),
            )
        return k_or(
            k_any(is_label(lab, b, IN) for b in self.stronger[sig]),
            k_any(is_label(lab, s, OUT) for s in subs),
        )

    def allowed(self, sig: str, lab: Mapping) -> list:
        return allowed_values(self.cond_in(sig, lab), self.cond_out(sig, lab), STAR)

    def violations(self, sig: str, lab: Mapping) -> int:
        """Definitely failed biconditionals of ``sig`` under a partial labelling."""
        here = lab.get(sig)
        c_in, c_out = self.cond_in(sig, lab), self.cond_out(sig, lab)
        if here is None:
            # either condition true forces a label; both true cannot be met
            return int(c_in is True and c_out is True)
        n = 0
        if c_in is not None and (here is IN) != c_in:
            n += 1
        if c_out is not None and (here is OUT) != c_out:
            n += 1
        return n


def _total(candidate) -> Mapping:
    return candidate.labels if isinstance(candidate, Labelling) else candidate


def _resolve_burdens(g: ArgumentationGraph, burdens) -> frozenset[Literal]:
    return g.theory.burdens if burdens is None else check_burdens(burdens)


def bp_condition_in(a: Argument | str, candidate, g: ArgumentationGraph, burdens=None) -> bool:
    """Acceptance condition for a first-stage UND argument under ``candidate``."""
    sig = a if isinstance(a, str) else a.signature
    value = _Context(g, _resolve_burdens(g, burdens)).cond_in(sig, _total(candidate))
    if value is None:
        raise ValueError("candidate labelling is not total")
    return value


def bp_condition_out(a: Argument | str, candidate, g: ArgumentationGraph, burdens=None) -> bool:
    """Rejection condition for a first-stage UND argument under ``candidate``."""
    sig = a if isinstance(a, str) else a.signature
    value = _Context(g, _resolve_burdens(g, burdens)).cond_out(sig, _total(candidate))
    if value is None:
        raise ValueError("candidate labelling is not total")
    return value


def count_violations(candidate, g: ArgumentationGraph, grounded: TriLabelling, burdens=None) -> int:
    lab = _total(candidate)
    ctx = _Context(g, _resolve_burdens(g, burdens))
    n = 0
    for sig in g.signatures():
        first = grounded[sig]
        if first is Label.IN:
            n += lab[sig] is not IN
        elif first is Label.OUT:
            n += lab[sig] is not OUT
        else:
            n += ctx.violations(sig, lab)
    return n


def _und_order(g: ArgumentationGraph, grounded: TriLabelling) -> list[str]:
    # arguments are already ordered by height first
    return [a.signature for a in g.arguments if grounded[a.signature] is Label.UND]


def _check_cap(n_und: int, cap: int):
    if n_und > cap:
        raise ResourceLimitError(f"{n_und} first-stage UND arguments exceed the search cap of {cap}")


def enumerate_bp_labellings(
    g: ArgumentationGraph, grounded: TriLabelling, burdens=None, cap: int = DEFAULT_MAX_UND
) -> list[BPLabelling]:
    """All exact BP-labellings, fewest IN* first."""
    und = _und_order(g, grounded)
    _check_cap(len(und), cap)
    ctx = _Context(g, _resolve_burdens(g, burdens))
    fixed = {s: StarLabel.of(l) for s, l in grounded.labels.items() if l is not Label.UND}
    sigs = g.signatures()
    models = [Labelling({s: m[s] for s in sigs}) for m in search(und, und, fixed, ctx.allowed, STAR)]
    return sorted(models, key=Labelling.order_key)


def _least_violating(g: ArgumentationGraph, grounded: TriLabelling, ctx: _Context) -> tuple[Labelling, int]:
    """Branch and bound over the UND arguments for the fewest violated biconditionals."""
    und = _und_order(g, grounded)
    lab: dict = {s: StarLabel.of(l) for s, l in grounded.labels.items() if l is not Label.UND}
    best: list = [None, None]  # (violations, order key), labelling

    def bound() -> int:
        return sum(ctx.violations(s, lab) for s in und)

    def rec(i: int):
        lb = bound()
        if best[0] is not None and lb > best[0][0]:
            return
        if i == len(und):
            cand = Labelling(dict(lab))
            key = (lb, cand.order_key())
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, cand
            return
        for v in STAR:
            lab[und[i]] = v
            rec(i + 1)
            del lab[und[i]]

    rec(0)
    sigs = g.signatures()
    chosen = Labelling({s: best[1][s] for s in sigs})
    return chosen, best[0][0]


def bp_labelling(
    g: ArgumentationGraph, grounded: TriLabelling, burdens=None, cap: int = DEFAULT_MAX_UND
) -> tuple[BPLabelling, SolverDiagnostics]:
    models = enumerate_bp_labellings(g, grounded, burdens, cap)
    if models:
        return models[0], SolverDiagnostics(True, 0, len(models), False)
    ctx = _Context(g, _resolve_burdens(g, burdens))
    chosen, violations = _least_violating(g, grounded, ctx)
    return chosen, SolverDiagnostics(False, violations, 0, True)


def completions(g: ArgumentationGraph, bp: BPLabelling, cap: int = DEFAULT_ENUMERATION_CAP) -> list[BPLabelling]:
    """Complete starred labellings keeping every IN* and OUT* of ``bp``."""
    if len(g.arguments) > cap:
        raise ResourceLimitError(f"{len(g.arguments)} arguments exceed the completion cap of {cap}")
    fixed = {s: l for s, l in bp.labels.items() if l is not UND}
    return complete_extensions(g, fixed, STAR)


def grounding(g: ArgumentationGraph, bp: BPLabelling, cap: int = DEFAULT_ENUMERATION_CAP) -> BPLabelling | None:
    """The completion with inclusion-minimal IN*, or None when there is no completion.

    Completions come sorted by IN* cardinality, so the first is inclusion-minimal.
    """
    found = completions(g, bp, cap)
    return found[0] if found else None


def is_exact(candidate, g: ArgumentationGraph, grounded: TriLabelling, burdens=None) -> bool:
    return count_violations(candidate, g, grounded, burdens) == 0

