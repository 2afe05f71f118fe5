"""Exhaustive reference checker.

Enumerates every labelling as rows of a base-3 digit matrix and evaluates each
labelling clause column-wise with numpy. Nothing here calls into the
solvers in ``grounded`` or ``bp``; only the graph is shared.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .arguments import ArgumentationGraph, ResourceLimitError, build_graph
from .labelling import Label, Labelling, StarLabel
from .theory import DefeasibleTheory, Literal, Rule

DEFAULT_ORACLE_CAP = 10

# digit encoding of labels
_IN, _OUT, _UND = 0, 1, 2


def _all_rows(n: int) -> np.ndarray:
    codes = np.arange(3**n, dtype=np.int64)[:, None]
    return (codes // 3 ** np.arange(n, dtype=np.int64) % 3).astype(np.int8)


def _attack_matrix(g: ArgumentationGraph) -> np.ndarray:
    index = {s: i for i, s in enumerate(g.signatures())}
    m = np.zeros((len(index), len(index)), dtype=np.int32)
    for src, dst in g.attacks:
        m[index[src], index[dst]] = 1
    return m


def _complete_mask(rows: np.ndarray, att: np.ndarray) -> np.ndarray:
    is_in = (rows == _IN).astype(np.int32)
    not_out = (rows != _OUT).astype(np.int32)
    all_attackers_out = (not_out @ att) == 0
    some_attacker_in = (is_in @ att) > 0
    ok = ((rows == _IN) == all_attackers_out) & ((rows == _OUT) == some_attacker_in)
    return ok.all(axis=1)


def _rank(rows: np.ndarray, sigs: list[str]) -> list[int]:
    """Row indices ordered by (#IN, sorted IN signatures, sorted OUT signatures)."""
    def key(i):
        r = rows[i]
        ins = sorted(sigs[j] for j in range(len(sigs)) if r[j] == _IN)
        outs = sorted(sigs[j] for j in range(len(sigs)) if r[j] == _OUT)
        return (len(ins), ins, outs)

    return sorted(range(len(rows)), key=key)


def _to_labelling(row, sigs, starred: bool) -> Labelling:
    kind = StarLabel if starred else Label
    names = {_IN: kind.IN, _OUT: kind.OUT, _UND: kind.UND}
    return Labelling({s: names[int(v)] for s, v in zip(sigs, row)})


@dataclass
class OracleReport:
    complete_labellings: int
    exact_bp_models: int
    min_violation: int
    min_violation_models: list[Labelling]
    completions_count: int
    grounding_exists: bool
    # full results, kept for differential tests
    grounded: Labelling | None = field(default=None, repr=False)
    complete: list[Labelling] = field(default_factory=list, repr=False)
    exact_models: list[Labelling] = field(default_factory=list, repr=False)
    selected: Labelling | None = field(default=None, repr=False)
    completions: list[Labelling] = field(default_factory=list, repr=False)
    grounding: Labelling | None = field(default=None, repr=False)

    def as_dict(self) -> dict:
        return {
            "completeLabellings": self.complete_labellings,
            "exactBPModels": self.exact_bp_models,
            "minViolation": self.min_violation,
            "minViolationModels": [m.as_strings() for m in self.min_violation_models],
            "completionsCount": self.completions_count,
            "groundingExists": self.grounding_exists,
        }


class OracleError(RuntimeError):
    """The exhaustive sweep contradicted an assumption (e.g. a unique grounded labelling)."""


def _bp_violations(rows: np.ndarray, g: ArgumentationGraph, und_cols: list[int], phi) -> np.ndarray:
    """Violated BP biconditionals per row, checked clause by clause."""
    args = g.arguments
    t = g.theory
    col = {a.signature: i for i, a in enumerate(args)}
    total = np.zeros(len(rows), dtype=np.int32)
    for i in und_cols:
        a = args[i]
        phi_bar = Literal(a.conclusion.atom, not a.conclusion.negated)
        rivals = [j for j, b in enumerate(args) if b.conclusion == phi_bar]
        b_over_a = [j for j in rivals if (args[j].top_rule.id, a.top_rule.id) in t.superiority]
        a_not_over_b = [j for j in rivals if (a.top_rule.id, args[j].top_rule.id) not in t.superiority]
        ds = [col[s.signature] for s in a.direct_subs]

        def any_(cols, code):
            return (rows[:, cols] == code).any(axis=1) if cols else np.zeros(len(rows), bool)

        def all_(cols, code):
            return (rows[:, cols] == code).all(axis=1) if cols else np.ones(len(rows), bool)

        def any_not(cols, code):
            return (rows[:, cols] != code).any(axis=1) if cols else np.zeros(len(rows), bool)

        if phi_bar in phi:
            accept = ~any_(b_over_a, _IN) & ~any_(ds, _OUT)
        else:
            accept = all_(a_not_over_b, _OUT) & all_(ds, _IN)
        if a.conclusion in phi:
            reject = any_not(a_not_over_b, _OUT) | any_not(ds, _IN)
        else:
            reject = any_(b_over_a, _IN) | any_(ds, _OUT)
        total += ((rows[:, i] == _IN) != accept).astype(np.int32)
        total += ((rows[:, i] == _OUT) != reject).astype(np.int32)
    return total


def oracle_report(
    t: DefeasibleTheory, cap: int = DEFAULT_ORACLE_CAP, max_und: int | None = None, graph: ArgumentationGraph | None = None
) -> OracleReport:
    g = graph if graph is not None else build_graph(t)
    n = len(g.arguments)
    if n > cap:
        raise ResourceLimitError(f"{n} arguments exceed the oracle cap of {cap}")
    sigs = g.signatures()
    att = _attack_matrix(g)
    phi = t.burdens

    rows = _all_rows(n)
    complete_rows = rows[_complete_mask(rows, att)]
    complete_order = _rank(complete_rows, sigs)
    complete = [_to_labelling(complete_rows[i], sigs, False) for i in complete_order]

    in_sets = [frozenset(np.flatnonzero(r == _IN)) for r in complete_rows]
    minimal = [k for k, s in enumerate(in_sets) if not any(o < s for o in in_sets)]
    if len(minimal) != 1:
        raise OracleError(f"{len(minimal)} complete labellings with minimal IN")
    first_stage = complete_rows[minimal[0]]

    und_cols = [i for i in range(n) if first_stage[i] == _UND]
    if max_und is not None and len(und_cols) > max_und:
        raise ResourceLimitError(f"{len(und_cols)} UND arguments exceed the oracle cap of {max_und}")
    star_rows = np.repeat(first_stage[None, :], 3 ** len(und_cols), axis=0)
    star_rows[:, und_cols] = _all_rows(len(und_cols))
    viol = _bp_violations(star_rows, g, und_cols, phi)
    best = int(viol.min())
    best_rows = star_rows[viol == best]
    best_order = _rank(best_rows, sigs)
    best_models = [_to_labelling(best_rows[i], sigs, True) for i in best_order]
    exact_models = best_models if best == 0 else []
    selected_row = best_rows[best_order[0]]

    keeps = (rows == selected_row[None, :]) | (selected_row[None, :] == _UND)
    completion_rows = rows[_complete_mask(rows, att) & keeps.all(axis=1)]
    completion_order = _rank(completion_rows, sigs)
    completions = [_to_labelling(completion_rows[i], sigs, True) for i in completion_order]

    return OracleReport(
        complete_labellings=len(complete),
        exact_bp_models=len(exact_models),
        min_violation=best,
        min_violation_models=best_models,
        completions_count=len(completions),
        grounding_exists=bool(completions),
        grounded=_to_labelling(first_stage, sigs, False),
        complete=complete,
        exact_models=exact_models,
        selected=best_models[0],
        completions=completions,
        grounding=completions[0] if completions else None,
    )


def random_theory(
    rng: random.Random, max_atoms: int = 5, max_rules: int = 8, max_priorities: int = 4, max_burdens: int = 3
) -> DefeasibleTheory:
    """A small random theory; reproducible for a seeded ``rng``."""
    atoms = [f"p{i}" for i in range(rng.randint(1, max_atoms))]

    def lit() -> Literal:
        return Literal(rng.choice(atoms), rng.random() < 0.5)

    rules = []
    for k in range(rng.randint(2, max_rules)):
        body = tuple(lit() for _ in range(rng.choice((0, 0, 0, 1, 1, 2))))
        rules.append(Rule(f"r{k}", body, lit()))
    pairs: set[tuple[str, str]] = set()
    for _ in range(rng.randint(0, max_priorities)):
        if len(rules) < 2:
            break
        w, l = rng.sample([r.id for r in rules], 2)
        if (l, w) not in pairs:
            pairs.add((w, l))
    burdens: set[Literal] = set()
    for _ in range(rng.randint(0, max_burdens)):
        x = lit()
        if Literal(x.atom, not x.negated) not in burdens:
            burdens.add(x)
    return DefeasibleTheory(tuple(rules), frozenset(pairs), frozenset(burdens))


def random_theories(seed: int, count: int, max_arguments: int = DEFAULT_ORACLE_CAP):
    """Yield ``count`` random theories whose graphs fit within ``max_arguments``."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        t = random_theory(rng)
        try:
            g = build_graph(t, max_arguments)
        except ResourceLimitError:
            continue
        made += 1
        yield t, g
