import random

import pytest

from bparg.arguments import ResourceLimitError
from bparg.bp import bp_condition_in, bp_condition_out
from bparg.labelling import Labelling, StarLabel
from bparg.oracle import _all_rows, _bp_violations, oracle_report, random_theories, random_theory
from bparg.theory import DefeasibleTheory

from conftest import expected, load


def test_example8_report():
    r = oracle_report(load("example8"))
    assert r.exact_bp_models == 0
    assert r.min_violation == 1
    assert r.grounding_exists is False and r.completions_count == 0
    assert r.min_violation_models[0] == expected("example8", True, OUT="A1 A2")


def test_example1_report():
    r = oracle_report(load("example1"))
    first = expected("example1", IN="A1 A2 B1 C1", OUT="B2 B3")
    assert r.grounded == first and first in r.complete


def test_empty_theory_report():
    r = oracle_report(DefeasibleTheory())
    assert (r.complete_labellings, r.exact_bp_models, r.grounding_exists) == (1, 1, True)
    assert r.min_violation == 0


def test_cap():
    with pytest.raises(ResourceLimitError):
        oracle_report(load("example3"), cap=7)


def test_report_dict_shape():
    d = oracle_report(load("example6")).as_dict()
    assert set(d) == {
        "completeLabellings", "exactBPModels", "minViolation", "minViolationModels",
        "completionsCount", "groundingExists",
    }


def test_random_theories_are_reproducible():
    a = [t for t, _ in random_theories(7, 20)]
    b = [t for t, _ in random_theories(7, 20)]
    assert a == b
    assert all(len(g.arguments) <= 10 for _, g in random_theories(7, 20))


def test_random_theory_bounds():
    rng = random.Random(3)
    for _ in range(200):
        t = random_theory(rng)
        assert len(t.rules) <= 8 and len(t.superiority) <= 4 and len(t.burdens) <= 3
        assert len({lit.atom for r in t.rules for lit in (*r.antecedents, r.consequent)}) <= 5


STAR = (StarLabel.IN, StarLabel.OUT, StarLabel.UND)


def _clause_agreement(g, samples=200):
    """Oracle and solver clause evaluators count the same failures per argument."""
    sigs = g.signatures()
    rows = _all_rows(len(sigs))
    rows = rows[:: max(1, len(rows) // samples)]
    for i, s in enumerate(sigs):
        oracle_counts = _bp_violations(rows, g, [i], g.theory.burdens)
        for row, expected_count in zip(rows, oracle_counts):
            lab = Labelling({x: STAR[int(v)] for x, v in zip(sigs, row)})
            mine = int((lab[s] is StarLabel.IN) != bp_condition_in(s, lab, g))
            mine += int((lab[s] is StarLabel.OUT) != bp_condition_out(s, lab, g))
            assert mine == expected_count


def test_clause_evaluators_agree_on_corpus(corpus_case):
    _, _, g = corpus_case
    _clause_agreement(g)


def test_clause_evaluators_agree_on_random_theories():
    for _, g in random_theories(11, 40, max_arguments=7):
        _clause_agreement(g, samples=60)
