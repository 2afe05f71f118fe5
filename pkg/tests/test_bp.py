import pytest

from bparg.arguments import ResourceLimitError, build_graph
from bparg.bp import (
    SolverDiagnostics,
    bp_condition_in,
    bp_condition_out,
    bp_labelling,
    completions,
    count_violations,
    enumerate_bp_labellings,
    grounding,
)
from bparg.grounded import grounded_labelling, is_complete
from bparg.labelling import Label, Labelling, StarLabel
from bparg.oracle import oracle_report
from bparg.theory import Literal, parse_theory

from conftest import NAMES, expected, load

NEG_BP = dict(IN="A2 C1 C2", OUT="B2 B3")
NEG_GROUNDING = dict(IN="A1 A2 C1 C2", OUT="B1 B2 B3")
MURDER_BP = dict(IN="A1 A2 B2 B3", OUT="C2 A3")
MURDER_GROUNDING = dict(IN="A1 A2 B1 B2 B3", OUT="C1 C2 A3")
CONFLICT_BP = dict(IN="A1 A2", OUT="B1 B2")
LOOP_BP = dict(OUT="A1 A2")


def setup(name):
    t = load(name)
    g = build_graph(t)
    return t, g, grounded_labelling(g)


def sig(name, short):
    return NAMES[name][short]


def test_condition_in_via_favoured_clause():
    _, g, _ = setup("example5")
    cand = expected("example5", True, **MURDER_BP)
    assert bp_condition_in(sig("example5", "B2"), cand, g)
    assert not bp_condition_out(sig("example5", "B2"), cand, g)


def test_condition_in_fails_on_out_sub():
    _, g, _ = setup("example4")
    cand = expected("example4", True, **NEG_BP)
    assert not bp_condition_in(sig("example4", "B3"), cand, g)
    assert bp_condition_out(sig("example4", "B3"), cand, g)


def test_condition_out_burdened_conclusion():
    _, g, _ = setup("example4")
    cand = expected("example4", True, **NEG_BP)
    assert bp_condition_out(sig("example4", "B2"), cand, g)


def test_condition_out_via_out_sub_example8():
    _, g, _ = setup("example8")
    cand = expected("example8", True, **LOOP_BP)
    assert bp_condition_out(sig("example8", "A2"), cand, g)


def test_vacuous_conditions():
    g = build_graph(parse_theory("r: => p"))
    cand = Labelling({"r()": StarLabel.UND})
    assert bp_condition_in("r()", cand, g, burdens=set())
    assert not bp_condition_out("r()", cand, g, burdens=set())


def test_conditions_reject_partial_candidates():
    _, g, _ = setup("example6")
    with pytest.raises(ValueError):
        bp_condition_in(sig("example6", "A2"), {}, g)


def test_count_violations_examples():
    _, g4, gr4 = setup("example4")
    assert count_violations(expected("example4", True, **NEG_BP), g4, gr4) == 0
    _, g8, gr8 = setup("example8")
    assert count_violations(expected("example8", True, **LOOP_BP), g8, gr8) == 1
    _, g1, gr1 = setup("example1")
    bad = gr1.starred().labels | {sig("example1", "A1"): StarLabel.UND}
    assert count_violations(bad, g1, gr1) >= 1


@pytest.mark.parametrize(
    "name, groups",
    [("example4", NEG_BP), ("example5", MURDER_BP), ("example6", CONFLICT_BP), ("example7", NEG_BP)],
)
def test_bp_labelling_matches_expected(name, groups):
    _, g, gr = setup(name)
    bp, diag = bp_labelling(g, gr)
    assert bp == expected(name, True, **groups)
    assert diag == SolverDiagnostics(exact=True, violation_count=0, model_count=1, approximate=False)


def test_example8_falls_back_to_least_violating():
    _, g, gr = setup("example8")
    assert enumerate_bp_labellings(g, gr) == []
    bp, diag = bp_labelling(g, gr)
    assert bp == expected("example8", True, **LOOP_BP)
    assert diag.approximate and not diag.exact
    assert diag.violation_count == 1 and diag.model_count == 0
    assert completions(g, bp) == []
    assert grounding(g, bp) is None


def test_example7_model_set_contains_inversion_labelling():
    t, g, gr = setup("example7")
    assert t.burdens == {Literal("liable"), Literal("negligent", True)}
    assert expected("example7", True, **NEG_BP) in enumerate_bp_labellings(g, gr)


def test_no_und_gives_starred_copy():
    _, g, gr = setup("example1")
    assert enumerate_bp_labellings(g, gr) == [gr.starred()]


@pytest.mark.parametrize(
    "name, left, right",
    [("example4", NEG_BP, NEG_GROUNDING), ("example5", MURDER_BP, MURDER_GROUNDING), ("example7", NEG_BP, NEG_GROUNDING)],
)
def test_grounding_matches_expected(name, left, right):
    _, g, _ = setup(name)
    bp = expected(name, True, **left)
    found = completions(g, bp)
    assert found == [expected(name, True, **right)]
    assert grounding(g, bp) == expected(name, True, **right)


def test_complete_labelling_completes_to_itself():
    _, g, gr = setup("example6")
    bp, _ = bp_labelling(g, gr)
    assert is_complete(g, bp)
    assert completions(g, bp) == [bp]


def test_search_cap():
    _, g, gr = setup("example3")
    with pytest.raises(ResourceLimitError):
        bp_labelling(g, gr, cap=5)
    with pytest.raises(ResourceLimitError):
        completions(g, gr.starred(), cap=5)


def test_inconsistent_explicit_burdens_rejected():
    _, g, gr = setup("example6")
    with pytest.raises(ValueError):
        bp_labelling(g, gr, burdens={Literal("a"), Literal("a", True)})


def test_diagnostics_invariant():
    with pytest.raises(ValueError):
        SolverDiagnostics(exact=True, violation_count=1, model_count=0, approximate=False)


def test_properties_on_corpus(corpus_case):
    _, t, g = corpus_case
    gr = grounded_labelling(g)
    models = enumerate_bp_labellings(g, gr)
    for m in models:
        assert count_violations(m, g, gr) == 0
        for s, first in gr.labels.items():
            if first is not Label.UND:
                assert m[s] is StarLabel.of(first)
    bp, diag = bp_labelling(g, gr)
    if diag.exact:
        assert count_violations(bp, g, gr) == 0 and bp in models
    for c in completions(g, bp):
        assert bp.in_set <= c.in_set and bp.out_set <= c.out_set
        assert is_complete(g, c)
    report = oracle_report(t)
    assert models == report.exact_models
    assert bp == report.selected


def test_empty_burden_conservatism(corpus_case):
    _, _, g = corpus_case
    gr = grounded_labelling(g)
    bp, diag = bp_labelling(g, gr, burdens=frozenset())
    assert diag.exact
    assert bp == gr.starred()


def test_several_models_pick_fewest_in():
    t = parse_theory("r0: => p\nr1: => ~p\nr2: => ~p\nr4: => p\nr0 > r2\nr2 > r1\nr4 > r1")
    g = build_graph(t)
    gr = grounded_labelling(g)
    models = enumerate_bp_labellings(g, gr)
    assert [m.as_strings() for m in models] == [
        {"r0()": "UND*", "r1()": "UND*", "r2()": "UND*", "r4()": "UND*"},
        {"r0()": "IN*", "r1()": "OUT*", "r2()": "OUT*", "r4()": "IN*"},
    ]
    assert models == oracle_report(t).exact_models
    bp, diag = bp_labelling(g, gr)
    assert bp == models[0] and diag.model_count == 2 and diag.exact
