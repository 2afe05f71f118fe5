import json
import sys
from pathlib import Path

import pytest

from bparg import Label, Labelling, StarLabel, build_graph, parse_theory

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
NAMES = json.loads((CORPUS / "names.json").read_text())
EXAMPLES = sorted(NAMES)


def load(example: str):
    return parse_theory((CORPUS / f"{example}.theory").read_text())


def expected(example: str, starred: bool = False, **groups) -> Labelling:
    """Build a labelling from short argument names, e.g. ``expected("example1", IN="A1 A2", OUT="B2")``.

    Names not mentioned are UND.
    """
    kind = StarLabel if starred else Label
    names = NAMES[example]
    labels = {sig: kind.UND for sig in names.values()}
    for label, members in groups.items():
        for name in members.split():
            labels[names[name]] = kind[label]
    return Labelling(labels)


@pytest.fixture(params=EXAMPLES)
def corpus_case(request):
    t = load(request.param)
    return request.param, t, build_graph(t)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.report_lines():
        terminalreporter.write_line(line)
