"""Print the labellings of every corpus theory under the names in names.json.

    python scripts/reproduce_figures.py [corpus_dir]
"""
import json
import sys
from pathlib import Path

from bparg import bp_labelling, build_graph, grounded_labelling, grounding, parse_theory

corpus = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus"
names = json.loads((corpus / "names.json").read_text())


def show(title, labelling, alias):
    if labelling is None:
        print(f"  {title:<10} (none)")
        return
    groups = {}
    for sig, lab in labelling.labels.items():
        groups.setdefault(lab.value, []).append(alias.get(sig, sig))
    cells = "  ".join(f"{k}: {' '.join(sorted(v))}" for k, v in sorted(groups.items()))
    print(f"  {title:<10} {cells}")


for example in sorted(names):
    theory = parse_theory((corpus / f"{example}.theory").read_text())
    g = build_graph(theory)
    alias = {sig: name for name, sig in names[example].items()}
    burdens = ", ".join(sorted(map(str, theory.burdens))) or "none"
    print(f"{example}  ({len(g.arguments)} arguments, {len(g.attacks)} attacks, burdens: {burdens})")
    first = grounded_labelling(g)
    show("grounded", first, alias)
    if theory.burdens:
        bp, diag = bp_labelling(g, first)
        show("bp", bp, alias)
        show("grounding", grounding(g, bp), alias)
        print(f"  {'':<10} exact={diag.exact} violations={diag.violation_count} models={diag.model_count}")
