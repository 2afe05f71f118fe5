"""First-stage {IN, OUT, UND} labellings: complete and grounded."""
from __future__ import annotations

from typing import Iterator, Mapping

from .arguments import ArgumentationGraph, ResourceLimitError
from .labelling import (
    Label,
    Labelling,
    TriLabelling,
    allowed_values,
    is_label,
    k_all,
    k_any,
    search,
)

DEFAULT_ENUMERATION_CAP = 20


def fixpoint_rounds(g: ArgumentationGraph) -> Iterator[dict[str, Label]]:
    """Yield the IN/OUT assignments after each round of the grounded fixpoint."""
    attackers = g.attackers
    status: dict[str, Label] = {}
    pending = g.signatures()
    while True:
        rest = []
        for sig in pending:
            if all(status.get(b) is Label.OUT for b in attackers[sig]):
                status[sig] = Label.IN
            elif any(status.get(b) is Label.IN for b in attackers[sig]):
                status[sig] = Label.OUT
            else:
                rest.append(sig)
        yield dict(status)
        if len(rest) == len(pending):
            return
        pending = rest


def grounded_labelling(g: ArgumentationGraph) -> TriLabelling:
    """Least fixpoint: IN once every attacker is OUT, OUT once some attacker is IN."""
    status: dict[str, Label] = {}
    for status in fixpoint_rounds(g):
        pass
    return Labelling({sig: status.get(sig, Label.UND) for sig in g.signatures()})


def is_complete(g: ArgumentationGraph, labelling: Labelling) -> bool:
    """Check both attacker biconditionals for every argument (either label type)."""
    for sig in g.signatures():
        att = g.attackers[sig]
        all_out = all(labelling[b].name == "OUT" for b in att)
        some_in = any(labelling[b].name == "IN" for b in att)
        if (labelling[sig].name == "IN") != all_out or (labelling[sig].name == "OUT") != some_in:
            return False
    return True


def attacker_constraint(g: ArgumentationGraph, values):
    """``allowed`` callback for the complete-labelling conditions over ``values``."""
    v_in, v_out, _ = values

    def allowed(sig: str, partial: Mapping) -> list:
        att = g.attackers[sig]
        all_out = k_all(is_label(partial, b, v_out) for b in att)
        some_in = k_any(is_label(partial, b, v_in) for b in att)
        return allowed_values(all_out, some_in, values)

    return allowed


def complete_extensions(g: ArgumentationGraph, fixed: Mapping, values) -> list[Labelling]:
    sigs = g.signatures()
    models = search(
        [s for s in sigs if s not in fixed], sigs, fixed, attacker_constraint(g, values), values
    )
    found = [Labelling({s: m[s] for s in sigs}) for m in models]
    return sorted(found, key=Labelling.order_key)


def enumerate_complete_labellings(g: ArgumentationGraph, cap: int = DEFAULT_ENUMERATION_CAP) -> list[TriLabelling]:
    if len(g.arguments) > cap:
        raise ResourceLimitError(f"{len(g.arguments)} arguments exceed the enumeration cap of {cap}")
    return complete_extensions(g, {}, tuple(Label))
