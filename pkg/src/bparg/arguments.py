"""Argument construction by rule chaining, last-link preference and attacks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .theory import DefeasibleTheory, Literal, Rule, complement

DEFAULT_MAX_ARGUMENTS = 10_000


class ResourceLimitError(RuntimeError):
    """A configured size cap was exceeded."""


@dataclass(frozen=True, eq=False)
class Argument:
    """A tree of rule applications, identified by its signature ``rule(sub, ...)``."""

    top_rule: Rule
    direct_subs: tuple["Argument", ...] = ()

    @cached_property
    def signature(self) -> str:
        return f"{self.top_rule.id}({','.join(a.signature for a in self.direct_subs)})"

    @property
    def top_rule_id(self) -> str:
        return self.top_rule.id

    @property
    def conclusion(self) -> Literal:
        return self.top_rule.consequent

    @cached_property
    def height(self) -> int:
        return 1 + max((a.height for a in self.direct_subs), default=-1)

    @cached_property
    def subarguments(self) -> frozenset["Argument"]:
        """All subarguments, including the argument itself."""
        subs = {self}
        for a in self.direct_subs:
            subs |= a.subarguments
        return frozenset(subs)

    def __eq__(self, other):
        return isinstance(other, Argument) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        return f"Argument({self.signature}: {self.conclusion})"


def _sort_key(t: DefeasibleTheory):
    order = {r.id: i for i, r in enumerate(t.rules)}
    return lambda a: (a.height, order[a.top_rule_id], tuple(s.signature for s in a.direct_subs))


def construct_arguments(t: DefeasibleTheory, max_arguments: int = DEFAULT_MAX_ARGUMENTS) -> list[Argument]:
    """Every finite argument whose proper subarguments never repeat its conclusion.

    Built bottom-up by height, so the result is closed under subarguments.
    Ordered by height, then top rule declaration order, then sub signatures.
    """
    by_conclusion: dict[Literal, list[Argument]] = {}
    known: set[str] = set()
    result: list[Argument] = []
    frontier_height = -1
    while True:
        fresh: list[Argument] = []
        for rule in t.rules:
            pools = [by_conclusion.get(lit, []) for lit in rule.antecedents]
            for subs in itertools.product(*pools):
                # at least one sub must be from the previous layer, otherwise it was built already
                if max((s.height for s in subs), default=-1) != frontier_height:
                    continue
                if any(s.conclusion == rule.consequent for sub in subs for s in sub.subarguments):
                    continue
                arg = Argument(rule, tuple(subs))
                if arg.signature in known:
                    continue
                known.add(arg.signature)
                fresh.append(arg)
                if len(result) + len(fresh) > max_arguments:
                    raise ResourceLimitError(
                        f"theory yields more than {max_arguments} arguments"
                    )
        if not fresh:
            break
        for arg in fresh:
            by_conclusion.setdefault(arg.conclusion, []).append(arg)
        result.extend(fresh)
        frontier_height += 1
    result.sort(key=_sort_key(t))
    return result


def prefers(a: Argument, b: Argument, t: DefeasibleTheory) -> bool:
    """Last-link preference: a's top rule is superior to b's."""
    return t.superior(a.top_rule_id, b.top_rule_id)


def compute_attacks(args: list[Argument], t: DefeasibleTheory) -> frozenset[tuple[str, str]]:
    """Pairs (attacker, target) of signatures.

    A attacks B when A contradicts some subargument B' of B that is not
    preferred to A.
    """
    by_conclusion: dict[Literal, list[Argument]] = {}
    for a in args:
        by_conclusion.setdefault(a.conclusion, []).append(a)
    attacks = set()
    for b in args:
        for sub in b.subarguments:
            for a in by_conclusion.get(complement(sub.conclusion), ()):
                if not prefers(sub, a, t):
                    attacks.add((a.signature, b.signature))
    return frozenset(attacks)


@dataclass(frozen=True)
class ArgumentationGraph:
    arguments: tuple[Argument, ...]
    attacks: frozenset[tuple[str, str]]
    theory: DefeasibleTheory = field(repr=False)

    @cached_property
    def by_signature(self) -> dict[str, Argument]:
        return {a.signature: a for a in self.arguments}

    @cached_property
    def attackers(self) -> dict[str, tuple[str, ...]]:
        """Target signature -> attacker signatures, in argument order."""
        index = {a.signature: i for i, a in enumerate(self.arguments)}
        out: dict[str, list[str]] = {a.signature: [] for a in self.arguments}
        for src, dst in self.attacks:
            out[dst].append(src)
        return {k: tuple(sorted(v, key=index.__getitem__)) for k, v in out.items()}

    @cached_property
    def aliases(self) -> dict[str, str]:
        """Stable short names a1, a2, ... in argument order."""
        return {a.signature: f"a{i}" for i, a in enumerate(self.arguments, start=1)}

    def signatures(self) -> list[str]:
        return [a.signature for a in self.arguments]

    def sorted_attacks(self) -> list[tuple[str, str]]:
        index = {a.signature: i for i, a in enumerate(self.arguments)}
        return sorted(self.attacks, key=lambda p: (index[p[0]], index[p[1]]))


def build_graph(t: DefeasibleTheory, max_arguments: int = DEFAULT_MAX_ARGUMENTS) -> ArgumentationGraph:
    args = construct_arguments(t, max_arguments)
    return ArgumentationGraph(tuple(args), compute_attacks(args, t), t)
