"""Literals, defeasible rules, superiority, burdens, and the theory text format.

A theory file is line oriented::

    # comment
    r1: a, ~b => c
    r2: => ~c
    r1 > r2
    bp: c, ~d
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class TheoryError(ValueError):
    """Base class for everything that makes a theory unusable."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self._render())

    def _render(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


class TheorySyntaxError(TheoryError):
    pass


class DuplicateRuleError(TheoryError):
    pass


class UnknownRuleError(TheoryError):
    pass


class SuperiorityError(TheoryError):
    """Reflexive or symmetric priority pair."""


class InconsistentBurdenError(TheoryError):
    pass


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    negated: bool = False

    def __post_init__(self):
        if not isinstance(self.atom, str) or not _IDENT.fullmatch(self.atom):
            raise TheorySyntaxError(f"invalid atom {self.atom!r}")

    def __str__(self) -> str:
        return f"~{self.atom}" if self.negated else self.atom

    @classmethod
    def parse(cls, text: str) -> "Literal":
        text = text.strip()
        if text.startswith("~"):
            return cls(text[1:].strip(), True)
        return cls(text, False)


def complement(x: Literal) -> Literal:
    return Literal(x.atom, not x.negated)


@dataclass(frozen=True)
class Rule:
    id: str
    antecedents: tuple[Literal, ...]
    consequent: Literal

    def __post_init__(self):
        if not _IDENT.fullmatch(self.id):
            raise TheorySyntaxError(f"invalid rule id {self.id!r}")
        object.__setattr__(self, "antecedents", tuple(self.antecedents))

    def __str__(self) -> str:
        body = ", ".join(map(str, self.antecedents))
        return f"{self.id}: {body} => {self.consequent}" if body else f"{self.id}: => {self.consequent}"


def check_burdens(burdens: Iterable[Literal]) -> frozenset[Literal]:
    """Return the burden set as a frozenset, rejecting any complementary pair."""
    phi = frozenset(burdens)
    for lit in sorted(phi):
        if complement(lit) in phi:
            raise InconsistentBurdenError(f"burden set contains both {lit.atom} and ~{lit.atom}")
    return phi


@dataclass(frozen=True)
class DefeasibleTheory:
    """Rules in declaration order, explicit superiority pairs, and the burden set."""

    rules: tuple[Rule, ...] = ()
    superiority: frozenset[tuple[str, str]] = frozenset()
    burdens: frozenset[Literal] = frozenset()
    _by_id: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "superiority", frozenset(self.superiority))
        by_id: dict[str, Rule] = {}
        for r in self.rules:
            if r.id in by_id:
                raise DuplicateRuleError(f"duplicate rule id {r.id!r}")
            by_id[r.id] = r
        object.__setattr__(self, "_by_id", by_id)
        for winner, loser in sorted(self.superiority):
            for rid in (winner, loser):
                if rid not in by_id:
                    raise UnknownRuleError(f"priority {winner} > {loser} refers to unknown rule {rid!r}")
            if winner == loser:
                raise SuperiorityError(f"reflexive priority {winner} > {loser}")
            if (loser, winner) in self.superiority:
                raise SuperiorityError(f"symmetric priorities {winner} > {loser} and {loser} > {winner}")
        object.__setattr__(self, "burdens", check_burdens(self.burdens))

    def rule(self, rule_id: str) -> Rule:
        return self._by_id[rule_id]

    def rule_index(self, rule_id: str) -> int:
        return self.rules.index(self._by_id[rule_id])

    def superior(self, winner: str, loser: str) -> bool:
        return (winner, loser) in self.superiority

    def with_burdens(self, burdens: Iterable[Literal]) -> "DefeasibleTheory":
        return DefeasibleTheory(self.rules, self.superiority, frozenset(burdens))


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<arrow>=>)|(?P<punct>[:,>~])|(?P<id>[A-Za-z_][A-Za-z0-9_]*))")


def _tokenize(line: str, lineno: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(line):
        if line[pos:].strip() == "":
            break
        m = _TOKEN.match(line, pos)
        if m is None or m.end() == pos:
            col = pos + len(line[pos:]) - len(line[pos:].lstrip()) + 1
            raise TheorySyntaxError(f"unexpected character {line[col - 1]!r}", lineno, col)
        kind = m.lastgroup
        text = m.group(kind)
        tokens.append((kind if kind == "id" else text, text, m.start(kind) + 1))
        pos = m.end()
    return tokens


class _LineParser:
    def __init__(self, tokens, lineno: int, line_len: int):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.eol = line_len + 1

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def fail(self, expected: str):
        if self.i < len(self.tokens):
            _, text, col = self.tokens[self.i]
            raise TheorySyntaxError(f"expected {expected}, found {text!r}", self.lineno, col)
        raise TheorySyntaxError(f"expected {expected}, found end of line", self.lineno, self.eol)

    def expect(self, kind: str, expected: str | None = None):
        if self.peek() != kind:
            self.fail(expected or repr(kind))
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def literal(self) -> Literal:
        negated = False
        if self.peek() == "~":
            self.i += 1
            negated = True
        _, atom, _ = self.expect("id", "literal")
        return Literal(atom, negated)

    def literal_list(self, stop: str | None) -> list[Literal]:
        lits = [self.literal()]
        while self.peek() == ",":
            self.i += 1
            lits.append(self.literal())
        if self.peek() != stop:
            self.fail("',' or " + (repr(stop) if stop else "end of line"))
        return lits

    def done(self):
        if self.i != len(self.tokens):
            self.fail("end of line")


def parse_theory(text: str) -> DefeasibleTheory:
    """Parse theory text; raises a ``TheoryError`` subclass carrying the line number."""
    rules: list[Rule] = []
    rule_lines: dict[str, int] = {}
    priorities: list[tuple[str, str, int]] = []
    burdens: list[tuple[Literal, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        p = _LineParser(tokens, lineno, len(line.rstrip()))
        kinds = [t[0] for t in tokens]
        _, head, head_col = p.expect("id", "rule id, priority or 'bp:'")
        if "=>" in kinds:
            p.expect(":", "':'")
            body = [] if p.peek() == "=>" else p.literal_list("=>")
            p.expect("=>", "'=>'")
            head_lit = p.literal()
            p.done()
            if head in rule_lines:
                raise DuplicateRuleError(
                    f"duplicate rule id {head!r} (first declared on line {rule_lines[head]})", lineno, head_col
                )
            rule_lines[head] = lineno
            rules.append(Rule(head, tuple(body), head_lit))
        elif p.peek() == ">":
            p.i += 1
            _, loser, _ = p.expect("id", "rule id")
            p.done()
            priorities.append((head, loser, lineno))
        elif head == "bp" and p.peek() == ":":
            p.i += 1
            burdens.extend((lit, lineno) for lit in p.literal_list(None))
        else:
            p.fail("':' followed by a rule, or '>'")

    seen: set[tuple[str, str]] = set()
    for winner, loser, lineno in priorities:
        for rid in (winner, loser):
            if rid not in rule_lines:
                raise UnknownRuleError(f"priority {winner} > {loser} refers to unknown rule {rid!r}", lineno)
        if winner == loser:
            raise SuperiorityError(f"reflexive priority {winner} > {loser}", lineno)
        if (loser, winner) in seen:
            raise SuperiorityError(f"priority {winner} > {loser} contradicts {loser} > {winner}", lineno)
        seen.add((winner, loser))

    phi: set[Literal] = set()
    for lit, lineno in burdens:
        if complement(lit) in phi:
            raise InconsistentBurdenError(f"burden on {lit} conflicts with burden on {complement(lit)}", lineno)
        phi.add(lit)

    return DefeasibleTheory(tuple(rules), frozenset(seen), frozenset(phi))


def serialize_theory(t: DefeasibleTheory) -> str:
    lines = [str(r) for r in t.rules]
    order = {r.id: i for i, r in enumerate(t.rules)}
    pairs = sorted(t.superiority, key=lambda p: (order[p[0]], order[p[1]]))
    lines.extend(f"{w} > {l}" for w, l in pairs)
    if t.burdens:
        lines.append("bp: " + ", ".join(str(x) for x in sorted(t.burdens)))
    return "".join(line + "\n" for line in lines)
