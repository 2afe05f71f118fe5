"""Label values, labelling containers and a small propagating backtracker."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping


class Label(enum.Enum):
    IN = "IN"
    OUT = "OUT"
    UND = "UND"

    def __str__(self):
        return self.value


class StarLabel(enum.Enum):
    IN = "IN*"
    OUT = "OUT*"
    UND = "UND*"

    def __str__(self):
        return self.value

    @classmethod
    def of(cls, label: Label) -> "StarLabel":
        return cls[label.name]


@dataclass(frozen=True)
class Labelling:
    """Total map from argument signature to a label.

    Used for both stages; the value type (``Label`` or ``StarLabel``) tells
    them apart.
    """

    labels: Mapping[str, Label | StarLabel]

    def __post_init__(self):
        object.__setattr__(self, "labels", dict(self.labels))

    def __getitem__(self, signature: str):
        return self.labels[signature]

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, Labelling) and self.labels == other.labels

    def __hash__(self):
        return hash(frozenset(self.labels.items()))

    def having(self, name: str) -> frozenset[str]:
        """Signatures whose label is IN / OUT / UND (starred or not)."""
        return frozenset(s for s, l in self.labels.items() if l.name == name)

    @property
    def in_set(self) -> frozenset[str]:
        return self.having("IN")

    @property
    def out_set(self) -> frozenset[str]:
        return self.having("OUT")

    @property
    def und_set(self) -> frozenset[str]:
        return self.having("UND")

    def starred(self) -> "Labelling":
        return Labelling({s: StarLabel.of(l) if isinstance(l, Label) else l for s, l in self.labels.items()})

    def order_key(self):
        """Fewest IN first, then lexicographic on sorted IN, then OUT signatures."""
        ins = sorted(self.in_set)
        return (len(ins), ins, sorted(self.out_set))

    def as_strings(self) -> dict[str, str]:
        return {s: l.value for s, l in self.labels.items()}


TriLabelling = Labelling
BPLabelling = Labelling


# three-valued helpers over partial labellings: None means "not yet known"

def k_any(values: Iterable[bool | None]) -> bool | None:
    unknown = False
    for v in values:
        if v is True:
            return True
        if v is None:
            unknown = True
    return None if unknown else False


def k_all(values: Iterable[bool | None]) -> bool | None:
    unknown = False
    for v in values:
        if v is False:
            return False
        if v is None:
            unknown = True
    return None if unknown else True


def k_not(v: bool | None) -> bool | None:
    return None if v is None else not v


def k_and(*vs: bool | None) -> bool | None:
    return k_all(vs)


def k_or(*vs: bool | None) -> bool | None:
    return k_any(vs)


def is_label(partial: Mapping, sig: str, value) -> bool | None:
    got = partial.get(sig)
    return None if got is None else got is value


def allowed_values(cond_in: bool | None, cond_out: bool | None, values) -> list:
    """Values consistent with ``label is IN <-> cond_in`` and ``label is OUT <-> cond_out``.

    ``values`` is the (IN, OUT, UND) triple of the label type in use.
    """
    v_in, v_out, _ = values
    out = []
    for v in values:
        if cond_in is not None and (v is v_in) != cond_in:
            continue
        if cond_out is not None and (v is v_out) != cond_out:
            continue
        out.append(v)
    return out


AllowedFn = Callable[[str, Mapping], list]


def search(
    variables: list[str],
    checked: list[str],
    fixed: Mapping,
    allowed: AllowedFn,
    values,
) -> Iterator[dict]:
    """Yield every total assignment of ``variables`` (extending ``fixed``) that
    passes ``allowed`` for each signature in ``checked``.

    ``allowed(sig, partial)`` must return the values the label of ``sig`` may
    take given ``partial``; it may over-approximate while inputs are unknown
    but must be exact once everything it reads is assigned. Unit propagation
    assigns variables with a single allowed value.
    """
    partial = dict(fixed)

    def propagate(trail: list[str]) -> bool:
        changed = True
        while changed:
            changed = False
            for sig in checked:
                opts = allowed(sig, partial)
                cur = partial.get(sig)
                if cur is not None:
                    if cur not in opts:
                        return False
                elif not opts:
                    return False
                elif len(opts) == 1:
                    partial[sig] = opts[0]
                    trail.append(sig)
                    changed = True
        return True

    def undo(trail: list[str]):
        for sig in trail:
            del partial[sig]

    def rec(i: int) -> Iterator[dict]:
        while i < len(variables) and variables[i] in partial:
            i += 1
        if i == len(variables):
            yield dict(partial)
            return
        sig = variables[i]
        for v in values:
            partial[sig] = v
            trail = [sig]
            if propagate(trail):
                yield from rec(i + 1)
            undo(trail)

    trail: list[str] = []
    if propagate(trail):
        yield from rec(0)
