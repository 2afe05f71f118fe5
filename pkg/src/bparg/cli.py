"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .arguments import DEFAULT_MAX_ARGUMENTS, ArgumentationGraph, ResourceLimitError, build_graph
from .bp import DEFAULT_MAX_UND, bp_labelling, grounding
from .grounded import grounded_labelling
from .labelling import Labelling
from .oracle import DEFAULT_ORACLE_CAP, OracleError, oracle_report
from .theory import TheoryError, parse_theory

COMMANDS = ("check", "arguments", "graph", "label", "oracle")
SEMANTICS = ("grounded", "bp", "bp-grounding")
FORMATS = ("text", "json", "dot")

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3

_COLOURS = {"IN": "green", "OUT": "red", "UND": "blue"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    command: str
    semantics: str | None = None
    output_format: str = "text"
    max_arguments: int = DEFAULT_MAX_ARGUMENTS
    max_und: int = DEFAULT_MAX_UND

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if (self.semantics is not None) != (self.command == "label"):
            raise UsageError("--semantics is required for label and only valid there")
        if self.semantics is not None and self.semantics not in SEMANTICS:
            raise UsageError(f"unknown semantics {self.semantics!r}")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown output format {self.output_format!r}")
        if self.output_format == "dot" and self.command not in ("graph", "label"):
            raise UsageError("--dot is only valid for graph and label")
        if self.max_arguments < 0 or self.max_und < 0:
            raise UsageError("caps must be non-negative")


# -- rendering -------------------------------------------------------------

def arguments_json(g: ArgumentationGraph) -> list[dict]:
    return [
        {
            "id": g.aliases[a.signature],
            "signature": a.signature,
            "conclusion": str(a.conclusion),
            "topRule": a.top_rule_id,
            "directSubs": [s.signature for s in a.direct_subs],
        }
        for a in g.arguments
    ]


def attacks_json(g: ArgumentationGraph) -> list[dict]:
    return [{"from": src, "to": dst} for src, dst in g.sorted_attacks()]


def _ordered_labels(g: ArgumentationGraph, labelling: Labelling | None) -> dict[str, str]:
    if labelling is None:
        return {}
    return {sig: labelling[sig].value for sig in g.signatures()}


def to_dot(g: ArgumentationGraph, labelling: Labelling | None = None) -> str:
    lines = ["digraph arguments {", "  node [shape=circle, fontname=\"Helvetica\"];"]
    for a in g.arguments:
        alias = g.aliases[a.signature]
        text = f"{alias}\\n{a.conclusion}"
        attrs = f'label="{text}", tooltip="{a.signature}"'
        if labelling is not None:
            lab = labelling[a.signature]
            attrs += f', xlabel="{lab.value}", style=filled, fillcolor={_COLOURS[lab.name]}'
        lines.append(f"  {alias} [{attrs}];")
    for src, dst in g.sorted_attacks():
        lines.append(f"  {g.aliases[src]} -> {g.aliases[dst]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _argument_lines(g: ArgumentationGraph) -> list[str]:
    out = []
    for a in g.arguments:
        subs = ", ".join(g.aliases[s.signature] for s in a.direct_subs)
        body = f"{subs} " if subs else ""
        out.append(f"{g.aliases[a.signature]}: {body}=>{a.top_rule_id} {a.conclusion}    [{a.signature}]")
    return out


def _label(config: RunConfig, g: ArgumentationGraph):
    """Returns (labelling or None, extra JSON fields, extra text lines)."""
    first = grounded_labelling(g)
    if config.semantics == "grounded":
        return first, {}, []
    bp, diag = bp_labelling(g, first, cap=config.max_und)
    extra = {"diagnostics": diag.as_dict()}
    notes = [
        f"exact: {str(diag.exact).lower()}, violations: {diag.violation_count}, "
        f"models: {diag.model_count}, approximate: {str(diag.approximate).lower()}"
    ]
    if config.semantics == "bp":
        return bp, extra, notes
    ground = grounding(g, bp, cap=config.max_arguments)
    extra["groundingExists"] = ground is not None
    if ground is None:
        notes.append("no grounding exists")
    return ground, extra, notes


def execute(config: RunConfig) -> str:
    with open(config.input_path, encoding="utf-8") as fh:
        theory = parse_theory(fh.read())
    if config.command == "check":
        return (
            f"ok: {len(theory.rules)} rules, {len(theory.superiority)} priorities, "
            f"{len(theory.burdens)} burdens\n"
        )
    if config.command == "oracle":
        g = build_graph(theory, config.max_arguments)
        report = oracle_report(theory, cap=config.max_arguments, max_und=config.max_und, graph=g)
        return json.dumps(report.as_dict(), indent=2) + "\n"

    g = build_graph(theory, config.max_arguments)
    fmt = config.output_format
    if config.command == "arguments":
        if fmt == "json":
            return json.dumps({"arguments": arguments_json(g)}, indent=2) + "\n"
        return "".join(line + "\n" for line in _argument_lines(g))
    if config.command == "graph":
        if fmt == "json":
            return json.dumps({"arguments": arguments_json(g), "attacks": attacks_json(g)}, indent=2) + "\n"
        if fmt == "dot":
            return to_dot(g)
        lines = _argument_lines(g)
        lines += [f"{g.aliases[s]} -> {g.aliases[d]}" for s, d in g.sorted_attacks()]
        return "".join(line + "\n" for line in lines)

    labelling, extra, notes = _label(config, g)
    if fmt == "json":
        doc = {
            "arguments": arguments_json(g),
            "attacks": attacks_json(g),
            "labelling": {"semantics": config.semantics, "labels": _ordered_labels(g, labelling), **extra},
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "dot":
        return to_dot(g, labelling)
    lines = [f"{g.aliases[s]} {s} {lab}" for s, lab in _ordered_labels(g, labelling).items()]
    return "".join(line + "\n" for line in lines + notes)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bparg", description="Burden-of-persuasion argumentation toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=(), max_args=DEFAULT_MAX_ARGUMENTS, max_und=DEFAULT_MAX_UND):
        p.add_argument("file")
        p.add_argument("--max-args", type=int, default=max_args)
        p.add_argument("--max-und", type=int, default=max_und)
        group = p.add_mutually_exclusive_group()
        for f in formats:
            group.add_argument(f"--{f}", dest="format", action="store_const", const=f)
        return p

    common(sub.add_parser("check", help="validate a theory file"))
    common(sub.add_parser("arguments", help="list constructed arguments"), ("json",))
    common(sub.add_parser("graph", help="print the argumentation graph"), ("json", "dot"))
    label = common(sub.add_parser("label", help="compute a labelling"), ("json", "dot"))
    label.add_argument("--semantics", choices=SEMANTICS, required=True)
    # the oracle sweeps 3^n labellings, so its caps are much tighter
    common(sub.add_parser("oracle", help="exhaustive check, JSON report"), (), DEFAULT_ORACLE_CAP, DEFAULT_ORACLE_CAP)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        ns = make_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        config = RunConfig(
            input_path=ns.file,
            command=ns.command,
            semantics=getattr(ns, "semantics", None),
            output_format=getattr(ns, "format", None) or "text",
            max_arguments=ns.max_args,
            max_und=ns.max_und,
        )
    except UsageError as e:
        print(f"bparg: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        output = execute(config)
    except OSError as e:
        print(f"bparg: cannot read {config.input_path}: {e.strerror}", file=sys.stderr)
        return EXIT_USAGE
    except TheoryError as e:
        print(f"{config.input_path}: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (ResourceLimitError, OracleError) as e:
        print(f"bparg: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
