"""Burden-of-persuasion argumentation: theories, arguments, grounded and BP labellings."""
from .arguments import (
    Argument,
    ArgumentationGraph,
    ResourceLimitError,
    build_graph,
    compute_attacks,
    construct_arguments,
    prefers,
)
from .bp import (
    SolverDiagnostics,
    bp_condition_in,
    bp_condition_out,
    bp_labelling,
    completions,
    count_violations,
    enumerate_bp_labellings,
    grounding,
)
from .grounded import enumerate_complete_labellings, grounded_labelling, is_complete
from .labelling import BPLabelling, Label, Labelling, StarLabel, TriLabelling
from .oracle import OracleReport, oracle_report
from .theory import (
    DefeasibleTheory,
    DuplicateRuleError,
    InconsistentBurdenError,
    Literal,
    Rule,
    SuperiorityError,
    TheoryError,
    TheorySyntaxError,
    UnknownRuleError,
    complement,
    parse_theory,
    serialize_theory,
)

__version__ = "0.1.0"
