"""Proof assistant for the sequent calculus over first-order logic with equality.

The package checks rule applications rather than searching for proofs:
every gesture is validated against the calculus and rejected with a
categorized, localized diagnostic when it is wrong.
"""

from .parser import ParseError, parse_formula, parse_sequent, parse_term
from .printer import SpanMap, print_formula, print_sequent, print_term
from .prooftree import (
    ProofNode,
    ProofTree,
    SchemaError,
    UnknownNodeError,
    VerificationReport,
    apply_at,
    is_complete,
    load,
    new_proof,
    open_goals,
    reset_node,
    save,
    verify,
)
from .rules import (
    AxiomKind,
    Diagnostic,
    DetailCode,
    EqRef,
    MistakeCategory,
    RuleId,
    Selection,
    applicable_rules,
    apply_rule,
    classify,
    detect_axiom,
)
from .syntax import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Func,
    Imp,
    Not,
    Or,
    Pred,
    Sequent,
    Signature,
    Term,
    Var,
    const,
    fresh_constant,
    is_ground_over,
    replace_at,
    signature_of,
    substitute,
)

__all__ = [
    "And", "AxiomKind", "Diagnostic", "DetailCode", "Eq", "EqRef", "Exists",
    "Forall", "Formula", "Func", "Imp", "MistakeCategory", "Not", "Or",
    "ParseError", "ParseError", "Pred", "ProofNode", "ProofTree", "RuleId",
    "SchemaError", "Selection", "Sequent", "Signature", "SpanMap", "Term",
    "UnknownNodeError", "Var", "VerificationReport", "applicable_rules",
    "apply_at", "apply_rule", "classify", "const", "detect_axiom",
    "fresh_constant", "is_complete", "is_ground_over", "load", "new_proof",
    "open_goals", "parse_formula", "parse_sequent", "parse_term",
    "print_formula", "print_sequent", "print_term", "replace_at",
    "reset_node", "save", "signature_of", "substitute", "verify",
]
