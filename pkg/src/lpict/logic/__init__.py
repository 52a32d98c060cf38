from .formulas import (
    FALSUM,
    And,
    Atom,
    Falsum,
    Formula,
    Implies,
    MissingAtomError,
    Not,
    Or,
    Valuation,
    atoms,
    eval_formula,
    format_formula,
    parse_formula,
)
from .proofs import (
    CheckResult,
    Proof,
    ProofLine,
    Rule,
    Sequent,
    check_proof,
    justification,
    proof_records,
    render_proof_table,
    render_sequent,
)
from .search import (
    CrossCheck,
    cross_validate,
    in_chain_fragment,
    provably_equivalent,
    search_contradiction,
    search_forward_chain,
)
from .semantics import ATOM_BUDGET, all_valuations, is_tautology, semantic_entails

__all__ = [
    "ATOM_BUDGET",
    "FALSUM",
    "And",
    "Atom",
    "CheckResult",
    "CrossCheck",
    "Falsum",
    "Formula",
    "Implies",
    "MissingAtomError",
    "Not",
    "Or",
    "Proof",
    "ProofLine",
    "Rule",
    "Sequent",
    "Valuation",
    "all_valuations",
    "atoms",
    "check_proof",
    "cross_validate",
    "eval_formula",
    "format_formula",
    "in_chain_fragment",
    "is_tautology",
    "justification",
    "parse_formula",
    "proof_records",
    "provably_equivalent",
    "render_proof_table",
    "render_sequent",
    "search_contradiction",
    "search_forward_chain",
    "semantic_entails",
]
