from .congruence import is_standard_form, standard_form, structurally_congruent
from .parser import parse_process, pretty_print
from .reduction import REACT, REACT_POLYADIC, TAU, reduce_step
from .regular import (
    Concat,
    Empty,
    Epsilon,
    RegularExpr,
    Star,
    Symbol,
    Union_,
    arden_solve,
    language,
    nullable,
    symbols_of,
)
from .terms import (
    NIL,
    Bang,
    Name,
    Nil,
    Par,
    Prefix,
    Process,
    Receive,
    Restrict,
    Send,
    Sum,
    Tau,
    all_names,
    free_names,
    fresh_name,
    prefixed,
    substitute,
    sum_of,
)

__all__ = [
    "NIL",
    "REACT",
    "REACT_POLYADIC",
    "TAU",
    "Bang",
    "Concat",
    "Empty",
    "Epsilon",
    "Name",
    "Nil",
    "Par",
    "Prefix",
    "Process",
    "Receive",
    "RegularExpr",
    "Restrict",
    "Send",
    "Star",
    "Sum",
    "Symbol",
    "Tau",
    "Union_",
    "all_names",
    "arden_solve",
    "free_names",
    "fresh_name",
    "is_standard_form",
    "language",
    "nullable",
    "parse_process",
    "prefixed",
    "pretty_print",
    "reduce_step",
    "standard_form",
    "structurally_congruent",
    "substitute",
    "sum_of",
    "symbols_of",
]
