"""
Error Model Package

Error relation matrices and the cost-bounded erroneous-sequence procedures.
"""

from .erm import (
    INFINITY,
    Erm,
    LocalErmSet,
    check_erm_alphabet,
    check_local_alphabets,
    validate_erm,
    validate_local_erms,
)
from .sequences import CostedSequence, erroneous_set, tamper_costs

__all__ = [
    "CostedSequence",
    "Erm",
    "INFINITY",
    "LocalErmSet",
    "check_erm_alphabet",
    "check_local_alphabets",
    "erroneous_set",
    "tamper_costs",
    "validate_erm",
    "validate_local_erms",
]
