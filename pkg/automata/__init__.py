"""
Automata Package

Plant model, SI-states, reachability operators and the error-free S-builder.
"""

from .errors import (
    DetsynthError,
    Diagnostic,
    IncompleteSearchError,
    InvariantBreach,
    ResourceCapError,
    ValidationError,
)
from .operations import (
    observable_reach,
    project,
    project_observable,
    reach_and_close,
    unobservable_reach,
)
from .plant import EPSILON, EPSILON_TOKEN, Automaton, Plant
from .sbuilder import enumerate_to_sequences, releasable_events, sbuilder_release
from .sistate import CostedSiState, SiState, check_si_state, counting, format_sequence

__all__ = [
    "Automaton",
    "CostedSiState",
    "DetsynthError",
    "Diagnostic",
    "EPSILON",
    "EPSILON_TOKEN",
    "IncompleteSearchError",
    "InvariantBreach",
    "Plant",
    "ResourceCapError",
    "SiState",
    "ValidationError",
    "check_si_state",
    "counting",
    "enumerate_to_sequences",
    "format_sequence",
    "observable_reach",
    "project",
    "project_observable",
    "reach_and_close",
    "releasable_events",
    "sbuilder_release",
    "unobservable_reach",
]
