"""
CLI Package

The ``detsynth`` command line: argument parsing and exit-code dispatch.
"""

from .dispatcher import (
    EXIT_EMPTY,
    EXIT_INVARIANT,
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_VALIDATION,
    CommandDispatcher,
    exit_code_for,
)
from .main import build_parser, create_dispatcher, main

__all__ = [
    "CommandDispatcher",
    "EXIT_EMPTY",
    "EXIT_INVARIANT",
    "EXIT_OK",
    "EXIT_RESOURCE",
    "EXIT_VALIDATION",
    "build_parser",
    "create_dispatcher",
    "exit_code_for",
    "main",
]
