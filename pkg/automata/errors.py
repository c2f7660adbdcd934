"""
Error Types

Exception hierarchy shared by every detsynth package. "Not releasable"
outcomes of release functions are reported as ``None`` and never raised.
"""

from dataclasses import dataclass
from typing import Iterable, List


@dataclass(frozen=True)
class Diagnostic:
    """A single validation finding, located by a dotted field path"""
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}" if self.path else self.message


class DetsynthError(Exception):
    """Base class for all detsynth errors"""


class ValidationError(DetsynthError):
    """Input violates a model, ERM, SI-state or file-schema invariant"""

    def __init__(self, diagnostics: Iterable[Diagnostic]):
        self.diagnostics: List[Diagnostic] = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics) or "validation failed")

    @classmethod
    def single(cls, path: str, message: str) -> "ValidationError":
        return cls([Diagnostic(path, message)])


class ResourceCapError(DetsynthError):
    """A configured size cap was exceeded"""

    def __init__(self, cap: str, value: int):
        self.cap = cap
        self.value = value
        super().__init__(f"resource cap '{cap}' exceeded (limit {value})")


class IncompleteSearchError(ResourceCapError):
    """Brute-force enumeration could not cover every witness within its caps"""

    def __init__(self, cap: str, value: int, required: int):
        self.required = required
        super().__init__(cap, value)
        self.args = (f"oracle cap '{cap}'={value} is below the required {required}; result would be incomplete",)


class InvariantBreach(DetsynthError):
    """An internal audit found a structure violating its construction invariants"""
