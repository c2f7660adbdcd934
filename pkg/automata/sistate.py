"""
Synchronization Information States

An SI-state is the m-tuple of per-site observation sequences the coordinator
holds when a synchronization is triggered.
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Tuple

from .errors import Diagnostic, ResourceCapError, ValidationError
from .plant import EPSILON, Plant

Sequence_ = Tuple[str, ...]


@dataclass(frozen=True, order=True)
class SiState:
    """Per-site observation sequences; ``seqs[k]`` belongs to site k + 1"""
    seqs: Tuple[Sequence_, ...]

    @classmethod
    def of(cls, *seqs: Iterable[str]) -> "SiState":
        return cls(tuple(tuple(s) for s in seqs))

    @classmethod
    def ending(cls, num_sites: int) -> "SiState":
        """T_e, the all-empty tuple"""
        return cls(tuple(() for _ in range(num_sites)))

    @property
    def num_sites(self) -> int:
        return len(self.seqs)

    @property
    def is_ending(self) -> bool:
        return not any(self.seqs)

    def head(self, k: int) -> str:
        """First symbol of component k (0-based), EPSILON when empty"""
        seq = self.seqs[k]
        return seq[0] if seq else EPSILON

    def counting(self) -> int:
        """N(tau): total number of symbols still to release"""
        return sum(len(seq) for seq in self.seqs)

    def pop_heads(self, ks: Iterable[int]) -> "SiState":
        drop = set(ks)
        return SiState(tuple(seq[1:] if k in drop else seq for k, seq in enumerate(self.seqs)))

    def __str__(self) -> str:
        return "(" + ", ".join(format_sequence(seq) for seq in self.seqs) + ")"


class CostedSiState(NamedTuple):
    """A builder node (tau, c)"""
    tau: SiState
    cost: int

    def __str__(self) -> str:
        return f"{self.tau}/{self.cost}"


def format_sequence(seq: Sequence[str]) -> str:
    return "·".join(seq) if seq else "ε"


def counting(tau: SiState) -> int:
    return tau.counting()


def check_si_state(plant: Plant, tau: SiState, max_component_length: int = 32) -> SiState:
    """
    Check ``tau`` against the plant's site alphabets and the per-site length cap

    Raises:
        ValidationError naming the offending site for arity or alphabet faults
        ResourceCapError when a component is longer than ``max_component_length``
    """
    if tau.num_sites != plant.num_sites:
        raise ValidationError.single(
            "sequences", f"expected {plant.num_sites} site sequences, got {tau.num_sites}"
        )
    problems = []
    for k, seq in enumerate(tau.seqs):
        site = k + 1
        alphabet = plant.site_alphabet(site)
        for pos, symbol in enumerate(seq):
            if symbol not in alphabet:
                problems.append(
                    Diagnostic(f"sequences[{k}][{pos}]", f"site {site} cannot observe '{symbol}'")
                )
    if problems:
        raise ValidationError(problems)
    longest = max((len(seq) for seq in tau.seqs), default=0)
    if longest > max_component_length:
        raise ResourceCapError("max_component_length", max_component_length)
    return tau
