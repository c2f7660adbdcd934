"""
Modified Systems

Container for the cost-constrained modified systems G_g and G_l.
"""

from dataclasses import dataclass
from typing import FrozenSet, Hashable, Tuple

from automata.plant import Automaton, Plant


@dataclass(frozen=True)
class ModifiedPlant:
    """
    A modified system over Q × {0..c_u}

    ``nominal`` holds the transitions that have an error-less witness; every
    other transition exists only because of an error action.
    """
    system: Automaton
    base: Plant
    bound: int
    nominal: FrozenSet[Tuple[Hashable, Hashable, Hashable]]

    def is_error_transition(self, src: Hashable, label: Hashable, dst: Hashable) -> bool:
        return (src, label, dst) not in self.nominal
