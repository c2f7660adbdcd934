"""
Reachability Operators

Natural projection and the UR / R_e operators over any ``Automaton``.
"""

from typing import FrozenSet, Hashable, Iterable, Sequence, Tuple

from .errors import ValidationError
from .plant import EPSILON, Automaton, Plant


def project(plant: Plant, seq: Sequence[str], site: int) -> Tuple[str, ...]:
    """P_i: keep the events observed by ``site`` (1-based)"""
    if not 1 <= site <= plant.num_sites:
        raise ValidationError.single("site", f"site {site} outside 1..{plant.num_sites}")
    return tuple(e for e in seq if site in plant.observers_of(e))


def project_observable(plant: Plant, seq: Sequence[str]) -> Tuple[str, ...]:
    """P_I: keep every event observed by at least one site"""
    return tuple(e for e in seq if plant.observers_of(e))


def unobservable_reach(automaton: Automaton, states: Iterable[Hashable]) -> FrozenSet[Hashable]:
    """Close ``states`` under silent transitions (worklist fixpoint)"""
    reached = set(states)
    worklist = list(reached)
    silent = automaton.silent
    while worklist:
        state = worklist.pop()
        row = automaton.transitions.get(state)
        if not row:
            continue
        for label, targets in row.items():
            if label not in silent:
                continue
            for target in targets:
                if target not in reached:
                    reached.add(target)
                    worklist.append(target)
    return frozenset(reached)


def observable_reach(automaton: Automaton, states: Iterable[Hashable], label: Hashable) -> FrozenSet[Hashable]:
    """
    R_e: one-step successors under ``label``

    The empty label is an alias for unobservable reach. Other silent labels are
    rejected since they never appear in an SI-state.
    """
    if label == automaton.empty_label:
        return unobservable_reach(automaton, states)
    if label in automaton.silent:
        raise ValidationError.single("event", f"'{label}' is unobservable")
    if isinstance(automaton, Plant) and label not in automaton.observers:
        raise ValidationError.single("event", f"unknown event '{label}'")
    reached = set()
    for state in states:
        reached.update(automaton.successors(state, label))
    return frozenset(reached)


def reach_and_close(automaton: Automaton, states: Iterable[Hashable], label: Hashable) -> FrozenSet[Hashable]:
    """UR(R_e(states)), the estimate update used by every synchronizer"""
    return unobservable_reach(automaton, observable_reach(automaton, states, label))
