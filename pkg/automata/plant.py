"""
Plant Model

Nondeterministic finite automata with per-event observer sets. ``Automaton`` is
the generic labelled structure every construction produces (the modified
systems G_g and G_l, the observation automaton G_o); ``Plant`` adds the
observation sites and is what users load from a plant file.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Mapping, Tuple

from .errors import Diagnostic, ValidationError

logger = logging.getLogger(__name__)

# The empty event. Reserved: no plant may declare an event with this id.
EPSILON = ""
# Spelling of ε inside files.
EPSILON_TOKEN = "eps"

Transition = Tuple[Hashable, Hashable, Hashable]


def index_transitions(triples: Iterable[Transition]) -> Dict[Hashable, Dict[Hashable, FrozenSet[Hashable]]]:
    """Group (source, label, target) triples into source -> label -> targets"""
    table: Dict[Hashable, Dict[Hashable, set]] = defaultdict(lambda: defaultdict(set))
    for src, label, dst in triples:
        table[src][label].add(dst)
    return {src: {label: frozenset(dsts) for label, dsts in row.items()} for src, row in table.items()}


@dataclass(frozen=True)
class Automaton:
    """
    Labelled nondeterministic transition structure

    Features:
    - Per-state successor lookup by label
    - Designated silent labels followed by unobservable reach
    - Stable dense indexing of states for reproducible output
    """
    states: FrozenSet[Hashable]
    initial: FrozenSet[Hashable]
    transitions: Mapping[Hashable, Mapping[Hashable, FrozenSet[Hashable]]]
    silent: FrozenSet[Hashable]
    empty_label: Hashable

    def successors(self, state: Hashable, label: Hashable) -> FrozenSet[Hashable]:
        return self.transitions.get(state, {}).get(label, frozenset())

    def labels_from(self, state: Hashable) -> List[Hashable]:
        return sorted(self.transitions.get(state, {}))

    def edges(self) -> Iterator[Transition]:
        """All transitions in deterministic (source, label, target) order"""
        for src in sorted(self.transitions):
            row = self.transitions[src]
            for label in sorted(row):
                for dst in sorted(row[label]):
                    yield src, label, dst

    @cached_property
    def num_transitions(self) -> int:
        return sum(len(dsts) for row in self.transitions.values() for dsts in row.values())

    @cached_property
    def labels(self) -> FrozenSet[Hashable]:
        return frozenset(label for row in self.transitions.values() for label in row)

    @cached_property
    def state_index(self) -> Dict[Hashable, int]:
        """Dense integer ids in sorted state order"""
        return {state: idx for idx, state in enumerate(sorted(self.states))}


@dataclass(frozen=True)
class Plant(Automaton):
    """
    Discrete event system observed by ``num_sites`` observation sites

    ``observers[e]`` is the set of site numbers (1-based) recording event e;
    an empty set marks e as unobservable.
    """
    observers: Mapping[str, FrozenSet[int]]
    num_sites: int

    @classmethod
    def create(
        cls,
        states: Iterable[str],
        events: Mapping[str, Iterable[int]],
        transitions: Iterable[Transition],
        initial: Iterable[str],
        num_sites: int,
    ) -> "Plant":
        """Build a plant from raw parts, raising ValidationError on any broken invariant"""
        state_list = list(states)
        state_set = frozenset(state_list)
        observers = {name: frozenset(sites) for name, sites in events.items()}
        triples = [tuple(t) for t in transitions]
        initial_set = frozenset(initial)

        problems: List[Diagnostic] = []
        if num_sites < 1:
            problems.append(Diagnostic("num_sites", f"must be >= 1, got {num_sites}"))
        if len(state_set) != len(state_list):
            dupes = sorted({s for s in state_list if state_list.count(s) > 1})
            problems.append(Diagnostic("states", f"duplicate state ids {dupes}"))
        for name, sites in sorted(observers.items()):
            if name in (EPSILON, EPSILON_TOKEN):
                problems.append(Diagnostic(f"events.{name!r}", "event id is reserved for the empty event"))
            bad = sorted(s for s in sites if not 1 <= s <= num_sites)
            if bad:
                problems.append(Diagnostic(f"events.{name}.observers", f"site indices {bad} outside 1..{num_sites}"))
        if not initial_set:
            problems.append(Diagnostic("initial", "initial state set must be nonempty"))
        for state in sorted(initial_set - state_set):
            problems.append(Diagnostic("initial", f"undeclared state '{state}'"))
        for idx, (src, event, dst) in enumerate(triples):
            if src not in state_set:
                problems.append(Diagnostic(f"transitions[{idx}]", f"undeclared source state '{src}'"))
            if dst not in state_set:
                problems.append(Diagnostic(f"transitions[{idx}]", f"undeclared target state '{dst}'"))
            if event not in observers:
                problems.append(Diagnostic(f"transitions[{idx}]", f"undeclared event '{event}'"))
        if problems:
            raise ValidationError(problems)

        plant = cls(
            states=state_set,
            initial=initial_set,
            transitions=index_transitions(triples),
            silent=frozenset(e for e, sites in observers.items() if not sites),
            empty_label=EPSILON,
            observers=observers,
            num_sites=num_sites,
        )
        logger.debug(f"Created plant with {len(state_set)} states, {len(observers)} events, {num_sites} sites")
        return plant

    @property
    def events(self) -> FrozenSet[str]:
        return frozenset(self.observers)

    @cached_property
    def observable_events(self) -> FrozenSet[str]:
        """Sigma_I: events recorded by at least one site"""
        return frozenset(e for e, sites in self.observers.items() if sites and e != EPSILON)

    def site_alphabet(self, site: int) -> FrozenSet[str]:
        """Sigma_i for a 1-based site number"""
        return frozenset(e for e, sites in self.observers.items() if site in sites)

    def observers_of(self, event: str) -> FrozenSet[int]:
        try:
            return self.observers[event]
        except KeyError:
            raise ValidationError.single("event", f"unknown event '{event}'") from None

    def check_states(self, states: Iterable[Any], path: str = "q0") -> FrozenSet[str]:
        """Return ``states`` as a frozenset after checking every id is declared"""
        chosen = frozenset(states)
        unknown = sorted(chosen - self.states)
        if unknown:
            raise ValidationError.single(path, f"undeclared states {unknown}")
        return chosen
