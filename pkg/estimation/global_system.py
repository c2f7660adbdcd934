"""
Global Tampering: Modified-System Method

Builds the cost-constrained globally modified system G_g and estimates with the
error-free S-builder synchronizer run over it. The same synchronizer run over
the plant itself gives the error-free estimate.
"""

import logging
from typing import Hashable, Iterable, Optional, Set, Tuple

from automata.plant import EPSILON, Plant, index_transitions
from automata.sbuilder import releasable_events, sbuilder_release
from automata.sistate import SiState, check_si_state
from config.settings import EstimationLimits
from error_model.erm import Erm, check_erm_alphabet

from .engine import EstimationByRelease
from .modified import ModifiedPlant
from .results import EstimateSet
from .synchronizer import Node, Release, Synchronizer

logger = logging.getLogger(__name__)


def build_gg(plant: Plant, erm: Erm) -> ModifiedPlant:
    """
    Cost-constrained globally modified system

    Unobservable moves are copied at constant cost, observable moves are
    relabelled to every admissible received symbol (ε for deletions), and each
    state gets insertion self-loops.
    """
    erm.validated()
    check_erm_alphabet(erm, plant)
    bound = erm.bound
    triples: Set[Tuple[Hashable, str, Hashable]] = set()
    nominal: Set[Tuple[Hashable, str, Hashable]] = set()

    for src, event, dst in plant.edges():
        if not plant.observers[event]:
            for c in range(bound + 1):
                edge = ((src, c), event, (dst, c))
                triples.add(edge)
                nominal.add(edge)
            continue
        for received, extra in erm.options(event):
            for c in range(bound + 1 - extra):
                edge = ((src, c), received, (dst, c + extra))
                triples.add(edge)
                if received == event:
                    nominal.add(edge)

    for state in plant.states:
        for symbol, extra in erm.insertions:
            for c in range(bound + 1 - extra):
                triples.add(((state, c), symbol, (state, c + extra)))

    observers = dict(plant.observers)
    observers[EPSILON] = frozenset()
    system = Plant(
        states=frozenset((q, c) for q in plant.states for c in range(bound + 1)),
        initial=frozenset((q, 0) for q in plant.initial),
        transitions=index_transitions(triples),
        silent=plant.silent | {EPSILON},
        empty_label=EPSILON,
        observers=observers,
        num_sites=plant.num_sites,
    )
    logger.info(f"Built G_g with {len(system.states)} states and {system.num_transitions} transitions")
    return ModifiedPlant(system=system, base=plant, bound=bound, nominal=frozenset(nominal))


class SBuilderSynchronizer(EstimationByRelease):
    """Error-free synchronizer: S-builder releases estimated over ``plant``"""

    kind = "s-synchronizer"

    def __init__(self, plant: Plant, tau: SiState, start: Iterable[Hashable], limits: Optional[EstimationLimits] = None):
        super().__init__(plant, limits)
        self.tau = tau
        self.start = frozenset(start)

    def root(self) -> Node:
        return self.tau

    def root_states(self) -> Iterable[Hashable]:
        return self.start

    def releases(self, node: SiState) -> Iterable[Release]:
        for event in releasable_events(self.automaton, node):
            yield event, sbuilder_release(self.automaton, node, event), False

    def schedule_key(self, node: SiState) -> Tuple:
        return (-node.counting(), node)


def _ending_estimate(sync: Synchronizer) -> frozenset:
    ending = SiState.ending(sync.root.num_sites)
    return sync.estimate(ending) if ending in sync.graph else frozenset()


def synchronize(
    plant: Plant, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> Synchronizer:
    limits = limits or EstimationLimits()
    check_si_state(plant, tau, limits.max_component_length)
    return SBuilderSynchronizer(plant, tau, plant.check_states(q0), limits).build()


def estimate_error_free(
    plant: Plant, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> EstimateSet:
    """Error-free estimate, every state paired with cost 0"""
    return frozenset((q, 0) for q in _ending_estimate(synchronize(plant, tau, q0, limits)))


def build_global_system_synchronizer(
    plant: Plant, erm: Erm, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> Tuple[ModifiedPlant, Synchronizer]:
    limits = limits or EstimationLimits()
    check_si_state(plant, tau, limits.max_component_length)
    start = frozenset((q, 0) for q in plant.check_states(q0))
    gg = build_gg(plant, erm)
    return gg, SBuilderSynchronizer(gg.system, tau, start, limits).build()


def estimate_global_system(
    plant: Plant, erm: Erm, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> EstimateSet:
    """Error-tolerant estimate under global tampering via G_g"""
    _, sync = build_global_system_synchronizer(plant, erm, tau, q0, limits)
    result = frozenset(_ending_estimate(sync))
    logger.info(f"Global system-method estimate has {len(result)} pairs")
    return result
