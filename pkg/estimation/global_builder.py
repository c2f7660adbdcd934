"""
Global Tampering: Modified-Builder Method

Releases (original, received) event pairs from costed SI-states and estimates
directly over the unmodified plant.
"""

import logging
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

from automata.plant import EPSILON, Plant
from automata.sbuilder import releasable_events, sbuilder_release
from automata.sistate import CostedSiState, SiState, check_si_state
from config.settings import EstimationLimits
from error_model.erm import Erm, check_erm_alphabet
from error_model.sequences import CostedSequence

from .engine import EstimationByRelease
from .labels import EventPair
from .results import EstimateSet
from .synchronizer import Release, Synchronizer, explore

logger = logging.getLogger(__name__)

GLOBAL_BUILDER_KINDS = ("egts-builder", "egt-synchronizer")


def egts_release(plant: Plant, node: CostedSiState, pair: EventPair, erm: Erm) -> Optional[CostedSiState]:
    """
    Error-tolerant release of one (original, received) pair

    A received ε hypothesises that ``original`` was deleted: the SI-state is
    unchanged and the deletion cost is charged. Otherwise ``received`` is
    released by the S-builder and the (original -> received) cost is charged.
    """
    if pair.original == EPSILON and pair.received == EPSILON:
        raise ValueError("Unsupported release of (ε, ε)")
    cost = erm.charge(pair.original, pair.received, node.cost)
    if cost is None:
        return None
    if pair.received == EPSILON:
        return CostedSiState(node.tau, cost)
    tau = sbuilder_release(plant, node.tau, pair.received)
    if tau is None:
        return None
    return CostedSiState(tau, cost)


def egts_releases(plant: Plant, node: CostedSiState, erm: Erm) -> List[Tuple[EventPair, CostedSiState]]:
    """Every defined release from ``node`` in deterministic order"""
    found = []
    originals = sorted(erm.alphabet)
    for original in originals:
        pair = EventPair(original, EPSILON)
        target = egts_release(plant, node, pair, erm)
        if target is not None:
            found.append((pair, target))
    for received in releasable_events(plant, node.tau):
        for original in [EPSILON] + originals:
            pair = EventPair(original, received)
            target = egts_release(plant, node, pair, erm)
            if target is not None:
                found.append((pair, target))
    return found


class _LayeredSchedule:
    """Layer = number of received symbols released so far; cost breaks ties within a tau"""

    def __init__(self):
        self.layers: Dict[SiState, int] = {}

    def assign(self, node: CostedSiState, target: CostedSiState) -> None:
        if target.tau != node.tau:
            self.layers.setdefault(target.tau, self.layers[node.tau] + 1)

    def key(self, node: CostedSiState) -> Tuple:
        return (self.layers[node.tau], node.tau, node.cost)


class EgtSynchronizer(EstimationByRelease):
    """
    E_gT-synchronizer

    Features:
    - Breadth-first over release layers, cost-ascending within a tau
    - Releases guarded by the original event's reach in the plant
    """

    kind = "egt-synchronizer"

    def __init__(self, plant: Plant, erm: Erm, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None):
        super().__init__(plant, limits)
        self.erm = erm
        self.tau = tau
        self.q0 = frozenset(q0)
        self.schedule = _LayeredSchedule()
        self.schedule.layers[tau] = 0

    def root(self) -> CostedSiState:
        return CostedSiState(self.tau, 0)

    def root_states(self) -> Iterable[Hashable]:
        return self.q0

    def releases(self, node: CostedSiState) -> Iterable[Release]:
        for pair, target in egts_releases(self.automaton, node, self.erm):
            self.schedule.assign(node, target)
            yield pair, target, pair.is_error

    def guard_label(self, label: EventPair) -> Hashable:
        return label.original

    def schedule_key(self, node: CostedSiState) -> Tuple:
        return self.schedule.key(node)


def build_egts_builder(plant: Plant, erm: Erm, tau: SiState, limits: Optional[EstimationLimits] = None) -> Synchronizer:
    """Plant-free E_gTS-builder; only the plant's observer sets are used"""
    limits = limits or EstimationLimits()
    erm.validated()
    check_erm_alphabet(erm, plant)
    check_si_state(plant, tau, limits.max_component_length)
    schedule = _LayeredSchedule()
    schedule.layers[tau] = 0

    def releases(node: CostedSiState) -> Iterable[Release]:
        for pair, target in egts_releases(plant, node, erm):
            schedule.assign(node, target)
            yield pair, target, pair.is_error

    return explore(
        "egts-builder", CostedSiState(tau, 0), releases, schedule.key, limits.max_synchronizer_nodes, limits.audit
    )


def build_egt_synchronizer(
    plant: Plant, erm: Erm, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> Synchronizer:
    limits = limits or EstimationLimits()
    erm.validated()
    check_erm_alphabet(erm, plant)
    check_si_state(plant, tau, limits.max_component_length)
    return EgtSynchronizer(plant, erm, tau, plant.check_states(q0), limits).build()


def ending_pairs(sync: Synchronizer) -> EstimateSet:
    """{(q, c) | (T_e, c) ending node, q in its estimate}"""
    return frozenset((q, node.cost) for node in sync.ending_nodes for q in sync.estimate(node))


def estimate_global_builder(
    plant: Plant, erm: Erm, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> EstimateSet:
    """Error-tolerant estimate under global tampering via the E_gT-synchronizer"""
    result = ending_pairs(build_egt_synchronizer(plant, erm, tau, q0, limits))
    logger.info(f"Global builder-method estimate has {len(result)} pairs")
    return result


def extract_geto(structure: Synchronizer, limit: int = 10_000) -> Tuple[FrozenSet[CostedSequence], bool]:
    """
    GETO-sequences read off the marked paths of a global builder or synchronizer

    Returns:
        (sequences, complete); complete is False when ``limit`` paths were hit
    """
    if structure.kind not in GLOBAL_BUILDER_KINDS:
        raise ValueError(f"Unsupported structure for GETO extraction: {structure.kind}")
    paths, complete = structure.marked_paths(limit)
    found = set()
    for labels, end in paths:
        original = tuple(label.original for label in labels if label.original != EPSILON)
        found.add(CostedSequence(original, end.cost))
    if not complete:
        logger.warning(f"GETO extraction stopped after {limit} paths")
    return frozenset(found), complete
