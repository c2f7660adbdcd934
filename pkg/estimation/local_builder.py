"""
Local Tampering: Modified-Builder Method

Releases (m+1)-tuples (original | received per site) drawn from each site's
release list and estimates over the unmodified plant.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from automata.plant import EPSILON, Plant
from automata.sistate import CostedSiState, SiState, check_si_state
from config.settings import EstimationLimits
from error_model.erm import LocalErmSet, check_local_alphabets
from error_model.sequences import CostedSequence

from .engine import EstimationByRelease
from .labels import MTupleEvent
from .results import EstimateSet
from .synchronizer import Release, Synchronizer, explore

logger = logging.getLogger(__name__)

LOCAL_BUILDER_KINDS = ("elts-builder", "elt-synchronizer")

Pair = Tuple[str, str]


@dataclass(frozen=True)
class ReleaseList:
    """Candidate (original, received) pairs for one site's sequence"""
    deletions: FrozenSet[Pair]
    replacements: FrozenSet[Pair]
    insertions: FrozenSet[Pair]
    match: Optional[Pair]

    def pairs(self) -> List[Pair]:
        every = set(self.deletions) | set(self.replacements) | set(self.insertions)
        if self.match is not None:
            every.add(self.match)
        return sorted(every)


def release_list(seq: Sequence[str], site: int, erms: LocalErmSet) -> ReleaseList:
    """
    Pairs a site may release next

    Deletions never depend on the sequence since the deleted original is not
    recorded; the other pairs must receive the head.
    """
    erm = erms.site(site)
    deletions = frozenset((symbol, EPSILON) for symbol in erm.alphabet if erm.charge(symbol, EPSILON, 0) is not None)
    if not seq:
        return ReleaseList(deletions, frozenset(), frozenset(), None)
    head = seq[0]
    replacements = frozenset(
        (symbol, head) for symbol in erm.alphabet if symbol != head and erm.charge(symbol, head, 0) is not None
    )
    insertions = frozenset({(EPSILON, head)}) if erm.charge(EPSILON, head, 0) is not None else frozenset()
    return ReleaseList(deletions, replacements, insertions, (head, head))


def elts_release(plant: Plant, node: CostedSiState, event: MTupleEvent, erms: LocalErmSet) -> Optional[CostedSiState]:
    """
    Release an (m+1)-tuple from a costed SI-state

    With an ε original exactly one site inserts its head. Otherwise every site
    observing the original either receives its head (as a match or a
    replacement) or deletes the original, and all other sites stay idle.
    """
    if event.original is None:
        raise ValueError("Unsupported release of a tuple without an original event")
    tau, cost = node.tau, node.cost
    received = event.per_site
    if len(received) != tau.num_sites:
        return None

    if event.original == EPSILON:
        active = [k for k, symbol in enumerate(received) if symbol != EPSILON]
        if len(active) != 1:
            return None
        k = active[0]
        if tau.head(k) != received[k]:
            return None
        total = erms.per_site[k].charge(EPSILON, received[k], cost)
        return None if total is None else CostedSiState(tau.pop_heads([k]), total)

    sites = plant.observers_of(event.original)
    if not sites:
        return None
    pops = []
    total = cost
    for k, symbol in enumerate(received):
        if k + 1 not in sites:
            if symbol != EPSILON:
                return None
            continue
        if symbol != EPSILON:
            if tau.head(k) != symbol:
                return None
            pops.append(k)
        total = erms.per_site[k].charge(event.original, symbol, total)
        if total is None:
            return None
    return CostedSiState(tau.pop_heads(pops), total)


def elts_releases(plant: Plant, node: CostedSiState, erms: LocalErmSet) -> List[Tuple[MTupleEvent, CostedSiState, bool]]:
    """Every defined release from ``node`` in deterministic order"""
    tau = node.tau
    m = tau.num_sites
    found = []
    lists = [release_list(tau.seqs[k], k + 1, erms) for k in range(m)]

    for k in range(m):
        for _, head in sorted(lists[k].insertions):
            event = MTupleEvent(tuple(head if j == k else EPSILON for j in range(m)), EPSILON)
            target = elts_release(plant, node, event, erms)
            if target is not None:
                found.append((event, target, True))

    for original in sorted(plant.observable_events):
        sites = sorted(plant.observers[original])
        options = []
        for site in sites:
            candidates = [received for first, received in lists[site - 1].pairs() if first == original]
            options.append(candidates)
        for combo in itertools.product(*options):
            per_site = [EPSILON] * m
            for site, received in zip(sites, combo):
                per_site[site - 1] = received
            event = MTupleEvent(tuple(per_site), original)
            target = elts_release(plant, node, event, erms)
            if target is not None:
                error = any(received != original for received in combo)
                found.append((event, target, error))
    return found


def _schedule_key(node: CostedSiState) -> Tuple:
    return (-node.tau.counting(), node.tau, node.cost)


class EltSynchronizer(EstimationByRelease):
    """
    E_lT-synchronizer

    Features:
    - Descending release count, cost-ascending within a tau
    - Estimates updated with the original event over the unmodified plant
    """

    kind = "elt-synchronizer"

    def __init__(
        self, plant: Plant, erms: LocalErmSet, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
    ):
        super().__init__(plant, limits)
        self.erms = erms
        self.tau = tau
        self.q0 = frozenset(q0)

    def root(self) -> CostedSiState:
        return CostedSiState(self.tau, 0)

    def root_states(self) -> Iterable[Hashable]:
        return self.q0

    def releases(self, node: CostedSiState) -> Iterable[Release]:
        return elts_releases(self.automaton, node, self.erms)

    def guard_label(self, label: MTupleEvent) -> Hashable:
        return label.original

    def schedule_key(self, node: CostedSiState) -> Tuple:
        return _schedule_key(node)


def _check_inputs(plant: Plant, erms: LocalErmSet, tau: SiState, limits: EstimationLimits) -> None:
    erms.validated()
    check_local_alphabets(erms, plant)
    check_si_state(plant, tau, limits.max_component_length)


def build_elts_builder(
    plant: Plant, erms: LocalErmSet, tau: SiState, limits: Optional[EstimationLimits] = None
) -> Synchronizer:
    """Plant-free E_lTS-builder; only the plant's observer sets are used"""
    limits = limits or EstimationLimits()
    _check_inputs(plant, erms, tau, limits)
    return explore(
        "elts-builder",
        CostedSiState(tau, 0),
        lambda node: elts_releases(plant, node, erms),
        _schedule_key,
        limits.max_synchronizer_nodes,
        limits.audit,
    )


def build_elt_synchronizer(
    plant: Plant, erms: LocalErmSet, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> Synchronizer:
    limits = limits or EstimationLimits()
    _check_inputs(plant, erms, tau, limits)
    return EltSynchronizer(plant, erms, tau, plant.check_states(q0), limits).build()


def estimate_local_builder(
    plant: Plant, erms: LocalErmSet, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> EstimateSet:
    """Error-tolerant estimate under local tampering via the E_lT-synchronizer"""
    sync = build_elt_synchronizer(plant, erms, tau, q0, limits)
    result = frozenset((q, node.cost) for node in sync.ending_nodes for q in sync.estimate(node))
    logger.info(f"Local builder-method estimate has {len(result)} pairs")
    return result


def extract_leto(structure: Synchronizer, limit: int = 10_000) -> Tuple[FrozenSet[CostedSequence], bool]:
    """
    LETO-sequences read off the marked paths of a local builder or synchronizer

    Returns:
        (sequences, complete); complete is False when ``limit`` paths were hit
    """
    if structure.kind not in LOCAL_BUILDER_KINDS:
        raise ValueError(f"Unsupported structure for LETO extraction: {structure.kind}")
    paths, complete = structure.marked_paths(limit)
    found = set()
    for labels, end in paths:
        original = tuple(label.original for label in labels if label.original != EPSILON)
        found.add(CostedSequence(original, end.cost))
    if not complete:
        logger.warning(f"LETO extraction stopped after {limit} paths")
    return frozenset(found), complete
