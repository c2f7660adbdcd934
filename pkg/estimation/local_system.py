"""
Local Tampering: Modified-System Method

Relabels the plant into the observation automaton G_o, applies per-site error
actions to obtain G_l, and estimates with the MS-builder synchronizer.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Hashable, Iterable, List, Optional, Set, Tuple

from automata.plant import EPSILON, Automaton, Plant, index_transitions
from automata.sistate import SiState, check_si_state
from config.settings import EstimationLimits
from error_model.erm import LocalErmSet, check_local_alphabets

from .engine import EstimationByRelease
from .labels import MTupleEvent
from .modified import ModifiedPlant
from .results import EstimateSet
from .synchronizer import Release, Synchronizer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ObservationAutomaton(Automaton):
    """G_o: the plant graph with every event replaced by its per-site projections"""
    base: Plant


def build_go(plant: Plant) -> ObservationAutomaton:
    m = plant.num_sites
    triples = []
    for src, event, dst in plant.edges():
        sites = plant.observers[event]
        label = MTupleEvent(tuple(event if k + 1 in sites else EPSILON for k in range(m)))
        triples.append((src, label, dst))
    silent = MTupleEvent.silent(m)
    return ObservationAutomaton(
        states=plant.states,
        initial=plant.initial,
        transitions=index_transitions(triples),
        silent=frozenset({silent}),
        empty_label=silent,
        base=plant,
    )


def build_gl(go: ObservationAutomaton, erms: LocalErmSet) -> ModifiedPlant:
    """
    Cost-constrained locally modified system

    Each non-ε component of an existing tuple may be kept, replaced or deleted
    by its own site (costs summed); insertions are single-site self-loops.
    """
    plant = go.base
    erms.validated()
    check_local_alphabets(erms, plant)
    bound = erms.bound
    m = plant.num_sites
    triples: Set[Tuple[Hashable, MTupleEvent, Hashable]] = set()
    nominal: Set[Tuple[Hashable, MTupleEvent, Hashable]] = set()

    for src, label, dst in go.edges():
        choices: List[Tuple[Tuple[str, int], ...]] = [
            ((EPSILON, 0),) if symbol == EPSILON else erms.per_site[k].options(symbol)
            for k, symbol in enumerate(label.per_site)
        ]
        for combo in itertools.product(*choices):
            extra = sum(cost for _, cost in combo)
            rewritten = MTupleEvent(tuple(symbol for symbol, _ in combo))
            for c in range(bound + 1 - extra):
                edge = ((src, c), rewritten, (dst, c + extra))
                triples.add(edge)
                if rewritten == label:
                    nominal.add(edge)

    for state in plant.states:
        for k in range(m):
            for symbol, extra in erms.per_site[k].insertions:
                inserted = MTupleEvent(tuple(symbol if j == k else EPSILON for j in range(m)))
                for c in range(bound + 1 - extra):
                    triples.add(((state, c), inserted, (state, c + extra)))

    silent = MTupleEvent.silent(m)
    system = Automaton(
        states=frozenset((q, c) for q in plant.states for c in range(bound + 1)),
        initial=frozenset((q, 0) for q in plant.initial),
        transitions=index_transitions(triples),
        silent=frozenset({silent}),
        empty_label=silent,
    )
    logger.info(f"Built G_l with {len(system.states)} states and {system.num_transitions} transitions")
    return ModifiedPlant(system=system, base=plant, bound=bound, nominal=frozenset(nominal))


def ms_release(tau: SiState, event: MTupleEvent) -> Optional[SiState]:
    """Pop the head of every site whose component of ``event`` is non-ε"""
    if event.is_silent:
        raise ValueError("Unsupported release of the all-ε tuple")
    ks = [k for k, symbol in enumerate(event.per_site) if symbol != EPSILON]
    if any(tau.head(k) != event.per_site[k] for k in ks):
        return None
    return tau.pop_heads(ks)


def ms_releases(tau: SiState) -> List[Tuple[MTupleEvent, SiState]]:
    """All tuples of heads (each site contributing its head or ε) and their successors"""
    active = [k for k in range(tau.num_sites) if tau.seqs[k]]
    found = []
    for size in range(1, len(active) + 1):
        for chosen in itertools.combinations(active, size):
            per_site = tuple(tau.head(k) if k in chosen else EPSILON for k in range(tau.num_sites))
            event = MTupleEvent(per_site)
            found.append((event, ms_release(tau, event)))
    return sorted(found)


class ElSynchronizer(EstimationByRelease):
    """MS-builder releases estimated over G_l, processed by descending N"""

    kind = "el-synchronizer"

    def __init__(self, gl: ModifiedPlant, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None):
        super().__init__(gl.system, limits)
        self.tau = tau
        self.start = frozenset((q, 0) for q in q0)

    def root(self) -> SiState:
        return self.tau

    def root_states(self) -> Iterable[Hashable]:
        return self.start

    def releases(self, node: SiState) -> Iterable[Release]:
        for event, target in ms_releases(node):
            yield event, target, False

    def schedule_key(self, node: SiState) -> Tuple:
        return (-node.counting(), node)


def build_local_system_synchronizer(
    plant: Plant, erms: LocalErmSet, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> Tuple[ModifiedPlant, Synchronizer]:
    limits = limits or EstimationLimits()
    check_si_state(plant, tau, limits.max_component_length)
    start = plant.check_states(q0)
    gl = build_gl(build_go(plant), erms)
    return gl, ElSynchronizer(gl, tau, start, limits).build()


def estimate_local_system(
    plant: Plant, erms: LocalErmSet, tau: SiState, q0: Iterable[str], limits: Optional[EstimationLimits] = None
) -> EstimateSet:
    """Error-tolerant estimate under local tampering via G_l"""
    _, sync = build_local_system_synchronizer(plant, erms, tau, q0, limits)
    ending = SiState.ending(plant.num_sites)
    result = frozenset(sync.estimate(ending)) if ending in sync.graph else frozenset()
    logger.info(f"Local system-method estimate has {len(result)} pairs")
    return result
