"""
Brute-Force Oracle

Direct evaluation of the error-tolerant estimation problems from their
set-builder definitions. Runs are enumerated over the observable quotient
(words of observable events with the state set they lead to), so unobservable
cycles never blow up the search. Exceeding a cap raises instead of truncating.
"""

import itertools
import logging
from typing import FrozenSet, Hashable, Iterable, Iterator, List, Optional, Set, Tuple

from pydantic import BaseModel, Field

from automata.errors import IncompleteSearchError
from automata.operations import observable_reach, project, unobservable_reach
from automata.plant import Plant
from automata.sbuilder import enumerate_to_sequences
from automata.sistate import SiState, check_si_state
from config.settings import EstimationLimits
from error_model.erm import Erm, LocalErmSet, check_erm_alphabet, check_local_alphabets
from error_model.sequences import CostedSequence, tamper_costs
from estimation.results import EstimateSet

logger = logging.getLogger(__name__)

Word = Tuple[str, ...]


class OracleCaps(BaseModel):
    """Enumeration limits; an instance needing more raises IncompleteSearchError"""
    max_run_length: int = Field(8, gt=0, description="Longest observable word enumerated")
    max_component_length: int = Field(4, gt=0, description="Longest per-site sequence accepted")
    max_cost: int = Field(2, ge=0, description="Largest cost bound accepted")


def _longest(tau: SiState) -> int:
    return max((len(seq) for seq in tau.seqs), default=0)


def _check_caps(tau: SiState, bound: int, required_length: int, caps: OracleCaps) -> None:
    longest = _longest(tau)
    if longest > caps.max_component_length:
        raise IncompleteSearchError("max_component_length", caps.max_component_length, longest)
    if bound > caps.max_cost:
        raise IncompleteSearchError("max_cost", caps.max_cost, bound)
    if required_length > caps.max_run_length:
        raise IncompleteSearchError("max_run_length", caps.max_run_length, required_length)


def observable_words(plant: Plant, q0: Iterable[str], max_length: int) -> Iterator[Tuple[Word, FrozenSet[Hashable]]]:
    """Every observable word of length <= max_length some run from q0 produces, with its reached states"""
    stack: List[Tuple[Word, FrozenSet[Hashable]]] = [((), unobservable_reach(plant, q0))]
    events = sorted(plant.observable_events)
    while stack:
        word, states = stack.pop()
        yield word, states
        if len(word) >= max_length:
            continue
        for event in events:
            reached = unobservable_reach(plant, observable_reach(plant, states, event))
            if reached:
                stack.append((word + (event,), reached))


def _received_sequences(plant: Plant, tau: SiState, limits: Optional[EstimationLimits]) -> List[Word]:
    cap = (limits or EstimationLimits()).max_to_sequences
    return sorted(enumerate_to_sequences(plant, tau, max_component_length=_longest(tau), max_sequences=cap))


def _global_costs(word: Word, received: List[Word], erm: Erm) -> Set[int]:
    costs: Set[int] = set()
    for candidate in received:
        costs |= tamper_costs(word, candidate, erm)
    return costs


def _local_costs(plant: Plant, word: Word, tau: SiState, erms: LocalErmSet) -> Set[int]:
    """Totals sum(c_i) <= c_u with each c_i achievable at site i"""
    totals = {0}
    for k, seq in enumerate(tau.seqs):
        site_costs = tamper_costs(project(plant, word, k + 1), seq, erms.per_site[k])
        totals = {t + c for t in totals for c in site_costs if t + c <= erms.bound}
        if not totals:
            break
    return totals


def oracle_global(
    plant: Plant,
    erm: Erm,
    tau: SiState,
    q0: Iterable[str],
    caps: OracleCaps = OracleCaps(),
    limits: Optional[EstimationLimits] = None,
) -> EstimateSet:
    """Estimates under global tampering, by enumeration of runs and alignments"""
    check_erm_alphabet(erm.validated(), plant)
    check_si_state(plant, tau, _longest(tau))
    received = _received_sequences(plant, tau, limits)
    if not received:
        return frozenset()
    required = len(received[0]) + erm.bound
    _check_caps(tau, erm.bound, required, caps)

    result = set()
    for word, states in observable_words(plant, plant.check_states(q0), required):
        for cost in _global_costs(word, received, erm):
            result.update((q, cost) for q in states)
    logger.debug(f"Global oracle found {len(result)} pairs")
    return frozenset(result)


def oracle_local(
    plant: Plant, erms: LocalErmSet, tau: SiState, q0: Iterable[str], caps: OracleCaps = OracleCaps()
) -> EstimateSet:
    """Estimates under local tampering, with per-site costs combined by subset sums"""
    check_local_alphabets(erms.validated(), plant)
    check_si_state(plant, tau, _longest(tau))
    required = tau.counting() + erms.bound
    _check_caps(tau, erms.bound, required, caps)

    result = set()
    for word, states in observable_words(plant, plant.check_states(q0), required):
        for cost in _local_costs(plant, word, tau, erms):
            result.update((q, cost) for q in states)
    logger.debug(f"Local oracle found {len(result)} pairs")
    return frozenset(result)


def _all_words(alphabet: Iterable[str], max_length: int) -> Iterator[Word]:
    symbols = sorted(alphabet)
    for length in range(max_length + 1):
        yield from itertools.product(symbols, repeat=length)


def oracle_geto(
    plant: Plant, erm: Erm, tau: SiState, caps: OracleCaps = OracleCaps(), limits: Optional[EstimationLimits] = None
) -> FrozenSet[CostedSequence]:
    """Every (original word, cost) whose global tampering can yield ``tau``"""
    check_erm_alphabet(erm.validated(), plant)
    check_si_state(plant, tau, _longest(tau))
    received = _received_sequences(plant, tau, limits)
    if not received:
        return frozenset()
    required = len(received[0]) + erm.bound
    _check_caps(tau, erm.bound, required, caps)
    return frozenset(
        CostedSequence(word, cost)
        for word in _all_words(plant.observable_events, required)
        for cost in _global_costs(word, received, erm)
    )


def oracle_leto(plant: Plant, erms: LocalErmSet, tau: SiState, caps: OracleCaps = OracleCaps()) -> FrozenSet[CostedSequence]:
    """Every (original word, cost) whose local tampering can yield ``tau``"""
    check_local_alphabets(erms.validated(), plant)
    check_si_state(plant, tau, _longest(tau))
    required = tau.counting() + erms.bound
    _check_caps(tau, erms.bound, required, caps)
    return frozenset(
        CostedSequence(word, cost)
        for word in _all_words(plant.observable_events, required)
        for cost in _local_costs(plant, word, tau, erms)
    )
