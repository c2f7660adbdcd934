"""
S-builder

Error-free event release over SI-states and the TO-sequences it enumerates.
"""

import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import ResourceCapError
from .plant import Plant
from .sistate import SiState

logger = logging.getLogger(__name__)


def sbuilder_release(plant: Plant, tau: SiState, event: str) -> Optional[SiState]:
    """
    Release ``event`` from every site observing it

    Returns:
        The successor SI-state, or None when ``event`` is not the head of every
        observing site's sequence
    """
    sites = plant.observers_of(event)
    if not sites:
        return None
    ks = [site - 1 for site in sites]
    if any(tau.head(k) != event for k in ks):
        return None
    return tau.pop_heads(ks)


def releasable_events(plant: Plant, tau: SiState) -> List[str]:
    """Events the S-builder can release from ``tau``, sorted"""
    heads = {tau.head(k) for k in range(tau.num_sites) if tau.seqs[k]}
    return sorted(e for e in heads if sbuilder_release(plant, tau, e) is not None)


def enumerate_to_sequences(
    plant: Plant,
    tau: SiState,
    max_component_length: int = 32,
    max_sequences: int = 100_000,
) -> FrozenSet[Tuple[str, ...]]:
    """
    All totally ordered sequences whose per-site projections equal ``tau``

    Exponential in general; the oracle and the tests are the only callers.
    """
    if any(len(seq) > max_component_length for seq in tau.seqs):
        raise ResourceCapError("max_component_length", max_component_length)

    memo: Dict[SiState, FrozenSet[Tuple[str, ...]]] = {}

    def walk(node: SiState) -> FrozenSet[Tuple[str, ...]]:
        if node.is_ending:
            return frozenset({()})
        if node in memo:
            return memo[node]
        found = set()
        for event in releasable_events(plant, node):
            nxt = sbuilder_release(plant, node, event)
            for tail in walk(nxt):
                found.add((event,) + tail)
                if len(found) > max_sequences:
                    raise ResourceCapError("max_to_sequences", max_sequences)
        memo[node] = frozenset(found)
        return memo[node]

    result = walk(tau)
    logger.debug(f"{len(result)} TO-sequences for {tau}")
    return result
