"""
Estimate Sets

Results of the estimation problems: sets of (plant state, cost) pairs.
"""

from typing import Dict, FrozenSet, Hashable, Iterable, List, Tuple

EstimateSet = FrozenSet[Tuple[Hashable, int]]


def least_cost_filter(estimates: Iterable[Tuple[Hashable, int]]) -> EstimateSet:
    """Keep, per plant state, only the cheapest pair"""
    best: Dict[Hashable, int] = {}
    for state, cost in estimates:
        if state not in best or cost < best[state]:
            best[state] = cost
    return frozenset(best.items())


def sorted_estimates(estimates: Iterable[Tuple[Hashable, int]]) -> List[Tuple[Hashable, int]]:
    """Pairs ordered by (state id, cost)"""
    return sorted(estimates)


def states_of(estimates: Iterable[Tuple[Hashable, int]]) -> FrozenSet[Hashable]:
    return frozenset(state for state, _ in estimates)
