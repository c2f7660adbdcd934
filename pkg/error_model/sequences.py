"""
Erroneous Sequences

Enumeration and decision procedures for the cost-bounded set of sequences a
tampering process may produce from an original observation sequence.
"""

import logging
from typing import FrozenSet, List, NamedTuple, Sequence, Set, Tuple

from automata.errors import ResourceCapError
from automata.plant import EPSILON
from automata.sistate import format_sequence

from .erm import Erm

logger = logging.getLogger(__name__)


class CostedSequence(NamedTuple):
    """An event sequence paired with the cost of producing it"""
    seq: Tuple[str, ...]
    cost: int

    def __str__(self) -> str:
        return f"({format_sequence(self.seq)}, {self.cost})"


def erroneous_set(w: Sequence[str], erm: Erm, max_size: int = 100_000) -> FrozenSet[CostedSequence]:
    """
    Every (received sequence, cost) obtainable from ``w`` within the ERM budget

    Each original symbol is kept, replaced or deleted; insertions may occur
    before the first symbol and after every symbol. A sequence appears once per
    distinct achievable cost.
    """
    n = len(w)
    start = (0, (), 0)
    seen: Set[Tuple[int, Tuple[str, ...], int]] = {start}
    frontier: List[Tuple[int, Tuple[str, ...], int]] = [start]
    result: Set[CostedSequence] = set()

    while frontier:
        pos, out, cost = frontier.pop()
        if pos == n:
            result.add(CostedSequence(out, cost))
            if len(result) > max_size:
                raise ResourceCapError("max_erroneous_set", max_size)
        moves = []
        for symbol, extra in erm.insertions:
            if cost + extra <= erm.bound:
                moves.append((pos, out + (symbol,), cost + extra))
        if pos < n:
            for received, extra in erm.options(w[pos]):
                if cost + extra <= erm.bound:
                    emitted = out + (received,) if received != EPSILON else out
                    moves.append((pos + 1, emitted, cost + extra))
        for move in moves:
            if move not in seen:
                seen.add(move)
                frontier.append(move)

    logger.debug(f"Erroneous set of {format_sequence(w)} has {len(result)} members")
    return frozenset(result)


def tamper_costs(w: Sequence[str], wr: Sequence[str], erm: Erm) -> FrozenSet[int]:
    """
    All costs c <= bound such that ``wr`` is reachable from ``w`` at cost c

    Dynamic program over alignment prefixes; cell (i, j) holds the costs at
    which w[:i] can be turned into wr[:j].
    """
    n, k = len(w), len(wr)
    cells: List[List[Set[int]]] = [[set() for _ in range(k + 1)] for _ in range(n + 1)]
    cells[0][0].add(0)

    for i in range(n + 1):
        for j in range(k + 1):
            here = cells[i][j]
            if not here:
                continue
            if i < n and j < k:
                _relax(here, cells[i + 1][j + 1], erm, w[i], wr[j])
            if i < n:
                _relax(here, cells[i + 1][j], erm, w[i], EPSILON)
            if j < k:
                _relax(here, cells[i][j + 1], erm, EPSILON, wr[j])

    return frozenset(cells[n][k])


def _relax(costs: Set[int], target: Set[int], erm: Erm, src: str, dst: str) -> None:
    for cost in costs:
        total = erm.charge(src, dst, cost)
        if total is not None:
            target.add(total)
