"""
Synchronizer Structure

Release graphs over (costed) SI-states, stored as a networkx multigraph whose
edge keys are release labels. Builders are synchronizers without estimates.
"""

import heapq
import logging
from math import prod
from typing import Any, Callable, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from automata.errors import InvariantBreach, ResourceCapError
from automata.sistate import CostedSiState, SiState

logger = logging.getLogger(__name__)

Node = Hashable
Release = Tuple[Hashable, Node, bool]


def node_tau(node: Node) -> SiState:
    return node.tau if isinstance(node, CostedSiState) else node


def node_cost(node: Node) -> Optional[int]:
    return node.cost if isinstance(node, CostedSiState) else None


class Synchronizer:
    """
    Release graph with an estimate per node

    Features:
    - Deterministic node and edge listings
    - Ending-node lookup (all-empty SI-states)
    - Marked-path enumeration for sequence extraction
    """

    def __init__(self, kind: str, root: Node, graph: nx.MultiDiGraph, has_estimates: bool = True):
        self.kind = kind
        self.root = root
        self.graph = graph
        self.has_estimates = has_estimates

    @property
    def nodes(self) -> List[Node]:
        return sorted(self.graph.nodes)

    def edges(self) -> List[Tuple[Node, Hashable, Node]]:
        return sorted((src, key, dst) for src, dst, key in self.graph.edges(keys=True))

    def is_error_edge(self, src: Node, label: Hashable, dst: Node) -> bool:
        return bool(self.graph.edges[src, dst, label].get("error", False))

    @property
    def ending_nodes(self) -> List[Node]:
        return [node for node in self.nodes if node_tau(node).is_ending]

    def estimate(self, node: Node) -> FrozenSet[Hashable]:
        return self.graph.nodes[node].get("estimate", frozenset())

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def marked_paths(self, limit: int) -> Tuple[List[Tuple[List[Hashable], Node]], bool]:
        """
        Label sequences of root-to-ending paths

        Only nodes that can still reach an ending node are expanded, and at most
        ``limit`` * (node count + 1) stack entries are expanded in total.

        Returns:
            (paths, complete) where complete is False when ``limit`` paths were
            collected, or the expansion budget spent, before the enumeration finished
        """
        live = set()
        for end in self.ending_nodes:
            live.add(end)
            live |= nx.ancestors(self.graph, end)
        paths: List[Tuple[List[Hashable], Node]] = []
        if self.root not in live:
            return paths, True

        budget = limit * (len(self) + 1)
        stack: List[Tuple[Node, List[Hashable]]] = [(self.root, [])]
        while stack:
            budget -= 1
            if budget < 0:
                return paths, False
            node, labels = stack.pop()
            if node_tau(node).is_ending:
                if len(paths) >= limit:
                    return paths, False
                paths.append((labels, node))
            for _, dst, key in sorted(self.graph.out_edges(node, keys=True), reverse=True):
                if dst in live:
                    stack.append((dst, labels + [key]))
        return paths, True


def explore(
    kind: str,
    root: Node,
    releases: Callable[[Node], Iterable[Release]],
    schedule_key: Callable[[Node], Tuple],
    max_nodes: int,
    audit: bool = False,
) -> Synchronizer:
    """Plant-free builder: every node reachable from ``root`` under ``releases``"""
    graph = nx.MultiDiGraph()
    graph.add_node(root)
    heap = [(schedule_key(root), root)]
    while heap:
        _, node = heapq.heappop(heap)
        for label, target, error in releases(node):
            if target not in graph:
                if graph.number_of_nodes() >= max_nodes:
                    raise ResourceCapError("max_synchronizer_nodes", max_nodes)
                graph.add_node(target)
                heapq.heappush(heap, (schedule_key(target), target))
            graph.add_edge(node, target, key=label, error=error)
    logger.info(f"Built {kind} with {graph.number_of_nodes()} nodes and {graph.number_of_edges()} edges")
    builder = Synchronizer(kind, root, graph, has_estimates=False)
    if audit:
        check_monotonicity(builder)
    return builder


def check_monotonicity(sync: Synchronizer) -> None:
    """Every edge shortens or keeps each component and never lowers the cost"""
    for src, label, dst in sync.edges():
        before, after = node_tau(src), node_tau(dst)
        for k, (old, new) in enumerate(zip(before.seqs, after.seqs)):
            if len(new) > len(old) or old[len(old) - len(new):] != new:
                raise InvariantBreach(f"edge {label} from {src} to {dst} grows component {k + 1}")
        c_src, c_dst = node_cost(src), node_cost(dst)
        if c_src is not None and c_dst < c_src:
            raise InvariantBreach(f"edge {label} from {src} to {dst} lowers the cost")
        if src == dst:
            raise InvariantBreach(f"self-loop {label} at {src}")


def check_structural_bounds(sync: Synchronizer, alphabet_size: int, bound: int) -> None:
    """Node count <= K(c_u+1) with K = prod(kappa_i+1); out-degree <= m(|Sigma_I|+1)+|Sigma_I|"""
    root_tau = node_tau(sync.root)
    k_states = prod(len(seq) + 1 for seq in root_tau.seqs)
    node_cap = k_states * (bound + 1)
    if len(sync) > node_cap:
        raise InvariantBreach(f"{len(sync)} nodes exceed the structural bound {node_cap}")
    m = root_tau.num_sites
    degree_cap = m * (alphabet_size + 1) + alphabet_size
    for node, degree in sync.graph.out_degree():
        if degree > degree_cap:
            raise InvariantBreach(f"node {node} has out-degree {degree} > {degree_cap}")
