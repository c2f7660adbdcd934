"""
Estimation-by-Release Engine

Shared construction behind all four synchronizers. Subclasses supply the
release function, the label whose observable reach guards and updates the
estimate, and a schedule key that orders every edge source before its target.
"""

import heapq
import logging
from abc import ABC, abstractmethod
from typing import FrozenSet, Hashable, Iterable, List, Optional, Tuple

import networkx as nx

from automata.errors import InvariantBreach, ResourceCapError
from automata.operations import observable_reach, unobservable_reach
from automata.plant import Automaton
from config.settings import EstimationLimits

from .synchronizer import Node, Release, Synchronizer, check_monotonicity

logger = logging.getLogger(__name__)


class EstimationByRelease(ABC):
    """
    Base class for synchronizer constructions

    Features:
    - Releases enabled only when the guarding observable reach is nonempty
    - Each node estimated once all of its incoming releases are known
    - Node cap and optional monotonicity audit
    """

    kind = "synchronizer"

    def __init__(self, automaton: Automaton, limits: Optional[EstimationLimits] = None):
        self.automaton = automaton
        self.limits = limits or EstimationLimits()

    @abstractmethod
    def root(self) -> Node:
        """Initial node of the release graph"""

    @abstractmethod
    def root_states(self) -> Iterable[Hashable]:
        """States of ``automaton`` the root estimate is the unobservable reach of"""

    @abstractmethod
    def releases(self, node: Node) -> Iterable[Release]:
        """
        Candidate releases from a node, ignoring the model

        Returns:
            (label, target, is_error) triples
        """

    @abstractmethod
    def schedule_key(self, node: Node) -> Tuple:
        """Priority of a node; must strictly increase along every edge"""

    def guard_label(self, label: Hashable) -> Hashable:
        """Label of ``automaton`` whose reach guards and updates a release"""
        return label

    def update(self, estimate: FrozenSet[Hashable], label: Hashable) -> FrozenSet[Hashable]:
        return unobservable_reach(self.automaton, observable_reach(self.automaton, estimate, self.guard_label(label)))

    def build(self) -> Synchronizer:
        graph = nx.MultiDiGraph()
        root = self.root()
        graph.add_node(root)
        heap: List[Tuple[Tuple, Node]] = [(self.schedule_key(root), root)]
        max_nodes = self.limits.max_synchronizer_nodes

        while heap:
            key, node = heapq.heappop(heap)
            if node == root:
                estimate = unobservable_reach(self.automaton, self.root_states())
            else:
                estimate = frozenset().union(
                    *(
                        self.update(graph.nodes[src]["estimate"], label)
                        for src, _, label in graph.in_edges(node, keys=True)
                    )
                )
            graph.nodes[node]["estimate"] = estimate
            if not estimate and node != root:
                raise InvariantBreach(f"node {node} estimated empty despite guarded releases")

            for label, target, error in self.releases(node):
                if not observable_reach(self.automaton, estimate, self.guard_label(label)):
                    continue
                if target not in graph:
                    target_key = self.schedule_key(target)
                    if target_key <= key:
                        raise InvariantBreach(f"release {label} from {node} reaches an already scheduled level")
                    if graph.number_of_nodes() >= max_nodes:
                        raise ResourceCapError("max_synchronizer_nodes", max_nodes)
                    graph.add_node(target)
                    heapq.heappush(heap, (target_key, target))
                elif "estimate" in graph.nodes[target]:
                    raise InvariantBreach(f"release {label} from {node} targets estimated node {target}")
                graph.add_edge(node, target, key=label, error=error)

        sync = Synchronizer(self.kind, root, graph)
        logger.info(f"Built {self.kind} with {graph.number_of_nodes()} nodes and {graph.number_of_edges()} edges")
        if self.limits.audit:
            check_monotonicity(sync)
        return sync
