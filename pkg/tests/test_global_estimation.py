"""Global tampering: G_g, the E_gTS-builder and both estimators"""

import networkx as nx
import pytest

from automata.errors import ResourceCapError
from automata.plant import EPSILON, Plant
from automata.sistate import CostedSiState, SiState
from config.settings import EstimationLimits
from error_model.erm import Erm
from error_model.sequences import CostedSequence, tamper_costs
from estimation import (
    EventPair,
    build_egt_synchronizer,
    build_egts_builder,
    build_gg,
    build_global_system_synchronizer,
    check_monotonicity,
    check_structural_bounds,
    egts_release,
    estimate_error_free,
    estimate_global_builder,
    estimate_global_system,
    extract_geto,
    least_cost_filter,
    synchronize,
)
from estimation.synchronizer import Synchronizer
from simulation import GeneratorConfig, build_scenario

EXPECTED = {("s2", 0), ("s0", 1), ("s1", 1)}


def seqs(*pairs):
    return {CostedSequence(tuple(s), c) for s, c in pairs}


class TestModifiedSystem:
    """Cost-constrained globally modified system"""

    def test_states_and_initial(self, f1, e2):
        gg = build_gg(f1, e2)
        assert len(gg.system.states) == 6
        assert gg.system.initial == {("s0", 0)}
        assert gg.system.silent == {"u", EPSILON}

    def test_transitions(self, f1, e2):
        gg = build_gg(f1, e2)
        system = gg.system
        assert system.successors(("s1", 0), "a") == {("s2", 0), ("s1", 1)}
        assert system.successors(("s2", 0), EPSILON) == {("s0", 1)}
        assert system.successors(("s0", 0), "a") == {("s0", 1)}
        assert system.successors(("s0", 1), "a") == frozenset()
        assert system.successors(("s0", 1), "u") == {("s1", 1)}

    def test_error_transitions(self, f1, e2):
        gg = build_gg(f1, e2)
        assert not gg.is_error_transition(("s1", 0), "a", ("s2", 0))
        assert gg.is_error_transition(("s0", 0), "a", ("s0", 1))
        assert gg.is_error_transition(("s2", 0), EPSILON, ("s0", 1))


class TestRelease:
    """egts_release"""

    def test_deletion_keeps_tau(self, f1, e2):
        node = CostedSiState(SiState.of(["a"], []), 0)
        assert egts_release(f1, node, EventPair("b", EPSILON), e2) == CostedSiState(node.tau, 1)

    def test_insertion_releases_received(self, f1, e2):
        node = CostedSiState(SiState.of(["a"], []), 0)
        assert egts_release(f1, node, EventPair(EPSILON, "a"), e2) == CostedSiState(SiState.ending(2), 1)

    def test_undefined(self, f1, e2):
        node = CostedSiState(SiState.of(["a"], []), 1)
        assert egts_release(f1, node, EventPair("b", EPSILON), e2) is None
        assert egts_release(f1, node, EventPair("b", "a"), e2) is None

    def test_empty_pair_rejected(self, f1, e2):
        with pytest.raises(ValueError):
            egts_release(f1, CostedSiState(SiState.ending(2), 0), EventPair(EPSILON, EPSILON), e2)


class TestEstimates:
    """Both methods on F1 with E2"""

    def test_system_method(self, f1, e2, tau_global):
        assert estimate_global_system(f1, e2, tau_global, ["s0"]) == EXPECTED

    def test_builder_method(self, f1, e2, tau_global):
        assert estimate_global_builder(f1, e2, tau_global, ["s0"]) == EXPECTED

    def test_error_free(self, f1, tau_global):
        assert estimate_error_free(f1, tau_global, ["s0"]) == {("s2", 0)}

    def test_identity_erm_degenerates_to_error_free(self, f1, tau_global):
        erm = Erm.identity(["a", "b"], bound=0)
        error_free = estimate_error_free(f1, tau_global, ["s0"])
        assert estimate_global_system(f1, erm, tau_global, ["s0"]) == error_free
        assert estimate_global_builder(f1, erm, tau_global, ["s0"]) == error_free

    def test_empty_observation(self, f1, e2):
        expected = {("s2", 0), ("s0", 1), ("s1", 1)}
        assert estimate_global_system(f1, e2, SiState.ending(2), ["s2"]) == expected
        assert estimate_global_builder(f1, e2, SiState.ending(2), ["s2"]) == expected

    def test_least_cost(self):
        assert least_cost_filter({("s0", 0), ("s0", 1), ("s1", 1)}) == {("s0", 0), ("s1", 1)}

    def test_inconsistent_observation_is_empty(self, f1):
        erm = Erm.identity(["a", "b"], bound=0)
        tau = SiState.of([], ["b"])
        assert estimate_global_system(f1, erm, tau, ["s0"]) == frozenset()
        assert estimate_global_builder(f1, erm, tau, ["s0"]) == frozenset()


class TestStructures:
    """Synchronizers, builders and extracted GETO-sequences"""

    def test_synchronizer_geto(self, f1, e2, tau_global):
        sequences, complete = extract_geto(build_egt_synchronizer(f1, e2, tau_global, ["s0"]))
        assert complete
        assert sequences == seqs(("a", 0), ("ab", 1), ("", 1))

    def test_builder_geto(self, f1, e2, tau_global):
        builder = build_egts_builder(f1, e2, tau_global)
        assert builder.kind == "egts-builder"
        assert not builder.has_estimates
        sequences, complete = extract_geto(builder)
        assert complete
        assert sequences == seqs(("a", 0), ("ab", 1), ("", 1), ("ba", 1))

    def test_extract_rejects_other_kinds(self, f1, tau_global):
        with pytest.raises(ValueError):
            extract_geto(synchronize(f1, tau_global, ["s0"]))

    def test_audits_pass(self, f1, e2, tau_global):
        sync = build_egt_synchronizer(f1, e2, tau_global, ["s0"], EstimationLimits(audit=True))
        check_monotonicity(sync)
        check_structural_bounds(sync, alphabet_size=2, bound=1)
        check_structural_bounds(build_egts_builder(f1, e2, tau_global), alphabet_size=2, bound=1)

    def test_system_synchronizer_ending(self, f1, e2, tau_global):
        gg, sync = build_global_system_synchronizer(f1, e2, tau_global, ["s0"])
        assert sync.kind == "s-synchronizer"
        assert sync.ending_nodes == [SiState.ending(2)]
        assert sync.estimate(SiState.ending(2)) == EXPECTED
        assert gg.bound == 1

    def test_node_cap(self, f1, e2, tau_global):
        with pytest.raises(ResourceCapError):
            build_egt_synchronizer(f1, e2, tau_global, ["s0"], EstimationLimits(max_synchronizer_nodes=1))

    def test_deterministic_edges(self, f1, e2, tau_global):
        first = build_egt_synchronizer(f1, e2, tau_global, ["s0"]).edges()
        second = build_egt_synchronizer(f1, e2, tau_global, ["s0"]).edges()
        assert first == second


class TestSharedEvents:
    """A shared event may be relabelled to a different received symbol"""

    def test_replacement_to_shared_event(self):
        plant = Plant.create(["p", "r"], {"x": [1, 2], "y": [1]}, [("p", "y", "r")], ["p"], num_sites=2)
        erm = Erm.from_entries(["x", "y"], [("y", "x", 1)], bound=1)
        tau = SiState.of(["x"], ["x"])
        assert estimate_global_system(plant, erm, tau, ["p"]) == {("r", 1)}
        assert estimate_global_builder(plant, erm, tau, ["p"]) == {("r", 1)}


def diamond_chain(root, levels, tail=None):
    """Root-anchored chain of diamonds with 2**levels paths, optionally ending in ``tail``"""
    graph = nx.MultiDiGraph()

    def joint(i):
        return SiState.of(["a"] * i, ["c"])

    graph.add_edge(root, joint(0), key="enter")
    for i in range(levels):
        for side in ("b1", "b2"):
            mid = SiState.of(["a"] * i, [side])
            graph.add_edge(joint(i), mid, key=f"{side}-in-{i}")
            graph.add_edge(mid, joint(i + 1), key=f"{side}-out-{i}")
    if tail is not None:
        graph.add_edge(joint(levels), tail, key="tail")
    return graph


class TestMarkedPaths:
    """Path enumeration work stays bounded on graphs with exponentially many paths"""

    def test_dead_branches_are_not_walked(self):
        root = SiState.of(["r"], [])
        graph = diamond_chain(root, 40)
        graph.add_edge(root, SiState.ending(2), key="live")
        sync = Synchronizer("egts-builder", root, graph, has_estimates=False)
        paths, complete = sync.marked_paths(1)
        assert complete
        assert paths == [(["live"], SiState.ending(2))]

    def test_limit_on_live_paths(self):
        root = SiState.of(["r"], [])
        sync = Synchronizer("egts-builder", root, diamond_chain(root, 40, SiState.ending(2)), has_estimates=False)
        paths, complete = sync.marked_paths(3)
        assert not complete
        assert len(paths) == 3
        assert all(end == SiState.ending(2) for _, end in paths)

    def test_root_cannot_finish(self):
        root = SiState.of(["r"], [])
        sync = Synchronizer("egts-builder", root, diamond_chain(root, 40), has_estimates=False)
        assert sync.marked_paths(5) == ([], True)


PATH_CONFIG = GeneratorConfig(
    num_states=4, num_events=3, num_sites=2, transitions_per_state=2, cost_bound=2, run_length=2
)


class TestMarkedPathCosts:
    """Every marked path of the builder is an alignment whose cost the edit DP also finds"""

    @pytest.mark.parametrize("index", range(30))
    def test_ending_cost_is_a_tamper_cost(self, index):
        scenario = build_scenario(index, 23, "global", PATH_CONFIG)
        builder = build_egts_builder(scenario.plant, scenario.errors, scenario.tampering.tau)
        paths, _ = builder.marked_paths(10_000)
        assert paths
        for labels, end in paths:
            originals = tuple(label.original for label in labels if label.original != EPSILON)
            received = tuple(label.received for label in labels if label.received != EPSILON)
            assert end.cost in tamper_costs(originals, received, scenario.errors)
