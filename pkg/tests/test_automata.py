"""Plant model, SI-states, reachability and the S-builder"""

import itertools

import pytest

from automata.errors import ResourceCapError, ValidationError
from automata.operations import observable_reach, project, project_observable, reach_and_close, unobservable_reach
from automata.plant import EPSILON, Plant
from automata.sbuilder import enumerate_to_sequences, releasable_events, sbuilder_release
from automata.sistate import SiState, check_si_state
from simulation import GeneratorConfig, random_plant, scenario_rng


class TestPlant:
    """Plant construction and validation"""

    def test_f1_alphabets(self, f1):
        assert f1.observable_events == {"a", "b"}
        assert f1.silent == {"u"}
        assert f1.site_alphabet(1) == {"a"}
        assert f1.site_alphabet(2) == {"b"}
        assert f1.num_transitions == 3

    def test_edges_sorted(self, f1):
        assert list(f1.edges()) == [("s0", "u", "s1"), ("s1", "a", "s2"), ("s2", "b", "s0")]

    @pytest.mark.parametrize(
        "states, events, transitions, initial, fragment",
        [
            (["s0", "s0"], {"a": [1]}, [], ["s0"], "duplicate state"),
            (["s0"], {"eps": [1]}, [], ["s0"], "reserved"),
            (["s0"], {"a": [3]}, [], ["s0"], "outside 1..2"),
            (["s0"], {"a": [1]}, [], [], "nonempty"),
            (["s0"], {"a": [1]}, [("s0", "a", "s9")], ["s0"], "undeclared target"),
            (["s0"], {"a": [1]}, [("s0", "z", "s0")], ["s0"], "undeclared event"),
        ],
    )
    def test_rejects_broken_plants(self, states, events, transitions, initial, fragment):
        with pytest.raises(ValidationError) as exc:
            Plant.create(states, events, transitions, initial, num_sites=2)
        assert fragment in str(exc.value)

    def test_unknown_event_lookup(self, f1):
        with pytest.raises(ValidationError):
            f1.observers_of("z")

    def test_check_states(self, f1):
        assert f1.check_states(["s1"]) == {"s1"}
        with pytest.raises(ValidationError):
            f1.check_states(["s7"])


class TestSiState:
    """SI-state helpers"""

    def test_counting_and_heads(self):
        tau = SiState.of(["a", "a"], [])
        assert tau.counting() == 2
        assert tau.head(0) == "a"
        assert tau.head(1) == EPSILON
        assert not tau.is_ending
        assert SiState.ending(2).is_ending

    def test_pop_heads(self):
        tau = SiState.of(["a", "b"], ["b"])
        assert tau.pop_heads([0, 1]) == SiState.of(["b"], [])

    def test_str(self):
        assert str(SiState.of(["a"], [])) == "(a, ε)"

    def test_rejects_symbol_outside_site_alphabet(self, f1):
        with pytest.raises(ValidationError) as exc:
            check_si_state(f1, SiState.of(["b"], []))
        assert "site 1" in str(exc.value)

    def test_rejects_wrong_arity(self, f1):
        with pytest.raises(ValidationError):
            check_si_state(f1, SiState.of(["a"]))

    def test_component_length_cap(self, f1):
        with pytest.raises(ResourceCapError) as exc:
            check_si_state(f1, SiState.of(["a", "a", "a"], []), max_component_length=2)
        assert exc.value.cap == "max_component_length"


class TestReachability:
    """Projections, UR and R_e"""

    def test_projections(self, f1):
        assert project(f1, ("u", "a", "b"), 1) == ("a",)
        assert project(f1, ("u", "a", "b"), 2) == ("b",)
        assert project_observable(f1, ("u", "a", "b")) == ("a", "b")

    def test_unobservable_reach(self, f1):
        assert unobservable_reach(f1, {"s0"}) == {"s0", "s1"}
        assert unobservable_reach(f1, {"s2"}) == {"s2"}

    def test_observable_reach(self, f1):
        assert observable_reach(f1, {"s0", "s1"}, "a") == {"s2"}
        assert observable_reach(f1, {"s0"}, "a") == frozenset()
        assert reach_and_close(f1, {"s2"}, "b") == {"s0", "s1"}

    def test_empty_label_is_unobservable_reach(self, f1):
        assert observable_reach(f1, {"s0"}, EPSILON) == {"s0", "s1"}

    def test_rejects_silent_and_unknown_labels(self, f1):
        with pytest.raises(ValidationError):
            observable_reach(f1, {"s0"}, "u")
        with pytest.raises(ValidationError):
            observable_reach(f1, {"s0"}, "z")

    def test_unobservable_cycle_terminates(self):
        plant = Plant.create(
            ["p", "r"], {"u": [], "v": []}, [("p", "u", "r"), ("r", "v", "p")], ["p"], num_sites=1
        )
        assert unobservable_reach(plant, {"p"}) == {"p", "r"}


class TestSBuilder:
    """Error-free release and TO-sequences"""

    def test_release_pops_observing_sites(self, f1):
        tau = SiState.of(["a"], ["b"])
        assert sbuilder_release(f1, tau, "a") == SiState.of([], ["b"])
        assert sbuilder_release(f1, tau, "b") == SiState.of(["a"], [])

    def test_release_undefined(self, f1):
        assert sbuilder_release(f1, SiState.of([], ["b"]), "a") is None
        assert sbuilder_release(f1, SiState.of(["a"], []), "u") is None

    def test_shared_event_needs_every_observer(self):
        plant = Plant.create(["q"], {"x": [1, 2], "y": [2]}, [], ["q"], num_sites=2)
        assert sbuilder_release(plant, SiState.of(["x"], ["y", "x"]), "x") is None
        assert releasable_events(plant, SiState.of(["x"], ["y", "x"])) == ["y"]
        assert enumerate_to_sequences(plant, SiState.of(["x"], ["y", "x"])) == {("y", "x")}

    def test_interleavings(self, f1):
        assert enumerate_to_sequences(f1, SiState.of(["a"], ["b"])) == {("a", "b"), ("b", "a")}
        assert enumerate_to_sequences(f1, SiState.ending(2)) == {()}

    def test_to_sequence_cap(self, f1):
        with pytest.raises(ResourceCapError):
            enumerate_to_sequences(f1, SiState.of(["a"], ["b"]), max_sequences=1)


WORD_CONFIG = GeneratorConfig(num_states=2, num_events=4, num_sites=3, shared_event_probability=0.5)


class TestToSequencesAgainstPermutations:
    """TO-sequences are exactly the reorderings of a word that keep every site's projection"""

    @pytest.mark.parametrize("index", range(40))
    def test_random_words(self, index):
        rng = scenario_rng(31, index)
        plant = random_plant(WORD_CONFIG, rng)
        events = sorted(plant.observable_events)
        length = int(rng.integers(0, 7)) if events else 0
        word = tuple(events[int(i)] for i in rng.integers(0, max(len(events), 1), size=length))
        sites = range(1, plant.num_sites + 1)
        tau = SiState.of(*(project(plant, word, site) for site in sites))

        expected = {
            order
            for order in set(itertools.permutations(word))
            if all(project(plant, order, site) == tau.seqs[site - 1] for site in sites)
        }
        assert word in expected
        assert enumerate_to_sequences(plant, tau) == expected
