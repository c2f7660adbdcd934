"""
Worked example over five states with three sites

The plant is a reconstruction consistent with the facts stated alongside the
example; the documented estimates are checked non-gating.
"""

import pytest

from api.codec import parse_erm, parse_local_erms, parse_plant, parse_si_state
from automata.operations import observable_reach, unobservable_reach
from estimation import estimate_global_builder, estimate_global_system, estimate_local_builder, estimate_local_system

pytestmark = pytest.mark.worked_example


@pytest.fixture
def example(fixtures_dir):
    def load(name):
        return (fixtures_dir / name).read_text(encoding="utf-8")

    return {
        "plant": parse_plant(load("worked_plant.json")),
        "erm": parse_erm(load("worked_erm.json")),
        "local_erms": parse_local_erms(load("worked_local_erms.json")),
        "tau_global": parse_si_state(load("worked_si_global.json")),
        "tau_local": parse_si_state(load("worked_si_local.json")),
    }


class TestReconstructedPlant:
    """Facts the reconstruction must satisfy"""

    def test_reachability_facts(self, example):
        plant = example["plant"]
        assert unobservable_reach(plant, {"q0"}) == {"q0", "q1"}
        assert observable_reach(plant, {"q0", "q1"}, "alpha12") == {"q2"}
        assert observable_reach(plant, {"q0", "q1"}, "beta13") == frozenset()

    def test_true_run_returns_to_start(self, example):
        plant = example["plant"]
        states = {"q0"}
        for event in ("upsilon", "alpha12", "sigma2", "beta13", "beta13", "gamma3"):
            states = {t for s in states for t in plant.successors(s, event)}
        assert states == {"q0"}

    def test_site_alphabets(self, example):
        plant = example["plant"]
        assert plant.site_alphabet(1) == {"alpha12", "beta13"}
        assert plant.site_alphabet(2) == {"alpha12", "sigma2"}
        assert plant.site_alphabet(3) == {"beta13", "gamma3"}


class TestMethodsAgree:
    """System and builder methods coincide on the example"""

    def test_global(self, example):
        args = (example["plant"], example["erm"], example["tau_global"], ["q0"])
        assert estimate_global_system(*args) == estimate_global_builder(*args)

    def test_local(self, example):
        args = (example["plant"], example["local_erms"], example["tau_local"], ["q0"])
        assert estimate_local_system(*args) == estimate_local_builder(*args)


@pytest.mark.xfail(strict=False, reason="plant transitions are reconstructed")
class TestDocumentedEstimates:
    """Estimates reported for the example"""

    def test_global(self, example):
        result = estimate_global_system(example["plant"], example["erm"], example["tau_global"], ["q0"])
        assert result == {("q0", 2), ("q1", 2), ("q4", 0), ("q4", 2)}

    def test_local(self, example):
        result = estimate_local_system(example["plant"], example["local_erms"], example["tau_local"], ["q0"])
        assert result == {("q2", 0), ("q2", 1), ("q2", 2), ("q3", 2), ("q4", 2)}
