"""
Shared fixtures

F1 is a three-state cycle s0 -u-> s1 -a-> s2 -b-> s0 with u unobservable, a
seen by site 1 and b seen by site 2. E2 and the local pair L1/L2 are the
matching error models with budget 1.
"""

from pathlib import Path

import pytest

from automata.plant import EPSILON, Plant
from automata.sistate import SiState
from error_model.erm import Erm, LocalErmSet

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def make_f1() -> Plant:
    return Plant.create(
        states=["s0", "s1", "s2"],
        events={"u": [], "a": [1], "b": [2]},
        transitions=[("s0", "u", "s1"), ("s1", "a", "s2"), ("s2", "b", "s0")],
        initial=["s0"],
        num_sites=2,
    )


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def f1() -> Plant:
    return make_f1()


@pytest.fixture
def e2() -> Erm:
    return Erm.from_entries(["a", "b"], [("b", EPSILON, 1), (EPSILON, "a", 1)], bound=1)


@pytest.fixture
def local_erms() -> LocalErmSet:
    l1 = Erm.from_entries(["a"], [("a", EPSILON, 1)], bound=1)
    l2 = Erm.from_entries(["b"], [(EPSILON, "b", 1)], bound=1)
    return LocalErmSet.create([l1, l2], bound=1)


@pytest.fixture
def tau_global() -> SiState:
    return SiState.of(["a"], [])


@pytest.fixture
def tau_local() -> SiState:
    return SiState.of([], ["b"])


@pytest.fixture
def worked_erm() -> Erm:
    return Erm.from_entries(
        ["alpha12", "beta13", "sigma2", "gamma3"],
        [
            (EPSILON, "alpha12", 1),
            ("alpha12", "sigma2", 1),
            ("beta13", EPSILON, 1),
            ("gamma3", "beta13", 1),
        ],
        bound=2,
    )
