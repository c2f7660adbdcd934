"""
Tampering Scenarios

Sampled plant runs and sampled edit scripts. Scripts are drawn from the ERM's
finite entries so every injected corruption is one the estimators must explain.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, FrozenSet, Hashable, Iterable, List, Optional, Tuple

import numpy as np

from automata.operations import project, project_observable
from automata.plant import EPSILON, Plant
from automata.sistate import SiState
from error_model.erm import Erm, LocalErmSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Run:
    """A sampled plant run"""
    events: Tuple[str, ...]
    path: Tuple[str, ...]
    final_states: FrozenSet[str]
    truncated: bool = False

    @property
    def final_state(self) -> str:
        return self.path[-1]


@dataclass(frozen=True)
class EditAction:
    original: str
    received: str
    cost: int


@dataclass(frozen=True)
class Tampering:
    """Outcome of tampering: the SI-state handed to the coordinator and its true cost"""
    tau: SiState
    cost: int
    scripts: Tuple[Tuple[EditAction, ...], ...] = field(default_factory=tuple)


def sample_run(plant: Plant, q0: Iterable[str], length: int, rng: np.random.Generator) -> Run:
    """
    Uniform random walk of ``length`` steps from a random initial state

    The run stops early, with ``truncated`` set, at a state without successors.
    """
    starts = sorted(q0)
    state = starts[int(rng.integers(len(starts)))]
    events: List[str] = []
    path = [state]
    truncated = False
    for _ in range(length):
        enabled = [
            (event, target)
            for event in plant.labels_from(state)
            for target in sorted(plant.successors(state, event))
        ]
        if not enabled:
            truncated = True
            break
        event, state = enabled[int(rng.integers(len(enabled)))]
        events.append(event)
        path.append(state)

    reached = frozenset(starts)
    for event in events:
        reached = frozenset(t for s in reached for t in plant.successors(s, event))
    return Run(tuple(events), tuple(path), reached, truncated)


def sample_edit(
    w: Tuple[str, ...],
    erm: Erm,
    rng: np.random.Generator,
    error_probability: float,
    budget: Optional[int] = None,
) -> Tuple[Tuple[str, ...], int, Tuple[EditAction, ...]]:
    """Apply a random admissible edit script to ``w``, never exceeding ``budget``"""
    budget = erm.bound if budget is None else budget
    received: List[str] = []
    script: List[EditAction] = []
    spent = 0

    def attempt(original: str, options: List[Tuple[str, int]]) -> bool:
        nonlocal spent
        affordable = [(dst, cost) for dst, cost in options if spent + cost <= budget]
        if not affordable or rng.random() >= error_probability:
            return False
        dst, cost = affordable[int(rng.integers(len(affordable)))]
        if dst != EPSILON:
            received.append(dst)
        script.append(EditAction(original, dst, cost))
        spent += cost
        return True

    for symbol in w:
        attempt(EPSILON, list(erm.insertions))
        changes = [(dst, cost) for dst, cost in erm.options(symbol) if dst != symbol]
        if not attempt(symbol, changes):
            received.append(symbol)
            script.append(EditAction(symbol, symbol, 0))
    attempt(EPSILON, list(erm.insertions))
    return tuple(received), spent, tuple(script)


def tamper_global(plant: Plant, run: Run, erm: Erm, rng: np.random.Generator, error_probability: float = 0.3) -> Tampering:
    """Corrupt P_I(t) once, then let every site record its projection"""
    received, cost, script = sample_edit(project_observable(plant, run.events), erm, rng, error_probability)
    tau = SiState(tuple(project(plant, received, site) for site in range(1, plant.num_sites + 1)))
    return Tampering(tau, cost, (script,))


def tamper_local(
    plant: Plant, run: Run, erms: LocalErmSet, rng: np.random.Generator, error_probability: float = 0.3
) -> Tampering:
    """Corrupt each site's projection separately under the shared budget"""
    remaining = erms.bound
    seqs = []
    scripts = []
    for site in range(1, plant.num_sites + 1):
        observed = project(plant, run.events, site)
        received, cost, script = sample_edit(observed, erms.site(site), rng, error_probability, budget=remaining)
        remaining -= cost
        seqs.append(received)
        scripts.append(script)
    return Tampering(SiState(tuple(seqs)), erms.bound - remaining, tuple(scripts))


@dataclass
class Scenario:
    """Everything needed to replay one simulated tampering"""
    index: int
    seed: int
    mode: str
    plant: Plant
    errors: Any
    q0: FrozenSet[str]
    run: Run
    tampering: Tampering
