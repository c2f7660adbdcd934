"""
Random Instance Generator

Seeded generation of plants and error relation matrices for fuzzing and the
containment simulator. All draws come from a caller-supplied numpy Generator.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple

import numpy as np
import yaml
from pydantic import BaseModel, Field

from automata.plant import EPSILON, Plant
from error_model.erm import Erm, LocalErmSet

logger = logging.getLogger(__name__)


class GeneratorConfig(BaseModel):
    """Parameters of the random plant, ERM and tampering generators"""
    num_states: int = Field(5, ge=1, description="Plant states")
    num_events: int = Field(4, ge=1, description="Plant events")
    num_sites: int = Field(2, ge=1, description="Observation sites")
    unobservable_probability: float = Field(0.2, ge=0, le=1, description="Chance an event has no observer")
    shared_event_probability: float = Field(0.3, ge=0, le=1, description="Chance an observable event has a second observer")
    transitions_per_state: int = Field(2, ge=0, description="Outgoing transitions drawn per state")
    cost_bound: int = Field(2, ge=0, description="Tampering budget c_u")
    erm_density: float = Field(0.3, ge=0, le=1, description="Chance each off-diagonal ERM cell is finite")
    max_error_cost: int = Field(1, ge=1, description="Finite costs are drawn from 1..max_error_cost")
    identity_erms: bool = Field(False, description="Use error-free matrices regardless of density")
    run_length: int = Field(4, ge=0, description="Length of sampled plant runs")
    error_probability: float = Field(0.3, ge=0, le=1, description="Chance to attempt an error action at each position")


def load_generator_config(path: str) -> GeneratorConfig:
    """Read a YAML or JSON generator config"""
    text = Path(path).read_text(encoding="utf-8")
    data = json.loads(text) if path.endswith(".json") else yaml.safe_load(text)
    return GeneratorConfig(**(data or {}))


def _pick(rng: np.random.Generator, items: List):
    return items[int(rng.integers(len(items)))]


def random_plant(config: GeneratorConfig, rng: np.random.Generator) -> Plant:
    states = [f"s{i}" for i in range(config.num_states)]
    events: Dict[str, Set[int]] = {}
    for i in range(config.num_events):
        name = f"e{i}"
        if rng.random() < config.unobservable_probability:
            events[name] = set()
            continue
        first = int(rng.integers(1, config.num_sites + 1))
        sites = {first}
        if config.num_sites > 1 and rng.random() < config.shared_event_probability:
            others = [s for s in range(1, config.num_sites + 1) if s != first]
            sites.add(_pick(rng, others))
        events[name] = sites

    names = sorted(events)
    transitions: Set[Tuple[str, str, str]] = set()
    for state in states:
        for _ in range(config.transitions_per_state):
            transitions.add((state, _pick(rng, names), _pick(rng, states)))
    return Plant.create(states, events, sorted(transitions), [states[0]], config.num_sites)


def random_erm(alphabet, config: GeneratorConfig, rng: np.random.Generator) -> Erm:
    symbols = sorted(alphabet)
    if config.identity_erms:
        return Erm.identity(symbols, config.cost_bound)
    domain = [EPSILON] + symbols
    entries = []
    for src in domain:
        for dst in domain:
            if src == dst:
                continue
            if rng.random() < config.erm_density:
                entries.append((src, dst, int(rng.integers(1, config.max_error_cost + 1))))
    return Erm.from_entries(symbols, entries, config.cost_bound)


def random_local_erms(plant: Plant, config: GeneratorConfig, rng: np.random.Generator) -> LocalErmSet:
    return LocalErmSet.create(
        (random_erm(plant.site_alphabet(site), config, rng) for site in range(1, plant.num_sites + 1)),
        config.cost_bound,
    )


def scenario_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for scenario ``index`` of a batch seeded with ``seed``"""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))
