"""
Simulation Package

Seeded plants, runs and tampering scenarios, and the containment batch.
"""

from .batch import BatchReport, ScenarioVerdict, build_scenario, containment_batch, evaluate_scenario
from .generator import (
    GeneratorConfig,
    load_generator_config,
    random_erm,
    random_local_erms,
    random_plant,
    scenario_rng,
)
from .scenario import Run, Scenario, Tampering, sample_edit, sample_run, tamper_global, tamper_local

__all__ = [
    "BatchReport",
    "GeneratorConfig",
    "Run",
    "Scenario",
    "ScenarioVerdict",
    "Tampering",
    "build_scenario",
    "containment_batch",
    "evaluate_scenario",
    "load_generator_config",
    "random_erm",
    "random_local_erms",
    "random_plant",
    "sample_edit",
    "sample_run",
    "scenario_rng",
    "tamper_global",
    "tamper_local",
]
