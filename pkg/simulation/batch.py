"""
Containment Batch

Runs seeded tampering scenarios through both estimation methods and checks the
injected (true state, true cost) pair is always among the estimates.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel, Field
from tqdm import tqdm

from api.codec import erm_to_document, local_erms_to_document, plant_to_document
from automata.plant import Plant
from config.settings import EstimationLimits
from error_model.erm import Erm, LocalErmSet
from estimation.global_builder import estimate_global_builder
from estimation.global_system import estimate_global_system
from estimation.local_builder import estimate_local_builder
from estimation.local_system import estimate_local_system

from .generator import GeneratorConfig, random_erm, random_local_erms, random_plant, scenario_rng
from .scenario import Scenario, sample_run, tamper_global, tamper_local

logger = logging.getLogger(__name__)

FORMAT_VERSION = "1"


class ScenarioVerdict(BaseModel):
    """Containment outcome of one scenario"""
    index: int
    seed: int
    mode: str
    true_state: str
    true_cost: int
    sequences: List[List[str]]
    truncated_run: bool = False
    contained_system: bool
    contained_builder: bool
    repro: Optional[Dict[str, Any]] = Field(None, description="Inputs needed to replay a failure")

    @property
    def contained(self) -> bool:
        return self.contained_system and self.contained_builder


class BatchReport(BaseModel):
    """Per-scenario verdicts of a containment batch"""
    format_version: str = FORMAT_VERSION
    mode: str
    seed: int
    count: int
    contained: int
    status: str
    verdicts: List[ScenarioVerdict]


def build_scenario(
    index: int,
    seed: int,
    mode: str,
    config: GeneratorConfig,
    plant: Optional[Plant] = None,
    errors: Any = None,
) -> Scenario:
    """Draw plant (unless fixed), error model (unless fixed), run and tampering for one index"""
    if mode not in ("global", "local"):
        raise ValueError(f"Unsupported mode: {mode}")
    rng = scenario_rng(seed, index)
    plant = plant or random_plant(config, rng)
    if errors is None:
        errors = (
            random_erm(plant.observable_events, config, rng)
            if mode == "global"
            else random_local_erms(plant, config, rng)
        )
    run = sample_run(plant, plant.initial, config.run_length, rng)
    if mode == "global":
        tampering = tamper_global(plant, run, errors, rng, config.error_probability)
    else:
        tampering = tamper_local(plant, run, errors, rng, config.error_probability)
    return Scenario(index, seed, mode, plant, errors, frozenset(plant.initial), run, tampering)


def evaluate_scenario(scenario: Scenario, limits: Optional[EstimationLimits] = None) -> ScenarioVerdict:
    tau = scenario.tampering.tau
    if scenario.mode == "global":
        system = estimate_global_system(scenario.plant, scenario.errors, tau, scenario.q0, limits)
        builder = estimate_global_builder(scenario.plant, scenario.errors, tau, scenario.q0, limits)
    else:
        system = estimate_local_system(scenario.plant, scenario.errors, tau, scenario.q0, limits)
        builder = estimate_local_builder(scenario.plant, scenario.errors, tau, scenario.q0, limits)

    truth = (scenario.run.final_state, scenario.tampering.cost)
    verdict = ScenarioVerdict(
        index=scenario.index,
        seed=scenario.seed,
        mode=scenario.mode,
        true_state=truth[0],
        true_cost=truth[1],
        sequences=[list(seq) for seq in tau.seqs],
        truncated_run=scenario.run.truncated,
        contained_system=truth in system,
        contained_builder=truth in builder,
    )
    if not verdict.contained:
        logger.error(f"Scenario {scenario.index} (seed {scenario.seed}) lost the true pair {truth}")
        verdict.repro = _repro_bundle(scenario)
    return verdict


def _repro_bundle(scenario: Scenario) -> Dict[str, Any]:
    errors = scenario.errors
    return {
        "plant": plant_to_document(scenario.plant),
        "erm": erm_to_document(errors) if isinstance(errors, Erm) else local_erms_to_document(errors),
        "sequences": [list(seq) for seq in scenario.tampering.tau.seqs],
        "q0": sorted(scenario.q0),
        "run": list(scenario.run.events),
    }


def _evaluate_index(args) -> ScenarioVerdict:
    index, seed, mode, config, plant, errors, limits = args
    return evaluate_scenario(build_scenario(index, seed, mode, config, plant, errors), limits)


def containment_batch(
    count: int,
    config: GeneratorConfig,
    mode: str = "global",
    seed: int = 0,
    plant: Optional[Plant] = None,
    errors: Any = None,
    limits: Optional[EstimationLimits] = None,
    workers: int = 1,
    progress: bool = False,
) -> BatchReport:
    """
    Simulate ``count`` tampering scenarios and check containment for both methods

    Args:
        count: number of scenarios (>= 1)
        config: generator parameters
        mode: "global" or "local"
        seed: batch seed; scenario i draws from the stream (seed, i)
        plant / errors: fixed plant and ERM (or local ERM set) instead of random ones
        workers: process pool size; results keep scenario order

    Returns:
        BatchReport with status "ok" only when every scenario is contained
    """
    if count < 1:
        raise ValueError(f"Unsupported scenario count: {count}")
    jobs = [(index, seed, mode, config, plant, errors, limits) for index in range(count)]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts_iter: Iterable[ScenarioVerdict] = pool.map(_evaluate_index, jobs, chunksize=8)
            verdicts = list(tqdm(verdicts_iter, total=count, disable=not progress, desc="scenarios"))
    else:
        verdicts = [_evaluate_index(job) for job in tqdm(jobs, disable=not progress, desc="scenarios")]

    contained = sum(1 for v in verdicts if v.contained)
    status = "ok" if contained == count else "failed"
    logger.info(f"Containment batch ({mode}, seed {seed}): {contained}/{count} contained")
    return BatchReport(mode=mode, seed=seed, count=count, contained=contained, status=status, verdicts=verdicts)
