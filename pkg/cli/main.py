"""
Command-Line Interface

argparse front end over the estimation library. Defaults come from
``Settings.from_env()`` (``.env`` plus ``DETSYNTH_*`` variables); flags
override them. Every subcommand returns one of the documented exit codes.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pydantic

from api.codec import (
    dumps,
    erm_from_file,
    load_document,
    local_erms_from_file,
    plant_from_file,
    serialize_chain_result,
    serialize_estimates,
    serialize_modified,
    serialize_sync,
    si_state_from_file,
    validate_document,
)
from api.dot import export_dot, export_modified_dot
from api.models import ChainFile, ErmFile, EstimateFile, LocalErmFile, Method, Mode, PlantFile, SiStateFile
from automata.errors import Diagnostic, ValidationError
from automata.plant import Plant
from automata.sistate import SiState, check_si_state
from config.logging import configure_logging
from config.settings import ENV_PREFIX, EstimationLimits, Settings
from error_model.erm import check_erm_alphabet, check_local_alphabets
from estimation.global_builder import build_egt_synchronizer, build_egts_builder, estimate_global_builder
from estimation.global_system import build_gg, build_global_system_synchronizer, estimate_global_system
from estimation.local_builder import build_elt_synchronizer, build_elts_builder, estimate_local_builder
from estimation.local_system import build_gl, build_go, build_local_system_synchronizer, estimate_local_system
from estimation.results import least_cost_filter, states_of
from oracle.brute_force import OracleCaps, oracle_global, oracle_local
from simulation.batch import containment_batch
from simulation.generator import GeneratorConfig, load_generator_config

from .dispatcher import EXIT_EMPTY, EXIT_INVARIANT, EXIT_OK, EXIT_VALIDATION, CommandDispatcher

logger = logging.getLogger(__name__)

ESTIMATORS: Dict[Tuple[str, str], Callable] = {
    (Mode.GLOBAL.value, Method.SYSTEM.value): estimate_global_system,
    (Mode.GLOBAL.value, Method.BUILDER.value): estimate_global_builder,
    (Mode.LOCAL.value, Method.SYSTEM.value): estimate_local_system,
    (Mode.LOCAL.value, Method.BUILDER.value): estimate_local_builder,
}

# Top-level key that identifies each document kind for `validate`
DOCUMENT_KINDS = [
    ("states", "plant", PlantFile),
    ("sites", "local-erm", LocalErmFile),
    ("alphabet", "erm", ErmFile),
    ("sequences", "si-state", SiStateFile),
    ("steps", "chain", ChainFile),
    ("estimates", "estimates", EstimateFile),
]


# Input helpers

def _require(value: Optional[str], flag: str) -> str:
    if not value:
        raise ValidationError.single(flag, "required")
    return value


def _load_plant(path: Optional[str]) -> Plant:
    return plant_from_file(load_document(_require(path, "--plant"), PlantFile))


def _load_errors(path: Optional[str], mode: str, plant: Plant):
    path = _require(path, "--erm")
    if mode == Mode.GLOBAL.value:
        return check_erm_alphabet(erm_from_file(load_document(path, ErmFile)), plant)
    return check_local_alphabets(local_erms_from_file(load_document(path, LocalErmFile)), plant)


def _load_si(path: Optional[str]) -> SiState:
    return si_state_from_file(load_document(_require(path, "--si"), SiStateFile))


def _initial_states(text: Optional[str], plant: Plant) -> List[str]:
    if not text:
        return sorted(plant.initial)
    return [name.strip() for name in text.split(",") if name.strip()]


def _limits(args: argparse.Namespace, settings: Settings) -> EstimationLimits:
    overrides: Dict[str, Any] = {}
    if getattr(args, "max_component_length", None) is not None:
        overrides["max_component_length"] = args.max_component_length
    if getattr(args, "max_nodes", None) is not None:
        overrides["max_synchronizer_nodes"] = args.max_nodes
    if getattr(args, "audit", False):
        overrides["audit"] = True
    return settings.limits.model_copy(update=overrides)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def _parse_caps(text: Optional[str]) -> OracleCaps:
    """``max_run_length=8,max_cost=2`` style overrides"""
    if not text:
        return OracleCaps()
    values: Dict[str, str] = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValidationError.single("--caps", f"expected key=value, got '{item}'")
        values[key.strip()] = value.strip()
    return validate_document(values, OracleCaps)


# Commands

class Commands:
    """Subcommand handlers; each takes the parsed namespace and returns an exit code"""

    def __init__(self, settings: Settings):
        self.settings = settings

    def validate(self, args: argparse.Namespace) -> int:
        plant = _load_plant(args.plant) if args.plant else None
        problems: List[Diagnostic] = []
        for path in args.files:
            try:
                kind = self._validate_file(path, plant)
                logger.info(f"{path}: valid {kind}")
            except ValidationError as e:
                problems.extend(Diagnostic(d.path if d.path.startswith(path) else f"{path}: {d.path}", d.message)
                                for d in e.diagnostics)
        if problems:
            raise ValidationError(problems)
        return EXIT_OK

    @staticmethod
    def _validate_file(path: str, plant: Optional[Plant]) -> str:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError) as e:
            raise ValidationError.single(path, f"cannot read file: {e}") from None
        except json.JSONDecodeError as e:
            raise ValidationError.single(f"{path}: line {e.lineno} column {e.colno}", e.msg) from None
        if not isinstance(data, dict):
            raise ValidationError.single(path, "expected a JSON object")

        for key, kind, model in DOCUMENT_KINDS:
            if key not in data:
                continue
            doc = validate_document(data, model)
            if kind == "plant":
                plant_from_file(doc)
            elif kind == "erm":
                erm = erm_from_file(doc)
                if plant is not None:
                    check_erm_alphabet(erm, plant)
            elif kind == "local-erm":
                erms = local_erms_from_file(doc)
                if plant is not None:
                    check_local_alphabets(erms, plant)
            elif kind == "si-state":
                tau = si_state_from_file(doc)
                if plant is not None:
                    check_si_state(plant, tau)
            return kind
        raise ValidationError.single(path, "unrecognized document kind")

    def estimate(self, args: argparse.Namespace) -> int:
        plant = _load_plant(args.plant)
        errors = _load_errors(args.erm, args.mode, plant)
        tau = _load_si(args.si)
        estimator = ESTIMATORS[(args.mode, args.method)]
        result = estimator(plant, errors, tau, _initial_states(args.init, plant), _limits(args, self.settings))
        if args.least_cost:
            result = least_cost_filter(result)
        _emit(serialize_estimates(result), args.out)
        return EXIT_OK if result else EXIT_EMPTY

    def oracle(self, args: argparse.Namespace) -> int:
        plant = _load_plant(args.plant)
        errors = _load_errors(args.erm, args.mode, plant)
        tau = _load_si(args.si)
        caps = _parse_caps(args.caps)
        q0 = _initial_states(args.init, plant)
        if args.mode == Mode.GLOBAL.value:
            result = oracle_global(plant, errors, tau, q0, caps, _limits(args, self.settings))
        else:
            result = oracle_local(plant, errors, tau, q0, caps)
        if args.least_cost:
            result = least_cost_filter(result)
        _emit(serialize_estimates(result), args.out)
        return EXIT_OK if result else EXIT_EMPTY

    def simulate(self, args: argparse.Namespace) -> int:
        config = load_generator_config(args.gen_config) if args.gen_config else GeneratorConfig()
        plant = _load_plant(args.plant) if args.plant else None
        errors = _load_errors(args.erm, args.mode, plant) if plant is not None and args.erm else None
        report = containment_batch(
            args.count,
            config,
            mode=args.mode,
            seed=args.seed,
            plant=plant,
            errors=errors,
            limits=_limits(args, self.settings),
            workers=args.workers,
            progress=args.progress,
        )
        _emit(dumps(report), args.out)
        if report.status != "ok":
            logger.error(f"{report.count - report.contained} of {report.count} scenarios lost the true pair")
            return EXIT_INVARIANT
        return EXIT_OK

    def export(self, args: argparse.Namespace) -> int:
        plant = _load_plant(args.plant)
        if args.what == "gg":
            modified = build_gg(plant, _load_errors(args.erm, Mode.GLOBAL.value, plant))
            text = self._render_modified(modified, "gg", args.format)
        elif args.what == "gl":
            modified = build_gl(build_go(plant), _load_errors(args.erm, Mode.LOCAL.value, plant))
            text = self._render_modified(modified, "gl", args.format)
        else:
            sync = self._build_sync(args, plant)
            text = "".join(export_dot(sync)) if args.format == "dot" else serialize_sync(sync)
        _emit(text, args.out)
        return EXIT_OK

    @staticmethod
    def _render_modified(modified, name: str, fmt: str) -> str:
        return "".join(export_modified_dot(modified, name)) if fmt == "dot" else serialize_modified(modified, name)

    def _build_sync(self, args: argparse.Namespace, plant: Plant):
        errors = _load_errors(args.erm, args.mode, plant)
        tau = _load_si(args.si)
        limits = _limits(args, self.settings)
        q0 = _initial_states(args.init, plant)
        if args.mode == Mode.GLOBAL.value:
            if args.method == Method.SYSTEM.value:
                return build_global_system_synchronizer(plant, errors, tau, q0, limits)[1]
            if args.pure:
                return build_egts_builder(plant, errors, tau, limits)
            return build_egt_synchronizer(plant, errors, tau, q0, limits)
        if args.method == Method.SYSTEM.value:
            return build_local_system_synchronizer(plant, errors, tau, q0, limits)[1]
        if args.pure:
            return build_elts_builder(plant, errors, tau, limits)
        return build_elt_synchronizer(plant, errors, tau, q0, limits)

    def chain(self, args: argparse.Namespace) -> int:
        plant = _load_plant(args.plant)
        errors = _load_errors(args.erm, args.mode, plant) if args.erm else None
        path = _require(args.steps, "--steps")
        chain = load_document(path, ChainFile)
        estimator = ESTIMATORS[(args.mode, args.method)]
        limits = _limits(args, self.settings)

        q0 = _initial_states(args.init, plant)
        results = []
        for index, step in enumerate(chain.steps):
            errors = self._step_errors(step, index, args.mode, plant, errors)
            tau = si_state_from_file(SiStateFile(sequences=step.sequences))
            result = estimator(plant, errors, tau, q0, limits)
            if args.least_cost:
                result = least_cost_filter(result)
            results.append(result)
            logger.info(f"Chain step {index}: {len(result)} pairs")
            if not result:
                logger.warning(f"Chain stopped at step {index}: empty estimate")
                break
            q0 = sorted(states_of(result))
        _emit(serialize_chain_result(results), args.out)
        return EXIT_OK if results[-1] else EXIT_EMPTY

    @staticmethod
    def _step_errors(step, index: int, mode: str, plant: Plant, current):
        path = f"steps[{index}]"
        if mode == Mode.GLOBAL.value:
            if step.local_erm is not None:
                raise ValidationError.single(f"{path}.local_erm", "not allowed in global mode")
            if step.erm is not None:
                current = check_erm_alphabet(erm_from_file(step.erm), plant)
        else:
            if step.erm is not None:
                raise ValidationError.single(f"{path}.erm", "not allowed in local mode")
            if step.local_erm is not None:
                current = check_local_alphabets(local_erms_from_file(step.local_erm), plant)
        if current is None:
            raise ValidationError.single(path, "no error model given (use --erm or a step override)")
        return current


# Parser

def _add_inputs(parser: argparse.ArgumentParser, settings: Settings, si: bool = True) -> None:
    parser.add_argument("--mode", choices=[m.value for m in Mode], default=settings.mode or Mode.GLOBAL.value)
    parser.add_argument("--method", choices=[m.value for m in Method], default=settings.method or Method.SYSTEM.value)
    parser.add_argument("--plant", default=settings.plant, help="PlantFile path")
    parser.add_argument("--erm", default=settings.erm, help="ErmFile (global) or LocalErmFile (local) path")
    if si:
        parser.add_argument("--si", default=settings.si, help="SiStateFile path")
    parser.add_argument("--init", default=settings.init, help="Comma-separated initial states (default: plant initial)")
    parser.add_argument("--out", default=settings.out, help="Output path (default: stdout)")


def _add_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-component-length", type=int, default=None, help="Per-site sequence length cap")
    parser.add_argument("--max-nodes", type=int, default=None, help="Synchronizer node cap")
    parser.add_argument("--audit", action="store_true", help="Audit every built synchronizer")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detsynth",
        description="Error-tolerant decentralized state estimation",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exit codes:
  0  success
  1  empty estimate
  2  validation error
  3  resource cap exceeded
  4  invariant breach or failed simulation
""",
    )
    parser.add_argument("--env-file", default=".env", help="dotenv file with DETSYNTH_* settings")
    parser.add_argument("--log-level", default=settings.log_level)
    parser.add_argument("--log-json", action="store_true", default=settings.log_json)
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="Check input files")
    validate.add_argument("files", nargs="+")
    validate.add_argument("--plant", default=None, help="Cross-check alphabets and SI-states against this plant")

    estimate = sub.add_parser("estimate", help="Error-tolerant current-state estimate")
    _add_inputs(estimate, settings)
    _add_limits(estimate)
    estimate.add_argument("--least-cost", action="store_true", help="Keep only the cheapest cost per state")

    oracle = sub.add_parser("oracle", help="Brute-force estimate for small instances")
    _add_inputs(oracle, settings)
    oracle.add_argument("--least-cost", action="store_true")
    oracle.add_argument("--caps", default=None, help="e.g. max_run_length=8,max_component_length=4,max_cost=2")

    simulate = sub.add_parser("simulate", help="Seeded containment batch")
    simulate.add_argument("--mode", choices=[m.value for m in Mode], default=settings.mode or Mode.GLOBAL.value)
    simulate.add_argument("--count", type=int, default=100)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--gen-config", default=None, help="Generator config (YAML or JSON)")
    simulate.add_argument("--plant", default=None, help="Fixed plant instead of random ones")
    simulate.add_argument("--erm", default=None, help="Fixed error model for the fixed plant")
    simulate.add_argument("--workers", type=int, default=settings.workers)
    simulate.add_argument("--progress", action="store_true")
    simulate.add_argument("--out", default=settings.out)
    _add_limits(simulate)

    export = sub.add_parser("export", help="Export G_g, G_l or a synchronizer")
    export.add_argument("--what", choices=["gg", "gl", "sync"], required=True)
    export.add_argument("--format", choices=["dot", "json"], default="dot")
    export.add_argument("--pure", action="store_true", help="Builder method: export the plant-free builder")
    _add_inputs(export, settings)
    _add_limits(export)

    chain = sub.add_parser("chain", help="Sequential synchronizations")
    chain.add_argument("--steps", required=True, help="ChainFile path")
    chain.add_argument("--least-cost", action="store_true")
    _add_inputs(chain, settings, si=False)
    _add_limits(chain)
    return parser


def create_dispatcher(settings: Settings) -> CommandDispatcher:
    commands = Commands(settings)
    dispatcher = CommandDispatcher()
    for name in ("validate", "estimate", "oracle", "simulate", "export", "chain"):
        dispatcher.register_command(name, getattr(commands, name))
    return dispatcher


def load_settings(env_file: Optional[str]) -> Settings:
    """Settings from the environment, with env values checked like input files"""
    try:
        settings = Settings.from_env(env_file)
    except pydantic.ValidationError as e:
        raise ValidationError(
            Diagnostic(f"{ENV_PREFIX}{str(err['loc'][-1]).upper()}", err["msg"]) for err in e.errors()
        ) from None

    problems = []
    for name, choices in (("mode", Mode), ("method", Method)):
        value = getattr(settings, name)
        allowed = [choice.value for choice in choices]
        if value is not None and value not in allowed:
            problems.append(Diagnostic(f"{ENV_PREFIX}{name.upper()}", f"expected one of {allowed}, got '{value}'"))
    if problems:
        raise ValidationError(problems)
    return settings


def main(argv: Optional[Sequence[str]] = None) -> int:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--env-file", default=".env")
    known, _ = pre.parse_known_args(argv)
    try:
        settings = load_settings(known.env_file)
    except ValidationError as e:
        configure_logging()
        for diagnostic in e.diagnostics:
            logger.error(f"settings: {diagnostic}")
        return EXIT_VALIDATION

    args = build_parser(settings).parse_args(argv)
    configure_logging(args.log_level, args.log_json)
    return create_dispatcher(settings).dispatch(args.command, args)


if __name__ == "__main__":
    sys.exit(main())
