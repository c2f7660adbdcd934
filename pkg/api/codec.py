"""
Codec

Parsing and serialization between file documents and domain values. Parsers
raise ValidationError with line or field paths; serializers emit sorted keys
and sorted collections so identical values always produce identical bytes.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Hashable, Iterable, List, Tuple, Type, TypeVar

import pydantic

from automata.errors import Diagnostic, ValidationError
from automata.plant import EPSILON, EPSILON_TOKEN, Plant
from automata.sistate import SiState
from error_model.erm import Erm, LocalErmSet, validate_erm, validate_local_erms
from estimation.labels import EventPair, MTupleEvent
from estimation.modified import ModifiedPlant
from estimation.results import sorted_estimates
from estimation.synchronizer import Synchronizer, node_cost, node_tau

from .models import (
    ChainFile,
    ChainResultFile,
    ErmEntry,
    ErmFile,
    EstimateEntry,
    EstimateFile,
    EventEntry,
    LocalErmFile,
    ModifiedState,
    ModifiedSystemFile,
    ModifiedTransition,
    PlantFile,
    SiStateFile,
    SiteErm,
    SyncEdge,
    SyncEstimate,
    SyncFile,
    SyncNode,
)

logger = logging.getLogger(__name__)

DocumentT = TypeVar("DocumentT", bound=pydantic.BaseModel)


def dumps(document: Any) -> str:
    """Canonical JSON text of a model or plain value"""
    if isinstance(document, pydantic.BaseModel):
        document = document.model_dump(by_alias=True, mode="json")
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_document(text: str, model: Type[DocumentT]) -> DocumentT:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError.single(f"line {e.lineno} column {e.colno}", e.msg) from None
    return validate_document(data, model)


def validate_document(data: Any, model: Type[DocumentT]) -> DocumentT:
    try:
        return model.model_validate(data)
    except pydantic.ValidationError as e:
        raise ValidationError(
            Diagnostic(".".join(str(part) for part in err["loc"]), err["msg"]) for err in e.errors()
        ) from None


def load_document(path: str, model: Type[DocumentT]) -> DocumentT:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ValidationError.single(path, f"cannot read file: {e}") from None
    try:
        return parse_document(text, model)
    except ValidationError as e:
        raise ValidationError(Diagnostic(f"{path}: {d.path}", d.message) for d in e.diagnostics) from None


def _symbol_in(token: str) -> str:
    return EPSILON if token == EPSILON_TOKEN else token


def _symbol_out(symbol: str) -> str:
    return EPSILON_TOKEN if symbol == EPSILON else symbol


def _duplicates(items: Iterable[Hashable]) -> List[Hashable]:
    seen, dupes = set(), set()
    for item in items:
        (dupes if item in seen else seen).add(item)
    return sorted(dupes)


# Plants

def plant_from_file(doc: PlantFile) -> Plant:
    dupes = _duplicates(e.name for e in doc.events)
    if dupes:
        raise ValidationError.single("events", f"duplicate event ids {dupes}")
    events = {e.name: e.observers for e in doc.events}
    return Plant.create(doc.states, events, doc.transitions, doc.initial, doc.num_sites)


def plant_to_file(plant: Plant) -> PlantFile:
    return PlantFile(
        num_sites=plant.num_sites,
        states=sorted(plant.states),
        initial=sorted(plant.initial),
        events=[EventEntry(name=e, observers=sorted(plant.observers[e])) for e in sorted(plant.observers)],
        transitions=list(plant.edges()),
    )


def parse_plant(text: str) -> Plant:
    return plant_from_file(parse_document(text, PlantFile))


def plant_to_document(plant: Plant) -> Dict[str, Any]:
    return plant_to_file(plant).model_dump(by_alias=True, mode="json")


def serialize_plant(plant: Plant) -> str:
    return dumps(plant_to_file(plant))


# Error relation matrices

def _entries_in(entries: List[ErmEntry], path: str) -> List[Tuple[str, str, int]]:
    dupes = _duplicates((e.from_, e.to) for e in entries)
    if dupes:
        raise ValidationError.single(f"{path}entries", f"duplicate cells {dupes}")
    return [(_symbol_in(e.from_), _symbol_in(e.to), e.cost) for e in entries]


def _entries_out(erm: Erm) -> List[ErmEntry]:
    return [ErmEntry(from_=_symbol_out(s), to=_symbol_out(d), cost=c) for s, d, c in erm.finite_entries()]


def erm_from_file(doc: ErmFile) -> Erm:
    if EPSILON_TOKEN in doc.alphabet:
        raise ValidationError.single("alphabet", f"'{EPSILON_TOKEN}' is reserved for ε")
    erm = Erm.from_entries(doc.alphabet, _entries_in(doc.entries, ""), doc.cost_bound)
    problems = validate_erm(erm)
    if problems:
        raise ValidationError(problems)
    return erm


def erm_to_file(erm: Erm) -> ErmFile:
    return ErmFile(cost_bound=erm.bound, alphabet=sorted(erm.alphabet), entries=_entries_out(erm))


def parse_erm(text: str) -> Erm:
    return erm_from_file(parse_document(text, ErmFile))


def erm_to_document(erm: Erm) -> Dict[str, Any]:
    return erm_to_file(erm).model_dump(by_alias=True, mode="json")


def serialize_erm(erm: Erm) -> str:
    return dumps(erm_to_file(erm))


def local_erms_from_file(doc: LocalErmFile) -> LocalErmSet:
    numbers = [s.site for s in doc.sites]
    if sorted(numbers) != list(range(1, len(numbers) + 1)):
        raise ValidationError.single("sites", f"sites must be numbered 1..{len(numbers)} exactly once, got {numbers}")
    per_site = []
    for k, site in enumerate(sorted(doc.sites, key=lambda s: s.site)):
        per_site.append(Erm.from_entries(site.alphabet, _entries_in(site.entries, f"sites[{k}]."), doc.cost_bound))
    erms = LocalErmSet.create(per_site, doc.cost_bound)
    problems = validate_local_erms(erms)
    if problems:
        raise ValidationError(problems)
    return erms


def local_erms_to_file(erms: LocalErmSet) -> LocalErmFile:
    return LocalErmFile(
        cost_bound=erms.bound,
        sites=[
            SiteErm(site=k + 1, alphabet=sorted(erm.alphabet), entries=_entries_out(erm))
            for k, erm in enumerate(erms.per_site)
        ],
    )


def parse_local_erms(text: str) -> LocalErmSet:
    return local_erms_from_file(parse_document(text, LocalErmFile))


def local_erms_to_document(erms: LocalErmSet) -> Dict[str, Any]:
    return local_erms_to_file(erms).model_dump(by_alias=True, mode="json")


def serialize_local_erms(erms: LocalErmSet) -> str:
    return dumps(local_erms_to_file(erms))


# SI-states and estimates

def si_state_from_file(doc: SiStateFile) -> SiState:
    for k, seq in enumerate(doc.sequences):
        if EPSILON_TOKEN in seq or EPSILON in seq:
            raise ValidationError.single(f"sequences[{k}]", f"site {k + 1} sequence contains ε")
    return SiState.of(*doc.sequences)


def parse_si_state(text: str) -> SiState:
    return si_state_from_file(parse_document(text, SiStateFile))


def serialize_si_state(tau: SiState) -> str:
    return dumps(SiStateFile(sequences=[list(seq) for seq in tau.seqs]))


def estimates_to_file(estimates: Iterable[Tuple[Hashable, int]]) -> EstimateFile:
    return EstimateFile(estimates=[EstimateEntry(state=q, cost=c) for q, c in sorted_estimates(estimates)])


def parse_estimates(text: str) -> frozenset:
    doc = parse_document(text, EstimateFile)
    return frozenset((e.state, e.cost) for e in doc.estimates)


def serialize_estimates(estimates: Iterable[Tuple[Hashable, int]]) -> str:
    return dumps(estimates_to_file(estimates))


def parse_chain(text: str) -> ChainFile:
    return parse_document(text, ChainFile)


def serialize_chain_result(steps: List[Iterable[Tuple[Hashable, int]]]) -> str:
    return dumps(ChainResultFile(steps=[estimates_to_file(step) for step in steps]))


# Synchronizers and modified systems

def label_tokens(label: Hashable) -> List[str]:
    """File spelling of a release label"""
    if isinstance(label, EventPair):
        return [_symbol_out(label.original), _symbol_out(label.received)]
    if isinstance(label, MTupleEvent):
        head = [] if label.original is None else [_symbol_out(label.original), "|"]
        return head + [_symbol_out(symbol) for symbol in label.per_site]
    return [_symbol_out(label)]


def _estimate_entries(values: Iterable[Hashable]) -> List[SyncEstimate]:
    entries = []
    for value in sorted(values):
        if isinstance(value, tuple):
            entries.append(SyncEstimate(state=value[0], cost=value[1]))
        else:
            entries.append(SyncEstimate(state=value))
    return entries


def sync_to_file(sync: Synchronizer) -> SyncFile:
    ids = {node: idx for idx, node in enumerate(sync.nodes)}
    nodes = [
        SyncNode(
            id=ids[node],
            sequences=[list(seq) for seq in node_tau(node).seqs],
            cost=node_cost(node),
            ending=node_tau(node).is_ending,
            estimate=_estimate_entries(sync.estimate(node)),
        )
        for node in sync.nodes
    ]
    edges = [
        SyncEdge(source=ids[src], target=ids[dst], label=label_tokens(label), error=sync.is_error_edge(src, label, dst))
        for src, label, dst in sync.edges()
    ]
    return SyncFile(
        kind=sync.kind,
        root=ids[sync.root],
        ending=[ids[node] for node in sync.ending_nodes],
        nodes=nodes,
        edges=edges,
    )


def serialize_sync(sync: Synchronizer) -> str:
    return dumps(sync_to_file(sync))


def modified_to_file(modified: ModifiedPlant, kind: str) -> ModifiedSystemFile:
    system = modified.system
    return ModifiedSystemFile(
        kind=kind,
        cost_bound=modified.bound,
        initial=[ModifiedState(state=q, cost=c) for q, c in sorted(system.initial)],
        transitions=[
            ModifiedTransition(
                source=ModifiedState(state=src[0], cost=src[1]),
                label=label_tokens(label),
                target=ModifiedState(state=dst[0], cost=dst[1]),
                error=modified.is_error_transition(src, label, dst),
            )
            for src, label, dst in system.edges()
        ],
    )


def serialize_modified(modified: ModifiedPlant, kind: str) -> str:
    return dumps(modified_to_file(modified, kind))
