"""
File Models

Pydantic schemas for every document the CLI reads or writes. ε is spelled
"eps" inside files; omitted ERM cells are infinite and omitted diagonal cells
are 0.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

FORMAT_VERSION = "1"
SUPPORTED_VERSIONS = {FORMAT_VERSION}


class Mode(str, Enum):
    """Tampering models"""
    GLOBAL = "global"
    LOCAL = "local"


class Method(str, Enum):
    """Solution routes"""
    SYSTEM = "system"
    BUILDER = "builder"


class Document(BaseModel):
    """Base for versioned documents"""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    format_version: str = Field(FORMAT_VERSION, description="Schema version")

    @field_validator("format_version")
    @classmethod
    def _known_version(cls, value: str) -> str:
        if value not in SUPPORTED_VERSIONS:
            raise ValueError(f"unsupported format_version '{value}' (supported: {sorted(SUPPORTED_VERSIONS)})")
        return value


class EventEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., description="Event id")
    observers: List[int] = Field(default_factory=list, description="1-based sites observing the event")


class PlantFile(Document):
    num_sites: int = Field(..., ge=1, description="Number of observation sites m")
    states: List[str] = Field(..., description="State ids")
    initial: List[str] = Field(..., description="Initial states")
    events: List[EventEntry] = Field(..., description="Events with their observer sets")
    transitions: List[Tuple[str, str, str]] = Field(default_factory=list, description="[source, event, target]")


class ErmEntry(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    from_: str = Field(..., alias="from", description="Original symbol or 'eps'")
    to: str = Field(..., description="Received symbol or 'eps'")
    cost: int = Field(..., description="Finite cost")


class ErmFile(Document):
    cost_bound: int = Field(..., ge=0, description="Budget c_u")
    alphabet: List[str] = Field(..., description="Observable events the matrix ranges over")
    entries: List[ErmEntry] = Field(default_factory=list, description="Finite cells")


class SiteErm(BaseModel):
    model_config = ConfigDict(extra="forbid")

    site: int = Field(..., ge=1, description="1-based site")
    alphabet: List[str] = Field(..., description="Events observed by the site")
    entries: List[ErmEntry] = Field(default_factory=list, description="Finite cells")


class LocalErmFile(Document):
    cost_bound: int = Field(..., ge=0, description="Shared budget c_u")
    sites: List[SiteErm] = Field(..., description="One matrix per site")


class SiStateFile(Document):
    sequences: List[List[str]] = Field(..., description="Per-site observation sequences")


class EstimateEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    state: str
    cost: int


class EstimateFile(Document):
    estimates: List[EstimateEntry] = Field(default_factory=list, description="Sorted by (state, cost)")


class SyncEstimate(BaseModel):
    state: str
    cost: Optional[int] = None


class SyncNode(BaseModel):
    id: int
    sequences: List[List[str]]
    cost: Optional[int] = None
    ending: bool = False
    estimate: List[SyncEstimate] = Field(default_factory=list)


class SyncEdge(BaseModel):
    source: int
    target: int
    label: List[str] = Field(..., description="Released event, [original, received] or (original |) per-site tuple")
    error: bool = False


class SyncFile(Document):
    kind: str
    root: int
    ending: List[int]
    nodes: List[SyncNode]
    edges: List[SyncEdge]


class ModifiedState(BaseModel):
    state: str
    cost: int


class ModifiedTransition(BaseModel):
    source: ModifiedState
    label: List[str]
    target: ModifiedState
    error: bool = False


class ModifiedSystemFile(Document):
    kind: str = Field(..., description="'gg' or 'gl'")
    cost_bound: int
    initial: List[ModifiedState]
    transitions: List[ModifiedTransition]


class ChainStep(BaseModel):
    model_config = ConfigDict(extra="forbid")

    sequences: List[List[str]] = Field(..., description="SI-state received at this synchronization")
    erm: Optional[ErmFile] = Field(None, description="Replacement global ERM from this step on")
    local_erm: Optional[LocalErmFile] = Field(None, description="Replacement local ERM set from this step on")


class ChainFile(Document):
    steps: List[ChainStep] = Field(..., min_length=1)


class ChainResultFile(Document):
    steps: List[EstimateFile]
