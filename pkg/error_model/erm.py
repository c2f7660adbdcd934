"""
Error Relation Matrices

Cost tables over (alphabet ∪ {ε})² describing which error actions tampering
may perform and at what cost. Absent entries are infinite; diagonal entries
default to 0 (the error-less action).
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from automata.errors import Diagnostic, ValidationError
from automata.plant import EPSILON, Plant

logger = logging.getLogger(__name__)


class _Infinity:
    """Marker for an absent (impossible) error action"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "∞"


INFINITY = _Infinity()
Cost = Union[int, _Infinity]


@dataclass(frozen=True)
class Erm:
    """
    Error relation matrix with cost bound c_u

    Features:
    - Cost lookup with implicit zero diagonal
    - Budget-aware charging of an action onto a running cost
    - Row views for replacement/deletion options and insertions
    """
    alphabet: FrozenSet[str]
    entries: Mapping[Tuple[str, str], int] = field(default_factory=dict)
    bound: int = 0

    @classmethod
    def from_entries(cls, alphabet: Iterable[str], entries: Iterable[Tuple[str, str, int]], bound: int) -> "Erm":
        table: Dict[Tuple[str, str], int] = {}
        for src, dst, cost in entries:
            table[(src, dst)] = cost
        return cls(alphabet=frozenset(alphabet), entries=table, bound=bound)

    @classmethod
    def identity(cls, alphabet: Iterable[str], bound: int = 0) -> "Erm":
        return cls(alphabet=frozenset(alphabet), entries={}, bound=bound)

    @property
    def domain(self) -> FrozenSet[str]:
        return self.alphabet | {EPSILON}

    def cost(self, src: str, dst: str) -> Cost:
        if (src, dst) in self.entries:
            return self.entries[(src, dst)]
        if src == dst and src in self.domain:
            return 0
        return INFINITY

    def charge(self, src: str, dst: str, spent: int) -> Optional[int]:
        """Running cost after applying (src -> dst), or None if impossible or over budget"""
        cost = self.cost(src, dst)
        if cost is INFINITY:
            return None
        total = spent + cost
        return total if total <= self.bound else None

    @cached_property
    def rows(self) -> Dict[str, Tuple[Tuple[str, int], ...]]:
        """src -> sorted finite (dst, cost) options, diagonal included"""
        out: Dict[str, Tuple[Tuple[str, int], ...]] = {}
        for src in sorted(self.domain):
            options = []
            for dst in sorted(self.domain):
                cost = self.cost(src, dst)
                if cost is not INFINITY:
                    options.append((dst, cost))
            out[src] = tuple(options)
        return out

    def options(self, src: str) -> Tuple[Tuple[str, int], ...]:
        """Replacement, deletion and error-less options for an original symbol"""
        return self.rows.get(src, ())

    @cached_property
    def insertions(self) -> Tuple[Tuple[str, int], ...]:
        return tuple((dst, cost) for dst, cost in self.rows.get(EPSILON, ()) if dst != EPSILON)

    def with_bound(self, bound: int) -> "Erm":
        return Erm(alphabet=self.alphabet, entries=dict(self.entries), bound=bound)

    def restricted(self, alphabet: Iterable[str]) -> "Erm":
        """The sub-matrix over ``alphabet`` ∪ {ε}"""
        keep = frozenset(alphabet)
        domain = keep | {EPSILON}
        entries = {(s, d): c for (s, d), c in self.entries.items() if s in domain and d in domain}
        return Erm(alphabet=keep, entries=entries, bound=self.bound)

    def finite_entries(self) -> List[Tuple[str, str, int]]:
        """Explicit off-diagonal entries in sorted order"""
        return sorted((s, d, c) for (s, d), c in self.entries.items() if s != d)

    def validated(self) -> "Erm":
        problems = validate_erm(self)
        if problems:
            raise ValidationError(problems)
        return self


@dataclass(frozen=True)
class LocalErmSet:
    """One ERM per observation site sharing a cumulative budget"""
    per_site: Tuple[Erm, ...]
    bound: int

    @classmethod
    def create(cls, per_site: Iterable[Erm], bound: int) -> "LocalErmSet":
        return cls(per_site=tuple(erm.with_bound(bound) for erm in per_site), bound=bound)

    @classmethod
    def identity(cls, plant: Plant, bound: int = 0) -> "LocalErmSet":
        return cls.create(
            (Erm.identity(plant.site_alphabet(site)) for site in range(1, plant.num_sites + 1)), bound
        )

    @property
    def num_sites(self) -> int:
        return len(self.per_site)

    def site(self, site: int) -> Erm:
        """ERM of a 1-based site"""
        return self.per_site[site - 1]

    def with_bound(self, bound: int) -> "LocalErmSet":
        return LocalErmSet.create(self.per_site, bound)

    def validated(self) -> "LocalErmSet":
        problems = validate_local_erms(self)
        if problems:
            raise ValidationError(problems)
        return self


def validate_erm(erm: Erm, path: str = "") -> List[Diagnostic]:
    """
    Check ERM well-formedness

    Returns:
        Diagnostics naming each violating cell; empty when the matrix is legal
    """
    prefix = f"{path}." if path else ""
    problems: List[Diagnostic] = []
    if erm.bound < 0:
        problems.append(Diagnostic(f"{prefix}cost_bound", f"must be >= 0, got {erm.bound}"))
    if EPSILON in erm.alphabet:
        problems.append(Diagnostic(f"{prefix}alphabet", "ε cannot be an alphabet symbol"))
    domain = erm.domain
    for (src, dst), cost in sorted(erm.entries.items()):
        cell = f"{prefix}entries[{_show(src)},{_show(dst)}]"
        if src not in domain or dst not in domain:
            problems.append(Diagnostic(cell, "symbol outside the ERM alphabet"))
            continue
        if not isinstance(cost, int) or isinstance(cost, bool):
            problems.append(Diagnostic(cell, f"cost must be an integer, got {cost!r}"))
            continue
        if src == dst:
            if cost != 0:
                problems.append(Diagnostic(cell, f"diagonal cost must be 0, got {cost}"))
        elif cost < 0:
            problems.append(Diagnostic(cell, f"negative cost {cost}"))
        elif src == EPSILON and cost < 1:
            problems.append(Diagnostic(cell, "insertion cost must be >= 1 (zero-cost insertions never terminate)"))
        elif dst == EPSILON and cost < 1:
            problems.append(Diagnostic(cell, "deletion cost must be >= 1 (zero-cost deletions never terminate)"))
    return problems


def validate_local_erms(erms: LocalErmSet, plant: Optional[Plant] = None) -> List[Diagnostic]:
    problems: List[Diagnostic] = []
    if erms.bound < 0:
        problems.append(Diagnostic("cost_bound", f"must be >= 0, got {erms.bound}"))
    for k, erm in enumerate(erms.per_site):
        problems.extend(validate_erm(erm, path=f"sites[{k}]"))
        if erm.bound != erms.bound:
            problems.append(Diagnostic(f"sites[{k}].cost_bound", "every site shares the set's budget"))
    if plant is not None:
        problems.extend(_local_alphabet_problems(erms, plant))
    return problems


def check_erm_alphabet(erm: Erm, plant: Plant) -> Erm:
    """Global ERMs range over exactly the plant's observable events"""
    if erm.alphabet != plant.observable_events:
        missing = sorted(plant.observable_events - erm.alphabet)
        extra = sorted(erm.alphabet - plant.observable_events)
        raise ValidationError.single("alphabet", f"ERM alphabet mismatch: missing {missing}, unexpected {extra}")
    return erm


def check_local_alphabets(erms: LocalErmSet, plant: Plant) -> LocalErmSet:
    problems = _local_alphabet_problems(erms, plant)
    if problems:
        raise ValidationError(problems)
    return erms


def _local_alphabet_problems(erms: LocalErmSet, plant: Plant) -> List[Diagnostic]:
    if erms.num_sites != plant.num_sites:
        return [Diagnostic("sites", f"expected {plant.num_sites} site ERMs, got {erms.num_sites}")]
    problems = []
    for k, erm in enumerate(erms.per_site):
        expected = plant.site_alphabet(k + 1)
        if erm.alphabet != expected:
            problems.append(
                Diagnostic(f"sites[{k}].alphabet", f"site {k + 1} alphabet must be {sorted(expected)}")
            )
    return problems


def _show(symbol: str) -> str:
    return symbol if symbol != EPSILON else "ε"
