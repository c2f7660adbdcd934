"""
Estimation Package

Error-tolerant decentralized state estimation under global and local
tampering, each by the modified-system and the modified-builder method.
"""

from .engine import EstimationByRelease
from .global_builder import (
    build_egt_synchronizer,
    build_egts_builder,
    egts_release,
    estimate_global_builder,
    extract_geto,
)
from .global_system import (
    build_global_system_synchronizer,
    build_gg,
    estimate_error_free,
    estimate_global_system,
    synchronize,
)
from .labels import EventPair, MTupleEvent
from .local_builder import (
    ReleaseList,
    build_elt_synchronizer,
    build_elts_builder,
    elts_release,
    estimate_local_builder,
    extract_leto,
    release_list,
)
from .local_system import (
    build_gl,
    build_go,
    build_local_system_synchronizer,
    estimate_local_system,
    ms_release,
)
from .modified import ModifiedPlant
from .results import EstimateSet, least_cost_filter, sorted_estimates
from .synchronizer import Synchronizer, check_monotonicity, check_structural_bounds

__all__ = [
    "EstimateSet",
    "EstimationByRelease",
    "EventPair",
    "MTupleEvent",
    "ModifiedPlant",
    "ReleaseList",
    "Synchronizer",
    "build_egt_synchronizer",
    "build_egts_builder",
    "build_elt_synchronizer",
    "build_elts_builder",
    "build_gg",
    "build_gl",
    "build_global_system_synchronizer",
    "build_go",
    "build_local_system_synchronizer",
    "check_monotonicity",
    "check_structural_bounds",
    "egts_release",
    "elts_release",
    "estimate_error_free",
    "estimate_global_builder",
    "estimate_global_system",
    "estimate_local_builder",
    "estimate_local_system",
    "extract_geto",
    "extract_leto",
    "least_cost_filter",
    "ms_release",
    "release_list",
    "sorted_estimates",
    "synchronize",
]
