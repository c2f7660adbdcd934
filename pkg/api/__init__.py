"""
API Package

File schemas, the JSON codec and DOT export.
"""

from .codec import (
    dumps,
    load_document,
    parse_erm,
    parse_estimates,
    parse_local_erms,
    parse_plant,
    parse_si_state,
    serialize_erm,
    serialize_estimates,
    serialize_local_erms,
    serialize_plant,
    serialize_si_state,
    serialize_sync,
)
from .dot import DotOptions, export_dot, export_modified_dot
from .models import FORMAT_VERSION, Method, Mode

__all__ = [
    "DotOptions",
    "FORMAT_VERSION",
    "Method",
    "Mode",
    "dumps",
    "export_dot",
    "export_modified_dot",
    "load_document",
    "parse_erm",
    "parse_estimates",
    "parse_local_erms",
    "parse_plant",
    "parse_si_state",
    "serialize_erm",
    "serialize_estimates",
    "serialize_local_erms",
    "serialize_plant",
    "serialize_si_state",
    "serialize_sync",
]
