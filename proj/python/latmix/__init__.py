"""Exact analysis of Laurent-system support collections.

Thin re-export of the compiled core: consistency analysis, essential
subcollections, BKK numbers, and the discrete invariants of generic
consistent systems.
"""

from ._core import (
    CapExceeded,
    ParseError,
    PreconditionError,
    __version__,
    analyze,
    bkk_number,
    euler_characteristic,
    geometric_genus,
    hermite_normal_form,
    invariants,
    lattice_index,
    lattice_volume,
    parse_collection,
    quotient_map,
    root_count,
    saturation,
    smith_normal_form,
    structure,
)

__all__ = [
    "CapExceeded",
    "ParseError",
    "PreconditionError",
    "__version__",
    "analyze",
    "bkk_number",
    "euler_characteristic",
    "geometric_genus",
    "hermite_normal_form",
    "invariants",
    "lattice_index",
    "lattice_volume",
    "parse_collection",
    "quotient_map",
    "root_count",
    "saturation",
    "smith_normal_form",
    "structure",
]
