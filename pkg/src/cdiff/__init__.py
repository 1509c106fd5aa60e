"""Finite-field toolkit for c-differential uniformity of functions over GF(p^n)."""

from cdiff.field import Field, build_field, DEFAULT_SIZE_CAP
from cdiff.funcs import PowerMap, LookupTable, evaluate, c_derivative, as_lookup
from cdiff.ddt import (CDDTReport, delta_count, ddt_row, general_uniformity,
                       power_uniformity, sweep)

__all__ = [
    "Field", "build_field", "DEFAULT_SIZE_CAP",
    "PowerMap", "LookupTable", "evaluate", "c_derivative", "as_lookup",
    "CDDTReport", "delta_count", "ddt_row", "general_uniformity",
    "power_uniformity", "sweep",
]
