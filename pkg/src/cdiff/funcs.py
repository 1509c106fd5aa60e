"""Functions under study: power maps and explicit lookup tables.

A PowerMap keeps its exponent as given (reduction mod q-1 happens only at
evaluation time, and only for nonzero bases, since x^(q-1) = 1 fails at 0).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from cdiff.field import Field


@dataclass(frozen=True)
class PowerMap:
    """F(x) = x^d with d >= 1."""
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("power-map exponent must be >= 1")


@dataclass(frozen=True)
class LookupTable:
    """F given by its full value table in canonical element order."""
    table: tuple[int, ...]

    def digest(self) -> str:
        h = hashlib.sha256(json.dumps(list(self.table)).encode())
        return h.hexdigest()[:16]


FunctionSpec = PowerMap | LookupTable


def evaluate(field: Field, func: FunctionSpec, x: int) -> int:
    if isinstance(func, PowerMap):
        return field.pow(x, func.d)
    return func.table[x]


def value_table(field: Field, func: FunctionSpec) -> np.ndarray:
    """Values of func over all field elements in canonical order."""
    if isinstance(func, PowerMap):
        return field.pow_all(func.d)
    if len(func.table) != field.q:
        raise ValueError(f"lookup table has {len(func.table)} entries, field has {field.q}")
    return np.asarray(func.table, dtype=np.int64)


def as_lookup(field: Field, func: PowerMap) -> LookupTable:
    """Materialize a power map as a lookup table (feeds the generic path)."""
    return LookupTable(tuple(int(v) for v in value_table(field, func)))


def c_derivative(field: Field, func: FunctionSpec, c: int, a: int, x: int) -> int:
    """F(x+a) - c*F(x)."""
    return field.sub(evaluate(field, func, field.add(x, a)),
                     field.mul(c, evaluate(field, func, x)))


def func_to_json(func: FunctionSpec) -> str:
    if isinstance(func, PowerMap):
        return json.dumps({"power": func.d}, separators=(",", ":"))
    return json.dumps({"table": list(func.table)}, separators=(",", ":"))


def func_from_json(text: str) -> FunctionSpec:
    obj = json.loads(text)
    if "power" in obj:
        return PowerMap(int(obj["power"]))
    if "table" in obj:
        return LookupTable(tuple(int(v) for v in obj["table"]))
    raise ValueError("function JSON needs a 'power' or 'table' key")
