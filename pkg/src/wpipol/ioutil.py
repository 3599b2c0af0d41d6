"""Deterministic JSON/CSV formatting helpers.

Floats are emitted with 17 significant digits so every 64-bit value
round-trips losslessly through files, and identical inputs always produce
byte-identical output.
"""

from __future__ import annotations

import json


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def format_bool(b: bool) -> str:
    return "true" if b else "false"


def complex_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def dumps(obj) -> str:
    """Compact JSON with .17g float formatting (json.dumps uses repr)."""
    if isinstance(obj, bool):
        return format_bool(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ",".join(json.dumps(str(k)) + ":" + dumps(v)
                              for k, v in obj.items()) + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
