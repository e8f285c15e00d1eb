"""Deterministic JSON emission shared by the file formats and the CLI.

Floats are printed with 17 significant digits so that every IEEE double
round-trips exactly; dict key order is preserved, so identical inputs
produce byte-identical output.
"""

import json

__all__ = ["format_float", "dumps"]


def format_float(x: float) -> str:
    """Render a float with 17 significant digits (lossless round-trip)."""
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError(f"non-finite number in output: {x!r}")
    return format(float(x), ".17g")


def dumps(obj) -> str:
    """Serialize nested dicts/lists/scalars to a JSON string deterministically."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
