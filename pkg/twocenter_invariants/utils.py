"""
Utility functions for the two-center invariants tool.
"""

import json
import math
from pathlib import Path
from typing import Any, Union

import numpy as np

PathLike = Union[str, Path]


def format_float(value: float) -> str:
    """
    Float in the fixed 17-significant-digit format of all dumps.

    Raises:
        ValueError: If the value is not finite
    """
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite float {value!r}")
    text = format(value, ".17g")
    if "e" not in text and "." not in text:
        text += ".0"
    return text


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    close = " " * (indent * level)
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(key), ensure_ascii=False)}: {_encode(obj[key], indent, level + 1)}"
                 for key in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # Rows of numbers stay on one line
        if all(isinstance(item, (int, float, np.integer, np.floating)) and not isinstance(item, bool)
               for item in obj):
            return "[" + ", ".join(_encode(item, indent, level + 1) for item in obj) + "]"
        items = [pad + _encode(item, indent, level + 1) for item in obj]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(data: Any, indent: int = 2) -> str:
    """
    Deterministic JSON: keys sorted, floats with 17 significant digits.

    Identical data always gives byte-identical text.

    Example:
        >>> dumps_json({"b": 0.1, "a": [1, 2]})
        '{\\n  "a": [1, 2],\\n  "b": 0.10000000000000001\\n}\\n'
    """
    return _encode(data, indent, 0) + "\n"


def save_json(data: Any, filepath: PathLike) -> Path:
    """Save data as deterministic JSON file."""
    path = Path(filepath)
    path.write_text(dumps_json(data), encoding="utf-8")
    return path


def load_json(filepath: PathLike) -> Any:
    """Load data from JSON file."""
    with open(filepath, "r", encoding="utf-8") as f:
        return json.load(f)
