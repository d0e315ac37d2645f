"""JSON-friendly encoding shared by the CLI, the service, and table writers."""
from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from decimal import Decimal
from fractions import Fraction

JSON_SAFE_MAX = 2**53 - 1


def encode_value(value):
    """Recursively convert a value to JSON-ready form.

    Integers beyond double precision become strings so consumers that parse
    JSON numbers as doubles never lose digits; Fractions render as "p/q" and
    Decimals as their exact string form.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if -JSON_SAFE_MAX <= value <= JSON_SAFE_MAX else str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Decimal):
        return str(value)
    if isinstance(value, float):
        return value
    if is_dataclass(value) and not isinstance(value, type):
        return encode_value(asdict(value))
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__} for JSON output")


def dumps(payload) -> str:
    return json.dumps(encode_value(payload), separators=(", ", ": "))
