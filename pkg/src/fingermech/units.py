"""Unit-tagged quantity parsing and elastomer hardness conversion.

All library code works in SI (m, Pa, rad, N, J).  Config files may tag values
with a unit suffix ("14 mm", "2 GPa", "90 deg"); bare numbers are taken as SI.
Keeping the conversion at the parse boundary avoids silent mm/GPa mix-ups.
"""

from __future__ import annotations

import math

from .errors import ConfigError

# multiplier to SI per accepted suffix, grouped by dimension
_LENGTH = {"m": 1.0, "cm": 1e-2, "mm": 1e-3, "um": 1e-6}
_PRESSURE = {"Pa": 1.0, "kPa": 1e3, "MPa": 1e6, "GPa": 1e9}
_ANGLE = {"rad": 1.0, "deg": math.pi / 180.0}

UNIT_TABLES = {
    "length": _LENGTH,
    "pressure": _PRESSURE,
    "angle": _ANGLE,
    "dimensionless": {"": 1.0},
}


def parse_quantity(value, dimension: str, field: str = "<value>") -> float:
    """Convert a config value to SI float.

    Accepts an int/float (assumed SI) or a string "<number> <unit>" whose unit
    must belong to `dimension` ("length", "pressure", "angle").
    """
    table = UNIT_TABLES.get(dimension)
    if table is None:
        raise ValueError(f"unknown dimension {dimension!r}")
    if isinstance(value, bool):
        raise ConfigError(f"{field}: expected a number or quantity string, got a bool")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        parts = value.strip().split()
        if len(parts) == 1:
            # allow "14mm" style with the unit glued on
            num, unit = _split_glued(parts[0])
        elif len(parts) == 2:
            num, unit = parts
        else:
            raise ConfigError(f"{field}: cannot parse quantity {value!r}")
        try:
            magnitude = float(num)
        except ValueError:
            raise ConfigError(f"{field}: bad number in quantity {value!r}") from None
        if unit == "" and "" not in table:
            raise ConfigError(f"{field}: quantity {value!r} is missing a unit")
        if unit not in table:
            raise ConfigError(
                f"{field}: unit {unit!r} is not a {dimension} unit "
                f"(accepted: {', '.join(sorted(table))})"
            )
        return magnitude * table[unit]
    raise ConfigError(f"{field}: expected a number or quantity string, got {type(value).__name__}")


def _split_glued(token: str) -> tuple[str, str]:
    i = len(token)
    while i > 0 and (token[i - 1].isalpha()):
        i -= 1
    return token[:i], token[i:]


def shore_a_to_modulus(shore_a: float) -> float:
    """Young's modulus (Pa) of an elastomer from Shore A hardness.

    Standard Gent relation; the divisor saturates as hardness approaches 100A,
    so inputs are restricted to (0, 95].  Isolated here so the hardness model
    can be swapped without touching the mechanics.
    """
    if not 0.0 < shore_a <= 95.0:
        raise ConfigError(f"Shore A hardness {shore_a} outside supported range (0, 95]")
    e_mpa = 0.0981 * (56.0 + 7.62336 * shore_a) / (0.137505 * (254.0 - 2.54 * shore_a))
    return e_mpa * 1e6
