"""Named target configurations used by the command line and the tests.

Each preset is a plain configuration document (the same JSON shape
load_target consumes), so a preset can be dumped to a file, edited, and fed
back through --config.
"""

from __future__ import annotations

import copy

from . import model
from .errors import DomainError

_SQRT2 = {"type": "algebraic", "minpoly": [-2, 0, 1], "interval": ["1", "2"]}
_CBRT2 = {"type": "algebraic", "minpoly": [-2, 0, 0, 1], "interval": ["1", "2"]}
_CBRT4 = {"type": "algebraic", "minpoly": [-4, 0, 0, 1], "interval": ["1", "2"]}
# 60 significant digits of sqrt(3); the decimal literal carries its own
# half-ulp uncertainty, which is the point: a target known only to finite
# precision, believed independent of sqrt(2)
_SQRT3_60 = {
    "type": "decimal",
    "value": "1.73205080756887729352744634150587236694280525381038062805581",
}

PRESETS: dict[str, dict] = {
    "sqrt2": {
        "n": 1,
        "coords": [{"type": "rational", "value": "1"}, _SQRT2],
    },
    "sqrt2-even-x0": {
        "n": 1,
        "coords": [{"type": "rational", "value": "1"}, _SQRT2],
        "S": {"type": "congruence", "modulus": 2, "residues": {"0": [0]}},
    },
    "cbrt2": {
        "n": 2,
        "coords": [{"type": "rational", "value": "1"}, _CBRT2, _CBRT4],
    },
    "liouville-sqrt2": {
        "n": 2,
        "coords": [{"type": "rational", "value": "1"}, _SQRT2, _SQRT3_60],
    },
}


def preset_names() -> list[str]:
    return sorted(PRESETS)


def preset_config(name: str) -> dict:
    if name not in PRESETS:
        raise DomainError(
            f"unknown preset {name!r}; available: {', '.join(preset_names())}"
        )
    return copy.deepcopy(PRESETS[name])


def load_preset(name: str):
    """(TargetPoint, ApproxSet) for a named preset."""
    return model.load_target(preset_config(name))
