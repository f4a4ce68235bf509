"""Fixture data shipped with the package.

``CONCORDIUM_FIXTURES`` overrides the directory the loaders read from.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

_HERE = Path(__file__).resolve().parent

# tau of the right-handed trefoil
TAU_RHT = 1


def fixture_dir() -> Path:
    override = os.environ.get("CONCORDIUM_FIXTURES")
    return Path(override) if override else _HERE


def fixture_path(name: str) -> Path:
    return fixture_dir() / name


def load_json(name: str):
    with open(fixture_path(name), encoding="utf-8") as fh:
        return json.load(fh)


def matrix_A():
    from ..polymatrix import matrix_from_json

    return matrix_from_json(load_json("matrix_A.json"))


def wh2_poly():
    from ..laurent import poly_from_json

    return poly_from_json(load_json("wh2_poly.json"))


def pattern_Q():
    from ..legendrian import pattern_from_json

    return pattern_from_json(load_json("pattern_Q.json"))


def ckrs_pattern():
    from ..legendrian import pattern_from_json

    return pattern_from_json(load_json("ckrs_LJ.json"))


def trefoil_legendrian():
    from ..legendrian import knot_from_json

    return knot_from_json(load_json("trefoil_leg.json"))


def hopf_diagram():
    from ..diagram import diagram_from_json

    return diagram_from_json(load_json("hopf.json"))


def trefoil_diagram():
    from ..diagram import diagram_from_json

    return diagram_from_json(load_json("trefoil_diagram.json"))
