"""Promotion orbits of rectangular standard and column semistandard tableaux.

Tableaux are lists of rows, each row a list of positive integers.
"""

import json

from ._core import (
    DomainError,
    InvariantError,
    StructuralError,
    enumerate_syt,
    format_tableau,
    hook_length_count,
    mdiagram_layers,
    mdiagram_svg,
    parse_tableau,
    promote,
    promote_ssyt,
    psi,
    validate,
)
from . import _core

__all__ = [
    "DomainError",
    "InvariantError",
    "StructuralError",
    "census",
    "components",
    "enumerate_syt",
    "format_tableau",
    "hook_length_count",
    "mdiagram_layers",
    "mdiagram_svg",
    "orbit",
    "parse_tableau",
    "promote",
    "promote_ssyt",
    "psi",
    "ssyt_orbit",
    "validate",
]


def orbit(rows, method="fast"):
    """Orbit report of a standard tableau; method is oracle, fast or both."""
    return json.loads(_core.orbit_json(rows, method))


def ssyt_orbit(rows, method="formula", syt_orbit=None):
    """Orbit report of a column semistandard tableau."""
    return json.loads(_core.ssyt_orbit_json(rows, method, syt_orbit))


def components(rows):
    """Components of the m-diagram of a standard tableau."""
    return json.loads(_core.components_json(rows))


def census(shape, method="oracle", limit=16):
    """Orbit census over all standard tableaux of a rectangle such as "3x4"."""
    return json.loads(_core.census_json(shape, method, limit))
