"""Exact arithmetic in towers of number fields, and linear algebra over them."""

from ..errors import DivisionByZero, ZeroDivisor
from .default import constants, default_tower
from .kernel import BACKEND
from .linalg import ExactMatrix, canonical_basis, intersect, nullspace, rank
from .printing import from_json, to_json
from .roots import find_roots
from .tower import QQ, FieldElement, Tower, TowerLevel, adjoin_root

__all__ = [
    "BACKEND",
    "QQ",
    "DivisionByZero",
    "ExactMatrix",
    "FieldElement",
    "Tower",
    "TowerLevel",
    "ZeroDivisor",
    "adjoin_root",
    "canonical_basis",
    "constants",
    "default_tower",
    "find_roots",
    "from_json",
    "intersect",
    "nullspace",
    "rank",
    "to_json",
]
