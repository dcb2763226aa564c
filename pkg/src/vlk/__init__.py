"""Invariants of virtual link diagrams: the two-variable Conway polynomial Z(x, y),
the Wirtinger/Fox Alexander invariants, and a Reidemeister move engine."""

from .alexander import alexander_matrix, alexander_polynomial, alexander_polynomial_mod_p, ideal_generators, wirtinger
from .conway import build_mp, skein_residual, skein_triple, z_normalized, z_polynomial, z_prime
from .diagram import Crossing, DiagramCode, DiagramError, parse_gauss, parse_vld, serialize_vld
from .laurent import LPoly1, LPoly2
from .matrix import RingMatrix, determinant, determinant_oracle
from .moves import MoveSite, apply_move, enumerate_sites, random_walk

__all__ = [
    "Crossing", "DiagramCode", "DiagramError", "LPoly1", "LPoly2", "MoveSite", "RingMatrix",
    "alexander_matrix", "alexander_polynomial", "alexander_polynomial_mod_p", "apply_move",
    "build_mp", "determinant", "determinant_oracle", "enumerate_sites", "ideal_generators",
    "parse_gauss", "parse_vld", "random_walk", "serialize_vld", "skein_residual", "skein_triple",
    "wirtinger", "z_normalized", "z_polynomial", "z_prime",
]
