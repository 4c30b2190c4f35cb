"""Left-invariant G2-structures on 7-dimensional nilpotent Lie algebras.

Exact arithmetic over Q(sqrt2, sqrt3), exterior calculus, torsion and
curvature of closed G2-structures, semi-algebraic Laplacian solitons, and
the Laplacian flow.
"""

from .exterior import PHI0, VOL0, KForm, gl_act, parse_form, wedge
from .g2metric import MetricData, NotPositive, hodge_star, metric_volume, positivity
from .g2torsion import NotClosed, laplacian, q_operator, ricci, torsion
from .liealg import LieAlgebra, ce_d, derivation_space
from .scalar import SQRT2, SQRT3, SQRT6, Scalar, parse_scalar
from .soliton import SolitonSolution, solve_soliton, transform_soliton

__all__ = [
    "PHI0", "VOL0", "KForm", "gl_act", "parse_form", "wedge",
    "MetricData", "NotPositive", "hodge_star", "metric_volume", "positivity",
    "NotClosed", "laplacian", "q_operator", "ricci", "torsion",
    "LieAlgebra", "ce_d", "derivation_space",
    "SQRT2", "SQRT3", "SQRT6", "Scalar", "parse_scalar",
    "SolitonSolution", "solve_soliton", "transform_soliton",
]
