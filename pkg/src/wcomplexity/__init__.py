"""Exact weighted spanning-tree complexities and graph determinant functions."""

from .complexity import (
    BudgetExceeded,
    DisconnectedGraphError,
    enumerate_spanning_trees,
    kappa_cofactor,
    kappa_enumerate,
    kappa_sigma_enumerate,
    kappa_sigma_jet,
    kruskal_min_sigma,
    reduced_incidence_det,
)
from .detfun import (
    Anchor,
    AnchorError,
    CheckReport,
    DetFunSpec,
    phi_eval,
    phi_interpolate,
    phi_mixed_partial,
    phi_partial,
    preset,
    theorem1_rhs,
    theorem2_rhs,
    verify_corollary,
    verify_theorem1,
    verify_theorem2,
)
from .graph import Graph, Orientation, WeightedGraph, adjacency_matrix, degree_matrix, incidence_matrix, laplacian
from .hamming import HammingSpec
from .linalg import SquareMatrix, adjugate, berkowitz_charpoly, cofactor, determinant
from .ring import LAMBDA, MU, BivarPoly, Jet1, Jet2, format_rational, parse_rational

__version__ = "0.1.0"
