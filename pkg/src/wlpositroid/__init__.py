"""Positroid combinatorics of Wilson loop diagrams."""

from .diagram import (
    Config1,
    Config2,
    DirectedPropagator,
    Propagator,
    WilsonLoopDiagram,
    enumerate_admissible,
    enumerate_weakly_admissible,
    find_small_config,
    is_admissible,
    is_weakly_admissible,
    props_inside,
    props_on,
    propagator_length,
    reflect,
    remove_nonsupporting_vertex,
    rotate,
    support_of_set,
    vertex_support,
)
from .necklace import (
    GrassmannNecklace,
    contribution_intervals,
    coloops,
    decorated_permutation,
    grassmann_necklace,
    is_grassmann_necklace,
    loops,
)
from .matroid import bases, bases_from_necklace, gale_leq, is_independent, lexmin_basis
from .le import LeDiagram, dimension, le_from_necklace, plus_count, validate_le
from .sympoly import (
    DoesNotDivide,
    FactoredPolynomial,
    SparsePolynomial,
    c_matrix,
    exact_divide,
    minor_det,
)
from .denominator import (
    denominator_definition,
    denominator_via_necklace,
    edge_propagator_order,
    r_factor,
    s_set,
    verify_radical,
)
from .kernels import BACKEND

__version__ = "0.1.0"
