"""Exact-arithmetic verification engine for cubic hypersurfaces.

Everything is computed over the rationals with no rounding anywhere:
Schubert calculus on the Grassmannian of lines, the class of the variety
of lines and its numerical tautological ring, Hodge-number bookkeeping
through the Hilbert-square relation, and the small-diagonal decomposition
that pins the product structure of the cycle ring down to rank one.
"""

from .errors import CheckFailed, NonIntegralResult, NotTopDegree, UnsupportedRange
from .wpoly import WPoly, graded_component, poly_mul
from .linalg import MatQ, kernel_basis, solve_linear
from .grassmann import (
    GClass,
    GRing,
    Partition2,
    build_ring,
    complete_symmetric,
    degree,
    degree_of_poly,
    fano_class,
    fano_poly,
    giambelli,
    normal_form,
    pieri_mul,
    pieri_mul11,
    sym_power_chern,
)
from .fano import ExtraRelation, FanoPairing, extra_relation, fano_pairing, ideal_decomposition, taut_rank_F
from .hodge import (
    EPoly,
    HodgeDiamond,
    e_fano,
    e_hilb2,
    euler_cubic,
    fano_diamond,
    fano_hodge_decomposition,
    hodge_cubic,
    sym2_diamond,
    taut_rank_FX,
)
from .diagonal import (
    FormalCycle,
    XClass,
    XXClass,
    X3Class,
    CohXXClass,
    CohX3Class,
    corrected_small_diagonal,
    cycle_product,
    decomposable_coefficients,
    defect_vanishes_cohomologically,
    small_diagonal_coh,
    small_diagonal_defect,
)

__version__ = "0.1.0"
