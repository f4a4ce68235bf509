"""Exact computations behind concordance obstructions for 2-component links.

Laurent polynomials and presentation-matrix determinants for Alexander
polynomials, (tb, rot) bookkeeping for Legendrian patterns and satellites,
tau intervals, and replayable certificates.
"""

from .certify import (
    Certificate,
    TauInterval,
    certify_distinct_iterates,
    certify_not_topologically_hopf,
    certify_qi_vs_ckrs,
    disjoint,
    plamenevskaya_interval,
    roberts_interval,
    verify_certificate,
)
from .diagram import CrossingList, linking_number, writhe
from .laurent import (
    ONE,
    T1,
    T2,
    ZERO,
    LaurentPoly,
    equal_up_to_units,
    eval_at_ones,
    invert_variables,
    is_unit,
    normalize_up_to_units,
)
from .legendrian import (
    CORE,
    FrontDiagram,
    LegendrianKnotInfo,
    PatternInvariants,
    compose_patterns,
    front_tb_rot,
    iterate_pattern,
    legendrian_satellite,
    ray_criterion,
    stabilize,
    tau_lower_bound_from_legendrian,
)
from .polymatrix import PolyMatrix, alexander_polynomial, det, is_alexander_trivial

__version__ = "0.1.0"
