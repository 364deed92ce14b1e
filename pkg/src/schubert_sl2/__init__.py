"""Exact structure constants for the affine Grassmannian of SL2.

Schubert-basis structure constants in T-equivariant K-theory (Laurent
polynomials over the root lattice), ordinary K-theory (integers, closed
form), and T-equivariant cohomology (graded integer polynomials), each
computed along at least two independent routes that cross-check one
another.  See the `verify` module for the full check suite and the `cli`
module for the command-line surface.
"""

from .errors import (
    BadRange,
    BadRequest,
    CorruptCache,
    NonInteger,
    NotDivisible,
    OutOfRange,
    SchubertError,
    TooLarge,
    ZeroInput,
)
from .laurent import (
    ALPHA0,
    ALPHA1,
    ZERO_WEIGHT,
    LaurentPoly,
    Weight,
    exact_div,
    exp,
    lowest_graded_part,
)
from .graded import GradedPoly
from .weyl import (
    demazure_product,
    inversion_root,
    is_reduced,
    orbit_weight_offset,
    orbit_weight_step,
    q_weight,
    reduced_word,
)
from .lspaths import LSPath, chevalley_coefficient, d_divisor, enumerate_paths
from .localization import d_base, d_base_bruteforce
from .ktheory import (
    KTheoryTable,
    b_ordinary_closed,
    d_ordinary_closed,
    d_ordinary_divisor,
    dddd_identity_check,
    dddd_rhs,
)
from .cohomology import (
    CohomologyTable,
    Q1_closed,
    Q_bruteforce,
    c_bottom,
    c_top_minus_1,
    c_top_minus_2,
    chevalley_multiply,
    euler_class_identities,
    q_poly,
    sumq_closed,
)
from .cache import default_cache_path, load_cache, store_cache
from .verify import run_verify

__version__ = "0.1.0"

__all__ = [
    "ALPHA0",
    "ALPHA1",
    "BadRange",
    "BadRequest",
    "CohomologyTable",
    "CorruptCache",
    "GradedPoly",
    "KTheoryTable",
    "LSPath",
    "LaurentPoly",
    "NonInteger",
    "NotDivisible",
    "OutOfRange",
    "Q1_closed",
    "Q_bruteforce",
    "SchubertError",
    "TooLarge",
    "Weight",
    "ZERO_WEIGHT",
    "ZeroInput",
    "b_ordinary_closed",
    "c_bottom",
    "c_top_minus_1",
    "c_top_minus_2",
    "chevalley_coefficient",
    "chevalley_multiply",
    "d_base",
    "d_base_bruteforce",
    "d_divisor",
    "d_ordinary_closed",
    "d_ordinary_divisor",
    "dddd_identity_check",
    "dddd_rhs",
    "default_cache_path",
    "demazure_product",
    "enumerate_paths",
    "euler_class_identities",
    "exact_div",
    "exp",
    "inversion_root",
    "is_reduced",
    "load_cache",
    "lowest_graded_part",
    "orbit_weight_offset",
    "orbit_weight_step",
    "q_poly",
    "q_weight",
    "reduced_word",
    "run_verify",
    "store_cache",
    "sumq_closed",
]
