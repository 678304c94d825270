"""Type 2 (p,q)-analogues of r-Whitney and r-Dowling numbers, computed exactly."""
from .basics import (
    NegativeArgument,
    binomial,
    bracket,
    bracket_base,
    bracket_base_factorial,
    falling_factorial,
)
from .congruence import (
    NegativeExponent,
    NotAPolynomial,
    Residue,
    reduce_mod_pq,
    theorem_residue,
    verify_remark,
    verify_theorem_div,
)
from .dowling import DowlingSequence, dowling
from .hankel import (
    InvariantViolation,
    SquareMatrix,
    det_bareiss,
    det_cofactor,
    hankel_matrix_dowling,
    hankel_matrix_whitney,
    verify_hankel_dowling,
    verify_hankel_whitney,
)
from .laurent import ONE, P, Q, ZERO, DivisionByZero, LaurentPoly, NotDivisible, ZeroBase
from .report import VerificationReport
from .whitney import (
    Form,
    Triangle,
    WhitneyParams,
    gf_series,
    triangle,
    vertical_rhs,
    w2_first,
    w2_second,
    w2_third,
)

__version__ = "0.1.0"
