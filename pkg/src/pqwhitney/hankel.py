"""Exact determinants over the Laurent ring and the Hankel product formulas.

Two independent determinant routines are kept: fraction-free (Bareiss)
elimination and first-row cofactor expansion.  The product formulas are
treated as claims to be checked, never as facts: every check returns a
:class:`~pqwhitney.report.VerificationReport` with both sides in full.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .basics import binomial, bracket, bracket_base, bracket_base_factorial
from .dowling import dowling
from .laurent import LaurentPoly, NotDivisible
from .report import VerificationReport
from .whitney import Form, WhitneyParams, whitney


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        dim = len(self.rows)
        if dim < 1:
            raise ValueError("matrix must have dimension >= 1")
        if any(len(row) != dim for row in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def of(cls, rows: Sequence[Sequence[LaurentPoly | int]]) -> SquareMatrix:
        return cls(tuple(tuple(LaurentPoly.coerce(e) for e in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def swap_rows(self, i: int, j: int) -> SquareMatrix:
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return SquareMatrix(tuple(rows))

    def scale_row(self, i: int, factor: LaurentPoly) -> SquareMatrix:
        rows = list(self.rows)
        rows[i] = tuple(e * factor for e in rows[i])
        return SquareMatrix(tuple(rows))

    def to_json(self) -> list[list[str]]:
        return [[e.canonical() for e in row] for row in self.rows]


def det_bareiss(matrix: SquareMatrix) -> LaurentPoly:
    n = matrix.dim
    a = [list(row) for row in matrix.rows]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - aik * row_k[j]
                try:
                    row_i[j] = num.exact_div(prev)
                except NotDivisible as exc:
                    raise InvariantViolation(f"inexact Bareiss step at k={k}: {exc}") from exc
            row_i[k] = LaurentPoly.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def det_cofactor(matrix: SquareMatrix) -> LaurentPoly:
    def expand(rows: list[tuple[LaurentPoly, ...]], cols: tuple[int, ...]) -> LaurentPoly:
        if len(cols) == 1:
            return rows[0][cols[0]]
        head, rest = rows[0], rows[1:]
        total = LaurentPoly.zero()
        for pos, j in enumerate(cols):
            entry = head[j]
            if entry.is_zero():
                continue
            minor = expand(rest, cols[:pos] + cols[pos + 1:])
            term = entry * minor
            total = total + term if pos % 2 == 0 else total - term
        return total

    return expand(list(matrix.rows), tuple(range(matrix.dim)))


def determinant(matrix: SquareMatrix, cross_check: bool = False) -> LaurentPoly:
    det = det_bareiss(matrix)
    if cross_check:
        other = det_cofactor(matrix)
        if det != other:
            raise InvariantViolation(f"Bareiss and cofactor determinants differ: {det} vs {other}")
    return det


def random_laurent(rng: random.Random, max_terms: int = 3, exp_range: int = 3, coeff_range: int = 9) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = (rng.randint(-exp_range, exp_range), rng.randint(-exp_range, exp_range))
        terms[mono] = rng.randint(-coeff_range, coeff_range)
    return LaurentPoly(terms)


def random_matrix(rng: random.Random, dim: int, **kwargs) -> SquareMatrix:
    return SquareMatrix(tuple(tuple(random_laurent(rng, **kwargs) for _ in range(dim)) for _ in range(dim)))


# -- Whitney Hankel matrices -------------------------------------------------


def hankel_matrix_whitney(params: WhitneyParams, s: int, n: int, form: Form | str = Form.SECOND) -> SquareMatrix:
    """``(W[s+i+j, s+j; t])_{0 <= i,j <= n}``."""
    if s < 0 or n < 0:
        raise ValueError("s and n must be >= 0")
    return SquareMatrix(tuple(
        tuple(whitney(params, s + i + j, s + j, form) for j in range(n + 1))
        for i in range(n + 1)
    ))


def whitney_hankel_formula(params: WhitneyParams, s: int, n: int, form: Form | str = Form.SECOND) -> LaurentPoly:
    """The printed product for the determinant of :func:`hankel_matrix_whitney`.

    second form: prod_{k=0}^{n} p^{nmt} [m(s+k)+r]^k
    first form:  prod_{k=0}^{n} q^{m C(s+k,2) + (s+k) r} p^{nmt} [m(s+k)+r]^k
    """
    form = Form(form)
    if form is Form.THIRD:
        raise ValueError("no product formula is stated for the third form")
    m, r, t = params.m, params.r, params.t
    result = LaurentPoly.one()
    for k in range(n + 1):
        qexp = m * binomial(s + k, 2) + (s + k) * r if form is Form.FIRST else 0
        result = (result * bracket(m * (s + k) + r) ** k).mono_mul(n * m * t, qexp)
    return result


def verify_hankel_whitney(
    params: WhitneyParams, s: int, n: int, form: Form | str = Form.SECOND, cross_check: bool = False
) -> VerificationReport:
    form = Form(form)
    lhs = determinant(hankel_matrix_whitney(params, s, n, form), cross_check)
    rhs = whitney_hankel_formula(params, s, n, form)
    return VerificationReport(
        f"hankel-w-{form.value}",
        {**params.as_dict(), "s": s, "n": n},
        lhs,
        (rhs,),
        ("printed product",),
    )


# -- Dowling Hankel transform ------------------------------------------------

# The exponent "...+r-1\binom{n}{2}" admits two readings.
PARSE_GROUPED = "(r-1)*C(n,2)"
PARSE_LITERAL = "r-C(n,2)"
DOWLING_PARSES = (PARSE_GROUPED, PARSE_LITERAL)

# Size conventions for H(D*)[n]: n x n starting at D*[0], or (n+1) x (n+1).
CONV_N = "n x n"
CONV_N_PLUS_1 = "(n+1) x (n+1)"
DOWLING_CONVENTIONS = (CONV_N, CONV_N_PLUS_1)


def dowling_hankel_exponent(params: WhitneyParams, n: int, parse: str) -> int:
    cubic = n * (n * n + 3 * n + 8) // 6
    if parse == PARSE_GROUPED:
        return cubic + (params.r - 1) * binomial(n, 2)
    if parse == PARSE_LITERAL:
        return cubic + params.r - binomial(n, 2)
    raise ValueError(f"unknown parse {parse!r}")


def dowling_hankel_formula(params: WhitneyParams, n: int, parse: str) -> LaurentPoly:
    """(q/p)^E ([m]_{q/p})^{C(n,2)} prod_{k=0}^{n-1} [k]_{(q/p)^m}!"""
    m = params.m
    e = dowling_hankel_exponent(params, n, parse)
    result = bracket_base(m, (-1, 1)) ** binomial(n, 2)
    for k in range(n):
        result = result * bracket_base_factorial(k, (-m, m))
    return result.mono_mul(-e, e)


def hankel_matrix_dowling(params: WhitneyParams, size: int, form: Form | str = Form.SECOND) -> SquareMatrix:
    """``(D[i+j])_{0 <= i,j < size}``."""
    if size < 1:
        raise ValueError("size must be >= 1")
    seq = dowling(params, form, 2 * size - 2)
    return SquareMatrix(tuple(tuple(seq[i + j] for j in range(size)) for i in range(size)))


def verify_hankel_dowling(params: WhitneyParams, n: int, cross_check: bool = False) -> list[VerificationReport]:
    """One report per matrix-size convention, each against both exponent parses."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rhs = tuple(dowling_hankel_formula(params, n, parse) for parse in DOWLING_PARSES)
    reports = []
    for conv, size in ((CONV_N, n), (CONV_N_PLUS_1, n + 1)):
        lhs = determinant(hankel_matrix_dowling(params, size), cross_check)
        reports.append(VerificationReport(
            "hankel-dstar",
            {**params.as_dict(), "n": n, "convention": conv},
            lhs,
            rhs,
            DOWLING_PARSES,
        ))
    return reports
