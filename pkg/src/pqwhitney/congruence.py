"""Reduction modulo the ideal (pq) and the congruences for W* and W.

Residues exist only for genuine polynomials: in the Laurent ring pq is a
unit, so every congruence mod pq would hold trivially.  Inputs with a
negative exponent are rejected with :class:`NotAPolynomial`, and the sweep
functions turn that into a skipped report for the offending (n, k).
"""
from __future__ import annotations

from dataclasses import dataclass

from .basics import binomial
from .laurent import LaurentPoly
from .report import VerificationReport
from .whitney import Form, WhitneyParams, form_shift, w2_first, w2_second


class NotAPolynomial(ValueError):
    pass


class NegativeExponent(ValueError):
    pass


@dataclass(frozen=True)
class Residue:
    """Canonical representative mod pq: only pure p-powers, pure q-powers and constants."""

    poly: LaurentPoly

    def __post_init__(self):
        for (a, b), _ in self.poly:
            if a < 0 or b < 0:
                raise NotAPolynomial(f"residue has negative exponent: {self.poly}")
            if a >= 1 and b >= 1:
                raise ValueError(f"p^{a}*q^{b} is divisible by pq")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return self.poly == other.poly
        if isinstance(other, (LaurentPoly, int)):
            return self.poly == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.poly)

    def __str__(self) -> str:
        return str(self.poly)

    def canonical(self) -> str:
        return self.poly.canonical()


def reduce_mod_pq(x: LaurentPoly) -> Residue:
    if not x.is_polynomial():
        raise NotAPolynomial(f"cannot reduce a Laurent polynomial with negative exponents: {x}")
    return Residue(LaurentPoly({(a, b): c for (a, b), c in x if a == 0 or b == 0}))


def claimed_exponent(params: WhitneyParams) -> int:
    """``mt + r - 1``, the p-exponent step in the claimed residues."""
    return params.m * params.t + params.r - 1


def theorem_residue(n: int, k: int, params: WhitneyParams) -> Residue:
    """``C(n,k) p^{(n-k)(mt+r-1)}``."""
    c = binomial(n, k)
    if c == 0:
        return Residue(LaurentPoly.zero())
    e = claimed_exponent(params)
    if e < 0 and n > k:
        raise NegativeExponent(f"mt+r-1 = {e} < 0 gives a negative p-exponent for n={n}, k={k}")
    return Residue(LaurentPoly.monomial((n - k) * e, 0, c))


def _gate(value: LaurentPoly, params: WhitneyParams, n: int, k: int) -> str | None:
    if not value.is_polynomial():
        return "value has negative exponents"
    if n > k and claimed_exponent(params) < 0:
        return "mt+r-1 < 0"
    return None


def verify_theorem_div(params: WhitneyParams, n_max: int) -> list[VerificationReport]:
    """Compare W*[n,k] mod pq with C(n,k) p^{(n-k)(mt+r-1)} for 0 <= k <= n <= n_max."""
    reports = []
    for n in range(n_max + 1):
        for k in range(n + 1):
            where = {**params.as_dict(), "n": n, "k": k}
            value = w2_second(params, n, k)
            reason = _gate(value, params, n, k)
            if reason:
                reports.append(VerificationReport.skipped("theorem3", where, reason))
                continue
            reports.append(VerificationReport(
                "theorem3", where,
                reduce_mod_pq(value).poly,
                (theorem_residue(n, k, params).poly,),
                ("C(n,k) p^((n-k)(mt+r-1))",),
            ))
    return reports


def remark_product_claim(n: int, k: int, params: WhitneyParams) -> LaurentPoly:
    """``C(n,k) p^{(n-k)(mt+r-1)} q^{kr + m C(k,2)}`` before reduction."""
    return theorem_residue(n, k, params).poly.mono_mul(0, form_shift(params, k, Form.FIRST))


def remark_cases_claim(n: int, k: int, params: WhitneyParams) -> LaurentPoly:
    """``q^{nr + m C(n,2)}`` on the diagonal, 0 elsewhere."""
    if n == k:
        return LaurentPoly.monomial(0, n * params.r + params.m * binomial(n, 2))
    return LaurentPoly.zero()


def verify_remark(params: WhitneyParams, n_max: int) -> list[VerificationReport]:
    """Check both displayed forms of the first-form congruence, independently.

    Returns the "remark-product" reports followed by the "remark-cases"
    reports, each ordered by (n, k).
    """
    product, cases = [], []
    for n in range(n_max + 1):
        for k in range(n + 1):
            where = {**params.as_dict(), "n": n, "k": k}
            value = w2_first(params, n, k)
            reason = _gate(value, params, n, k)
            if reason:
                product.append(VerificationReport.skipped("remark-product", where, reason))
                cases.append(VerificationReport.skipped("remark-cases", where, reason))
                continue
            lhs = reduce_mod_pq(value).poly
            product.append(VerificationReport(
                "remark-product", where, lhs,
                (reduce_mod_pq(remark_product_claim(n, k, params)).poly,),
                ("C(n,k) p^((n-k)(mt+r-1)) q^(kr+m C(k,2))",),
            ))
            cases.append(VerificationReport(
                "remark-cases", where, lhs,
                (reduce_mod_pq(remark_cases_claim(n, k, params)).poly,),
                ("q^(nr+m C(n,2)) if n=k else 0",),
            ))
    return product + cases


def residue_triangle(params: WhitneyParams, n_max: int, form: Form | str = Form.SECOND) -> list[list[Residue | None]]:
    """Residues of the chosen form's triangle; ``None`` where the entry is not a polynomial."""
    form = Form(form)
    rows = []
    for n in range(n_max + 1):
        row = []
        for k in range(n + 1):
            value = w2_second(params, n, k).mono_mul(0, form_shift(params, k, form))
            row.append(reduce_mod_pq(value) if value.is_polynomial() else None)
        rows.append(row)
    return rows


def residue_triangle_text(params: WhitneyParams, n_max: int, form: Form | str = Form.SECOND) -> str:
    lines = [f"residues mod pq, form={Form(form).value} m={params.m} r={params.r} t={params.t}"]
    for row in residue_triangle(params, n_max, form):
        lines.append("    ".join("n/a" if res is None else str(res) for res in row))
    return "\n".join(lines) + "\n"
