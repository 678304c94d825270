"""Truncated power series in x with Laurent polynomial coefficients.

A series is a list ``[c_0, c_1, ..., c_order]``; everything past ``order``
is discarded.
"""
from __future__ import annotations

from .laurent import LaurentPoly

Series = list[LaurentPoly]


def geometric(c: LaurentPoly, order: int) -> Series:
    """Expansion of ``1 / (1 - c x)`` up to ``x^order``."""
    out = [LaurentPoly.one()]
    for _ in range(order):
        out.append(out[-1] * c)
    return out


def series_mul(f: Series, g: Series, order: int) -> Series:
    out = [LaurentPoly.zero() for _ in range(order + 1)]
    for i, a in enumerate(f[: order + 1]):
        if a.is_zero():
            continue
        for j, b in enumerate(g[: order + 1 - i]):
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return out


def product_of_geometrics(ratios: list[LaurentPoly], order: int) -> Series:
    """Expansion of ``1 / prod_j (1 - ratios[j] x)`` up to ``x^order``."""
    out: Series = [LaurentPoly.one()] + [LaurentPoly.zero()] * order
    for c in ratios:
        out = series_mul(out, geometric(c, order), order)
    return out
