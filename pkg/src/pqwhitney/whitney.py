"""Type 2 (p,q)-analogues of the r-Whitney numbers of the second kind.

The second form ``W*[n,k;t]`` is the primary object.  It obeys

    W*[n+1,k] = W*[n,k-1] + [mk+r] p^{mt-km} W*[n,k],

with ``W*[0,0] = 1`` and ``W*[n,k] = 0`` outside ``0 <= k <= n``.  The first
and third forms are monomial rescalings of it:

    W[n,k]  = q^{kr + m*C(k,2)} W*[n,k]
    W~[n,k] = q^{kr} W*[n,k]
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass

from .basics import binomial, bracket
from .laurent import LaurentPoly
from .series import product_of_geometrics


class Form(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"


@dataclass(frozen=True, order=True)
class WhitneyParams:
    m: int
    r: int
    t: int

    def __post_init__(self):
        for name in ("m", "r", "t"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an int, got {value!r}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")

    def as_dict(self) -> dict[str, int]:
        return {"m": self.m, "r": self.r, "t": self.t}


def weight(params: WhitneyParams, k: int) -> LaurentPoly:
    """``[mk+r]_{p,q} p^{m(t-k)}``, the multiplier of column k."""
    m, r, t = params.m, params.r, params.t
    return bracket(m * k + r).mono_mul(m * (t - k), 0)


def form_shift(params: WhitneyParams, k: int, form: Form | str) -> int:
    """Exponent of q that turns the second form into ``form`` at column k."""
    form = Form(form)
    if form is Form.SECOND:
        return 0
    if form is Form.THIRD:
        return k * params.r
    return k * params.r + params.m * binomial(k, 2)


class _TriangleCache:
    """Second-form rows per params, grown on demand."""

    def __init__(self):
        self._rows: dict[WhitneyParams, list[tuple[LaurentPoly, ...]]] = {}
        self._lock = threading.Lock()

    def rows(self, params: WhitneyParams, n_max: int) -> list[tuple[LaurentPoly, ...]]:
        with self._lock:
            rows = self._rows.setdefault(params, [(LaurentPoly.one(),)])
            if len(rows) <= n_max:
                weights = [weight(params, k) for k in range(n_max + 1)]
                while len(rows) <= n_max:
                    prev = rows[-1]
                    n = len(prev) - 1
                    new = []
                    for k in range(n + 2):
                        value = prev[k - 1] if k >= 1 else LaurentPoly.zero()
                        if k <= n:
                            value = value + weights[k] * prev[k]
                        new.append(value)
                    rows.append(tuple(new))
            return rows[: n_max + 1]

    def clear(self) -> None:
        with self._lock:
            self._rows.clear()


_cache = _TriangleCache()


def clear_cache() -> None:
    _cache.clear()


def w2_second(params: WhitneyParams, n: int, k: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return LaurentPoly.zero()
    return _cache.rows(params, n)[n][k]


def w2_first(params: WhitneyParams, n: int, k: int) -> LaurentPoly:
    return w2_second(params, n, k).mono_mul(0, form_shift(params, k, Form.FIRST))


def w2_third(params: WhitneyParams, n: int, k: int) -> LaurentPoly:
    return w2_second(params, n, k).mono_mul(0, form_shift(params, k, Form.THIRD))


def whitney(params: WhitneyParams, n: int, k: int, form: Form | str = Form.SECOND) -> LaurentPoly:
    return w2_second(params, n, k).mono_mul(0, form_shift(params, k, form))


@dataclass(frozen=True)
class Triangle:
    params: WhitneyParams
    form: Form
    rows: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> LaurentPoly:
        n, k = nk
        if 0 <= k <= n <= self.n_max:
            return self.rows[n][k]
        if n > self.n_max or n < 0:
            raise IndexError(f"row {n} outside 0..{self.n_max}")
        return LaurentPoly.zero()

    def column(self, k: int) -> list[LaurentPoly]:
        return [row[k] for row in self.rows[k:]]

    def row_sums(self) -> list[LaurentPoly]:
        out = []
        for row in self.rows:
            total = LaurentPoly.zero()
            for entry in row:
                total = total + entry
            out.append(total)
        return out

    def to_json(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "form": self.form.value,
            "n_max": self.n_max,
            "rows": [[entry.canonical() for entry in row] for row in self.rows],
        }

    def to_text(self) -> str:
        header = f"W[n,k;t] form={self.form.value} m={self.params.m} r={self.params.r} t={self.params.t}"
        lines = [header, "n/k | " + " | ".join(str(k) for k in range(self.n_max + 1))]
        for n, row in enumerate(self.rows):
            lines.append(f"{n} | " + " | ".join(str(entry) for entry in row))
        return "\n".join(lines) + "\n"


def triangle(params: WhitneyParams, n_max: int, form: Form | str = Form.SECOND) -> Triangle:
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    form = Form(form)
    rows = _cache.rows(params, n_max)
    if form is not Form.SECOND:
        shifts = [form_shift(params, k, form) for k in range(n_max + 1)]
        rows = [tuple(e.mono_mul(0, shifts[k]) for k, e in enumerate(row)) for row in rows]
    return Triangle(params, form, tuple(rows))


def vertical_rhs(params: WhitneyParams, n: int, k: int) -> LaurentPoly:
    """Column-sum expression for ``W*[n+1,k+1]`` in terms of column k."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    step = weight(params, k + 1)
    total = LaurentPoly.zero()
    factor = LaurentPoly.one()
    for j in range(n, k - 1, -1):
        total = total + factor * w2_second(params, j, k)
        factor = factor * step
    return total


def gf_ratios(params: WhitneyParams, k: int) -> list[LaurentPoly]:
    return [weight(params, j) for j in range(k + 1)]


def gf_series(params: WhitneyParams, k: int, order: int) -> list[LaurentPoly]:
    """Coefficients of x^0..x^order in ``1 / prod_{j<=k} (1 - x p^{m(t-j)} [mj+r])``.

    The coefficient of ``x^(n-k)`` should be ``W*[n,k]``.
    """
    if k < 0 or order < 0:
        raise ValueError("k and order must be >= 0")
    return product_of_geometrics(gf_ratios(params, k), order)


def classical_whitney(m: int, r: int, n_max: int) -> list[list[int]]:
    """Integer r-Whitney triangle from W(n,k) = W(n-1,k-1) + (km+r) W(n-1,k)."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1] + [0]
        rows.append([(prev[k - 1] if k else 0) + (k * m + r) * prev[k] for k in range(n + 1)])
    return rows
