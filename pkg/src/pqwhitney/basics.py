"""(p,q)-brackets and the products built from them."""
from __future__ import annotations

import math

from .laurent import LaurentPoly, Monomial


class NegativeArgument(ValueError):
    pass


def bracket(t: int) -> LaurentPoly:
    """``[t]_{p,q} = p^{t-1} + p^{t-2} q + ... + q^{t-1}``; ``[0] = 0``.

    >>> str(bracket(3))
    'p^2 + p*q + q^2'
    """
    if t < 0:
        raise NegativeArgument(f"bracket argument must be >= 0, got {t}")
    return LaurentPoly({(t - 1 - i, i): 1 for i in range(t)})


def bracket_base(k: int, base: Monomial) -> LaurentPoly:
    """``1 + x + ... + x^{k-1}`` for the monomial ``x = p^a q^b``.

    With ``base = (-1, 1)`` this is the bracket in ``q/p``.
    """
    if k < 0:
        raise NegativeArgument(f"bracket argument must be >= 0, got {k}")
    a, b = base
    terms: dict[Monomial, int] = {}
    for i in range(k):
        key = (i * a, i * b)
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(terms)


def bracket_base_factorial(k: int, base: Monomial) -> LaurentPoly:
    if k < 0:
        raise NegativeArgument(f"factorial argument must be >= 0, got {k}")
    result = LaurentPoly.one()
    for j in range(1, k + 1):
        result = result * bracket_base(j, base)
    return result


def falling_factorial(t: int, m: int, n: int) -> LaurentPoly:
    """``[t|m]^{(n)} = [t][t-m]...[t-(n-1)m]``."""
    if n < 0:
        raise NegativeArgument(f"number of factors must be >= 0, got {n}")
    result = LaurentPoly.one()
    for j in range(n):
        arg = t - j * m
        if arg < 0:
            raise NegativeArgument(f"factor [{t}-{j}*{m}] has negative argument {arg}")
        result = result * bracket(arg)
    return result


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)
