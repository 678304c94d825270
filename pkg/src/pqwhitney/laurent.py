"""Exact arithmetic on bivariate Laurent polynomials in ``p`` and ``q``.

A :class:`LaurentPoly` is an immutable map from exponent pairs ``(a, b)``
(standing for ``p^a q^b``) to nonzero Python integers.  Every operation
returns a value in canonical form, i.e. without zero coefficients, so
structural equality is mathematical equality.

>>> p, q = LaurentPoly.p(), LaurentPoly.q()
>>> ((p + q) * (p - q)).canonical()
'1*p^2*q^0 + -1*p^0*q^2'
>>> str((p + q) ** 2)
'p^2 + 2*p*q + q^2'
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Monomial = tuple[int, int]
Coercible = Union["LaurentPoly", int]


class NotDivisible(ArithmeticError):
    """Raised by :meth:`LaurentPoly.exact_div` when no exact quotient exists."""


class DivisionByZero(ZeroDivisionError):
    pass


class ZeroBase(ArithmeticError):
    """Evaluation at p=0 or q=0 of a term with a negative exponent in that variable."""


def _sort_key(mono: Monomial) -> Monomial:
    # lexicographic on (a, b), descending
    return (-mono[0], -mono[1])


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for (a, b), c in terms.items():
                if not (isinstance(a, int) and isinstance(b, int) and isinstance(c, int)):
                    raise TypeError(f"exponents and coefficients must be int, got {(a, b)}: {c!r}")
                if c:
                    clean[(a, b)] = c
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> LaurentPoly:
        # trusted constructor: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls._raw({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls._raw({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> LaurentPoly:
        return cls({(a, b): c})

    @classmethod
    def p(cls) -> LaurentPoly:
        return cls._raw({(1, 0): 1})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls._raw({(0, 1): 1})

    @classmethod
    def coerce(cls, other: Coercible) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to LaurentPoly")

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order (lexicographic on exponents, descending)."""
        return sorted(self._terms.items(), key=lambda item: _sort_key(item[0]))

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        """True iff no exponent is negative.  The zero polynomial qualifies."""
        return all(a >= 0 and b >= 0 for a, b in self._terms)

    def min_exponents(self) -> Monomial:
        if not self._terms:
            return (0, 0)
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms)
        return mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and (0, 0) in self._terms:
                # consistent with == on plain ints
                self._hash = hash(self._terms[(0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Coercible) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for mono, c in small.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Coercible) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly._raw({mono: c * other for mono, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._terms) == 1:
            ((a, b), c), = other._terms.items()
            return LaurentPoly._raw({(x + a, y + b): d * c for (x, y), d in self._terms.items()})
        out: dict[Monomial, int] = {}
        get = out.get
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = get(key, 0) + c1 * c2
        return LaurentPoly._raw({mono: c for mono, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if not isinstance(e, int):
            raise TypeError(f"exponent must be an int, got {e!r}")
        if e < 0:
            # only the units +-p^a q^b can be inverted
            if len(self._terms) == 1:
                ((a, b), c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._raw({(-a, -b): c}) ** -e
            raise ValueError(f"negative power of a non-unit: {self}")
        result = LaurentPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mono_mul(self, a: int, b: int) -> LaurentPoly:
        """Multiply by ``p^a q^b``."""
        return LaurentPoly._raw({(x + a, y + b): c for (x, y), c in self._terms.items()})

    def exact_div(self, divisor: Coercible) -> LaurentPoly:
        """Exact quotient in the Laurent ring.

        Both sides are normalised by their minimal monomial, the remaining
        polynomials are divided with the lex term order, and the monomial
        quotient is reapplied.  Raises :class:`NotDivisible` when a nonzero
        remainder would be left.
        """
        divisor = LaurentPoly.coerce(divisor)
        if divisor.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return self
        if divisor.is_monomial():
            ((a, b), c), = divisor._terms.items()
            out = {}
            for (x, y), d in self._terms.items():
                quot, rem = divmod(d, c)
                if rem:
                    raise NotDivisible(f"coefficient {d} not divisible by {c}")
                out[(x - a, y - b)] = quot
            return LaurentPoly._raw(out)

        xa, xb = self.min_exponents()
        ya, yb = divisor.min_exponents()
        rem = dict(self.mono_mul(-xa, -xb)._terms)
        den = divisor.mono_mul(-ya, -yb)
        (la, lb), lc = den.leading_term()
        den_terms = list(den._terms.items())
        quotient: dict[Monomial, int] = {}
        while rem:
            (ra, rb) = mono = max(rem)
            rc = rem[mono]
            if ra < la or rb < lb:
                raise NotDivisible(f"{self} is not divisible by {divisor}")
            qc, r = divmod(rc, lc)
            if r:
                raise NotDivisible(f"{self} is not divisible by {divisor}")
            da, db = ra - la, rb - lb
            quotient[(da, db)] = qc
            for (a, b), c in den_terms:
                key = (a + da, b + db)
                v = rem.get(key, 0) - qc * c
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return LaurentPoly._raw(quotient).mono_mul(xa - ya, xb - yb)

    def eval_int(self, pv: int, qv: int) -> Fraction:
        """Exact value at ``(p, q) = (pv, qv)``."""
        if not self._terms:
            return Fraction(0)
        amin, bmin = self.min_exponents()
        if (pv == 0 and amin < 0) or (qv == 0 and bmin < 0):
            raise ZeroBase(f"{self} has a negative exponent in a variable set to 0")
        if pv == 1 and qv == 1:
            return Fraction(sum(self._terms.values()))
        # clear denominators: scale by p^-amin q^-bmin, then divide once
        sa, sb = -min(amin, 0), -min(bmin, 0)
        num = sum(c * pv ** (a + sa) * qv ** (b + sb) for (a, b), c in self._terms.items())
        return Fraction(num, pv ** sa * qv ** sb)

    # -- serialisation ------------------------------------------------------

    def canonical(self) -> str:
        """Bit-exact text form, e.g. ``'1*p^2*q^0 + -3*p^0*q^-1'``; zero is ``'0'``."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*p^{a}*q^{b}" for (a, b), c in self.terms())

    @classmethod
    def from_canonical(cls, text: str) -> LaurentPoly:
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[Monomial, int] = {}
        for chunk in text.split(" + "):
            try:
                c, pa, qb = chunk.split("*")
                if not (pa.startswith("p^") and qb.startswith("q^")):
                    raise ValueError
                mono = (int(pa[2:]), int(qb[2:]))
                coeff = int(c)
            except ValueError:
                raise ValueError(f"malformed term {chunk!r}") from None
            if mono in terms or coeff == 0:
                raise ValueError(f"non-canonical term {chunk!r}")
            terms[mono] = coeff
        return cls._raw(terms)

    def to_json(self) -> list[dict]:
        return [{"a": a, "b": b, "c": str(c)} for (a, b), c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> LaurentPoly:
        terms: dict[Monomial, int] = {}
        for item in data:
            mono = (int(item["a"]), int(item["b"]))
            if mono in terms:
                raise ValueError(f"duplicate monomial {mono}")
            terms[mono] = int(item["c"])
        return cls(terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self.terms():
            factors = []
            for var, e in (("p", a), ("q", b)):
                if e == 1:
                    factors.append(var)
                elif e:
                    factors.append(f"{var}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def __reduce__(self):
        return (LaurentPoly, (self._terms,))


P = LaurentPoly.p()
Q = LaurentPoly.q()
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


def add(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    return x + y


def mul(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    return x * y


def power(x: LaurentPoly, e: int) -> LaurentPoly:
    return x ** e


def mono_mul(x: LaurentPoly, mono: Monomial) -> LaurentPoly:
    return x.mono_mul(*mono)


def exact_div(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    return x.exact_div(y)


def eval_int(x: LaurentPoly, pv: int, qv: int) -> Fraction:
    return x.eval_int(pv, qv)


def is_polynomial(x: LaurentPoly) -> bool:
    return x.is_polynomial()
