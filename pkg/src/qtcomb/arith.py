"""Exact rational scalars and finite q-Pochhammer products.

Every value in the package is a :class:`fractions.Fraction`.  Products with
many factors go through :class:`Product`, which multiplies numerators and
denominators as plain integers and normalizes once at the end.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


class DenominatorVanishes(ZeroDivisionError):
    """A factor in a denominator is zero at the evaluation point.

    ``q_exp`` and ``t_exp`` identify the offending factor
    ``1 - c q^q_exp t^t_exp`` when it has that shape.
    """

    def __init__(self, message="denominator vanishes", q_exp=None, t_exp=None,
                 coefficient=None):
        super().__init__(message)
        self.q_exp = q_exp
        self.t_exp = t_exp
        self.coefficient = coefficient

    @property
    def signature(self):
        return (self.q_exp, self.t_exp)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def ipow(x, k: int) -> Fraction:
    x = as_rational(x)
    if k < 0 and x == 0:
        raise DenominatorVanishes("zero raised to a negative power")
    return x ** k


def qpoch(a, q, m: int) -> Fraction:
    """(a; q)_m for a nonnegative integer m."""
    if m < 0:
        raise ValueError("qpoch subscript must be nonnegative")
    a = as_rational(a)
    q = as_rational(q)
    result = Fraction(1)
    term = a
    for _ in range(m):
        result *= 1 - term
        term *= q
    return result


@lru_cache(maxsize=1 << 16)
def _mono(q: Fraction, t: Fraction, qe: int, te: int):
    x = q ** qe * t ** te
    return x.numerator, x.denominator


@dataclass(frozen=True)
class QTPoint:
    q: Fraction
    t: Fraction

    def __post_init__(self):
        q = as_rational(self.q)
        t = as_rational(self.t)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "t", t)
        if q == 0 or t == 0:
            raise ValueError("q and t must be nonzero")
        if q == 1 or t == 1:
            raise ValueError("q and t must differ from 1")

    @classmethod
    def parse(cls, q: str, t: str) -> QTPoint:
        return cls(parse_rational(q), parse_rational(t))

    def reciprocal(self) -> QTPoint:
        return QTPoint(1 / self.q, 1 / self.t)

    def mono(self, qe: int, te: int) -> Fraction:
        """q^qe t^te."""
        n, d = _mono(self.q, self.t, qe, te)
        return Fraction(n, d)

    def mono_parts(self, qe: int, te: int):
        return _mono(self.q, self.t, qe, te)

    def __str__(self):
        return f"(q={format_rational(self.q)}, t={format_rational(self.t)})"


def qt_poch(a, pt: QTPoint, lam, n: int | None = None) -> Fraction:
    """(a; q, t)_lam = prod_i (a t^{1-i}; q)_{lam_i}."""
    parts = tuple(lam)
    if n is not None and len([p for p in parts if p]) > n:
        raise ValueError("partition has more than n parts")
    a = as_rational(a)
    prod = Product(pt)
    for i, part in enumerate(parts, start=1):
        prod.mul_poch(a, 0, 1 - i, part)
    return prod.value()


class Product:
    """Running product of rationals with a single normalization at the end.

    Factor helpers take ``(c, qe, te)`` describing ``1 - c q^qe t^te`` so a
    vanishing denominator can report which factor failed.
    """

    __slots__ = ("pt", "num", "den")

    def __init__(self, pt: QTPoint | None = None, start=1):
        self.pt = pt
        start = as_rational(start)
        self.num = start.numerator
        self.den = start.denominator

    def mul(self, x) -> Product:
        x = as_rational(x)
        self.num *= x.numerator
        self.den *= x.denominator
        return self

    def div(self, x, q_exp=None, t_exp=None) -> Product:
        x = as_rational(x)
        if x == 0:
            raise DenominatorVanishes("division by zero", q_exp, t_exp)
        self.num *= x.denominator
        self.den *= x.numerator
        return self

    def mul_mono(self, qe: int, te: int, c=1) -> Product:
        """Multiply by c q^qe t^te."""
        n, d = self.pt.mono_parts(qe, te)
        c = as_rational(c)
        if n == 0 or c == 0:
            self.num = 0
            return self
        self.num *= n * c.numerator
        self.den *= d * c.denominator
        return self

    def _factor(self, c, qe, te):
        c = as_rational(c)
        n, d = self.pt.mono_parts(qe, te)
        return c.denominator * d - c.numerator * n, c.denominator * d

    def mul_factor(self, qe: int, te: int, c=1, power: int = 1) -> Product:
        """Multiply by (1 - c q^qe t^te)^power."""
        if power == 0:
            return self
        fn, fd = self._factor(c, qe, te)
        if power < 0:
            if fn == 0:
                raise DenominatorVanishes(
                    f"factor 1 - c*q^{qe}*t^{te} vanishes", qe, te, as_rational(c))
            fn, fd = fd, fn
            power = -power
        self.num *= fn ** power
        self.den *= fd ** power
        return self

    def div_factor(self, qe: int, te: int, c=1, power: int = 1) -> Product:
        return self.mul_factor(qe, te, c, -power)

    def mul_poch(self, c, qe: int, te: int, m: int) -> Product:
        """Multiply by (c q^qe t^te; q)_m."""
        for k in range(m):
            self.mul_factor(qe + k, te, c)
        return self

    def div_poch(self, c, qe: int, te: int, m: int) -> Product:
        for k in range(m):
            self.div_factor(qe + k, te, c)
        return self

    def mul_qt_poch(self, c, qe: int, te: int, parts) -> Product:
        """Multiply by (c q^qe t^te; q, t)_parts."""
        for i, part in enumerate(parts, start=1):
            self.mul_poch(c, qe, te + 1 - i, part)
        return self

    def div_qt_poch(self, c, qe: int, te: int, parts) -> Product:
        for i, part in enumerate(parts, start=1):
            self.div_poch(c, qe, te + 1 - i, part)
        return self

    def value(self) -> Fraction:
        if self.den < 0:
            return Fraction(-self.num, -self.den)
        return Fraction(self.num, self.den)
