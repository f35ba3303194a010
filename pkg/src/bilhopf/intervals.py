"""Certified complex embeddings of cyclotomic numbers.

zeta_m is sent to exp(2*pi*i/m) and the image is enclosed in a rectangle
whose corners are dyadic rationals. All rounding is outward, so every
returned interval is guaranteed to contain the exact value; signs of
nonzero real values are decided by doubling the precision until zero is
excluded, which terminates because zero is excluded symbolically first.

pi comes from Machin's formula with alternating-series truncation bounds;
cos and sin come from Taylor series after reducing the angle to [-pi, pi],
with the Lagrange remainder added as explicit interval slack.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycloNumber


def _round_down(x: Fraction, prec: int) -> Fraction:
    scaled = x * (1 << prec)
    return Fraction(math.floor(scaled), 1 << prec)


def _round_up(x: Fraction, prec: int) -> Fraction:
    scaled = x * (1 << prec)
    return Fraction(math.ceil(scaled), 1 << prec)


class DyadicInterval:
    """Closed interval [lo, hi] with dyadic rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Fraction, hi: Fraction):
        if lo > hi:
            raise ValueError("empty interval")
        self.lo = lo
        self.hi = hi

    @classmethod
    def exact(cls, value, prec: int | None = None) -> DyadicInterval:
        v = Fraction(value)
        if prec is None or v.denominator & (v.denominator - 1) == 0:
            return cls(v, v)
        return cls(_round_down(v, prec), _round_up(v, prec))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def rounded(self, prec: int) -> DyadicInterval:
        return DyadicInterval(_round_down(self.lo, prec), _round_up(self.hi, prec))

    def __add__(self, other: DyadicInterval) -> DyadicInterval:
        return DyadicInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: DyadicInterval) -> DyadicInterval:
        return DyadicInterval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> DyadicInterval:
        return DyadicInterval(-self.hi, -self.lo)

    def __mul__(self, other: DyadicInterval) -> DyadicInterval:
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return DyadicInterval(min(products), max(products))

    def scaled(self, factor: Fraction, prec: int) -> DyadicInterval:
        """Multiply by an exact rational, rounding outward at prec bits."""
        if factor >= 0:
            lo, hi = self.lo * factor, self.hi * factor
        else:
            lo, hi = self.hi * factor, self.lo * factor
        return DyadicInterval(_round_down(lo, prec), _round_up(hi, prec))

    def widened(self, slack: Fraction) -> DyadicInterval:
        return DyadicInterval(self.lo - slack, self.hi + slack)

    def contains(self, value) -> bool:
        return self.lo <= Fraction(value) <= self.hi

    def intersects(self, other: DyadicInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def abs_max(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def square_lower(self) -> Fraction:
        """A lower bound for x^2 over the interval."""
        if self.lo <= 0 <= self.hi:
            return Fraction(0)
        m = min(abs(self.lo), abs(self.hi))
        return m * m

    def __repr__(self):
        return f"DyadicInterval({self.lo}, {self.hi})"


class ComplexInterval:
    """A rectangle real + i*imag of dyadic intervals."""

    __slots__ = ("real", "imag")

    def __init__(self, real: DyadicInterval, imag: DyadicInterval):
        self.real = real
        self.imag = imag

    def __add__(self, other: ComplexInterval) -> ComplexInterval:
        return ComplexInterval(self.real + other.real, self.imag + other.imag)

    def __mul__(self, other: ComplexInterval) -> ComplexInterval:
        return ComplexInterval(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
        )

    @property
    def width(self) -> Fraction:
        return max(self.real.width, self.imag.width)

    def intersects(self, other: ComplexInterval) -> bool:
        return self.real.intersects(other.real) and self.imag.intersects(other.imag)

    def abs_square_lower(self) -> Fraction:
        """Lower bound for |z|^2 over the rectangle."""
        return self.real.square_lower() + self.imag.square_lower()

    def midpoint(self) -> complex:
        return complex(self.real.midpoint(), self.imag.midpoint())

    def __repr__(self):
        return f"ComplexInterval({self.real!r}, {self.imag!r})"


@lru_cache(maxsize=None)
def pi_interval(prec: int) -> DyadicInterval:
    """Enclosure of pi: 16*arctan(1/5) - 4*arctan(1/239), each arctan
    bracketed by consecutive partial sums of its alternating series."""

    def arctan_inv(k: int) -> tuple[Fraction, Fraction]:
        total = Fraction(0)
        term_lo = Fraction(0)
        i = 0
        while True:
            term = Fraction((-1) ** i, (2 * i + 1) * k ** (2 * i + 1))
            total += term
            if abs(term) < Fraction(1, 1 << (prec + 8)):
                if term > 0:
                    return total - term, total
                return total, total - term
            i += 1

    a_lo, a_hi = arctan_inv(5)
    b_lo, b_hi = arctan_inv(239)
    lo = 16 * a_lo - 4 * b_hi
    hi = 16 * a_hi - 4 * b_lo
    return DyadicInterval(_round_down(lo, prec), _round_up(hi, prec))


def _taylor_series(theta: DyadicInterval, prec: int, odd: bool) -> DyadicInterval:
    # cos (odd=False) or sin (odd=True) on |theta| <= ~pi; Lagrange
    # remainder of the first omitted term is added as slack.
    theta_sq = (theta * theta).rounded(prec)
    bound = theta.abs_max()
    total = theta.rounded(prec) if odd else DyadicInterval.exact(Fraction(1))
    power = total
    k = 0
    factorial = Fraction(1)
    degree = 1 if odd else 0
    while True:
        k += 1
        power = (power * theta_sq).rounded(prec)
        degree += 2
        factorial *= (degree - 1) * degree
        term = power.scaled(Fraction((-1) ** k, factorial), prec)
        total = total + term
        remainder = bound ** (degree + 2) / (factorial * (degree + 1) * (degree + 2))
        if remainder < Fraction(1, 1 << (prec - 4)):
            return total.widened(_round_up(remainder, prec))


@lru_cache(maxsize=None)
def _unit_root_interval(numer: int, denom: int, prec: int) -> ComplexInterval:
    """Enclosure of exp(2*pi*i*numer/denom)."""
    turn = Fraction(numer % denom, denom)
    if turn > Fraction(1, 2):
        turn -= 1  # reduce the angle into (-pi, pi]
    two_pi = pi_interval(prec).scaled(Fraction(2), prec)
    theta = two_pi.scaled(turn, prec)
    return ComplexInterval(
        _taylor_series(theta, prec, odd=False), _taylor_series(theta, prec, odd=True)
    )


def embed(x: CycloNumber, precision_bits: int = 64) -> ComplexInterval:
    """A rectangle certified to contain the image of x under
    zeta_m -> exp(2*pi*i/m); doubling precision_bits shrinks it."""
    if precision_bits < 8:
        raise ValueError("precision_bits must be at least 8")
    prec = precision_bits + 16
    m = x.conductor
    zero = DyadicInterval.exact(Fraction(0))
    total = ComplexInterval(zero, zero)
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        root = _unit_root_interval(j, m, prec)
        total = total + ComplexInterval(
            root.real.scaled(c, prec), root.imag.scaled(c, prec)
        )
    return total


class Sign(enum.Enum):
    ZERO = "zero"
    POSITIVE_REAL = "positive_real"
    NEGATIVE_REAL = "negative_real"
    NOT_REAL = "not_real"


def certified_sign(x: CycloNumber) -> Sign:
    """Exact sign classification of a cyclotomic number.

    Zero and realness are decided symbolically (x = 0, conj(x) = x); the
    sign of a nonzero real value comes from interval refinement, which
    terminates because the exact value is nonzero.
    """
    if x.is_zero():
        return Sign.ZERO
    if x.conjugate() != x:
        return Sign.NOT_REAL
    prec = 32
    while True:
        box = embed(x, prec)
        if box.real.lo > 0:
            return Sign.POSITIVE_REAL
        if box.real.hi < 0:
            return Sign.NEGATIVE_REAL
        prec *= 2
        if prec > 1 << 20:  # unreachable for exact nonzero input
            raise RuntimeError("sign refinement failed to converge")
