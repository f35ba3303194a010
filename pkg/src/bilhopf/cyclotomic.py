"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored on the power basis 1, zeta, ..., zeta^(phi(m)-1) with
rational coefficients, reduced modulo the m-th cyclotomic polynomial.
Mixed-conductor arithmetic promotes both operands into Q(zeta_lcm) via
zeta_a -> zeta_lcm^(lcm/a), so every operation is total on nonzero input.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


def prime_factors(m: int) -> dict[int, int]:
    """Factor m > 0 by trial division; returns {prime: exponent}."""
    factors: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("euler_phi requires m >= 1")
    phi = 1
    for p, e in prime_factors(m).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials with monic divisor.
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + len(den) - 1]
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("polynomial division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the m-th cyclotomic polynomial.

    Computed by exact division of x^m - 1 by the cyclotomic polynomials of
    all proper divisors of m; monic of degree phi(m).
    """
    if m < 1:
        raise ValueError("cyclotomic_polynomial requires m >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    # Row k - phi(m) expresses zeta^k on the power basis, for
    # phi(m) <= k <= max(m - 1, 2*phi(m) - 2); entries are integers
    # because the cyclotomic polynomial is monic over Z.
    phi = euler_phi(m)
    kmax = max(m - 1, 2 * phi - 2)
    top = cyclotomic_polynomial(m)[:phi]
    rows = []
    row = [-c for c in top]
    for _ in range(phi, kmax + 1):
        rows.append(tuple(row))
        lead = row[phi - 1]
        row = [0] + row[: phi - 1]
        if lead:
            for j in range(phi):
                row[j] -= lead * top[j]
    return tuple(rows)


def _reduce_dense(m: int, dense: list[Fraction]) -> tuple[Fraction, ...]:
    phi = euler_phi(m)
    out = list(dense[:phi]) + [Fraction(0)] * max(0, phi - len(dense))
    if len(dense) > phi:
        rows = _reduction_rows(m)
        for k in range(phi, len(dense)):
            c = dense[k]
            if c:
                row = rows[k - phi]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
    return tuple(out)


class CycloNumber:
    """An exact element of Q(zeta_m), zeta_m = primitive m-th root of unity.

    Instances are immutable; arithmetic returns new values reduced to the
    power basis. Hashing is disabled because equal values may live at
    different conductors (1 in Q(zeta_3) equals 1 in Q).
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        dense = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce_dense(conductor, dense))

    def __setattr__(self, name, value):
        raise AttributeError("CycloNumber is immutable")

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, conductor: int = 1) -> CycloNumber:
        return cls(conductor, [])

    @classmethod
    def one(cls, conductor: int = 1) -> CycloNumber:
        return cls(conductor, [Fraction(1)])

    @classmethod
    def from_rational(cls, value, conductor: int = 1) -> CycloNumber:
        return cls(conductor, [Fraction(value)])

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> CycloNumber:
        """zeta_m^power, with the exponent taken modulo m."""
        return cls.from_terms(conductor, {power: Fraction(1)})

    @classmethod
    def from_terms(cls, conductor: int, terms: dict[int, Fraction]) -> CycloNumber:
        """Build sum_j c_j zeta^j from arbitrary integer exponents."""
        dense = [Fraction(0)] * conductor
        for exp, c in terms.items():
            dense[exp % conductor] += Fraction(c)
        return cls(conductor, dense)

    # --- conductor handling -----------------------------------------------

    def promoted(self, conductor: int) -> CycloNumber:
        """Re-express the value in Q(zeta_conductor); conductor must be a multiple."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError("can only promote to a multiple of the conductor")
        step = conductor // self.conductor
        return CycloNumber.from_terms(
            conductor, {j * step: c for j, c in enumerate(self.coeffs) if c}
        )

    def _common(self, other: CycloNumber) -> tuple[CycloNumber, CycloNumber]:
        if self.conductor == other.conductor:
            return self, other
        lcm = math.lcm(self.conductor, other.conductor)
        return self.promoted(lcm), other.promoted(lcm)

    @staticmethod
    def _coerce(value, conductor: int):
        if isinstance(value, CycloNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return CycloNumber.from_rational(value, conductor)
        return None

    # --- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_real(self) -> bool:
        return self.conjugate() == self

    def __bool__(self):
        return not self.is_zero()

    # --- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return CycloNumber(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        if b.is_rational():
            q = b.coeffs[0]
            return CycloNumber(a.conductor, [c * q for c in a.coeffs])
        if a.is_rational():
            q = a.coeffs[0]
            return CycloNumber(a.conductor, [c * q for c in b.coeffs])
        n = len(a.coeffs)
        conv = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        return CycloNumber(a.conductor, conv)

    __rmul__ = __mul__

    def inv(self) -> CycloNumber:
        """Multiplicative inverse via the extended Euclidean algorithm
        against the (irreducible) cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero in Q(zeta_m)")
        if self.is_rational():
            return CycloNumber.from_rational(1 / self.coeffs[0], self.conductor)
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = modulus, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                break
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1))
        c = r1[0]  # nonzero constant gcd: Phi_m is irreducible over Q
        return CycloNumber(self.conductor, [x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = CycloNumber.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> CycloNumber:
        """Complex conjugation, i.e. the field automorphism zeta -> zeta^(-1)."""
        m = self.conductor
        return CycloNumber.from_terms(
            m, {(m - j) % m: c for j, c in enumerate(self.coeffs) if c}
        )

    # --- comparison and display --------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # see class docstring

    def __str__(self):
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            if j == 0:
                body = _format_rational(abs(c))
            else:
                z = "z" if j == 1 else f"z^{j}"
                body = z if abs(c) == 1 else f"{_format_rational(abs(c))}*{z}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"CycloNumber({self.conductor}, '{self}')"


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dn = len(den)
    if len(num) < dn:
        return [Fraction(0)], num
    quot = [Fraction(0)] * (len(num) - dn + 1)
    lead = den[-1]
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dn - 1] / lead
        quot[i] = c
        if c:
            for j in range(dn):
                num[i + j] -= c * den[j]
    return quot, num[: dn - 1]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def root_of_unity_order(x: CycloNumber):
    """Multiplicative order of x if it is a root of unity, else None.

    The torsion units of Q(zeta_m) are exactly the lcm(2, m)-th roots of
    unity, so x^lcm(2, m) = 1 is decisive; the minimal order is then read
    off by stripping prime factors.
    """
    if x.is_zero():
        raise ZeroDivisionError("zero is not a unit")
    bound = math.lcm(2, x.conductor)
    if x**bound != 1:
        return None
    order = bound
    for p in prime_factors(bound):
        while order % p == 0 and x ** (order // p) == 1:
            order //= p
    return order
