"""The quadratic parameter ring Q(zeta_m)[x] / (x^2 + t*x + 1).

The class of the root q of x^2 + t*x + 1 decides cosemisimplicity. The
test runs in the quotient ring itself, which is sound whether the
polynomial is irreducible or splits: the two roots have product 1, so one
is a root of unity of order N exactly when the other is, and x^N = 1 in
the quotient ring exactly when both roots satisfy it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloNumber, euler_phi


@dataclass(frozen=True)
class QClass:
    """Verdict on the root q of x^2 + t*x + 1.

    kind is one of "one", "minus_one", "root_of_unity" (with the order
    attached), "not_root_of_unity".
    """

    kind: str
    order: int | None = None

    @classmethod
    def one(cls):
        return cls("one", 1)

    @classmethod
    def minus_one(cls):
        return cls("minus_one", 2)

    @classmethod
    def root_of_unity(cls, order: int):
        return cls("root_of_unity", order)

    @classmethod
    def not_root_of_unity(cls):
        return cls("not_root_of_unity")

    @property
    def cosemisimple(self) -> bool:
        """Whether this q-class makes the surrounding Hopf algebra cosemisimple
        (q = 1, q = -1, or q of infinite multiplicative order)."""
        return self.kind in ("one", "minus_one", "not_root_of_unity")

    def describe(self) -> str:
        if self.kind == "one":
            return "q = 1"
        if self.kind == "minus_one":
            return "q = -1"
        if self.kind == "root_of_unity":
            return f"q is a primitive root of unity of order {self.order}"
        return "q is not a root of unity"


class QuadRingElement:
    """c0 + c1*x in Q(zeta_m)[x] / (x^2 + t*x + 1); multiplication reduces
    x^2 to -t*x - 1."""

    __slots__ = ("trace_param", "c0", "c1")

    def __init__(self, trace_param: CycloNumber, c0, c1):
        t = _as_cyclo(trace_param)
        c0 = _as_cyclo(c0)
        c1 = _as_cyclo(c1)
        conductor = math.lcm(t.conductor, c0.conductor, c1.conductor)
        self.trace_param = t.promoted(conductor)
        self.c0 = c0.promoted(conductor)
        self.c1 = c1.promoted(conductor)

    @classmethod
    def root(cls, trace_param) -> QuadRingElement:
        """The image of x, i.e. the parameter q itself."""
        t = _as_cyclo(trace_param)
        m = t.conductor
        return cls(t, CycloNumber.zero(m), CycloNumber.one(m))

    @classmethod
    def one(cls, trace_param) -> QuadRingElement:
        t = _as_cyclo(trace_param)
        m = t.conductor
        return cls(t, CycloNumber.one(m), CycloNumber.zero(m))

    def __mul__(self, other: QuadRingElement) -> QuadRingElement:
        if self.trace_param != other.trace_param:
            raise ValueError("elements live over different trace parameters")
        t = self.trace_param
        a0, a1, b0, b1 = self.c0, self.c1, other.c0, other.c1
        cross = a1 * b1
        return QuadRingElement(t, a0 * b0 - cross, a0 * b1 + a1 * b0 - t * cross)

    def __pow__(self, exponent: int) -> QuadRingElement:
        if exponent < 0:
            raise ValueError("negative powers are not needed in this ring")
        result = QuadRingElement.one(self.trace_param)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, QuadRingElement):
            return NotImplemented
        return (
            self.trace_param == other.trace_param
            and self.c0 == other.c0
            and self.c1 == other.c1
        )

    __hash__ = None

    def is_one(self) -> bool:
        return self.c1.is_zero() and self.c0 == 1

    def __repr__(self):
        return f"QuadRingElement(t={self.trace_param}, {self.c0} + ({self.c1})*x)"


def root_of_unity_candidates(degree_bound: int) -> list[int]:
    """All N with euler_phi(N) <= degree_bound.

    Finite because phi(N) >= sqrt(N/2); the scan bound 2*(degree_bound+1)^2
    is crude but safe.
    """
    if degree_bound < 1:
        raise ValueError("degree bound must be >= 1")
    limit = 2 * (degree_bound + 1) ** 2
    return [n for n in range(1, limit + 1) if euler_phi(n) <= degree_bound]


def q_class(trace: CycloNumber | int | Fraction) -> QClass:
    """Classify the root q of q^2 + trace*q + 1 = 0.

    trace = -2 and trace = 2 force q = 1 and q = -1 (double roots).
    Otherwise q generates at most a quadratic extension of Q(zeta_m), so a
    root of unity q must have phi(order) <= 2*phi(m); candidate orders are
    enumerated and tested exactly in the quotient ring.
    """
    t = _as_cyclo(trace)
    if t == -2:
        return QClass.one()
    if t == 2:
        return QClass.minus_one()
    q = QuadRingElement.root(t)
    for n in root_of_unity_candidates(2 * euler_phi(t.conductor)):
        if (q**n).is_one():
            return QClass.root_of_unity(n)
    return QClass.not_root_of_unity()


def _as_cyclo(value) -> CycloNumber:
    if isinstance(value, CycloNumber):
        return value
    return CycloNumber.from_rational(Fraction(value))
