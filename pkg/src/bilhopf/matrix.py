"""Exact dense linear algebra over CycloNumber.

Everything here is square and small (the analyzer corpus tops out around
size 18), so the implementation favours exactness and clarity: Bareiss
fraction-free elimination for determinants and inverses, and a projective
order decision that is exact for diagonal matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import CycloNumber, root_of_unity_order
from .errors import SingularMatrixError


def _as_cyclo(value) -> CycloNumber:
    if isinstance(value, CycloNumber):
        return value
    return CycloNumber.from_rational(value)


class ExactMatrix:
    """Immutable square matrix over Q(zeta_m), entries normalized to a
    common conductor on construction."""

    __slots__ = ("n", "rows", "conductor")

    def __init__(self, rows):
        rows = [[_as_cyclo(e) for e in row] for row in rows]
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and nonempty")
        conductor = 1
        for row in rows:
            for e in row:
                conductor = math.lcm(conductor, e.conductor)
        self.n = n
        self.rows = tuple(
            tuple(e.promoted(conductor) for e in row) for row in rows
        )
        self.conductor = conductor

    # --- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int, conductor: int = 1) -> ExactMatrix:
        one = CycloNumber.one(conductor)
        zero = CycloNumber.zero(conductor)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def antidiag(cls, values) -> ExactMatrix:
        """Anti-diagonal matrix with values[-1] at the top right, read
        bottom-left to top-right."""
        values = [_as_cyclo(v) for v in values]
        if any(v.is_zero() for v in values):
            raise SingularMatrixError("anti-diagonal entries must be nonzero")
        n = len(values)
        zero = CycloNumber.zero()
        rows = [[zero] * n for _ in range(n)]
        for i in range(n):
            rows[i][n - 1 - i] = values[n - 1 - i]
        return cls(rows)

    @classmethod
    def diag(cls, values) -> ExactMatrix:
        values = [_as_cyclo(v) for v in values]
        if any(v.is_zero() for v in values):
            raise SingularMatrixError("diagonal entries must be nonzero")
        n = len(values)
        zero = CycloNumber.zero()
        rows = [[zero] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = values[i]
        return cls(rows)

    # --- basic operations -------------------------------------------------

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        return all(
            self.rows[i][j] == other.rows[i][j]
            for i in range(self.n)
            for j in range(self.n)
        )

    __hash__ = None

    def __mul__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        return ExactMatrix(
            [
                [
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(n)),
                        CycloNumber.zero(),
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ]
        )

    def scaled(self, factor) -> ExactMatrix:
        c = _as_cyclo(factor)
        return ExactMatrix([[e * c for e in row] for row in self.rows])

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            [[self.rows[j][i] for j in range(self.n)] for i in range(self.n)]
        )

    def trace(self) -> CycloNumber:
        return sum(
            (self.rows[i][i] for i in range(self.n)),
            CycloNumber.zero(self.conductor),
        )

    def is_diagonal(self) -> bool:
        return all(
            self.rows[i][j].is_zero()
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )

    def is_scalar(self):
        """The scalar c with self = c*I, or None."""
        if not self.is_diagonal():
            return None
        c = self.rows[0][0]
        if all(self.rows[i][i] == c for i in range(1, self.n)):
            return c
        return None

    # --- elimination ------------------------------------------------------

    def determinant(self) -> CycloNumber:
        """Fraction-free Bareiss elimination; all divisions are exact."""
        n = self.n
        m = [list(row) for row in self.rows]
        sign = 1
        prev = CycloNumber.one(self.conductor)
        for k in range(n - 1):
            pivot_row = next(
                (r for r in range(k, n) if not m[r][k].is_zero()), None
            )
            if pivot_row is None:
                return CycloNumber.zero(self.conductor)
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
                m[i][k] = CycloNumber.zero(self.conductor)
            prev = m[k][k]
        det = m[n - 1][n - 1]
        return -det if sign < 0 else det

    def inverse(self) -> ExactMatrix:
        """Bareiss forward elimination on [A | I], then back substitution."""
        n = self.n
        zero = CycloNumber.zero(self.conductor)
        one = CycloNumber.one(self.conductor)
        m = [
            list(row) + [one if i == j else zero for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        prev = one
        for k in range(n):
            pivot_row = next(
                (r for r in range(k, n) if not m[r][k].is_zero()), None
            )
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular")
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
            for i in range(k + 1, n):
                for j in range(k + 1, 2 * n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
                m[i][k] = zero
            prev = m[k][k]
        inv_rows = [[zero] * n for _ in range(n)]
        for col in range(n):
            for i in range(n - 1, -1, -1):
                acc = m[i][n + col]
                for j in range(i + 1, n):
                    acc = acc - m[i][j] * inv_rows[j][col]
                inv_rows[i][col] = acc / m[i][i]
        return ExactMatrix(inv_rows)

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(e) for e in row) for row in self.rows
        )
        return f"ExactMatrix[{body}]"


def companion(e: ExactMatrix) -> ExactMatrix:
    """F = E^(-1) * transpose(E), the matrix conjugating the squared
    antipode; for an anti-diagonal E it is diagonal."""
    return e.inverse() * e.transpose()


@dataclass(frozen=True)
class ProjOrderVerdict:
    """Outcome of the projective order search for F.

    kind "finite": F^order = scalar * I exactly, with order minimal;
    kind "infinite": witness_ratio is a diagonal ratio certified not to be
    a root of unity; kind "unknown": no scalar power up to bound.
    """

    kind: str
    order: int | None = None
    scalar: CycloNumber | None = None
    witness_ratio: CycloNumber | None = None
    witness: str | None = None
    bound: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"


def projective_order(f: ExactMatrix, max_k: int = 256) -> ProjOrderVerdict:
    """Least k with F^k scalar.

    Diagonal matrices are decided exactly: k is the lcm of the orders of
    the diagonal ratios, which all lie in Q(zeta_m); one ratio of infinite
    order certifies that no scalar power exists. Non-diagonal input falls
    back to testing powers up to max_k.
    """
    if f.determinant().is_zero():
        raise SingularMatrixError("projective order needs an invertible matrix")
    if f.is_diagonal():
        first = f.rows[0][0]
        order = 1
        for i in range(1, f.n):
            ratio = f.rows[i][i] / first
            ratio_order = root_of_unity_order(ratio)
            if ratio_order is None:
                return ProjOrderVerdict(
                    kind="infinite",
                    witness_ratio=ratio,
                    witness=(
                        f"F[{i + 1}][{i + 1}]/F[1][1] = {ratio} "
                        "is not a root of unity"
                    ),
                )
            order = math.lcm(order, ratio_order)
        return ProjOrderVerdict(kind="finite", order=order, scalar=first**order)
    power = f
    for k in range(1, max_k + 1):
        scalar = power.is_scalar()
        if scalar is not None:
            return ProjOrderVerdict(kind="finite", order=k, scalar=scalar)
        power = power * f
    return ProjOrderVerdict(kind="unknown", bound=max_k)
