"""Degree-truncated membership in the two-sided relation ideal.

The quotient algebra is probed by linear algebra: all products u*r*v of a
relation r by monomials u, v up to a closure degree D are expanded and
row-reduced over columns indexed by monomials in degree-descending order.
With that column order a reduced row whose leading monomial has degree
<= d is supported entirely in degree <= d, so the rows with low-degree
leads span exactly (span of products) intersect (degree <= d), and
low-degree ideal elements created by high-degree cancellations are found
up to the closure degree.

Membership answers are asymmetric by construction: "reduces to zero" is
an exact certificate of ideal membership, while a nonzero remainder only
says no certificate exists below the closure degree.

Internally rows carry integer coefficient vectors over the power basis of
Q(zeta_m) (denominators cleared, content stripped), and elimination is
fraction-free: new_row = b*row - a*pivot. This keeps the inner loop on
machine integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .cyclotomic import CycloNumber, _reduction_rows, euler_phi
from .errors import (
    DegreeExceedsTruncationError,
    TruncationTooLargeError,
    UnsupportedSizeError,
)
from .matrix import ExactMatrix
from .ncpoly import (
    NCPolynomial,
    TensorPolynomial,
    coproduct,
    generator_matrix,
    poly_mat_mul,
    poly_mat_transpose,
    scalar_matrix,
)

DEFAULT_MAX_CELLS = 200_000


def build_relations(e: ExactMatrix) -> list[NCPolynomial]:
    """The 2*n^2 defining relations of the universal Hopf algebra of the
    bilinear form E: entries of inv(E)*t(a)*E*a - I and a*inv(E)*t(a)*E - I.
    """
    n = e.n
    if n < 2:
        raise UnsupportedSizeError("the relation scheme needs size n >= 2")
    e_inv = scalar_matrix(e.inverse(), n)
    e_c = scalar_matrix(e, n)
    a = generator_matrix(n)
    a_t = poly_mat_transpose(a)
    left = poly_mat_mul(poly_mat_mul(poly_mat_mul(e_inv, a_t), e_c), a)
    right = poly_mat_mul(poly_mat_mul(poly_mat_mul(a, e_inv), a_t), e_c)
    one = NCPolynomial.one(n)
    relations = []
    for family in (left, right):
        for i in range(n):
            for j in range(n):
                entry = family[i][j]
                relations.append(entry - one if i == j else entry)
    return relations


# --- integer coefficient vectors over the power basis ----------------------


def _ivec_is_scalar(v):
    return not any(v[1:])


def _ivec_mul(a, b, rows, phi):
    if _ivec_is_scalar(a):
        s = a[0]
        if s == 1:
            return b
        return tuple(s * x for x in b)
    if _ivec_is_scalar(b):
        s = b[0]
        if s == 1:
            return a
        return tuple(s * x for x in a)
    conv = [0] * (2 * phi - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
    out = conv[:phi]
    for k in range(phi, len(conv)):
        c = conv[k]
        if c:
            row = rows[k - phi]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


def _row_content(row):
    g = 0
    for vec in row.values():
        for x in vec:
            if x:
                g = math.gcd(g, x)
                if g == 1:
                    return 1
    return g


def _strip_content(row):
    g = _row_content(row)
    if g > 1:
        for col, vec in row.items():
            row[col] = tuple(x // g for x in vec)
    return row


class _RowReducer:
    """Sparse echelon accumulator keyed by leading column (minimal index)."""

    __slots__ = ("pivots", "rows", "phi")

    def __init__(self, rows, phi):
        self.pivots: dict[int, dict] = {}
        self.rows = rows
        self.phi = phi

    def _eliminate(self, row, lead, pivot):
        a = row.pop(lead)
        b = pivot[lead]
        rows, phi = self.rows, self.phi
        if not _ivec_is_scalar(b) or b[0] != 1:
            for col in row:
                row[col] = _ivec_mul(b, row[col], rows, phi)
        for col, pv in pivot.items():
            if col == lead:
                continue
            delta = _ivec_mul(a, pv, rows, phi)
            cur = row.get(col)
            if cur is None:
                row[col] = tuple(-x for x in delta)
            else:
                new = tuple(x - y for x, y in zip(cur, delta))
                if any(new):
                    row[col] = new
                else:
                    del row[col]
        return _strip_content(row)

    def insert(self, row) -> bool:
        """Reduce row against the pivots; store it if independent."""
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                self.pivots[lead] = _strip_content(row)
                return True
            row = self._eliminate(row, lead, pivot)
        return False

    def remainder(self, row):
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                return row
            row = self._eliminate(row, lead, pivot)
        return row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def cell_count(self) -> int:
        return sum(len(r) for r in self.pivots.values())


def _clear_denominators(pairs):
    # pairs: list of (key, tuple-of-Fraction); returns list of (key, int tuple)
    denom = 1
    for _, coeffs in pairs:
        for c in coeffs:
            denom = math.lcm(denom, c.denominator)
    out = []
    for key, coeffs in pairs:
        vec = tuple(int(c * denom) for c in coeffs)
        if any(vec):
            out.append((key, vec))
    return out


def _poly_int_terms(p: NCPolynomial, conductor: int):
    pairs = []
    for word, coeff in p.terms.items():
        pairs.append((word, coeff.promoted(conductor).coeffs))
    return _clear_denominators(pairs)


def _common_conductor(polys) -> int:
    conductor = 1
    for p in polys:
        for coeff in p.terms.values():
            conductor = math.lcm(conductor, coeff.conductor)
    return conductor


class IdealTruncation:
    """Row-reduced image of all products u*r*v with deg <= closure_degree,
    queryable for membership at degree <= target_degree."""

    def __init__(self, relations, target_degree, closure_degree, reducer,
                 columns, col_of, conductor, cells_used, max_cells,
                 low_degree_rank):
        self.relations = relations
        self.target_degree = target_degree
        self.closure_degree = closure_degree
        self.conductor = conductor
        self.cells_used = cells_used
        self.max_cells = max_cells
        self.low_degree_rank = low_degree_rank
        self._reducer = reducer
        self._columns = columns
        self._col_of = col_of
        self.n = relations[0].n

    @classmethod
    def build(cls, relations, target_degree: int, margin: int = 2,
              max_cells: int = DEFAULT_MAX_CELLS) -> IdealTruncation:
        if target_degree < 0 or margin < 0:
            raise ValueError("degree and margin must be nonnegative")
        if not relations:
            raise ValueError("empty relation list")
        n = relations[0].n
        letters = n * n
        closure = target_degree + margin
        columns: list[tuple] = []
        for deg in range(closure, -1, -1):
            columns.extend(product(range(letters), repeat=deg))
        col_of = {word: idx for idx, word in enumerate(columns)}

        conductor = _common_conductor(relations)
        phi = euler_phi(conductor)
        rows = _reduction_rows(conductor)
        reducer = _RowReducer(rows, phi)
        int_relations = [_poly_int_terms(r, conductor) for r in relations]

        cells = 0
        for extra in range(0, max(closure - 1, 0)):
            for lu in range(extra + 1):
                lv = extra - lu
                for rel, int_terms in zip(relations, int_relations):
                    if rel.degree() + extra > closure:
                        continue
                    for u in product(range(letters), repeat=lu):
                        for v in product(range(letters), repeat=lv):
                            row = {
                                col_of[u + w + v]: vec for w, vec in int_terms
                            }
                            cells += len(row)
                            if cells > max_cells:
                                raise TruncationTooLargeError(
                                    f"truncation needs more than {max_cells} "
                                    f"assembled cells ({len(columns)} columns)",
                                    cells=cells,
                                    limit=max_cells,
                                )
                            reducer.insert(row)
        low = sum(
            1 for lead in reducer.pivots if len(columns[lead]) <= target_degree
        )
        return cls(relations, target_degree, closure, reducer, columns,
                   col_of, conductor, cells, max_cells, low)

    def _to_row(self, p: NCPolynomial):
        conductor = math.lcm(self.conductor, _common_conductor([p]))
        if conductor != self.conductor:
            raise ValueError(
                "polynomial coefficients leave the truncation's field"
            )
        return {self._col_of[w]: vec for w, vec in
                _poly_int_terms(p, self.conductor)}

    def reduces_to_zero(self, p: NCPolynomial) -> bool:
        """True certifies p lies in the two-sided ideal; False only means
        no certificate exists up to the closure degree."""
        if p.degree() > self.target_degree:
            raise DegreeExceedsTruncationError(
                f"degree {p.degree()} exceeds the truncation target "
                f"{self.target_degree}"
            )
        row = self._to_row(p)
        return not self._reducer.remainder(row)

    def quotient_dimension(self) -> int:
        """dim of (monomials of degree <= target) modulo the captured ideal."""
        letters = self.n * self.n
        total = sum(letters**k for k in range(self.target_degree + 1))
        return total - self.low_degree_rank

    @property
    def rank(self) -> int:
        return self._reducer.rank


def comultiplication_compatible(e: ExactMatrix,
                                max_cells: int = DEFAULT_MAX_CELLS) -> bool:
    """Check Delta(r) in I (x) A + A (x) I for every defining relation r.

    The candidate span is {r (x) monomial} + {monomial (x) r} with
    monomials of degree <= 2, which covers the coproducts of the
    (degree <= 2) relations; membership of each Delta(r) in the span is a
    sound certificate of compatibility.
    """
    n = e.n
    if n > 3:
        raise UnsupportedSizeError(
            "comultiplication check is limited to n <= 3"
        )
    relations = build_relations(e)
    conductor = _common_conductor(relations)
    phi = euler_phi(conductor)
    rows = _reduction_rows(conductor)
    letters = n * n

    monomials = []
    for deg in range(2, -1, -1):
        monomials.extend(product(range(letters), repeat=deg))
    pair_index = {}
    for wx in monomials:
        for wy in monomials:
            pair_index[(wx, wy)] = len(pair_index)

    reducer = _RowReducer(rows, phi)
    int_relations = [_poly_int_terms(r, conductor) for r in relations]
    cells = 0
    for int_terms in int_relations:
        for mono in monomials:
            left = {pair_index[(w, mono)]: vec for w, vec in int_terms}
            right = {pair_index[(mono, w)]: vec for w, vec in int_terms}
            cells += len(left) + len(right)
            if cells > max_cells:
                raise TruncationTooLargeError(
                    "comultiplication span exceeds the cell guard",
                    cells=cells,
                    limit=max_cells,
                )
            reducer.insert(left)
            reducer.insert(right)

    for rel in relations:
        delta = coproduct(rel)
        row = _tensor_int_row(delta, conductor, pair_index)
        if reducer.remainder(row):
            return False
    return True


def _tensor_int_row(t: TensorPolynomial, conductor: int, pair_index):
    pairs = []
    for key, coeff in t.terms.items():
        pairs.append((key, coeff.promoted(conductor).coeffs))
    return {pair_index[key]: vec for key, vec in _clear_denominators(pairs)}
