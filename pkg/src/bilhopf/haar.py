"""Degree <= 2 moments of the Haar functional, and the Schur indicator.

On a cosemisimple algebra with nonzero tr(F) the orthogonality relations
pin the low-degree moments exactly:

    h(1) = 1,   h(a_ij) = 0,
    h(a_kl * a_ij)    = inv(E)[k][i] * E[l][j] / tr(F),
    h(a_kl * S(a_ij)) = delta_kj * F[i][l] / tr(F).

The degree-1 moments vanish because the fundamental comodule (n >= 2) is
irreducible and nontrivial, hence orthogonal to the trivial comodule.

The Schur indicator of the fundamental comodule is n / tr(F); summing the
moment formula over the coproduct of the character gives the same number
through tr(inv(E)*E) = n, which is asserted as a consistency identity.

All indices in this module are zero-based; the CLI serializes them
one-based to match the printed generator names a[i,j].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analyzer import BilinearFormHopf, cosemisimple
from .cyclotomic import CycloNumber
from .errors import (
    DegenerateDenominatorError,
    NoHaarStateError,
    UnsupportedSizeError,
)
from .ncpoly import NCPolynomial
from .rewriting import DEFAULT_MAX_CELLS, IdealTruncation, build_relations


def _require_denominator(p: BilinearFormHopf) -> CycloNumber:
    if p.companion_trace.is_zero():
        raise DegenerateDenominatorError(
            "the orthogonality denominator tr(F) vanishes; the algebra is "
            "not cosemisimple at this trace"
        )
    return p.companion_trace


def haar_moment(p: BilinearFormHopf, k: int, l: int, i: int, j: int) -> CycloNumber:
    """h(a_kl * a_ij), zero-based indices."""
    trace = _require_denominator(p)
    return p.form_inverse.rows[k][i] * p.form.rows[l][j] / trace


def haar_moment_antipode(p: BilinearFormHopf, k: int, l: int, i: int, j: int) -> CycloNumber:
    """h(a_kl * S(a_ij)) = delta_kj * F[i][l] / tr(F), zero-based."""
    trace = _require_denominator(p)
    if k != j:
        return CycloNumber.zero(p.conductor)
    return p.companion.rows[i][l] / trace


def haar_functional(p: BilinearFormHopf, poly: NCPolynomial) -> CycloNumber:
    """Evaluate h on any polynomial of degree <= 2 in the generators."""
    if poly.degree() > 2:
        raise ValueError("Haar moments are only available up to degree 2")
    n = p.n
    total = CycloNumber.zero(p.conductor)
    for word, coeff in poly.terms.items():
        if len(word) == 0:
            total = total + coeff
        elif len(word) == 2:
            g1, g2 = word
            m = haar_moment(p, g1 // n, g1 % n, g2 // n, g2 % n)
            total = total + coeff * m
        # degree-1 words contribute zero
    return total


@dataclass
class HaarMomentTable:
    """All degree-2 moments h(a_kl * a_ij), keyed (k, l, i, j) zero-based."""

    presentation: BilinearFormHopf
    denominator: CycloNumber
    entries: dict = field(default_factory=dict)


def moment_table(p: BilinearFormHopf) -> HaarMomentTable:
    denom = _require_denominator(p)
    n = p.n
    entries = {}
    for k in range(n):
        for l in range(n):
            for i in range(n):
                for j in range(n):
                    entries[(k, l, i, j)] = haar_moment(p, k, l, i, j)
    return HaarMomentTable(presentation=p, denominator=denom, entries=entries)


def _require_haar(p: BilinearFormHopf) -> CycloNumber:
    trace = _require_denominator(p)
    is_cosemisimple, _ = cosemisimple(p)
    if not is_cosemisimple:
        raise NoHaarStateError(
            "the algebra is not cosemisimple, so there is no Haar state"
        )
    return trace


def schur_indicator(p: BilinearFormHopf) -> CycloNumber:
    """nu_2 of the fundamental comodule: n / tr(F)."""
    trace = _require_haar(p)
    return CycloNumber.from_rational(p.n) / trace


def schur_indicator_via_character(p: BilinearFormHopf) -> CycloNumber:
    """nu_2 recomputed from the character: the coproduct of sum_i a_ii is
    sum_{i,k} a_ik (x) a_ki, so nu_2 = sum_{i,k} h(a_ik * a_ki)."""
    _require_haar(p)
    n = p.n
    total = CycloNumber.zero(p.conductor)
    for i in range(n):
        for k in range(n):
            total = total + haar_moment(p, i, k, k, i)
    return total


@dataclass
class InvarianceReport:
    right_invariant: bool
    left_invariant: bool
    tuples_checked: int

    @property
    def all_pass(self) -> bool:
        return self.right_invariant and self.left_invariant


def invariance_check(p: BilinearFormHopf, margin: int = 2,
                     truncation: IdealTruncation | None = None,
                     max_cells: int = DEFAULT_MAX_CELLS) -> InvarianceReport:
    """Certify the defining property of h on all degree-2 products.

    For every index tuple (k, l, i, j), both Haar identities

      right:  sum_{r,s} h(a_kr a_is) a_rl a_sj = h(a_kl a_ij) * 1
      left:   sum_{r,s} h(a_rl a_sj) a_kr a_is = h(a_kl a_ij) * 1

    must hold modulo the relation ideal; each difference polynomial is
    reduced in a degree-2 truncation at the given closure margin.
    """
    n = p.n
    if n > 3:
        raise UnsupportedSizeError("invariance checking is limited to n <= 3")
    _require_denominator(p)
    if truncation is None:
        relations = build_relations(p.form)
        truncation = IdealTruncation.build(relations, 2, margin=margin,
                                           max_cells=max_cells)
    gens = [[NCPolynomial.generator(n, i, j) for j in range(n)] for i in range(n)]
    right_ok = True
    left_ok = True
    checked = 0
    for k in range(n):
        for l in range(n):
            for i in range(n):
                for j in range(n):
                    target = haar_moment(p, k, l, i, j)
                    right = NCPolynomial.scalar(n, -target)
                    left = NCPolynomial.scalar(n, -target)
                    for r in range(n):
                        for s in range(n):
                            right = right + haar_moment(p, k, r, i, s) * (
                                gens[r][l] * gens[s][j]
                            )
                            left = left + haar_moment(p, r, l, s, j) * (
                                gens[k][r] * gens[i][s]
                            )
                    right_ok = right_ok and truncation.reduces_to_zero(right)
                    left_ok = left_ok and truncation.reduces_to_zero(left)
                    checked += 1
    return InvarianceReport(
        right_invariant=right_ok, left_invariant=left_ok, tuples_checked=checked
    )
