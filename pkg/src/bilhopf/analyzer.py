"""Verdicts for the universal Hopf algebra of a non-degenerate bilinear form.

Given an invertible matrix E of size n >= 2, the algebra on generators
a_ij with relations inv(E)*t(a)*E*a = I = a*inv(E)*t(a)*E is a Hopf
algebra; everything this module reports is read off exactly from
F = inv(E)*t(E):

 * the root q of q^2 + tr(F)*q + 1 = 0 decides cosemisimplicity
   (q = 1, q = -1, or q of infinite order);
 * the squared antipode acts by a |-> F a inv(F), so the antipode order
   is twice the least k with F^k scalar, and is even by construction;
 * a compact-quantum-group structure forces the spectrum ratios of F to
   be positive reals, giving a decidable necessary condition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cyclotomic import CycloNumber
from .errors import UnsupportedShapeError, UnsupportedSizeError
from .intervals import Sign, certified_sign
from .matrix import ExactMatrix, companion, projective_order
from .ncpoly import (
    NCPolynomial,
    apply_antihom,
    generator_matrix,
    poly_mat_mul,
    poly_mat_transpose,
    scalar_matrix,
)
from .quadratic import QClass, q_class
from .rewriting import (
    DEFAULT_MAX_CELLS,
    IdealTruncation,
    build_relations,
    comultiplication_compatible,
)


class BilinearFormHopf:
    """The analyzed object: the form E together with the cached companion
    F = inv(E)*t(E) and its trace."""

    __slots__ = ("form", "form_inverse", "companion", "companion_trace",
                 "n", "conductor")

    def __init__(self, form: ExactMatrix):
        if form.n < 2:
            raise UnsupportedSizeError(
                "size 1 is rejected: the analysis assumes an irreducible "
                "fundamental comodule, which needs n >= 2"
            )
        self.form = form
        self.form_inverse = form.inverse()  # raises if singular
        self.companion = self.form_inverse * form.transpose()
        self.companion_trace = self.companion.trace()
        self.n = form.n
        self.conductor = form.conductor

    def __repr__(self):
        return f"BilinearFormHopf(n={self.n}, conductor={self.conductor})"


@dataclass(frozen=True)
class AntipodeOrder:
    """kind "finite" (order = 2k, always even), "infinite" (with a
    witness ratio), or "unknown" (bound reached on non-diagonal F)."""

    kind: str
    order: int | None = None
    witness: str | None = None
    bound: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"


class CqgVerdict(enum.Enum):
    OBSTRUCTED = "obstructed"
    NO_OBSTRUCTION_FOUND = "no_obstruction_found"
    UNKNOWN = "unknown"


@dataclass
class AnalysisReport:
    q_class: QClass
    cosemisimple: bool
    antipode_order: AntipodeOrder
    nu2: CycloNumber | None
    nu2_is_integer: bool | None
    cotriangular_hint: bool
    cqg_obstructed: CqgVerdict
    s_squared_spectrum: list[CycloNumber] | None


def cosemisimple(p: BilinearFormHopf) -> tuple[bool, QClass]:
    qc = q_class(p.companion_trace)
    return qc.cosemisimple, qc


def antipode_order(p: BilinearFormHopf, max_k: int = 256) -> AntipodeOrder:
    """Twice the projective order of F; never odd."""
    verdict = projective_order(p.companion, max_k=max_k)
    if verdict.kind == "finite":
        return AntipodeOrder(kind="finite", order=2 * verdict.order)
    if verdict.kind == "infinite":
        return AntipodeOrder(kind="infinite", witness=verdict.witness)
    return AntipodeOrder(kind="unknown", bound=verdict.bound)


def s_squared_spectrum(p: BilinearFormHopf) -> list[CycloNumber]:
    """Eigenvalues of the squared antipode on the generators: the
    multiset {f_i / f_j} for diagonal F, in row-major (i, j) order."""
    f = p.companion
    if not f.is_diagonal():
        raise UnsupportedShapeError(
            "the squared-antipode spectrum is computed only for diagonal F"
        )
    diag = [f.rows[i][i] for i in range(f.n)]
    return [fi / fj for fi in diag for fj in diag]


def cqg_obstruction(p: BilinearFormHopf) -> CqgVerdict:
    """Necessary condition for a compact-quantum-group structure: every
    ratio of diagonal entries of F must be a positive real."""
    f = p.companion
    if not f.is_diagonal():
        return CqgVerdict.UNKNOWN
    diag = [f.rows[i][i] for i in range(f.n)]
    for fi in diag:
        for fj in diag:
            if certified_sign(fi / fj) is not Sign.POSITIVE_REAL:
                return CqgVerdict.OBSTRUCTED
    return CqgVerdict.NO_OBSTRUCTION_FOUND


def analyze(p: BilinearFormHopf, max_k: int = 256) -> AnalysisReport:
    is_cosemisimple, qc = cosemisimple(p)
    order = antipode_order(p, max_k=max_k)
    nu2 = None
    nu2_is_integer = None
    if is_cosemisimple and not p.companion_trace.is_zero():
        nu2 = CycloNumber.from_rational(p.n) / p.companion_trace
        nu2_is_integer = nu2.is_rational() and nu2.as_rational().denominator == 1
    spectrum = s_squared_spectrum(p) if p.companion.is_diagonal() else None
    return AnalysisReport(
        q_class=qc,
        cosemisimple=is_cosemisimple,
        antipode_order=order,
        nu2=nu2,
        nu2_is_integer=nu2_is_integer,
        cotriangular_hint=(p.companion_trace == -2),
        cqg_obstructed=cqg_obstruction(p),
        s_squared_spectrum=spectrum,
    )


@dataclass
class AxiomReport:
    counit: bool
    antipode_axiom: bool
    s_preserves_ideal: bool
    comult_compatible: bool | None  # None when skipped by the size guard

    @property
    def all_pass(self) -> bool:
        return (
            self.counit
            and self.antipode_axiom
            and self.s_preserves_ideal
            and self.comult_compatible is not False
        )


def antipode_images(p: BilinearFormHopf) -> list[list[NCPolynomial]]:
    """The degree-1 images S(a)_ij = (inv(E)*t(a)*E)_ij."""
    n = p.n
    a = generator_matrix(n)
    return poly_mat_mul(
        poly_mat_mul(scalar_matrix(p.form_inverse, n), poly_mat_transpose(a)),
        scalar_matrix(p.form, n),
    )


def verify_hopf_axioms(p: BilinearFormHopf, margin: int = 2,
                       max_cells: int = DEFAULT_MAX_CELLS,
                       truncation: IdealTruncation | None = None) -> AxiomReport:
    """Symbolic verification of the Hopf structure on the relation ideal.

    counit: substituting a_ij = delta_ij kills every relation.
    antipode_axiom: sum_k S(a)_ik a_kj - delta_ij (and the flipped side)
    coincide entrywise with the two relation families, so the check is a
    polynomial identity.
    s_preserves_ideal: the anti-homomorphism extension of S maps every
    relation back into the ideal, certified at the given closure margin.
    comult_compatible: coproducts of relations lie in I(x)A + A(x)I;
    checked for n <= 3, reported as skipped above that.
    """
    n = p.n
    if n > 4:
        raise UnsupportedSizeError("axiom verification is limited to n <= 4")
    relations = build_relations(p.form)
    one = CycloNumber.one()
    zero = CycloNumber.zero()
    counit_ok = all(
        r.substitute(lambda i, j: one if i == j else zero).is_zero()
        for r in relations
    )

    images = antipode_images(p)
    sq = n * n
    first_family, second_family = relations[:sq], relations[sq:]
    identity_poly = [
        [NCPolynomial.one(n) if i == j else NCPolynomial.zero(n) for j in range(n)]
        for i in range(n)
    ]
    a = generator_matrix(n)
    left = poly_mat_mul(images, a)
    right = poly_mat_mul(a, images)
    antipode_ok = all(
        left[i][j] - identity_poly[i][j] == first_family[i * n + j]
        and right[i][j] - identity_poly[i][j] == second_family[i * n + j]
        for i in range(n)
        for j in range(n)
    )

    if truncation is None:
        truncation = IdealTruncation.build(relations, 2, margin=margin,
                                           max_cells=max_cells)
    s_ok = all(
        truncation.reduces_to_zero(apply_antihom(r, images)) for r in relations
    )

    comult_ok = comultiplication_compatible(p.form, max_cells=max_cells) \
        if n <= 3 else None
    return AxiomReport(
        counit=counit_ok,
        antipode_axiom=antipode_ok,
        s_preserves_ideal=s_ok,
        comult_compatible=comult_ok,
    )
