"""Named example presentations exposed by the CLI `example` command.

Each constructor returns a BilinearFormHopf over the cyclotomic field its
entries need; xi always denotes a primitive m-th root of unity.
"""

from __future__ import annotations

from .analyzer import BilinearFormHopf
from .cyclotomic import CycloNumber
from .errors import InvalidParameterError
from .matrix import ExactMatrix


def prop2(m: int) -> BilinearFormHopf:
    """The 6x6 anti-diagonal form AD(xi, 1, 1, 1, 1, 1): cosemisimple with
    antipode of order exactly 2m, for every m >= 1."""
    if m < 1:
        raise InvalidParameterError("prop2 requires m >= 1")
    xi = CycloNumber.zeta(m)
    return BilinearFormHopf(ExactMatrix.antidiag([xi, 1, 1, 1, 1, 1]))


def remark4(m: int) -> BilinearFormHopf:
    """The smallest known forms with antipode order 2m: AD(1, 1, xi, xi)
    for m = 3, AD(1, 1, 1, xi) for m = 4, AD(1, 1, xi) for m >= 5."""
    if m < 3:
        raise InvalidParameterError("remark4 requires m >= 3")
    xi = CycloNumber.zeta(m)
    if m == 3:
        values = [1, 1, xi, xi]
    elif m == 4:
        values = [1, 1, 1, xi]
    else:
        values = [1, 1, xi]
    return BilinearFormHopf(ExactMatrix.antidiag(values))


def remark5() -> BilinearFormHopf:
    """AD(1, 1, t) with t^2 + 3t + 1 = 0: cotriangular (q = 1) yet with
    antipode of infinite order, witnessed by the eigenvalue t^2 of the
    squared antipode.

    t is pinned to zeta_5 + zeta_5^4 - 1, the root (-3 + sqrt(5))/2; the
    other root gives the same verdicts since the spectrum ratios invert.
    """
    z = CycloNumber.zeta(5)
    t = z + z**4 - 1
    return BilinearFormHopf(ExactMatrix.antidiag([1, 1, t]))


def example7(n: int) -> BilinearFormHopf:
    """For odd n >= 3, a 2n x 2n anti-diagonal form over Q whose algebra
    is cosemisimple with antipode of order 4 and Schur indicator n: the
    first k = (n-1)/2 anti-diagonal entries are -1, the rest 1."""
    if n < 3 or n % 2 == 0:
        raise InvalidParameterError("example7 requires odd n >= 3")
    k = (n - 1) // 2
    values = [-1] * k + [1] * (2 * n - k)
    return BilinearFormHopf(ExactMatrix.antidiag(values))


PRESETS = {
    "prop2": prop2,
    "remark4": remark4,
    "remark5": remark5,
    "example7": example7,
}
