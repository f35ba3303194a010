"""JSON input/output schemas used by the CLI.

Field elements travel as {"conductor": m, "coeffs": {"j": "p/q", ...}}
with sparse exponent keys into the power basis; matrices as
{"conductor": m, "matrix": [[entry, ...], ...]} with entries written as
polynomials in z (e.g. "1", "-1", "z^2", "1/2*z+3"), or through the
shorthands {"antidiag": [...]} and {"diag": [...]}. Parsing reduces every
entry modulo the m-th cyclotomic polynomial. All emitters build their
maps in a fixed order so identical inputs serialize byte-identically.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclotomic import CycloNumber, euler_phi
from .errors import MatrixFormatError
from .matrix import ExactMatrix

_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")
_TERM_RE = re.compile(
    r"^(?P<sign>[+-]?)"
    r"(?P<coef>\d+(?:/\d+)?)?"
    r"(?:\*?(?P<var>z(?:\^(?P<exp>\d+))?))?$"
)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise MatrixFormatError(f"bad rational syntax: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def cyclo_to_json(x: CycloNumber) -> dict:
    coeffs = {
        str(j): format_rational(c) for j, c in enumerate(x.coeffs) if c
    }
    return {"conductor": x.conductor, "coeffs": coeffs}


def cyclo_from_json(doc) -> CycloNumber:
    if not isinstance(doc, dict):
        raise MatrixFormatError("field element must be a JSON object")
    unknown = set(doc) - {"conductor", "coeffs"}
    if unknown:
        raise MatrixFormatError(f"unknown field element keys: {sorted(unknown)}")
    conductor = doc.get("conductor")
    if not isinstance(conductor, int) or conductor < 1:
        raise MatrixFormatError("conductor must be a positive integer")
    coeffs = doc.get("coeffs", {})
    if not isinstance(coeffs, dict):
        raise MatrixFormatError("coeffs must be an object of exponent -> rational")
    phi = euler_phi(conductor)
    terms = {}
    for key, value in coeffs.items():
        try:
            j = int(key)
        except ValueError:
            raise MatrixFormatError(f"bad exponent key: {key!r}") from None
        if not (0 <= j < phi):
            raise MatrixFormatError(
                f"exponent {j} outside the power basis (0..{phi - 1})"
            )
        terms[j] = parse_rational(str(value))
    return CycloNumber.from_terms(conductor, terms)


def cyclo_to_string(x: CycloNumber) -> str:
    """Canonical polynomial form in z, highest exponent first."""
    return str(x)


def parse_cyclo_string(text: str, conductor: int) -> CycloNumber:
    """Parse a polynomial in z and reduce modulo the cyclotomic polynomial."""
    compact = text.replace(" ", "")
    if not compact:
        raise MatrixFormatError("empty matrix entry")
    chunks = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(chunks) != compact:
        raise MatrixFormatError(f"bad entry syntax: {text!r}")
    terms: dict[int, Fraction] = {}
    for chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise MatrixFormatError(f"bad term {chunk!r} in entry {text!r}")
        try:
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError:
            raise MatrixFormatError(
                f"zero denominator in term {chunk!r}"
            ) from None
        if m.group("sign") == "-":
            coef = -coef
        if m.group("var") is None:
            exp = 0
        elif m.group("exp") is None:
            exp = 1
        else:
            exp = int(m.group("exp"))
        terms[exp % conductor] = terms.get(exp % conductor, Fraction(0)) + coef
    return CycloNumber.from_terms(conductor, terms)


def matrix_to_json(matrix: ExactMatrix) -> dict:
    return {
        "conductor": matrix.conductor,
        "matrix": [
            [cyclo_to_string(entry) for entry in row] for row in matrix.rows
        ],
    }


def parse_matrix(doc) -> ExactMatrix:
    """Read the matrix schema, including the antidiag/diag shorthands."""
    if not isinstance(doc, dict):
        raise MatrixFormatError("matrix document must be a JSON object")
    body_keys = {"matrix", "antidiag", "diag"} & set(doc)
    unknown = set(doc) - {"conductor", "matrix", "antidiag", "diag"}
    if unknown:
        raise MatrixFormatError(f"unknown matrix keys: {sorted(unknown)}")
    if len(body_keys) != 1:
        raise MatrixFormatError(
            "exactly one of 'matrix', 'antidiag', 'diag' is required"
        )
    conductor = doc.get("conductor", 1)
    if not isinstance(conductor, int) or conductor < 1:
        raise MatrixFormatError("conductor must be a positive integer")
    key = body_keys.pop()
    body = doc[key]
    if key == "matrix":
        if (
            not isinstance(body, list)
            or not body
            or any(not isinstance(row, list) or len(row) != len(body) for row in body)
        ):
            raise MatrixFormatError("'matrix' must be a nonempty square array")
        rows = [
            [parse_cyclo_string(str(entry), conductor) for entry in row]
            for row in body
        ]
        return ExactMatrix(rows)
    if not isinstance(body, list) or not body:
        raise MatrixFormatError(f"'{key}' must be a nonempty array")
    values = [parse_cyclo_string(str(entry), conductor) for entry in body]
    builder = ExactMatrix.antidiag if key == "antidiag" else ExactMatrix.diag
    return builder(values)
