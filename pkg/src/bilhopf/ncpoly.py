"""Noncommutative polynomials in the n^2 generators a_ij.

A monomial is a word of generator ids (id = i*n + j, zero-based), the
empty word being the unit. Polynomials are sparse maps word -> nonzero
CycloNumber. The module also provides the two-sided tensor variant used
for comultiplication checks: pairs of words (one per tensor leg) with the
legs commuting past each other.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloNumber


def generator_id(n: int, i: int, j: int) -> int:
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError("generator index out of range")
    return i * n + j


def generator_name(n: int, g: int) -> str:
    return f"a[{g // n + 1},{g % n + 1}]"


def monomial_key(word):
    """Degree-lexicographic sort key (a_11 < a_12 < ... < a_nn)."""
    return (len(word), word)


class NCPolynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for word, coeff in terms.items():
                if not isinstance(coeff, CycloNumber):
                    coeff = CycloNumber.from_rational(Fraction(coeff))
                if not coeff.is_zero():
                    clean[tuple(word)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> NCPolynomial:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> NCPolynomial:
        return cls(n, {(): CycloNumber.one()})

    @classmethod
    def scalar(cls, n: int, value) -> NCPolynomial:
        return cls(n, {(): value})

    @classmethod
    def generator(cls, n: int, i: int, j: int) -> NCPolynomial:
        return cls(n, {(generator_id(n, i, j),): CycloNumber.one()})

    def degree(self) -> int:
        """Max word length; the zero polynomial has degree -1."""
        return max((len(w) for w in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> CycloNumber:
        return self.terms.get((), CycloNumber.zero())

    def _check(self, other: NCPolynomial):
        if self.n != other.n:
            raise ValueError("polynomials over different generator matrices")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            other = NCPolynomial.scalar(self.n, other)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = terms.get(word)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero():
                terms.pop(word, None)
            else:
                terms[word] = acc
        out = NCPolynomial.__new__(NCPolynomial)
        out.n = self.n
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = NCPolynomial.__new__(NCPolynomial)
        out.n = self.n
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            other = NCPolynomial.scalar(self.n, other)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            return self.scaled(other)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        self._check(other)
        terms: dict[tuple, CycloNumber] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                prod = c1 * c2
                acc = terms.get(word)
                acc = prod if acc is None else acc + prod
                if acc.is_zero():
                    terms.pop(word, None)
                else:
                    terms[word] = acc
        out = NCPolynomial.__new__(NCPolynomial)
        out.n = self.n
        out.terms = terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, factor) -> NCPolynomial:
        if not isinstance(factor, CycloNumber):
            factor = CycloNumber.from_rational(Fraction(factor))
        if factor.is_zero():
            return NCPolynomial.zero(self.n)
        out = NCPolynomial.__new__(NCPolynomial)
        out.n = self.n
        out.terms = {w: c * factor for w, c in self.terms.items()}
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            other = NCPolynomial.scalar(self.n, other)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        if self.n != other.n or set(self.terms) != set(other.terms):
            return False
        return all(other.terms[w] == c for w, c in self.terms.items())

    __hash__ = None

    def substitute(self, assign) -> CycloNumber:
        """Evaluate with a_ij -> assign(i, j), a scalar-valued map."""
        total = CycloNumber.zero()
        n = self.n
        for word, coeff in self.terms.items():
            value = coeff
            for g in word:
                value = value * assign(g // n, g % n)
                if value.is_zero():
                    break
            total = total + value
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=monomial_key, reverse=True):
            coeff = self.terms[word]
            name = "".join(generator_name(self.n, g) for g in word)
            c = str(coeff)
            if word:
                if c == "1":
                    text = name
                elif c == "-1":
                    text = f"-{name}"
                else:
                    wrapped = c if ("+" not in c and "-" not in c[1:]) else f"({c})"
                    text = f"{wrapped} * {name}"
            else:
                text = c
            if parts and not text.startswith("-"):
                parts.append("+ " + text)
            elif parts:
                parts.append("- " + text[1:])
            else:
                parts.append(text)
        return " ".join(parts)

    def __repr__(self):
        return f"NCPolynomial({self.n}, {self})"


def generator_matrix(n: int) -> list[list[NCPolynomial]]:
    return [[NCPolynomial.generator(n, i, j) for j in range(n)] for i in range(n)]


def scalar_matrix(m, n: int) -> list[list[NCPolynomial]]:
    """Lift an ExactMatrix to constant noncommutative polynomials."""
    return [[NCPolynomial.scalar(n, m.rows[i][j]) for j in range(n)] for i in range(n)]


def poly_mat_mul(a, b) -> list[list[NCPolynomial]]:
    n = len(a)
    return [
        [
            sum((a[i][k] * b[k][j] for k in range(n)), NCPolynomial.zero(n))
            for j in range(n)
        ]
        for i in range(n)
    ]


def poly_mat_transpose(a) -> list[list[NCPolynomial]]:
    n = len(a)
    return [[a[j][i] for j in range(n)] for i in range(n)]


def apply_antihom(p: NCPolynomial, images) -> NCPolynomial:
    """Extend a_ij -> images[i][j] as an algebra anti-homomorphism
    (words are reversed) and linearly."""
    n = p.n
    out = NCPolynomial.zero(n)
    for word, coeff in p.terms.items():
        value = NCPolynomial.scalar(n, coeff)
        for g in reversed(word):
            value = value * images[g // n][g % n]
        out = out + value
    return out


class TensorPolynomial:
    """Element of the two-sided alphabet: words in x_ij paired with words
    in y_ij, the x letters commuting past the y letters. Models A (x) A
    with x = a (x) 1 and y = 1 (x) a."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if not coeff.is_zero():
                    clean[key] = coeff
        self.terms = clean

    @classmethod
    def one(cls, n: int) -> TensorPolynomial:
        return cls(n, {((), ()): CycloNumber.one()})

    @classmethod
    def of_pair(cls, left: NCPolynomial, right: NCPolynomial) -> TensorPolynomial:
        terms: dict[tuple, CycloNumber] = {}
        for wl, cl in left.terms.items():
            for wr, cr in right.terms.items():
                key = (wl, wr)
                prod = cl * cr
                acc = terms.get(key)
                acc = prod if acc is None else acc + prod
                if acc.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = acc
        return cls(left.n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: TensorPolynomial) -> TensorPolynomial:
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = terms.get(key)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = acc
        out = TensorPolynomial.__new__(TensorPolynomial)
        out.n = self.n
        out.terms = terms
        return out

    def __sub__(self, other: TensorPolynomial) -> TensorPolynomial:
        neg = TensorPolynomial.__new__(TensorPolynomial)
        neg.n = other.n
        neg.terms = {k: -c for k, c in other.terms.items()}
        return self + neg

    def __mul__(self, other: TensorPolynomial) -> TensorPolynomial:
        terms: dict[tuple, CycloNumber] = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                key = (x1 + x2, y1 + y2)
                prod = c1 * c2
                acc = terms.get(key)
                acc = prod if acc is None else acc + prod
                if acc.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = acc
        out = TensorPolynomial.__new__(TensorPolynomial)
        out.n = self.n
        out.terms = terms
        return out

    def scaled(self, factor: CycloNumber) -> TensorPolynomial:
        if factor.is_zero():
            return TensorPolynomial(self.n)
        out = TensorPolynomial.__new__(TensorPolynomial)
        out.n = self.n
        out.terms = {k: c * factor for k, c in self.terms.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        if self.n != other.n or set(self.terms) != set(other.terms):
            return False
        return all(other.terms[k] == c for k, c in self.terms.items())

    __hash__ = None


def coproduct(p: NCPolynomial) -> TensorPolynomial:
    """Comultiplication a_ij -> sum_k a_ik (x) a_kj extended as an algebra
    map into the two-sided alphabet."""
    n = p.n
    images = {}
    out = TensorPolynomial(n)
    for word, coeff in p.terms.items():
        value = TensorPolynomial.one(n)
        for g in word:
            image = images.get(g)
            if image is None:
                i, j = g // n, g % n
                image = TensorPolynomial(
                    n,
                    {
                        (
                            (generator_id(n, i, k),),
                            (generator_id(n, k, j),),
                        ): CycloNumber.one()
                        for k in range(n)
                    },
                )
                images[g] = image
            value = value * image
        out = out + value.scaled(coeff)
    return out
