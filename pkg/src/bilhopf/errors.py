"""Exception hierarchy shared by all bilhopf modules."""


class BilhopfError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class SingularMatrixError(BilhopfError):
    """A matrix required to be invertible has determinant zero."""

    code = "singular_matrix"


class UnsupportedSizeError(BilhopfError):
    """The requested size is outside the range an operation supports."""

    code = "unsupported_size"


class UnsupportedShapeError(BilhopfError):
    """The operation needs a special matrix shape (e.g. diagonal)."""

    code = "unsupported_shape"


class InvalidParameterError(BilhopfError):
    """A preset or command parameter is out of range."""

    code = "invalid_parameter"


class TruncationTooLargeError(BilhopfError):
    """The degree-truncated elimination exceeded the size guard."""

    code = "truncation_too_large"

    def __init__(self, message, cells=None, limit=None):
        super().__init__(message)
        self.cells = cells
        self.limit = limit


class DegreeExceedsTruncationError(BilhopfError):
    """A membership query exceeds the truncation's target degree."""

    code = "degree_exceeds_truncation"


class DegenerateDenominatorError(BilhopfError):
    """The orthogonality denominator tr(F) vanishes; no degree-2 moments exist."""

    code = "degenerate_denominator"


class NoHaarStateError(BilhopfError):
    """The algebra is not cosemisimple, so there is no Haar state."""

    code = "no_haar_state"


class MatrixFormatError(BilhopfError):
    """A matrix or field-element document violates the input schema."""

    code = "matrix_format"
