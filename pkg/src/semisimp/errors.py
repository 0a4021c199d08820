"""Exception types shared across the package."""


class SemisimpError(Exception):
    pass


class DivergentSum(SemisimpError):
    """A product would need an infinite sum."""


class BothInfinite(DivergentSum):
    """Join of two sequences neither of which has finite support."""


class InfiniteInput(SemisimpError):
    """An operation restricted to finite sequences got an infinite one."""


class UndecidableComparison(SemisimpError):
    """Equality of sequences with unknown tails cannot be decided."""


class SingularDiagonal(SemisimpError):
    """Triangular inversion hit a zero on the diagonal."""


class NonRegular(SemisimpError):
    """A co-semi-simplicial object is not regular (some coface is not injective)."""


class NotASubcomplex(SemisimpError):
    """The complex does not carry a valid embedding into some gamma(n)."""


class VertexOutOfRange(SemisimpError):
    """A generator uses a vertex outside {0..n}."""


class ValidationError(SemisimpError):
    """Raised by ``require_valid`` when a complex breaks the face identities."""
