"""Exception types shared by all evaluators."""


class HyperfunError(Exception):
    """Base class for all library errors."""

    kind = "error"


class DomainError(HyperfunError, ValueError):
    """Parameters violate an evaluator precondition."""

    kind = "domain"


class ContourDomainError(DomainError):
    """No admissible undeformed contour exists for these parameters."""

    kind = "contour-domain"


class PoleError(DomainError):
    """Requested point is too close to a pole of the function.

    ``nearest`` identifies the offending lattice point, e.g. the ``(j, k)``
    of the elliptic pole ``p^-j q^-k``.
    """

    kind = "pole"

    def __init__(self, message, nearest=None):
        super().__init__(message)
        self.nearest = nearest


class AccuracyError(HyperfunError, ArithmeticError):
    """Quadrature failed to converge; carries the last two estimates."""

    kind = "accuracy"

    def __init__(self, message, estimates=None):
        super().__init__(message)
        self.estimates = estimates


class TruncationError(AccuracyError):
    """Tail bound of a truncated integral exceeds the requested tolerance."""

    kind = "truncation"
