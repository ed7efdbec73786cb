"""Exception hierarchy shared by all modules.

``UsageError`` subclasses signal bad requests (unknown names, out-of-range
indices, exhausted tables) and map to CLI exit code 2; ``MathDomainError``
subclasses signal that the requested object does not exist mathematically
(degenerate denominators, indefinite moment functionals, ...) and map to
exit code 3.
"""


class SobolevLadderError(Exception):
    """Base class for every error raised by this package."""


class UsageError(SobolevLadderError):
    """Request is malformed or out of the supported range."""


class MathDomainError(SobolevLadderError):
    """Requested object is mathematically degenerate or undefined."""


class BadIndex(UsageError):
    """Index outside the valid range of an operation."""


class UnknownFamily(UsageError):
    """No built-in family with the requested name."""


class MomentsExhausted(UsageError):
    """An inner product needs moments beyond the generated table."""


class ZeroDenominator(MathDomainError):
    """Attempt to build a quotient with an identically zero denominator."""


class PoleAtEvaluationPoint(MathDomainError):
    """Evaluation point is a genuine pole of the canonical rational function."""


class NotPositiveDefinite(MathDomainError):
    """Moment functional fails a positivity check (Hankel minor <= 0)."""


class StructureCheckFailed(MathDomainError):
    """Family data does not satisfy its first-order structure relation."""


class DegenerateDenominator(MathDomainError):
    """The connection denominator 1 + M*K vanished."""


class SingularConnection(MathDomainError):
    """The connection determinant is identically zero; inversion impossible."""


class InternalIdentityViolation(SobolevLadderError):
    """A construction-time identity failed; indicates a bug, never silent."""
