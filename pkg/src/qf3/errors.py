"""Exception types shared across the package."""


class QF3Error(Exception):
    """Base class for all qf3 errors."""


class NotPositiveDefiniteError(QF3Error, ValueError):
    """A form failed the leading-principal-minor positivity test."""


class NotUnimodularError(QF3Error, ValueError):
    """A change-of-variables matrix does not have determinant +-1."""


class RangeOverflowError(QF3Error, OverflowError):
    """Coefficients outside the exact 64-bit contract, or a theta request
    whose table would exceed the memory budget."""


class BadPrimeError(QF3Error, ValueError):
    """Argument required to be prime (or an odd prime) is not."""


class PreconditionViolatedError(QF3Error, ValueError):
    """A documented operation precondition does not hold (e.g. p | 2*m*d)."""


class NotRepresentedError(QF3Error, ValueError):
    """A value required to be (genus-)represented is not."""


class PreconditionFailedError(QF3Error, ValueError):
    """A transfer was attempted on a vector violating a congruence
    precondition; the message names the violated congruence."""


class NonIntegralImageError(QF3Error, RuntimeError):
    """Internal consistency failure: a precondition-passing vector mapped to
    a non-integral image. Must never occur for a verified catalog entry."""


class NoAdjustmentWorksError(QF3Error, RuntimeError):
    """No member of the finite adjustment orbit satisfies any entry's
    preconditions."""


class InvalidInputError(QF3Error, ValueError):
    """Input outside an operation's stated domain."""


class NotRepresentableError(QF3Error, ValueError):
    """The requested value has no representation at all by the given form."""


class LemmaViolatedError(QF3Error, RuntimeError):
    """An in-scope input admits representations but none with the promised
    non-divisibility; firing falsifies a proven statement."""


class NoEscapeError(QF3Error, RuntimeError):
    """Every representation satisfies the bad congruence; firing falsifies
    the orbit-escape argument for in-scope inputs."""


class PipelineStuckError(QF3Error, RuntimeError):
    """A constructive proof route could not produce a representation; the
    message carries the route trace."""
