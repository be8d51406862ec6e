"""Exception types shared across the package."""


class PhotonStatError(Exception):
    """Base class for all photonstat errors."""


class RangeOverflowError(PhotonStatError, OverflowError):
    """A value left the representable double range; use a log-domain routine."""


class SingularDenominatorError(PhotonStatError, ZeroDivisionError):
    """A structural denominator of the state parametrization vanished."""


class DomainError(PhotonStatError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class ParityError(DomainError):
    """Joint photon indices of odd total parity are not defined."""


class PoleError(DomainError):
    """A Pochhammer factor in a hypergeometric denominator hit zero."""


class ClassificationError(PhotonStatError, ValueError):
    """The distribution's classification does not admit this operation."""


class DivergentSeriesError(PhotonStatError, ArithmeticError):
    """A series failed its convergence (term-ratio) check."""


class NormalizationError(PhotonStatError, ValueError):
    """A sequence expected to be (near-)normalized is not."""


class InvalidSpecError(PhotonStatError, ValueError):
    """A deformation or configuration object is internally inconsistent."""
