"""Exception types shared across the library."""


class GroupMismatchError(ValueError):
    """Two elements or fields do not live on the same group."""


class DomainError(ValueError):
    """A parameter is outside the admissible range of an operation."""


class SingularityError(DomainError):
    """Evaluation requested at a point where the kernel is singular."""


class CapabilityError(RuntimeError):
    """The requested group/backend combination is not supported."""


class AccuracyError(RuntimeError):
    """A quadrature or iteration failed to reach its accuracy target.

    Carries the offending residual in ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DataError(ValueError):
    """Field data is invalid (non-finite samples, shape mismatch, ...)."""


class ConstructionError(RuntimeError):
    """A derived object could not be built from the given parameters."""
