"""Exception types shared across the package."""


class StaticVacError(Exception):
    """Base class for all staticvac errors."""


class DomainError(StaticVacError, ValueError):
    """Evaluation point outside the valid (open) domain of a geometry."""


class ParameterRangeError(StaticVacError, ValueError):
    """Model parameter outside the admissible range of its family."""


class UnsupportedKindError(StaticVacError, ValueError):
    """Operation not defined for this model kind."""


class NoRealRootError(StaticVacError, ValueError):
    """Profile has no positive real root for the requested parameters."""


class SurfaceGravityRangeError(StaticVacError, ValueError):
    """Surface gravity outside the invertible range of the k+/k- branches."""


class IntegrationError(StaticVacError, RuntimeError):
    """ODE integration failed (step underflow, horizon crossing, ...)."""
