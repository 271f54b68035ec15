"""Exception types shared across the package."""


class ExcursionLabError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ExcursionLabError):
    """An argument lies outside the geometric domain of the operation."""


class CoincidentPointsError(ExcursionLabError):
    """Two points that must be distinct are closer than the hard tolerance."""


class SeriesConvergenceError(ExcursionLabError):
    """A kernel series did not meet its tail bound within the term cap."""


class TubeTooWideError(ExcursionLabError):
    """Tube width is incompatible with the chord geometry."""


class GeneralPositionError(ExcursionLabError):
    """Chord diagram violates the general-position requirement."""


class RejectionBudgetError(ExcursionLabError):
    """A rejection sampler exceeded its attempt budget."""


class InfeasibleEventError(ExcursionLabError):
    """Predicted event probability is too small for direct Monte Carlo."""

    def __init__(self, message, predicted=None, eps_range=None):
        super().__init__(message)
        self.predicted = predicted
        self.eps_range = eps_range


class InsufficientHitsError(ExcursionLabError):
    """Too few event hits to run a regression; lists starved grid points."""

    def __init__(self, message, starved=()):
        super().__init__(message)
        self.starved = tuple(starved)


class StarvedBinsError(ExcursionLabError):
    """Histogram bins too empty for a valid chi-square comparison."""


class ResolutionError(ExcursionLabError):
    """Path resolution is too coarse for the requested evaluation."""


class ConfigError(ExcursionLabError):
    """Invalid experiment configuration; message carries the key path."""
