"""Exception types shared across the package."""


class AgebranchError(Exception):
    """Base class for all package-specific errors."""


class InvalidSpec(AgebranchError):
    """Model parameters violate a structural assumption."""


class EmptyOrZeroMass(AgebranchError):
    """Weighted selection attempted on a population with zero rate mass."""


class HorizonNegative(AgebranchError):
    """Simulation horizon must be nonnegative."""


class TimeOutOfRange(AgebranchError):
    """Requested time lies outside a recorded trajectory."""


class InvalidGrid(AgebranchError):
    """Time grid is malformed (nonpositive step or empty)."""


class NonConvergentStep(AgebranchError):
    """Per-step fixed point failed; the time step is too coarse."""


class Supercritical(AgebranchError):
    """Mean reproduction per individual is >= 1; decay constants undefined."""


class NoMalthusianRoot(AgebranchError):
    """No exponential tilt reaches unit mean reproduction below the moment abscissa."""


class MissingMomentCondition(AgebranchError):
    """An exponential-moment condition required by a limit theorem fails."""


class GridTooShort(AgebranchError):
    """Requested evaluation time exceeds the solved grid horizon."""


class ConfigError(AgebranchError):
    """Experiment configuration file is malformed."""
