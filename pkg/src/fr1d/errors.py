"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration: bad degree, mismatched pairing, empty domain, ..."""


class DataError(ValueError):
    """Input data violates a contract (non-finite samples, duplicate nodes)."""


class NumericalError(RuntimeError):
    """A numerical procedure failed (singular system, diverging iteration)."""


class EvaluationError(NumericalError):
    """An exact-solution evaluation did not converge."""


class BlowUpError(NumericalError):
    """The discrete solution became non-finite.

    Carries the last stable time and, when raised by a driver loop, the
    partial result series recorded up to that time.
    """

    def __init__(self, message, time=None, series=None):
        super().__init__(message)
        self.time = time
        self.series = series
