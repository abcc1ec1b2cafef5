"""Exception types shared across the package."""


class NonPositiveTemperature(ValueError):
    """Raised when a thermal quantity is requested at T <= 0."""


class ZeroPlaquettes(ValueError):
    """Raised when a finite chain is requested with fewer than one plaquette."""


class ChainTooLarge(ValueError):
    """Raised when brute-force enumeration would exceed the configuration cap."""


class NotADensityMatrix(ValueError):
    """Raised when a matrix fails the trace/hermiticity/positivity checks."""


class InvalidRange(ValueError):
    """Raised for malformed sweep ranges (lo >= hi, too few points, bad axis)."""


class NonPositiveTemperatureAxis(InvalidRange):
    """Raised when a temperature sweep would touch T <= 0."""


class UnknownPreset(ValueError):
    """Raised for preset names that are not registered."""


class NoCrossingFound(RuntimeError):
    """Raised when a threshold crossing cannot be bracketed inside the search window."""
