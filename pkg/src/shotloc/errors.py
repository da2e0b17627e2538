"""Exception hierarchy shared across the package."""


class ShotlocError(Exception):
    """Base class for all package-specific errors."""


class InsufficientSensors(ShotlocError):
    """Too few observations for the requested algorithm/constraint pair."""


class DegenerateGeometry(ShotlocError):
    """Sensor geometry cannot support a stable solution (rank loss,
    excessive condition number, or no real root)."""


class NoConvergence(ShotlocError):
    """Iterative solver exceeded its iteration budget."""


class AmbiguousSolution(ShotlocError):
    """Two mathematically consistent solutions remain and the data cannot
    discriminate between them."""


class NoConsistentSet(ShotlocError):
    """No pulse subset of the required size passes the mutual-consistency
    test."""


class InsufficientData(ShotlocError):
    """Not enough solutions/samples to compute the requested statistic."""
