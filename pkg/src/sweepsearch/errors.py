"""Exception types shared across the package."""


class SweepSearchError(Exception):
    """Base class for all sweepsearch errors."""


class OddSwarmSize(SweepSearchError):
    """Swarm size must be an even count >= 2 (sweepers operate in pincer pairs)."""


class NonPositiveDimension(SweepSearchError):
    """A length or speed parameter is outside its valid range."""


class RegionTooSmall(SweepSearchError):
    """Initial region radius must exceed the sensor half-length."""


class SubcriticalSpeed(SweepSearchError):
    """Sweeper speed at or below the critical velocity: no inward progress possible."""


class SlowerThanEvader(SweepSearchError):
    """Spiral trajectory requires the sweeper to be strictly faster than the evaders."""


class NoBracket(SweepSearchError):
    """Root finder could not bracket a sign change (degenerate parameters)."""


class SimTimeout(SweepSearchError):
    """Simulation reached max_time with occupancy remaining."""


class ConfigParseError(SweepSearchError):
    """Malformed experiment configuration file."""
