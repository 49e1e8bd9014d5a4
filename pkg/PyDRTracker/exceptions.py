# PyDRTracker/exceptions.py


class DRTrackError(Exception):
    """Base class for every error raised by PyDRTracker."""


class DimensionMismatchError(DRTrackError, ValueError):
    """A patch cannot be tiled exactly by the requested cell size."""


class ShapeMismatchError(DRTrackError, ValueError):
    """Two arrays that must share a shape do not."""


class NonFiniteError(DRTrackError, ValueError):
    """NaN or infinite values reached the solver."""


class SpectrumSymmetryError(DRTrackError, ValueError):
    """An inverse transform left a non-negligible imaginary residue."""


class TrackerInitError(DRTrackError, ValueError):
    """The initial bounding box cannot seed a tracker."""


class SequenceFormatError(DRTrackError, ValueError):
    """A sequence directory or groundtruth file is malformed."""


class CnTableError(DRTrackError, ValueError):
    """A color-names lookup table file is malformed."""


class ConfigError(DRTrackError, ValueError):
    """A configuration file or override is invalid."""
