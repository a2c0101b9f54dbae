"""Exception types shared across the package."""


class StegoError(Exception):
    """Base class for all stegoweave errors."""


class EmptyInput(StegoError, ValueError):
    """An input matrix or image has a zero dimension where data is required."""


class OddDimension(StegoError, ValueError):
    """Plane dimensions must be even for the 2x2 wavelet blocking."""


class ShapeMismatch(StegoError, ValueError):
    """Inputs that must share dimensions do not."""


class CapacityExceeded(StegoError, ValueError):
    """A secret needs more coefficient slots than the plane offers."""


class UnsupportedFormat(StegoError, ValueError):
    """File is not one of the supported lossless image formats."""


class CorruptImage(StegoError, ValueError):
    """File carries a supported format signature but cannot be decoded."""
