"""Fidelity metrics and the post-extraction cleanup filter."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyInput, ShapeMismatch
from .stego import RgbImage, _check_bits


@dataclass(frozen=True)
class QualityReport:
    """PSNR in dB (inf when images are identical) plus the underlying MSE."""

    psnr_db: float
    mse: float
    max_pixel: int = 255


def psnr(a: RgbImage, b: RgbImage) -> QualityReport:
    """Peak signal-to-noise ratio between two RGB images.

    MSE averages squared pixel differences over all three planes with
    equal weight; PSNR is 10 * log10(255^2 / MSE) against the fixed 8-bit
    peak, not the per-image maximum.
    """
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeMismatch(
            f"image shapes differ: {a.rows}x{a.cols} vs {b.rows}x{b.cols}"
        )
    if a.rows == 0 or a.cols == 0:
        raise EmptyInput("images are empty")
    se = 0.0
    for pa, pb in zip(a.planes, b.planes):
        d = pa.astype(np.float64) - pb.astype(np.float64)
        se += float(np.sum(d * d))
    mse = se / (3.0 * a.rows * a.cols)
    if mse == 0.0:
        return QualityReport(psnr_db=math.inf, mse=0.0)
    return QualityReport(psnr_db=10.0 * math.log10(255.0**2 / mse), mse=mse)


def ber(a, b) -> float:
    """Fraction of mismatched bits between two same-shaped binary images."""
    a = _check_bits(a, "a")
    b = _check_bits(b, "b")
    if a.shape != b.shape:
        raise ShapeMismatch(f"bit image shapes differ: {a.shape} vs {b.shape}")
    if a.size == 0:
        raise EmptyInput("bit images are empty")
    return float(np.mean(a != b))


def majority_filter_3x3(img) -> np.ndarray:
    """3x3 binary majority filter with edge-replicated borders.

    Every output bit is the majority over nine samples (so there are no
    ties); isolated salt-and-pepper flips inside constant regions vanish.
    """
    bits = _check_bits(img, "img")
    if bits.size == 0:
        raise EmptyInput("bit image is empty")
    padded = np.pad(bits.astype(np.int32), 1, mode="edge")
    rows, cols = bits.shape
    counts = sum(
        padded[dy : dy + rows, dx : dx + cols] for dy in range(3) for dx in range(3)
    )
    return (counts >= 5).astype(np.uint8)
