"""Single-level 2D Haar wavelet and orthonormal 2D DCT.

Both transforms use the orthonormal convention, so energy is preserved
(Parseval) and each inverse undoes its forward transform exactly up to
float64 rounding. Only one decomposition level is supported; the DCT is
applied to a whole matrix, never blockwise.

All functions are pure: inputs are never mutated and there is no hidden
state, so concurrent use is safe.
"""

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import EmptyInput, OddDimension, ShapeMismatch


class Subbands(NamedTuple):
    """The four subbands of one 2D wavelet decomposition level."""

    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray


def _as_matrix(x, name: str) -> np.ndarray:
    m = np.asarray(x, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"{name} must be a 2D matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError(f"{name} contains non-finite values")
    return m


def dwt2_haar(plane) -> Subbands:
    """Single-level orthonormal 2D Haar decomposition.

    Each disjoint 2x2 block [p00 p01; p10 p11] maps to one coefficient per
    subband:

        ll = (p00 + p01 + p10 + p11) / 2    (approximation)
        lh = (p00 + p01 - p10 - p11) / 2    (vertical detail)
        hl = (p00 - p01 + p10 - p11) / 2    (horizontal detail)
        hh = (p00 - p01 - p10 + p11) / 2    (diagonal detail)

    Requires even dimensions; each subband is half the input size.
    """
    m = _as_matrix(plane, "plane")
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        raise EmptyInput(f"plane has a zero dimension: {rows}x{cols}")
    if rows % 2 or cols % 2:
        raise OddDimension(f"plane dimensions must be even, got {rows}x{cols}")
    p00 = m[0::2, 0::2]
    p01 = m[0::2, 1::2]
    p10 = m[1::2, 0::2]
    p11 = m[1::2, 1::2]
    return Subbands(
        ll=(p00 + p01 + p10 + p11) / 2.0,
        lh=(p00 + p01 - p10 - p11) / 2.0,
        hl=(p00 - p01 + p10 - p11) / 2.0,
        hh=(p00 - p01 - p10 + p11) / 2.0,
    )


def idwt2_haar(bands) -> np.ndarray:
    """Invert :func:`dwt2_haar`; subbands must share one shape."""
    ll, lh, hl, hh = (_as_matrix(b, n) for b, n in zip(bands, ("ll", "lh", "hl", "hh")))
    if not (ll.shape == lh.shape == hl.shape == hh.shape):
        shapes = [b.shape for b in (ll, lh, hl, hh)]
        raise ShapeMismatch(f"subband shapes differ: {shapes}")
    m, n = ll.shape
    out = np.empty((2 * m, 2 * n), dtype=np.float64)
    out[0::2, 0::2] = (ll + lh + hl + hh) / 2.0
    out[0::2, 1::2] = (ll + lh - hl - hh) / 2.0
    out[1::2, 0::2] = (ll - lh + hl - hh) / 2.0
    out[1::2, 1::2] = (ll - lh - hl + hh) / 2.0
    return out


@lru_cache(maxsize=32)
def _dct_basis(n: int) -> np.ndarray:
    """Orthonormal DCT-II basis: row u is a(u) * cos(pi * (2x+1) * u / 2n)."""
    u = np.arange(n).reshape(-1, 1)
    x = np.arange(n).reshape(1, -1)
    basis = np.cos(np.pi * (2 * x + 1) * u / (2.0 * n)) * np.sqrt(2.0 / n)
    basis[0, :] = np.sqrt(1.0 / n)
    basis.flags.writeable = False
    return basis


def dct2(m) -> np.ndarray:
    """Orthonormal 2D DCT-II, computed separably as B_r @ m @ B_c^T."""
    m = _as_matrix(m, "matrix")
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        raise EmptyInput(f"matrix has a zero dimension: {rows}x{cols}")
    return _dct_basis(rows) @ m @ _dct_basis(cols).T


def idct2(c) -> np.ndarray:
    """Inverse of :func:`dct2` (orthonormal, so the transpose inverts)."""
    c = _as_matrix(c, "coefficients")
    rows, cols = c.shape
    if rows == 0 or cols == 0:
        raise EmptyInput(f"coefficients have a zero dimension: {rows}x{cols}")
    return _dct_basis(rows).T @ c @ _dct_basis(cols)
