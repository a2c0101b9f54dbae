"""Embedding and extraction engine.

One plane is processed as: Haar DWT -> DCT of the HH band -> write one
secret bit into each key-selected coefficient -> inverse DCT -> inverse
DWT -> round and clamp to 8 bits. A bit b replaces the chosen coefficient
with (2b - 1) * alpha, so extraction only needs the coefficient sign and
is blind: the receiver recomputes the transforms on the stego plane and
reads signs at the key-selected positions, without ever seeing the cover.

The three planes of an RGB cover carry three independent secrets, each
keyed by its own seed derived from the shared session key.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapacityExceeded, OddDimension
from .keying import derive_plane_seeds, high_freq_threshold, select_positions
from .transforms import Subbands, dct2, dwt2_haar, idct2, idwt2_haar

DEFAULT_ALPHA = 32.0

PLANE_NAMES = ("r", "g", "b")


def _check_plane(arr, name: str = "plane") -> np.ndarray:
    p = np.asarray(arr)
    if p.ndim != 2:
        raise ValueError(f"{name} must be 2D, got shape {p.shape}")
    if p.dtype == np.uint8:
        return p
    if not issubclass(p.dtype.type, np.integer):
        raise ValueError(f"{name} must hold integers in [0, 255], got dtype {p.dtype}")
    if p.size and (p.min() < 0 or p.max() > 255):
        raise ValueError(f"{name} values must lie in [0, 255]")
    return p.astype(np.uint8)


def _check_bits(arr, name: str = "bits") -> np.ndarray:
    b = np.asarray(arr)
    if b.ndim != 2:
        raise ValueError(f"{name} must be 2D, got shape {b.shape}")
    if b.size and not np.isin(b, (0, 1)).all():
        raise ValueError(f"{name} must contain only 0 and 1")
    return b.astype(np.uint8)


@dataclass(frozen=True)
class RgbImage:
    """Three same-shaped 8-bit planes of one color image."""

    r: np.ndarray
    g: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        for name in PLANE_NAMES:
            object.__setattr__(self, name, _check_plane(getattr(self, name), name))
        if not (self.r.shape == self.g.shape == self.b.shape):
            raise ValueError(
                f"plane shapes differ: {self.r.shape}, {self.g.shape}, {self.b.shape}"
            )

    @property
    def rows(self) -> int:
        return self.r.shape[0]

    @property
    def cols(self) -> int:
        return self.r.shape[1]

    @property
    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.r, self.g, self.b)

    @classmethod
    def from_array(cls, arr) -> "RgbImage":
        """Build from an H x W x 3 array (channel order R, G, B)."""
        a = np.asarray(arr)
        if a.ndim != 3 or a.shape[2] != 3:
            raise ValueError(f"expected an HxWx3 array, got shape {a.shape}")
        return cls(a[:, :, 0], a[:, :, 1], a[:, :, 2])

    def to_array(self) -> np.ndarray:
        """Stack the planes back into an H x W x 3 uint8 array."""
        return np.stack(self.planes, axis=2)


@dataclass(frozen=True)
class EmbedParams:
    """Session key plus embedding strength in DCT-coefficient units."""

    key: "str | bytes"
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")


def capacity(mh: int, nh: int) -> int:
    """Bits one plane can carry: the high-frequency position count of its
    mh x nh HH-DCT matrix (mh x nh are half the plane dimensions)."""
    t = high_freq_threshold(mh, nh)
    total = 0
    for u in range(mh):
        lo = max(0, t - u)
        if lo < nh:
            total += nh - lo
    return total


def plane_capacity(rows: int, cols: int) -> int:
    """Capacity of a full plane of the given (even) pixel dimensions."""
    _check_even(rows, cols)
    return capacity(rows // 2, cols // 2)


def binarize(gray, threshold: int = 128) -> np.ndarray:
    """Threshold a [0, 255] matrix into bits: 1 where value >= threshold."""
    g = _check_plane(gray, "gray")
    return (g >= threshold).astype(np.uint8)


def _check_even(rows: int, cols: int) -> None:
    if rows % 2 or cols % 2:
        raise OddDimension(f"plane dimensions must be even, got {rows}x{cols}")


def embed_plane(plane, secret, seed: int, alpha: float = DEFAULT_ALPHA) -> np.ndarray:
    """Embed one binary secret into one plane; returns the stego plane.

    Secret bits are flattened row-major and written in order to the
    seed-selected HH-DCT positions. Pixels are rounded with floor(x + 0.5)
    and clamped to [0, 255] after the inverse transforms.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    p = _check_plane(plane)
    s = _check_bits(secret, "secret")
    rows, cols = p.shape
    _check_even(rows, cols)
    mh, nh = rows // 2, cols // 2
    nbits = s.size
    cap = capacity(mh, nh)
    if nbits > cap:
        raise CapacityExceeded(f"secret needs {nbits} bits but the plane holds {cap}")

    bands = dwt2_haar(p.astype(np.float64))
    coeffs = dct2(bands.hh)
    if nbits:
        positions = select_positions(seed, mh, nh, nbits)
        us = np.fromiter((u for u, _ in positions), dtype=np.intp, count=nbits)
        vs = np.fromiter((v for _, v in positions), dtype=np.intp, count=nbits)
        coeffs[us, vs] = (2.0 * s.reshape(-1) - 1.0) * alpha
    stego = idwt2_haar(Subbands(bands.ll, bands.lh, bands.hl, idct2(coeffs)))
    return np.clip(np.floor(stego + 0.5), 0, 255).astype(np.uint8)


def extract_plane(plane, seed: int, secret_rows: int, secret_cols: int) -> np.ndarray:
    """Blind-extract a secret of known size from one stego plane.

    Recomputes the forward transforms and reads coefficient signs at the
    seed-selected positions: positive decodes as 1, zero or negative as 0.
    """
    if secret_rows < 0 or secret_cols < 0:
        raise ValueError("secret dimensions must be nonnegative")
    p = _check_plane(plane)
    rows, cols = p.shape
    _check_even(rows, cols)
    mh, nh = rows // 2, cols // 2
    nbits = secret_rows * secret_cols
    cap = capacity(mh, nh)
    if nbits > cap:
        raise CapacityExceeded(f"secret needs {nbits} bits but the plane holds {cap}")
    if nbits == 0:
        return np.zeros((secret_rows, secret_cols), dtype=np.uint8)

    coeffs = dct2(dwt2_haar(p.astype(np.float64)).hh)
    positions = select_positions(seed, mh, nh, nbits)
    us = np.fromiter((u for u, _ in positions), dtype=np.intp, count=nbits)
    vs = np.fromiter((v for _, v in positions), dtype=np.intp, count=nbits)
    bits = (coeffs[us, vs] > 0.0).astype(np.uint8)
    return bits.reshape(secret_rows, secret_cols)


def embed(cover: RgbImage, secrets, params: EmbedParams) -> RgbImage:
    """Embed three secrets (R, G, B order) into a cover image.

    Unused planes take empty (0 x 0) secrets. Raises CapacityExceeded
    naming the offending plane when a secret does not fit.
    """
    if len(secrets) != 3:
        raise ValueError(f"expected three secrets, got {len(secrets)}")
    seeds = derive_plane_seeds(params.key)
    out = []
    for name, plane, secret, seed in zip(PLANE_NAMES, cover.planes, secrets, seeds):
        try:
            out.append(embed_plane(plane, secret, seed, params.alpha))
        except CapacityExceeded as exc:
            raise CapacityExceeded(f"{name.upper()} plane: {exc}") from None
    return RgbImage(*out)


def extract(stego: RgbImage, key, sizes) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Blind-extract the three secrets given the key and their sizes.

    ``sizes`` is three (rows, cols) pairs in R, G, B order; use (0, 0)
    for planes that carry nothing.
    """
    if len(sizes) != 3:
        raise ValueError(f"expected three (rows, cols) pairs, got {len(sizes)}")
    seeds = derive_plane_seeds(key)
    out = []
    for name, plane, (srows, scols), seed in zip(PLANE_NAMES, stego.planes, sizes, seeds):
        try:
            out.append(extract_plane(plane, seed, srows, scols))
        except CapacityExceeded as exc:
            raise CapacityExceeded(f"{name.upper()} plane: {exc}") from None
    return tuple(out)
