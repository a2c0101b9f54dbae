"""Lossless image file I/O: PNG and BMP only.

Lossy formats are refused outright on save because recompression would
destroy the embedded coefficients. Input format is detected from magic
bytes, never from the extension. Writes go through a temp file and an
atomic rename so a crash cannot leave a half-written image behind.
"""

import os
import tempfile
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import CorruptImage, EmptyInput, UnsupportedFormat
from .stego import RgbImage, binarize, _check_bits

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"
_BMP_MAGIC = b"BM"

# formats we knowingly refuse; anything else unrecognized falls back to PNG
_REFUSED_SUFFIXES = {
    ".jpg": "JPEG",
    ".jpeg": "JPEG",
    ".jpe": "JPEG",
    ".webp": "WebP",
    ".gif": "GIF",
    ".tif": "TIFF",
    ".tiff": "TIFF",
    ".avif": "AVIF",
    ".heic": "HEIC",
    ".heif": "HEIF",
}


def _sniff_format(path) -> str:
    with open(path, "rb") as fh:
        head = fh.read(8)
    if head.startswith(_PNG_MAGIC):
        return "PNG"
    if head.startswith(_BMP_MAGIC):
        return "BMP"
    raise UnsupportedFormat(f"{path}: not a PNG or BMP file")


def _load_image(path) -> Image.Image:
    fmt = _sniff_format(path)
    try:
        with Image.open(path) as img:
            img.load()
            return img.copy()
    except (UnidentifiedImageError, OSError, SyntaxError, ValueError) as exc:
        raise CorruptImage(f"{path}: {fmt} data could not be decoded ({exc})") from None


def _output_format(path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in _REFUSED_SUFFIXES:
        raise UnsupportedFormat(
            f"{path}: {_REFUSED_SUFFIXES[suffix]} output is refused; lossy or "
            "unsupported recompression would destroy the embedded data. "
            "Use .png or .bmp."
        )
    return "BMP" if suffix in (".bmp", ".dib") else "PNG"


def _atomic_save(img: Image.Image, path, fmt: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            img.save(fh, format=fmt)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_rgb(path) -> RgbImage:
    """Load a PNG or BMP as three 8-bit planes.

    Grayscale inputs replicate into three identical planes; alpha
    channels are stripped.
    """
    img = _load_image(path)
    if img.mode != "RGB":
        img = img.convert("RGB")
    arr = np.asarray(img, dtype=np.uint8)
    return RgbImage.from_array(arr)


def save_rgb(img: RgbImage, path) -> None:
    """Write an RGB image losslessly: PNG by default, BMP for .bmp paths."""
    fmt = _output_format(path)
    _atomic_save(Image.fromarray(img.to_array(), mode="RGB"), path, fmt)


def _luma(rgb: np.ndarray) -> np.ndarray:
    """Integer BT.601-style luma; weights sum to 256 so gray stays exact."""
    r = rgb[:, :, 0].astype(np.int32)
    g = rgb[:, :, 1].astype(np.int32)
    b = rgb[:, :, 2].astype(np.int32)
    return ((77 * r + 150 * g + 29 * b) // 256).astype(np.uint8)


def load_secret(path, threshold: int = 128) -> np.ndarray:
    """Load an image as a binary secret: 1 where brightness >= threshold.

    Color inputs collapse to grayscale first via the fixed integer luma.
    """
    img = _load_image(path)
    if img.mode == "L":
        gray = np.asarray(img, dtype=np.uint8)
    else:
        if img.mode != "RGB":
            img = img.convert("RGB")
        gray = _luma(np.asarray(img, dtype=np.uint8))
    return binarize(gray, threshold)


def save_secret(bits, path) -> None:
    """Write a binary image as 8-bit grayscale (0 -> 0, 1 -> 255)."""
    b = _check_bits(bits, "bits")
    if b.size == 0:
        raise EmptyInput("cannot write an empty bit image")
    fmt = _output_format(path)
    _atomic_save(Image.fromarray(b * np.uint8(255), mode="L"), path, fmt)
