"""stegoweave: keyed multi-image steganography in the DWT/DCT domain.

Hides three binary secret images in the R, G and B planes of one cover
image. Each plane is wavelet-decomposed, the diagonal-detail band is
DCT-transformed, and secret bits replace key-selected high-frequency
coefficients. Extraction is blind: the stego image, the session key and
the secret sizes are all the receiver needs.
"""

from .errors import (
    CapacityExceeded,
    CorruptImage,
    EmptyInput,
    OddDimension,
    ShapeMismatch,
    StegoError,
    UnsupportedFormat,
)
from .image_io import load_rgb, load_secret, save_rgb, save_secret
from .keying import (
    PlaneSeeds,
    derive_plane_seeds,
    derive_seed,
    eligible_positions,
    select_positions,
    splitmix64_next,
)
from .metrics import QualityReport, ber, majority_filter_3x3, psnr
from .stego import (
    DEFAULT_ALPHA,
    EmbedParams,
    RgbImage,
    binarize,
    capacity,
    embed,
    embed_plane,
    extract,
    extract_plane,
    plane_capacity,
)
from .transforms import Subbands, dct2, dwt2_haar, idct2, idwt2_haar

__version__ = "0.1.0"

__all__ = [
    "CapacityExceeded",
    "CorruptImage",
    "DEFAULT_ALPHA",
    "EmbedParams",
    "EmptyInput",
    "OddDimension",
    "PlaneSeeds",
    "QualityReport",
    "RgbImage",
    "ShapeMismatch",
    "StegoError",
    "Subbands",
    "UnsupportedFormat",
    "ber",
    "binarize",
    "capacity",
    "dct2",
    "derive_plane_seeds",
    "derive_seed",
    "dwt2_haar",
    "eligible_positions",
    "embed",
    "embed_plane",
    "extract",
    "extract_plane",
    "idct2",
    "idwt2_haar",
    "load_rgb",
    "load_secret",
    "majority_filter_3x3",
    "plane_capacity",
    "psnr",
    "save_rgb",
    "save_secret",
    "select_positions",
    "splitmix64_next",
]
