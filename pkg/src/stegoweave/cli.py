"""Command-line front end.

Exit codes are stable: 0 on success, 1 on I/O or format errors (including
odd image dimensions and shape mismatches), 2 on capacity or parameter
violations. With --json every command prints exactly one JSON object on
stdout; diagnostics go to stderr.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .errors import CapacityExceeded, OddDimension, StegoError
from .image_io import load_rgb, load_secret, save_rgb, save_secret
from .metrics import ber, majority_filter_3x3, psnr
from .stego import DEFAULT_ALPHA, EmbedParams, embed, extract, plane_capacity

_EMPTY_SECRET = np.zeros((0, 0), dtype=np.uint8)


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _threshold(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= value <= 255:
        raise argparse.ArgumentTypeError(f"threshold must be in [0, 255], got {text}")
    return value


def _size(text: str) -> tuple[int, int]:
    """Parse a WxH size string into (rows, cols)."""
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}")
    try:
        w, h = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH integers, got {text!r}")
    if w <= 0 or h <= 0:
        raise argparse.ArgumentTypeError(f"size must be positive, got {text!r}")
    return (h, w)


def _add_key_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--key", help="session key as UTF-8 text")
    group.add_argument("--key-file", help="file whose raw bytes are the session key")


def _read_key(args):
    if args.key_file is not None:
        with open(args.key_file, "rb") as fh:
            return fh.read()
    return args.key


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _json_db(value: float):
    return "inf" if math.isinf(value) else value


def _format_db(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.4f}"


def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)


def cmd_embed(args) -> int:
    cover = load_rgb(args.cover)
    secret_paths = (args.secret_r, args.secret_g, args.secret_b)
    secrets = [
        load_secret(p, args.threshold) if p else _EMPTY_SECRET for p in secret_paths
    ]
    params = EmbedParams(key=_read_key(args), alpha=args.alpha)
    stego = embed(cover, secrets, params)
    _ensure_parent(args.out)
    save_rgb(stego, args.out)
    report = psnr(cover, stego)

    cap = plane_capacity(cover.rows, cover.cols)
    planes = {}
    lines = [f"stego written: {args.out}"]
    for name, path, secret in zip("rgb", secret_paths, secrets):
        planes[name] = {
            "secret": path,
            "rows": int(secret.shape[0]),
            "cols": int(secret.shape[1]),
            "bits": int(secret.size),
            "capacity": cap,
        }
        lines.append(f"plane {name.upper()}: {secret.size} bits embedded (capacity {cap})")
    lines.append(f"psnr vs cover: {_format_db(report.psnr_db)} dB")
    _emit(
        args,
        {
            "command": "embed",
            "stego": args.out,
            "alpha": args.alpha,
            "planes": planes,
            "psnr_db": _json_db(report.psnr_db),
            "mse": report.mse,
        },
        lines,
    )
    return 0


def cmd_extract(args) -> int:
    stego = load_rgb(args.stego)
    sizes = (args.size_r, args.size_g, args.size_b)
    key = _read_key(args)
    recovered = extract(stego, key, [s if s else (0, 0) for s in sizes])

    outputs = {}
    lines = []
    for name, size, bits in zip("rgb", sizes, recovered):
        if not size:
            continue
        if args.filter:
            bits = majority_filter_3x3(bits)
        path = f"{args.out_prefix}_{name}.png"
        _ensure_parent(path)
        save_secret(bits, path)
        outputs[name] = path
        lines.append(f"plane {name.upper()}: wrote {path} ({size[0]}x{size[1]} rows x cols)")
    if not outputs:
        lines.append("no sizes given; nothing extracted")
    _emit(args, {"command": "extract", "filter": bool(args.filter), "outputs": outputs}, lines)
    return 0


def cmd_capacity(args) -> int:
    cover = load_rgb(args.cover)
    cap = plane_capacity(cover.rows, cover.cols)
    side = math.isqrt(cap)
    _emit(
        args,
        {
            "command": "capacity",
            "cover": args.cover,
            "rows": cover.rows,
            "cols": cover.cols,
            "capacity_per_plane": cap,
            "max_square_side": side,
        },
        [
            f"cover: {cover.rows}x{cover.cols} (rows x cols)",
            f"capacity per plane: {cap} bits",
            f"largest square secret: {side}x{side}",
        ],
    )
    return 0


def cmd_psnr(args) -> int:
    report = psnr(load_rgb(args.image_a), load_rgb(args.image_b))
    _emit(
        args,
        {"command": "psnr", "psnr_db": _json_db(report.psnr_db), "mse": report.mse},
        [_format_db(report.psnr_db)],
    )
    return 0


def cmd_ber(args) -> int:
    value = ber(load_secret(args.bits_a), load_secret(args.bits_b))
    _emit(args, {"command": "ber", "ber": value}, [str(value)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stegoweave",
        description="Hide three binary images in one RGB cover and extract them "
        "blindly with the session key and the secret sizes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "embed",
        help="embed up to three secrets into a cover image",
        epilog="JSON keys: command, stego, alpha, planes.{r,g,b}.{secret,rows,cols,"
        "bits,capacity}, psnr_db ('inf' when identical), mse.",
    )
    p.add_argument("--cover", required=True, help="cover image (PNG or BMP, even dimensions)")
    p.add_argument("--secret-r", help="secret image for the R plane")
    p.add_argument("--secret-g", help="secret image for the G plane")
    p.add_argument("--secret-b", help="secret image for the B plane")
    _add_key_options(p)
    p.add_argument("--alpha", type=_positive_float, default=DEFAULT_ALPHA,
                   help=f"embedding strength (default {DEFAULT_ALPHA:g})")
    p.add_argument("--threshold", type=_threshold, default=128,
                   help="binarization threshold for secret inputs (default 128)")
    p.add_argument("--out", required=True, help="output stego image (.png or .bmp)")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser(
        "extract",
        help="blind-extract secrets from a stego image",
        epilog="Writes <prefix>_r.png, <prefix>_g.png, <prefix>_b.png for the planes "
        "whose size is given. JSON keys: command, filter, outputs.{r,g,b}.",
    )
    p.add_argument("--stego", required=True, help="stego image (PNG or BMP)")
    _add_key_options(p)
    p.add_argument("--size-r", type=_size, help="R-plane secret size as WxH")
    p.add_argument("--size-g", type=_size, help="G-plane secret size as WxH")
    p.add_argument("--size-b", type=_size, help="B-plane secret size as WxH")
    p.add_argument("--out-prefix", required=True, help="path prefix for recovered secrets")
    p.add_argument("--filter", action="store_true",
                   help="apply the 3x3 majority filter before saving")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser(
        "capacity",
        help="report per-plane capacity of a cover image",
        epilog="JSON keys: command, cover, rows, cols, capacity_per_plane, "
        "max_square_side.",
    )
    p.add_argument("--cover", required=True, help="cover image (PNG or BMP)")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser(
        "psnr",
        help="PSNR between two images of equal size",
        epilog="JSON keys: command, psnr_db ('inf' when identical), mse.",
    )
    p.add_argument("image_a")
    p.add_argument("image_b")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.set_defaults(func=cmd_psnr)

    p = sub.add_parser(
        "ber",
        help="bit-error rate between two binary images",
        epilog="Inputs are binarized at threshold 128. JSON keys: command, ber.",
    )
    p.add_argument("bits_a")
    p.add_argument("bits_b")
    p.add_argument("--json", action="store_true", help="print one JSON object")
    p.set_defaults(func=cmd_ber)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StegoError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
