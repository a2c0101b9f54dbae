"""Session-key derivation and keyed selection of embedding positions.

A text or byte key is hashed to a 64-bit master seed (FNV-1a), three
per-plane seeds are split off with SplitMix64, and each seed drives a
Fisher-Yates shuffle over the eligible high-frequency coefficient
positions of an HH-band DCT matrix. Everything is a pure function of its
arguments, fully specified by the constants below, so two independent
runs (or machines) agree bit for bit.

The generator is deterministic and reproducible, not cryptographically
secure; session secrecy rests on the key never leaving the two parties.
"""

from typing import NamedTuple

import numpy as np

from .errors import CapacityExceeded

_MASK64 = (1 << 64) - 1

FNV_OFFSET_BASIS = 0xCBF29CE484222325
FNV_PRIME = 0x00000100000001B3

SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class PlaneSeeds(NamedTuple):
    """64-bit seeds for the R, G and B planes, derived from one key."""

    seed_r: int
    seed_g: int
    seed_b: int


def _key_bytes(key) -> bytes:
    if isinstance(key, str):
        return key.encode("utf-8")
    return bytes(key)


def derive_seed(key) -> int:
    """FNV-1a 64-bit hash of the key (UTF-8 encoded when given as text)."""
    h = FNV_OFFSET_BASIS
    for b in _key_bytes(key):
        h = ((h ^ b) * FNV_PRIME) & _MASK64
    return h


def splitmix64_next(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns (new_state, output), both mod 2**64."""
    state = (state + SPLITMIX_GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return state, (z ^ (z >> 31)) & _MASK64


def _splitmix64_outputs(seed: int, n: int) -> list[int]:
    """First n outputs of the SplitMix64 stream started at ``seed``.

    Vectorized equivalent of n successive :func:`splitmix64_next` calls;
    state k is seed + k * gamma mod 2**64, so the whole stream maps onto
    uint64 array arithmetic.
    """
    if n <= 0:
        return []
    steps = np.arange(1, n + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + steps * np.uint64(SPLITMIX_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    z = z ^ (z >> np.uint64(31))
    return z.tolist()


def derive_plane_seeds(key) -> PlaneSeeds:
    """Derive the three per-plane seeds from one session key."""
    state = derive_seed(key)
    seeds = []
    for _ in range(3):
        state, out = splitmix64_next(state)
        seeds.append(out)
    return PlaneSeeds(*seeds)


def high_freq_threshold(mh: int, nh: int) -> int:
    """Eligibility cutoff: (u, v) qualifies when u + v >= this value."""
    return (mh + nh) // 2


def eligible_positions(mh: int, nh: int) -> list[tuple[int, int]]:
    """All high-frequency positions of an mh x nh matrix, row-major.

    The eligible region is the lower-right anti-diagonal triangle
    u + v >= floor((mh + nh) / 2), which leaves the DC and low-frequency
    coefficients untouched by any embedding.
    """
    t = high_freq_threshold(mh, nh)
    return [(u, v) for u in range(mh) for v in range(max(0, t - u), nh)]


def select_positions(seed: int, mh: int, nh: int, count: int) -> list[tuple[int, int]]:
    """First ``count`` entries of the keyed shuffle of the eligible region.

    The eligible list is shuffled with Fisher-Yates from the last index
    down to 1; the swap partner for index i is the next SplitMix64 output
    mod (i + 1). The full shuffle always runs so that any prefix is stable
    regardless of ``count``.
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    positions = eligible_positions(mh, nh)
    n = len(positions)
    if count > n:
        raise CapacityExceeded(
            f"requested {count} positions but only {n} are eligible in {mh}x{nh}"
        )
    draws = _splitmix64_outputs(seed, n - 1)
    for k, i in enumerate(range(n - 1, 0, -1)):
        j = draws[k] % (i + 1)
        positions[i], positions[j] = positions[j], positions[i]
    return positions[:count]
