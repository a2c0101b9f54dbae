"""Shared test utilities: independent reference oracles and input synthesis.

The reference implementations here deliberately avoid the package's own
code paths (plain-int recurrences, per-coefficient double sums, explicit
2x2 block loops) so they can serve as oracles for it.
"""

import numpy as np

MASK64 = (1 << 64) - 1


# --- reference recurrences (plain python ints) ---

def fnv1a64_ref(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h = ((h ^ byte) * 0x00000100000001B3) & MASK64
    return h


def splitmix64_ref(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, (z ^ (z >> 31)) & MASK64


def select_positions_ref(seed: int, mh: int, nh: int, count: int) -> list:
    t = (mh + nh) // 2
    elig = [(u, v) for u in range(mh) for v in range(nh) if u + v >= t]
    state = seed
    for i in range(len(elig) - 1, 0, -1):
        state, out = splitmix64_ref(state)
        j = out % (i + 1)
        elig[i], elig[j] = elig[j], elig[i]
    return elig[:count]


def count_eligible_ref(mh: int, nh: int) -> int:
    t = (mh + nh) // 2
    return sum(1 for u in range(mh) for v in range(nh) if u + v >= t)


# --- reference transforms ---

def dwt2_blocks_ref(x: np.ndarray):
    """Haar subbands via an explicit loop over 2x2 blocks."""
    m, n = x.shape[0] // 2, x.shape[1] // 2
    ll, lh, hl, hh = (np.empty((m, n)) for _ in range(4))
    for i in range(m):
        for j in range(n):
            p00, p01 = x[2 * i, 2 * j], x[2 * i, 2 * j + 1]
            p10, p11 = x[2 * i + 1, 2 * j], x[2 * i + 1, 2 * j + 1]
            ll[i, j] = (p00 + p01 + p10 + p11) / 2
            lh[i, j] = (p00 + p01 - p10 - p11) / 2
            hl[i, j] = (p00 - p01 + p10 - p11) / 2
            hh[i, j] = (p00 - p01 - p10 + p11) / 2
    return ll, lh, hl, hh


def dct2_direct(x: np.ndarray) -> np.ndarray:
    """Orthonormal DCT-II by direct per-coefficient double-sum evaluation."""
    m, n = x.shape
    out = np.empty((m, n))
    xs = np.arange(m).reshape(-1, 1)
    ys = np.arange(n).reshape(1, -1)
    for u in range(m):
        au = np.sqrt(1.0 / m) if u == 0 else np.sqrt(2.0 / m)
        cu = np.cos(np.pi * (2 * xs + 1) * u / (2.0 * m))
        for v in range(n):
            av = np.sqrt(1.0 / n) if v == 0 else np.sqrt(2.0 / n)
            cv = np.cos(np.pi * (2 * ys + 1) * v / (2.0 * n))
            out[u, v] = au * av * float(np.sum(x * cu * cv))
    return out


# --- input synthesis ---

def natural_plane(n: int = 512, seed: int = 7) -> np.ndarray:
    """Smooth natural-image-like plane: low-frequency waves plus mild noise."""
    rng = np.random.default_rng(seed)
    i = np.arange(n).reshape(-1, 1)
    j = np.arange(n).reshape(1, -1)
    base = (
        110.0
        + 60.0 * np.sin(2 * np.pi * i / 180.0)
        + 45.0 * np.cos(2 * np.pi * j / 240.0)
        + 25.0 * np.sin(2 * np.pi * (i + j) / 310.0)
        + rng.normal(0.0, 2.0, (n, n))
    )
    return np.clip(np.floor(base + 0.5), 0, 255).astype(np.uint8)


def gradient_plane(n: int = 512, offset: int = 0) -> np.ndarray:
    g = (np.add.outer(np.arange(n), np.arange(n)) + offset) % 256
    return g.astype(np.uint8)


def random_plane(rng, rows: int, cols: int) -> np.ndarray:
    return rng.integers(0, 256, (rows, cols), dtype=np.int64).astype(np.uint8)


def random_bits(rng, rows: int, cols: int) -> np.ndarray:
    return rng.integers(0, 2, (rows, cols), dtype=np.int64).astype(np.uint8)


def blocky_logo(rng, n: int = 64, block: int = 16) -> np.ndarray:
    """Logo-like secret made of large constant blocks."""
    cells = rng.integers(0, 2, (n // block, n // block), dtype=np.int64)
    return np.kron(cells, np.ones((block, block), dtype=np.int64)).astype(np.uint8)


def stripe_bits(n: int = 64) -> np.ndarray:
    """Full-width bands; invariant under the 3x3 majority filter."""
    bits = np.zeros((n, n), dtype=np.uint8)
    bits[n // 8 : 3 * n // 8, :] = 1
    bits[5 * n // 8 : 7 * n // 8, :] = 1
    return bits
