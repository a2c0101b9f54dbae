import numpy as np
import pytest

from stegoweave.errors import EmptyInput, OddDimension, ShapeMismatch
from stegoweave.transforms import Subbands, dct2, dwt2_haar, idct2, idwt2_haar

from helpers import dct2_direct, dwt2_blocks_ref


def test_dwt_constant_block_concentrates_in_ll():
    bands = dwt2_haar(np.ones((2, 2)))
    assert np.allclose(bands.ll, [[2.0]])
    for detail in (bands.lh, bands.hl, bands.hh):
        assert np.allclose(detail, [[0.0]])


def test_dwt_known_2x2():
    bands = dwt2_haar([[1.0, 2.0], [3.0, 4.0]])
    assert np.allclose(bands.ll, [[5.0]])
    assert np.allclose(bands.lh, [[-2.0]])
    assert np.allclose(bands.hl, [[-1.0]])
    assert np.allclose(bands.hh, [[0.0]])


def test_dwt_constant_matrix_details_vanish():
    bands = dwt2_haar(np.full((6, 10), 3.5))
    assert np.allclose(bands.ll, 7.0)
    for detail in (bands.lh, bands.hl, bands.hh):
        assert np.allclose(detail, 0.0)


def test_dwt_matches_blockwise_reference():
    rng = np.random.default_rng(11)
    for rows, cols in [(2, 2), (4, 6), (8, 8), (10, 4)]:
        x = rng.normal(size=(rows, cols)) * 100
        got = dwt2_haar(x)
        for band, ref in zip(got, dwt2_blocks_ref(x)):
            assert np.max(np.abs(band - ref)) < 1e-12


def test_dwt_idwt_roundtrip_random():
    rng = np.random.default_rng(5)
    for _ in range(25):
        rows = 2 * int(rng.integers(1, 33))
        cols = 2 * int(rng.integers(1, 33))
        x = rng.normal(size=(rows, cols)) * 255
        back = idwt2_haar(dwt2_haar(x))
        assert np.max(np.abs(back - x)) < 1e-9


def test_dwt_energy_preservation():
    rng = np.random.default_rng(6)
    for _ in range(25):
        x = rng.normal(size=(16, 24)) * 50
        bands = dwt2_haar(x)
        total = sum(float(np.sum(b * b)) for b in bands)
        assert total == pytest.approx(float(np.sum(x * x)), rel=1e-9)


def test_dwt_rejects_odd_and_empty():
    with pytest.raises(OddDimension):
        dwt2_haar(np.zeros((3, 4)))
    with pytest.raises(OddDimension):
        dwt2_haar(np.zeros((4, 5)))
    with pytest.raises(EmptyInput):
        dwt2_haar(np.zeros((0, 4)))
    with pytest.raises(ValueError):
        dwt2_haar(np.zeros(8))


def test_idwt_known_inverse():
    out = idwt2_haar(Subbands([[2.0]], [[0.0]], [[0.0]], [[0.0]]))
    assert np.allclose(out, [[1.0, 1.0], [1.0, 1.0]])
    out = idwt2_haar(Subbands([[5.0]], [[-2.0]], [[-1.0]], [[0.0]]))
    assert np.allclose(out, [[1.0, 2.0], [3.0, 4.0]])


def test_idwt_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        idwt2_haar(Subbands(np.zeros((2, 2)), np.zeros((2, 2)), np.zeros((2, 2)), np.zeros((2, 3))))


def test_dwt_of_idwt_is_identity():
    rng = np.random.default_rng(9)
    bands = Subbands(*(rng.normal(size=(4, 4)) for _ in range(4)))
    back = dwt2_haar(idwt2_haar(bands))
    for a, b in zip(back, bands):
        assert np.max(np.abs(a - b)) < 1e-9


def test_dct_1x1_identity():
    assert np.allclose(dct2([[3.25]]), [[3.25]])
    assert np.allclose(idct2([[3.25]]), [[3.25]])


def test_dct_constant_concentrates_in_dc():
    c = dct2(np.ones((2, 2)))
    assert c[0, 0] == pytest.approx(2.0)
    assert np.max(np.abs(c.reshape(-1)[1:])) < 1e-12

    c = dct2(np.full((6, 8), 2.0))
    mask = np.ones_like(c, dtype=bool)
    mask[0, 0] = False
    assert np.max(np.abs(c[mask])) < 1e-12


def test_idct_dc_case():
    c = np.zeros((2, 2))
    c[0, 0] = 2.0
    assert np.allclose(idct2(c), np.ones((2, 2)))


def test_dct_parseval():
    rng = np.random.default_rng(13)
    for _ in range(25):
        x = rng.normal(size=(8, 8)) * 30
        c = dct2(x)
        assert float(np.sum(c * c)) == pytest.approx(float(np.sum(x * x)), rel=1e-9)


def test_dct_idct_roundtrip():
    rng = np.random.default_rng(14)
    x = rng.normal(size=(16, 16)) * 255
    assert np.max(np.abs(idct2(dct2(x)) - x)) < 1e-9
    x = rng.normal(size=(6, 10))
    assert np.max(np.abs(idct2(dct2(x)) - x)) < 1e-9


def test_dct_matches_direct_double_sum():
    rng = np.random.default_rng(15)
    for rows, cols in [(1, 1), (2, 2), (3, 5), (8, 8), (7, 12), (16, 16), (32, 32)]:
        x = rng.normal(size=(rows, cols)) * 100
        assert np.max(np.abs(dct2(x) - dct2_direct(x))) < 1e-9


def test_dct_rejects_empty():
    with pytest.raises(EmptyInput):
        dct2(np.zeros((0, 3)))
    with pytest.raises(EmptyInput):
        idct2(np.zeros((3, 0)))


def test_transforms_do_not_mutate_input():
    x = np.arange(16, dtype=np.float64).reshape(4, 4)
    kept = x.copy()
    dwt2_haar(x)
    dct2(x)
    assert np.array_equal(x, kept)


def test_rejects_non_finite():
    bad = np.ones((4, 4))
    bad[1, 2] = np.nan
    with pytest.raises(ValueError):
        dct2(bad)
    with pytest.raises(ValueError):
        dwt2_haar(bad)
