import numpy as np
import pytest

from conftest import random_spectrogram
from vowelaug.baseline_aug import (
    MaskParams,
    MixParams,
    _draw_bands,
    mixup,
    spec_augment,
    spec_mix,
)
from vowelaug.dsp import MelConfig, MelSpectrogram


def _spec(values):
    return MelSpectrogram(values=np.asarray(values, dtype=float), config=MelConfig())


def test_spec_augment_zero_masks_is_identity(rng):
    s = random_spectrogram(rng)
    out = spec_augment(s, MaskParams(n_freq_masks=0, n_time_masks=0), rng)
    assert np.array_equal(out.values, s.values)


def test_spec_augment_zero_widths_is_identity(rng):
    s = random_spectrogram(rng)
    out = spec_augment(s, MaskParams(max_freq_width=0, max_time_width=0), rng)
    assert np.array_equal(out.values, s.values)


def test_spec_augment_masked_regions_exact(rng):
    p = MaskParams(n_freq_masks=2, max_freq_width=5, n_time_masks=2, max_time_width=7)
    for _ in range(100):
        s = random_spectrogram(rng, low=0.5, high=2.0)  # strictly > mask_value
        # replay the band draws against a fork of the rng state
        replay = np.random.default_rng(rng.bit_generator.state["state"]["state"])
        out = spec_augment(s, p, replay)
        oracle = np.random.default_rng(rng.bit_generator.state["state"]["state"])
        freq_bands = _draw_bands(s.n_mels, p.n_freq_masks, p.max_freq_width, oracle)
        time_bands = _draw_bands(s.n_frames, p.n_time_masks, p.max_time_width, oracle)
        masked = np.zeros_like(s.values, dtype=bool)
        for start, width in freq_bands:
            masked[start : start + width, :] = True
        for start, width in time_bands:
            masked[:, start : start + width] = True
        assert np.all(out.values[masked] == p.mask_value)
        assert np.array_equal(out.values[~masked], s.values[~masked])
        assert out.values.shape == s.values.shape
        rng.random()  # advance so iterations differ


def test_mixup_endpoints(rng):
    a = random_spectrogram(rng, n_frames=10)
    b = random_spectrogram(rng, n_frames=10)
    assert np.array_equal(mixup(a, b, 1.0).values, a.values)
    assert np.array_equal(mixup(a, b, 0.0).values, b.values)


def test_mixup_hand_example():
    out = mixup(_spec([[2.0]]), _spec([[4.0]]), 0.5)
    assert out.values[0, 0] == 3.0


def test_mixup_shape_adaptation(rng):
    a = random_spectrogram(rng, n_frames=8)
    b = random_spectrogram(rng, n_frames=5)
    out = mixup(a, b, 0.0)
    assert out.n_frames == 8
    assert np.array_equal(out.values[:, :5], b.values)
    for t in range(5, 8):
        assert np.array_equal(out.values[:, t], b.values[:, -1])
    long_b = random_spectrogram(rng, n_frames=12)
    assert np.array_equal(mixup(a, long_b, 0.0).values, long_b.values[:, :8])


def test_mixup_rejects_mel_mismatch(rng):
    a = random_spectrogram(rng, n_mels=16)
    b = random_spectrogram(rng, n_mels=8)
    with pytest.raises(ValueError):
        mixup(a, b, 0.5)


def test_mixup_affine_identity(rng):
    for _ in range(100):
        a = random_spectrogram(rng, n_frames=9)
        b = random_spectrogram(rng, n_frames=9)
        lam = rng.random()
        lhs = mixup(a, b, lam).values + mixup(b, a, lam).values
        assert np.max(np.abs(lhs - (a.values + b.values))) < 1e-12


def test_spec_mix_zero_masks_is_a(rng):
    a = random_spectrogram(rng, n_frames=10)
    b = random_spectrogram(rng, n_frames=10)
    p = MixParams(masks=MaskParams(n_freq_masks=0, n_time_masks=0))
    assert np.array_equal(spec_mix(a, b, p, rng).values, a.values)


def test_spec_mix_full_cover_is_b(rng):
    a = random_spectrogram(rng, n_mels=8, n_frames=10)
    b = random_spectrogram(rng, n_mels=8, n_frames=10)
    p = MixParams(masks=MaskParams(n_freq_masks=0, n_time_masks=1, max_time_width=10**6))
    # force a full-width time band by drawing until width == n_frames
    for seed in range(1000):
        r = np.random.default_rng(seed)
        width = int(np.random.default_rng(seed).integers(0, 11))
        if width == 10:
            out = spec_mix(a, b, p, r)
            assert np.array_equal(out.values, b.values)
            return
    pytest.fail("no seed produced a full-width band")


def test_spec_mix_cell_provenance(rng):
    p = MixParams(masks=MaskParams(n_freq_masks=2, max_freq_width=4, n_time_masks=2, max_time_width=5))
    for _ in range(100):
        a = random_spectrogram(rng, n_frames=12, low=0.0, high=1.0)
        b = random_spectrogram(rng, n_frames=12, low=2.0, high=3.0)  # disjoint ranges
        out = spec_mix(a, b, p, rng)
        from_a = out.values == a.values
        from_b = out.values == b.values
        assert np.all(from_a | from_b)
        assert not np.any(from_a & from_b)


def test_spec_mix_recorded_band(rng):
    a = random_spectrogram(rng, n_mels=10, n_frames=8)
    b = random_spectrogram(rng, n_mels=10, n_frames=8)
    p = MixParams(masks=MaskParams(n_freq_masks=1, max_freq_width=3, n_time_masks=0))
    replay = np.random.default_rng(12345)
    (start, width), = _draw_bands(10, 1, 3, np.random.default_rng(12345))
    out = spec_mix(a, b, p, replay)
    assert np.array_equal(out.values[start : start + width, :], b.values[start : start + width, :])
    rest = np.ones(10, dtype=bool)
    rest[start : start + width] = False
    assert np.array_equal(out.values[rest, :], a.values[rest, :])


def test_deterministic_under_fixed_rng(rng):
    a = random_spectrogram(rng, n_frames=10)
    b = random_spectrogram(rng, n_frames=10)
    p = MixParams()
    out1 = spec_mix(a, b, p, np.random.default_rng(7)).values
    out2 = spec_mix(a, b, p, np.random.default_rng(7)).values
    assert np.array_equal(out1, out2)
    m1 = spec_augment(a, MaskParams(), np.random.default_rng(7)).values
    m2 = spec_augment(a, MaskParams(), np.random.default_rng(7)).values
    assert np.array_equal(m1, m2)
