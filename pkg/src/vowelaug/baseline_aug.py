"""Baseline spectrogram augmentations: SpecAugment, Mixup, SpecMix.

SpecMix reuses SpecAugment's band geometry but fills bands with a second
sample's content instead of a constant. Shape adaptation of the partner
spectrogram is truncate-or-edge-repeat along the frame axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dsp import MelSpectrogram


@dataclass(frozen=True)
class MaskParams:
    n_freq_masks: int = 2
    max_freq_width: int = 27
    n_time_masks: int = 2
    max_time_width: int = 40
    mask_value: float = 0.0

    def __post_init__(self):
        if min(self.n_freq_masks, self.n_time_masks) < 0:
            raise ValueError("mask counts must be >= 0")
        if min(self.max_freq_width, self.max_time_width) < 0:
            raise ValueError("mask widths must be >= 0")


@dataclass(frozen=True)
class MixParams:
    alpha: float = 0.2
    masks: MaskParams = field(default_factory=MaskParams)

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")


def _draw_bands(n_total: int, n_masks: int, max_width: int, rng):
    """Random (start, width) bands; width ~ Uniform{0..min(max_width, n_total)}."""
    bands = []
    cap = min(max_width, n_total)
    for _ in range(n_masks):
        width = int(rng.integers(0, cap + 1))
        start = int(rng.integers(0, n_total - width + 1))
        bands.append((start, width))
    return bands


def spec_augment(s: MelSpectrogram, p: MaskParams, rng) -> MelSpectrogram:
    """Zero out random frequency rows and time columns; shape unchanged."""
    values = s.values.copy()
    for start, width in _draw_bands(s.n_mels, p.n_freq_masks, p.max_freq_width, rng):
        values[start : start + width, :] = p.mask_value
    for start, width in _draw_bands(s.n_frames, p.n_time_masks, p.max_time_width, rng):
        values[:, start : start + width] = p.mask_value
    return MelSpectrogram(values=values, config=s.config, normalized=s.normalized)


def _adapt_frames(b: MelSpectrogram, n_frames: int) -> np.ndarray:
    """Truncate or edge-repeat b's frames to a target frame count."""
    values = b.values
    if values.shape[1] > n_frames:
        return values[:, :n_frames]
    if values.shape[1] < n_frames:
        tail = np.repeat(values[:, -1:], n_frames - values.shape[1], axis=1)
        return np.concatenate([values, tail], axis=1)
    return values


def mixup(a: MelSpectrogram, b: MelSpectrogram, lam: float) -> MelSpectrogram:
    """Elementwise lam*a + (1-lam)*b after adapting b to a's frame count."""
    if a.n_mels != b.n_mels:
        raise ValueError(f"mel-bin mismatch: {a.n_mels} vs {b.n_mels}")
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lambda must lie in [0, 1]")
    b_values = _adapt_frames(b, a.n_frames)
    values = lam * a.values + (1.0 - lam) * b_values
    return MelSpectrogram(values=values, config=a.config, normalized=a.normalized)


def spec_mix(a: MelSpectrogram, b: MelSpectrogram, p: MixParams, rng) -> MelSpectrogram:
    """Copy random frequency/time bands from b into a at identical coordinates."""
    if a.n_mels != b.n_mels:
        raise ValueError(f"mel-bin mismatch: {a.n_mels} vs {b.n_mels}")
    b_values = _adapt_frames(b, a.n_frames)
    values = a.values.copy()
    m = p.masks
    for start, width in _draw_bands(a.n_mels, m.n_freq_masks, m.max_freq_width, rng):
        values[start : start + width, :] = b_values[start : start + width, :]
    for start, width in _draw_bands(a.n_frames, m.n_time_masks, m.max_time_width, rng):
        values[:, start : start + width] = b_values[:, start : start + width]
    return MelSpectrogram(values=values, config=a.config, normalized=a.normalized)


def sample_mix_weight(p: MixParams, rng) -> float:
    """Mixing weight lambda ~ Beta(alpha, alpha)."""
    return float(rng.beta(p.alpha, p.alpha))
