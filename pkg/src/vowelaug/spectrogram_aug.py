"""Vowel-centric spectrogram augmentation.

Pipeline: normalize the log-mel grid to [0, 1], find vowel frames by
thresholding per-column mean energy, group adjacent frames, then per
group randomly jitter duration (duplicate/delete columns), swap columns,
and scale intensity; finally denormalize. Frames outside every group are
left bit-identical (modulo index remapping from duration jitter).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dsp import MelSpectrogram, denormalize, normalize


@dataclass(frozen=True)
class VowelGroup:
    """Inclusive frame range covering one vowel pronunciation."""

    start_frame: int
    end_frame: int

    def __post_init__(self):
        if not 0 <= self.start_frame <= self.end_frame:
            raise ValueError(f"bad group range ({self.start_frame}, {self.end_frame})")

    def __len__(self) -> int:
        return self.end_frame - self.start_frame + 1


@dataclass(frozen=True)
class VowelAugParams:
    threshold: float = 0.3
    duration_prob: float = 0.5
    duration_factor_range: tuple[float, float] = (0.8, 1.25)
    swap_prob: float = 0.5
    swap_fraction: float = 0.1
    intensity_range: tuple[float, float] = (0.5, 2.0)

    def __post_init__(self):
        if not 0.0 < self.threshold < 1.0:
            raise ValueError("threshold must lie in (0, 1)")
        for name in ("duration_prob", "swap_prob"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        for name in ("duration_factor_range", "intensity_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} must be ordered")


def _round_half_up(x: float) -> int:
    return int(np.floor(x + 0.5))


def detect_vowel_groups(s: MelSpectrogram, threshold: float) -> list[VowelGroup]:
    """Maximal runs of frames whose column mean reaches the threshold."""
    vowel = s.values.mean(axis=0) >= threshold
    groups = []
    start = None
    for t, is_vowel in enumerate(vowel):
        if is_vowel and start is None:
            start = t
        elif not is_vowel and start is not None:
            groups.append(VowelGroup(start, t - 1))
            start = None
    if start is not None:
        groups.append(VowelGroup(start, len(vowel) - 1))
    return groups


def jitter_duration(
    s: MelSpectrogram, groups: list[VowelGroup], params: VowelAugParams, rng
) -> tuple[MelSpectrogram, list[VowelGroup]]:
    """Randomly lengthen/shorten each group by duplicating or deleting columns."""
    columns: list[np.ndarray] = []
    new_groups: list[VowelGroup] = []
    cursor = 0
    for g in groups:
        if g.start_frame > cursor:
            columns.append(s.values[:, cursor : g.start_frame])
        block = s.values[:, g.start_frame : g.end_frame + 1]
        n = len(g)
        if rng.random() < params.duration_prob:
            f = rng.uniform(*params.duration_factor_range)
            target = max(1, _round_half_up(n * f))
        else:
            target = n
        if target > n:
            dups = rng.integers(0, n, size=target - n)
            keep = np.sort(np.concatenate([np.arange(n), dups]))
        elif target < n:
            keep = np.sort(rng.choice(n, size=target, replace=False))
        else:
            keep = np.arange(n)
        new_start = sum(c.shape[1] for c in columns)
        columns.append(block[:, keep])
        new_groups.append(VowelGroup(new_start, new_start + target - 1))
        cursor = g.end_frame + 1
    if cursor < s.n_frames:
        columns.append(s.values[:, cursor:])
    values = np.concatenate(columns, axis=1) if columns else s.values.copy()
    out = MelSpectrogram(values=values, config=s.config, normalized=s.normalized)
    return out, new_groups


def swap_within_groups(
    s: MelSpectrogram, groups: list[VowelGroup], params: VowelAugParams, rng
) -> MelSpectrogram:
    """Random whole-column transpositions confined to each group."""
    values = s.values.copy()
    for g in groups:
        if rng.random() >= params.swap_prob:
            continue
        n = len(g)
        n_swaps = max(1, _round_half_up(params.swap_fraction * n))
        for _ in range(n_swaps):
            i, j = rng.integers(0, n, size=2)
            a, b = g.start_frame + int(i), g.start_frame + int(j)
            values[:, [a, b]] = values[:, [b, a]]
    return MelSpectrogram(values=values, config=s.config, normalized=s.normalized)


def scale_group_intensity(
    s: MelSpectrogram, groups: list[VowelGroup], params: VowelAugParams, rng
) -> MelSpectrogram:
    """One uniform factor per group, applied to every cell; no clamping."""
    values = s.values.copy()
    for g in groups:
        factor = rng.uniform(*params.intensity_range)
        values[:, g.start_frame : g.end_frame + 1] *= factor
    return MelSpectrogram(values=values, config=s.config, normalized=s.normalized)


def vowel_augment(s: MelSpectrogram, params: VowelAugParams, rng) -> MelSpectrogram:
    """Full vowel augmentation on an un-normalized log-mel spectrogram."""
    norm, stats = normalize(s)
    groups = detect_vowel_groups(norm, params.threshold)
    norm, groups = jitter_duration(norm, groups, params, rng)
    norm = swap_within_groups(norm, groups, params, rng)
    norm = scale_group_intensity(norm, groups, params, rng)
    return denormalize(norm, stats)
