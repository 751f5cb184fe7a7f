"""Waveform-domain prosody augmentation.

Pitch shifting is a phase-vocoder time stretch by 2**(-k/12) followed by
Fourier resampling back to the original length, so duration is always
preserved exactly. Gender-conditioned pitch rules fire mutually
exclusively from a single partitioned uniform draw, so each sample is
shifted at most once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import resample

from .dsp import Waveform

_PV_N_FFT = 2048
_PV_HOP = 512


@dataclass(frozen=True)
class PitchRule:
    gender: str
    probability: float
    lower_semitones: float
    upper_semitones: float

    def __post_init__(self):
        if self.gender not in ("male", "female"):
            raise ValueError(f"unknown gender {self.gender!r}")
        if not 0.0 <= self.probability <= 1.0:
            raise ValueError("probability must be in [0, 1]")
        if self.lower_semitones > self.upper_semitones:
            raise ValueError("lower_semitones must be <= upper_semitones")


@dataclass(frozen=True)
class AmplitudeRange:
    low: float = 0.5
    high: float = 1.5

    def __post_init__(self):
        if not 0.0 < self.low <= self.high:
            raise ValueError("need 0 < low <= high")


def validate_pitch_rules(rules: list[PitchRule]) -> None:
    for gender in ("male", "female"):
        total = sum(r.probability for r in rules if r.gender == gender)
        if total > 1.0 + 1e-12:
            raise ValueError(f"{gender} rule probabilities sum to {total} > 1")


def sample_pitch_shift(gender, rules: list[PitchRule], rng) -> float | None:
    """Pick at most one pitch shift in semitones, or None for no shift.

    One uniform draw partitions [0, 1] into intervals sized by the rule
    probabilities for the matching gender, plus a no-op remainder.
    """
    matching = [r for r in rules if r.gender == gender]
    if not matching:
        return None
    u = rng.random()
    acc = 0.0
    for rule in matching:
        acc += rule.probability
        if u < acc:
            return float(rng.uniform(rule.lower_semitones, rule.upper_semitones))
    return None


def _stft(x, n_fft, hop):
    pad = n_fft // 2
    mode = "reflect" if len(x) > pad else "constant"
    x = np.pad(x, pad, mode=mode)
    n_frames = 1 + (len(x) - n_fft) // hop
    window = 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(n_fft) / n_fft))
    idx = np.arange(n_fft)[None, :] + hop * np.arange(n_frames)[:, None]
    return np.fft.rfft(x[idx] * window[None, :], axis=1).T


def _istft(S, n_fft, hop, length):
    window = 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(n_fft) / n_fft))
    n_frames = S.shape[1]
    out = np.zeros((n_frames - 1) * hop + n_fft)
    win_sum = np.zeros_like(out)
    frames = np.fft.irfft(S.T, n=n_fft, axis=1)
    for t in range(n_frames):
        start = t * hop
        out[start : start + n_fft] += frames[t] * window
        win_sum[start : start + n_fft] += window**2
    out = np.where(win_sum > 1e-10, out / np.maximum(win_sum, 1e-10), out)
    pad = n_fft // 2
    out = out[pad:]
    if len(out) < length:
        out = np.pad(out, (0, length - len(out)))
    return out[:length]


def _phase_vocoder(S, rate, hop, n_fft):
    n_bins, n_frames = S.shape
    time_steps = np.arange(0, n_frames, rate)
    phi_advance = 2.0 * np.pi * hop * np.arange(n_bins) / n_fft

    S_pad = np.concatenate([S, np.zeros((n_bins, 1), dtype=S.dtype)], axis=1)
    out = np.empty((n_bins, len(time_steps)), dtype=complex)
    phase_acc = np.angle(S[:, 0])
    for n, t in enumerate(time_steps):
        i = int(t)
        alpha = t - i
        a = S_pad[:, i]
        b = S_pad[:, i + 1]
        mag = (1.0 - alpha) * np.abs(a) + alpha * np.abs(b)
        out[:, n] = mag * np.exp(1j * phase_acc)
        dphase = np.angle(b) - np.angle(a) - phi_advance
        dphase -= 2.0 * np.pi * np.round(dphase / (2.0 * np.pi))
        phase_acc += phi_advance + dphase
    return out


def time_stretch(samples: np.ndarray, rate: float) -> np.ndarray:
    """Stretch to round(len/rate) samples without changing pitch."""
    if rate <= 0:
        raise ValueError("rate must be positive")
    target = int(round(len(samples) / rate))
    S = _stft(samples, _PV_N_FFT, _PV_HOP)
    S_stretched = _phase_vocoder(S, rate, _PV_HOP, _PV_N_FFT)
    return _istft(S_stretched, _PV_N_FFT, _PV_HOP, target)


def pitch_shift(w: Waveform, semitones: float) -> Waveform:
    """Shift pitch by a number of semitones; output length equals input."""
    if len(w) == 0:
        raise ValueError("cannot pitch-shift an empty waveform")
    if abs(semitones) > 12:
        raise ValueError("semitone shift limited to +/-12")
    if semitones == 0:
        return Waveform(samples=w.samples.copy(), sample_rate_hz=w.sample_rate_hz)
    rate = 2.0 ** (-semitones / 12.0)
    stretched = time_stretch(w.samples, rate)
    shifted = resample(stretched, len(w))
    return Waveform(samples=np.clip(shifted, -1.0, 1.0), sample_rate_hz=w.sample_rate_hz)


def amplitude_scale(w: Waveform, factor: float) -> Waveform:
    """Multiply every sample by factor and hard-clip to [-1, 1]."""
    return Waveform(
        samples=np.clip(w.samples * factor, -1.0, 1.0), sample_rate_hz=w.sample_rate_hz
    )


def apply_waveform_policy(w: Waveform, gender, policy, rng) -> Waveform:
    """At most one pitch rule, then a uniform amplitude factor, in that order."""
    semitones = sample_pitch_shift(gender, policy.pitch_rules, rng)
    if semitones is not None:
        w = pitch_shift(w, semitones)
    factor = float(rng.uniform(policy.amplitude.low, policy.amplitude.high))
    return amplitude_scale(w, factor)
