"""Waveform / log-mel spectrogram representations and the mel front end.

The front end mirrors the common 16 kHz speech recipe: 400-sample Hann
windows, hop 160, 80 Slaney-style mel bands over 0-8000 Hz, log10 with a
1e-10 floor, clamp to (global max - 8.0), then the affine rescale
(x + 4) / 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Waveform:
    """Mono PCM sample buffer in [-1, 1] plus its sample rate."""

    samples: np.ndarray
    sample_rate_hz: int = 16000

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError(f"waveform must be 1-D, got shape {samples.shape}")
        if self.sample_rate_hz <= 0:
            raise ValueError("sample_rate_hz must be positive")
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return len(self.samples)


@dataclass(frozen=True)
class MelConfig:
    n_fft: int = 400
    hop: int = 160
    n_mels: int = 80
    fmin_hz: float = 0.0
    fmax_hz: float = 8000.0
    log_floor: float = 1e-10
    dynamic_range_log10: float = 8.0

    def __post_init__(self):
        if self.n_fft <= 0:
            raise ValueError("n_fft must be positive")
        if not 0 < self.hop <= self.n_fft:
            raise ValueError("hop must satisfy 0 < hop <= n_fft")
        if self.n_mels <= 0:
            raise ValueError("n_mels must be positive")


@dataclass
class MelSpectrogram:
    """n_mels x n_frames real matrix of (possibly normalized) log-mel values."""

    values: np.ndarray
    config: MelConfig = field(default_factory=MelConfig)
    normalized: bool = False

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise ValueError(f"spectrogram must be 2-D, got shape {values.shape}")
        if values.shape[1] < 1:
            raise ValueError("spectrogram needs at least one frame")
        if not np.all(np.isfinite(values)):
            raise ValueError("spectrogram contains non-finite values")
        self.values = values

    @property
    def n_mels(self) -> int:
        return self.values.shape[0]

    @property
    def n_frames(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class NormStats:
    min_val: float
    max_val: float

    def __post_init__(self):
        if self.max_val < self.min_val:
            raise ValueError("max_val must be >= min_val")


# Slaney mel scale: linear below 1 kHz, logarithmic above.
_F_SP = 200.0 / 3.0
_MIN_LOG_HZ = 1000.0
_MIN_LOG_MEL = _MIN_LOG_HZ / _F_SP
_LOGSTEP = math.log(6.4) / 27.0


def hz_to_mel(freq):
    freq = np.asarray(freq, dtype=np.float64)
    mel = freq / _F_SP
    log_region = freq >= _MIN_LOG_HZ
    mel = np.where(
        log_region,
        _MIN_LOG_MEL + np.log(np.maximum(freq, _MIN_LOG_HZ) / _MIN_LOG_HZ) / _LOGSTEP,
        mel,
    )
    return mel


def mel_to_hz(mel):
    mel = np.asarray(mel, dtype=np.float64)
    freq = mel * _F_SP
    log_region = mel >= _MIN_LOG_MEL
    freq = np.where(log_region, _MIN_LOG_HZ * np.exp(_LOGSTEP * (mel - _MIN_LOG_MEL)), freq)
    return freq


def mel_filterbank(cfg: MelConfig, sample_rate_hz: int) -> np.ndarray:
    """Slaney-normalized triangular filterbank, shape (n_mels, n_fft//2 + 1)."""
    fft_freqs = np.fft.rfftfreq(cfg.n_fft, d=1.0 / sample_rate_hz)
    mel_pts = np.linspace(hz_to_mel(cfg.fmin_hz), hz_to_mel(cfg.fmax_hz), cfg.n_mels + 2)
    hz_pts = mel_to_hz(mel_pts)

    fb = np.zeros((cfg.n_mels, len(fft_freqs)))
    for m in range(cfg.n_mels):
        lower, center, upper = hz_pts[m], hz_pts[m + 1], hz_pts[m + 2]
        up = (fft_freqs - lower) / (center - lower)
        down = (upper - fft_freqs) / (upper - center)
        fb[m] = np.maximum(0.0, np.minimum(up, down))
        # area normalization keeps filter response roughly flat across bands
        fb[m] *= 2.0 / (upper - lower)
    return fb


def frame_count(n_samples: int, hop: int) -> int:
    """Frames produced for a center-padded signal of n_samples."""
    return math.ceil(n_samples / hop)


def _hann(n: int) -> np.ndarray:
    # periodic Hann, matching FFT-analysis convention
    return 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(n) / n))


def stft_power(samples: np.ndarray, cfg: MelConfig) -> np.ndarray:
    """Center-padded power spectrogram, shape (n_fft//2 + 1, ceil(len/hop))."""
    pad = cfg.n_fft // 2
    if len(samples) > pad:
        x = np.pad(samples, pad, mode="reflect")
    else:
        x = np.pad(samples, pad, mode="constant")
    n_frames = frame_count(len(samples), cfg.hop)
    needed = (n_frames - 1) * cfg.hop + cfg.n_fft
    if len(x) < needed:
        x = np.pad(x, (0, needed - len(x)), mode="constant")
    idx = np.arange(cfg.n_fft)[None, :] + cfg.hop * np.arange(n_frames)[:, None]
    frames = x[idx] * _hann(cfg.n_fft)[None, :]
    spec = np.fft.rfft(frames, axis=1)
    return (spec.real**2 + spec.imag**2).T


def compute_log_mel(w: Waveform, cfg: MelConfig | None = None) -> MelSpectrogram:
    """Log-mel spectrogram of a waveform; deterministic, pure."""
    if cfg is None:
        cfg = MelConfig()
    if len(w) == 0:
        raise ValueError("cannot compute a spectrogram of an empty waveform")
    if not np.all(np.isfinite(w.samples)):
        raise ValueError("waveform contains non-finite samples")

    power = stft_power(w.samples, cfg)
    mel = mel_filterbank(cfg, w.sample_rate_hz) @ power
    log_mel = np.log10(np.maximum(mel, cfg.log_floor))
    log_mel = np.maximum(log_mel, log_mel.max() - cfg.dynamic_range_log10)
    log_mel = (log_mel + 4.0) / 4.0
    return MelSpectrogram(values=log_mel, config=cfg, normalized=False)


def normalize(s: MelSpectrogram) -> tuple[MelSpectrogram, NormStats]:
    """Affine map of the values onto [0, 1]; constant input maps to all zeros."""
    lo = float(s.values.min())
    hi = float(s.values.max())
    if hi > lo:
        values = (s.values - lo) / (hi - lo)
    else:
        values = np.zeros_like(s.values)
    out = MelSpectrogram(values=values, config=s.config, normalized=True)
    return out, NormStats(min_val=lo, max_val=hi)


def denormalize(s: MelSpectrogram, stats: NormStats) -> MelSpectrogram:
    """Inverse of normalize; values outside [0, 1] extrapolate linearly."""
    span = stats.max_val - stats.min_val
    if span > 0:
        values = s.values * span + stats.min_val
    else:
        values = np.full_like(s.values, stats.min_val)
    return MelSpectrogram(values=values, config=s.config, normalized=False)
