"""In-process bindings for host training loops.

Three pure functions wrap the core operations with array-in/array-out
signatures and defaulted parameters, so a host can call them per batch
item without touching the core's dataclasses. Conforming inputs
(contiguous float64 ndarrays) are handed to the core without copying;
anything else is converted or rejected with a message naming the
expected contract. All functions are reentrant: they share no mutable
state, and the heavy array work runs in numpy kernels that drop the
interpreter lock internally.
"""

from __future__ import annotations

import numpy as np

import vowelaug
from vowelaug.dsp import MelConfig, MelSpectrogram, Waveform, compute_log_mel
from vowelaug.spectrogram_aug import VowelAugParams, vowel_augment
from vowelaug.wer import normalize_text, wer

__version__ = vowelaug.__version__

__all__ = ["bind_log_mel", "bind_vowel_augment", "bind_wer", "__version__"]

_PARAM_KEYS = frozenset(
    (
        "threshold",
        "duration_prob",
        "duration_factor_range",
        "swap_prob",
        "swap_fraction",
        "intensity_range",
    )
)


def _conform(arr, ndim: int, what: str) -> np.ndarray:
    """Validate and return a contiguous float64 view; no copy if already one."""
    if not isinstance(arr, np.ndarray):
        raise TypeError(f"{what} must be a numpy ndarray, got {type(arr).__name__}")
    if arr.ndim != ndim:
        raise ValueError(f"{what} must be {ndim}-D, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{what} must be non-empty")
    if arr.dtype == np.float64 and arr.flags.c_contiguous:
        return arr
    if not np.issubdtype(arr.dtype, np.floating) and not np.issubdtype(arr.dtype, np.integer):
        raise TypeError(f"{what} must hold real numbers, got dtype {arr.dtype}")
    return np.ascontiguousarray(arr, dtype=np.float64)


def bind_log_mel(samples, sample_rate: int = 16000) -> np.ndarray:
    """Log-mel spectrogram of a 1-D sample buffer; bit-equal to the core."""
    samples = _conform(samples, 1, "samples")
    return compute_log_mel(Waveform(samples=samples, sample_rate_hz=sample_rate), MelConfig()).values


def bind_vowel_augment(spec_array, params=None, seed: int = 0) -> np.ndarray:
    """Vowel-centric augmentation of an (n_mels, n_frames) log-mel array.

    `params` overrides individual augmentation parameters by name; with an
    empty mapping the shipped defaults apply.
    """
    spec_array = _conform(spec_array, 2, "spec_array")
    params = dict(params or {})
    unknown = set(params) - _PARAM_KEYS
    if unknown:
        raise ValueError(
            f"unknown parameter keys {sorted(unknown)}; valid keys: {sorted(_PARAM_KEYS)}"
        )
    for key in ("duration_factor_range", "intensity_range"):
        if key in params:
            params[key] = tuple(params[key])
    aug_params = VowelAugParams(**params)
    spec = MelSpectrogram(values=spec_array, config=MelConfig(), normalized=False)
    rng = np.random.default_rng(seed)
    return vowel_augment(spec, aug_params, rng).values


def bind_wer(ref: str, hyp: str) -> dict:
    """Word-error-rate breakdown for two raw transcription strings."""
    if not isinstance(ref, str) or not isinstance(hyp, str):
        raise TypeError("ref and hyp must be strings")
    b = wer(normalize_text(ref), normalize_text(hyp))
    return {
        "substitutions": b.substitutions,
        "deletions": b.deletions,
        "insertions": b.insertions,
        "ref_words": b.ref_words,
        "wer": b.wer,
    }
