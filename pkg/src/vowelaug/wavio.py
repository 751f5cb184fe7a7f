"""16-bit PCM WAV (RIFF) reading and writing.

Stereo inputs are downmixed by channel averaging at load time. Sample
rates that are an integer multiple of the requested rate are decimated by
striding; anything else is rejected (no general resampler here).
"""

from __future__ import annotations

import wave
from pathlib import Path

import numpy as np

from .dsp import Waveform

_FULL_SCALE = 32767.0


def read_wav(path: str | Path, target_rate_hz: int | None = None) -> Waveform:
    with wave.open(str(path), "rb") as f:
        n_channels = f.getnchannels()
        sampwidth = f.getsampwidth()
        rate = f.getframerate()
        n_frames = f.getnframes()
        raw = f.readframes(n_frames)
    if sampwidth != 2:
        raise ValueError(f"{path}: only 16-bit PCM supported, got {8 * sampwidth}-bit")
    data = np.frombuffer(raw, dtype="<i2").astype(np.float64) / _FULL_SCALE
    if n_channels > 1:
        data = data.reshape(-1, n_channels).mean(axis=1)
    if target_rate_hz is not None and rate != target_rate_hz:
        if rate % target_rate_hz == 0:
            step = rate // target_rate_hz
            data = data[::step]
            rate = target_rate_hz
        else:
            raise ValueError(
                f"{path}: sample rate {rate} is not an integer multiple of {target_rate_hz}"
            )
    return Waveform(samples=np.clip(data, -1.0, 1.0), sample_rate_hz=rate)


def write_wav(path: str | Path, w: Waveform) -> None:
    # round half away from zero, then clamp to the int16 range
    scaled = w.samples * _FULL_SCALE
    quantized = np.sign(scaled) * np.floor(np.abs(scaled) + 0.5)
    quantized = np.clip(quantized, -32768, 32767).astype("<i2")
    with wave.open(str(path), "wb") as f:
        f.setnchannels(1)
        f.setsampwidth(2)
        f.setframerate(w.sample_rate_hz)
        f.writeframes(quantized.tobytes())
