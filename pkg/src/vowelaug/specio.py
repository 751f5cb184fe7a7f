"""Binary spectrogram container and PGM image export.

File layout (little-endian throughout):

    "SPEC"            4 bytes magic
    version           u32 (currently 1)
    n_mels            u32
    n_frames          u32
    normalized        u8, then 3 pad bytes
    values            n_mels * n_frames f32, row-major (mel-major)
    min_val, max_val  f64 each
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .dsp import MelConfig, MelSpectrogram, NormStats

MAGIC = b"SPEC"
VERSION = 1
_HEADER = struct.Struct("<4sIIIB3x")


class SpectrogramFormatError(ValueError):
    pass


def write_spectrogram(
    path: str | Path, s: MelSpectrogram, stats: NormStats | None = None
) -> None:
    """Write a spectrogram; stats default to the data's own min/max."""
    if stats is None:
        stats = NormStats(float(s.values.min()), float(s.values.max()))
    header = _HEADER.pack(MAGIC, VERSION, s.n_mels, s.n_frames, 1 if s.normalized else 0)
    body = np.ascontiguousarray(s.values, dtype="<f4").tobytes()
    footer = struct.pack("<dd", stats.min_val, stats.max_val)
    Path(path).write_bytes(header + body + footer)


def read_spectrogram(path: str | Path) -> tuple[MelSpectrogram, NormStats]:
    blob = Path(path).read_bytes()
    if len(blob) < _HEADER.size:
        raise SpectrogramFormatError(f"{path}: truncated header")
    magic, version, n_mels, n_frames, normalized = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise SpectrogramFormatError(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise SpectrogramFormatError(f"{path}: unsupported version {version}")
    expected = _HEADER.size + 4 * n_mels * n_frames + 16
    if len(blob) != expected:
        raise SpectrogramFormatError(
            f"{path}: expected {expected} bytes for {n_mels}x{n_frames}, got {len(blob)}"
        )
    values = np.frombuffer(blob, dtype="<f4", count=n_mels * n_frames, offset=_HEADER.size)
    values = values.reshape(n_mels, n_frames).astype(np.float64)
    min_val, max_val = struct.unpack_from("<dd", blob, _HEADER.size + 4 * n_mels * n_frames)
    spec = MelSpectrogram(values=values, config=MelConfig(), normalized=bool(normalized))
    return spec, NormStats(min_val, max_val)


def write_pgm(path: str | Path, s: MelSpectrogram) -> None:
    """8-bit grayscale PGM: frames on x, mel bin 0 at the bottom row."""
    lo = float(s.values.min())
    hi = float(s.values.max())
    if hi > lo:
        pixels = np.floor((s.values - lo) / (hi - lo) * 255.0 + 0.5)
    else:
        pixels = np.zeros_like(s.values)
    pixels = np.clip(pixels, 0, 255).astype(np.uint8)
    # flip so that the lowest mel band renders at the image bottom
    pixels = pixels[::-1, :]
    header = f"P5\n{s.n_frames} {s.n_mels}\n255\n".encode("ascii")
    Path(path).write_bytes(header + pixels.tobytes())


def export_image(spec_path: str | Path, image_path: str | Path) -> None:
    spec, _ = read_spectrogram(spec_path)
    write_pgm(image_path, spec)
