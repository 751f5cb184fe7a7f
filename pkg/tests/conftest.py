import numpy as np
import pytest

from vowelaug.dsp import MelConfig, MelSpectrogram, Waveform


def sine(freq_hz, seconds=1.0, rate=16000, amp=1.0):
    t = np.arange(int(round(seconds * rate))) / rate
    return Waveform(samples=amp * np.sin(2 * np.pi * freq_hz * t), sample_rate_hz=rate)


def random_spectrogram(rng, n_mels=16, n_frames=None, low=0.0, high=1.0):
    if n_frames is None:
        n_frames = int(rng.integers(4, 40))
    values = rng.uniform(low, high, size=(n_mels, n_frames))
    return MelSpectrogram(values=values, config=MelConfig(), normalized=False)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
