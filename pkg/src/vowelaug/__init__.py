"""Acoustic speech-data augmentation toolkit.

Waveform-domain prosody augmentation (gender-conditioned pitch shifting,
amplitude scaling), vowel-centric log-mel spectrogram augmentation
(duration jitter, within-group column swaps, intensity scaling), plus
SpecAugment / Mixup / SpecMix baselines, a pooled word-error-rate
evaluator, and a deterministic manifest-driven batch pipeline.
"""

__version__ = "0.1.0"

from .dsp import (
    MelConfig,
    MelSpectrogram,
    NormStats,
    Waveform,
    compute_log_mel,
    denormalize,
    normalize,
)
from .waveform_aug import (
    AmplitudeRange,
    PitchRule,
    amplitude_scale,
    apply_waveform_policy,
    pitch_shift,
    sample_pitch_shift,
)
from .spectrogram_aug import (
    VowelAugParams,
    VowelGroup,
    detect_vowel_groups,
    jitter_duration,
    scale_group_intensity,
    swap_within_groups,
    vowel_augment,
)
from .baseline_aug import MaskParams, MixParams, mixup, spec_augment, spec_mix
from .wer import WerBreakdown, aggregate_wer, normalize_text, wer
from .policy import AugPolicy, default_policy
from .manifest import ManifestEntry, load_manifest
from .seeding import derive_seed
from .pipeline import RunReport, run_pipeline

__all__ = [
    "AmplitudeRange",
    "AugPolicy",
    "ManifestEntry",
    "MaskParams",
    "MelConfig",
    "MelSpectrogram",
    "MixParams",
    "NormStats",
    "PitchRule",
    "RunReport",
    "VowelAugParams",
    "VowelGroup",
    "Waveform",
    "WerBreakdown",
    "aggregate_wer",
    "amplitude_scale",
    "apply_waveform_policy",
    "compute_log_mel",
    "default_policy",
    "denormalize",
    "derive_seed",
    "detect_vowel_groups",
    "jitter_duration",
    "load_manifest",
    "mixup",
    "normalize",
    "normalize_text",
    "pitch_shift",
    "run_pipeline",
    "sample_pitch_shift",
    "scale_group_intensity",
    "spec_augment",
    "spec_mix",
    "swap_within_groups",
    "vowel_augment",
    "wer",
]
