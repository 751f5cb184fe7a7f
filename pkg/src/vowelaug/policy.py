"""Augmentation policy: one declarative document covering every stage.

The default policy reproduces the published settings with zero flags:
gender pitch rules (male: 0.2/[-2,0], 0.3/[0,4]; female: 0.3/[-4,0],
0.3/[2,6]), amplitude factor in [0.5, 1.5], vowel threshold 0.3, vowel
intensity factor in [0.5, 2.0], and LibriSpeech-style SpecAugment masks.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .baseline_aug import MaskParams, MixParams
from .spectrogram_aug import VowelAugParams
from .waveform_aug import AmplitudeRange, PitchRule, validate_pitch_rules

STAGES = ("pitch", "amplitude", "vowel", "spec_augment", "mixup", "spec_mix")

DEFAULT_PITCH_RULES = (
    PitchRule("male", 0.2, -2.0, 0.0),
    PitchRule("male", 0.3, 0.0, 4.0),
    PitchRule("female", 0.3, -4.0, 0.0),
    PitchRule("female", 0.3, 2.0, 6.0),
)


@dataclass(frozen=True)
class AugPolicy:
    pitch_rules: tuple[PitchRule, ...] = DEFAULT_PITCH_RULES
    amplitude: AmplitudeRange = field(default_factory=AmplitudeRange)
    vowel: VowelAugParams = field(default_factory=VowelAugParams)
    masks: MaskParams = field(default_factory=MaskParams)
    mix: MixParams = field(default_factory=MixParams)
    stages: tuple[str, ...] = ("pitch", "amplitude", "vowel")
    copies_per_input: int = 1

    def __post_init__(self):
        validate_pitch_rules(list(self.pitch_rules))
        for stage in self.stages:
            if stage not in STAGES:
                raise ValueError(f"unknown stage {stage!r}; valid: {STAGES}")
        if self.copies_per_input < 1:
            raise ValueError("copies_per_input must be >= 1")

    def to_dict(self) -> dict:
        return {
            "pitch_rules": [
                {
                    "gender": r.gender,
                    "probability": r.probability,
                    "lower_semitones": r.lower_semitones,
                    "upper_semitones": r.upper_semitones,
                }
                for r in self.pitch_rules
            ],
            "amplitude": {"low": self.amplitude.low, "high": self.amplitude.high},
            "vowel": {
                "threshold": self.vowel.threshold,
                "duration_prob": self.vowel.duration_prob,
                "duration_factor_range": list(self.vowel.duration_factor_range),
                "swap_prob": self.vowel.swap_prob,
                "swap_fraction": self.vowel.swap_fraction,
                "intensity_range": list(self.vowel.intensity_range),
            },
            "masks": {
                "n_freq_masks": self.masks.n_freq_masks,
                "max_freq_width": self.masks.max_freq_width,
                "n_time_masks": self.masks.n_time_masks,
                "max_time_width": self.masks.max_time_width,
                "mask_value": self.masks.mask_value,
            },
            "mix": {"alpha": self.mix.alpha},
            "stages": list(self.stages),
            "copies_per_input": self.copies_per_input,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AugPolicy":
        base = cls()
        pitch_rules = tuple(
            PitchRule(
                gender=r["gender"],
                probability=r["probability"],
                lower_semitones=r["lower_semitones"],
                upper_semitones=r["upper_semitones"],
            )
            for r in d.get("pitch_rules", [])
        ) if "pitch_rules" in d else base.pitch_rules
        amp = d.get("amplitude", {})
        vowel = d.get("vowel", {})
        masks = d.get("masks", {})
        mix = d.get("mix", {})
        return cls(
            pitch_rules=pitch_rules,
            amplitude=AmplitudeRange(**amp) if amp else base.amplitude,
            vowel=VowelAugParams(
                threshold=vowel.get("threshold", 0.3),
                duration_prob=vowel.get("duration_prob", 0.5),
                duration_factor_range=tuple(vowel.get("duration_factor_range", (0.8, 1.25))),
                swap_prob=vowel.get("swap_prob", 0.5),
                swap_fraction=vowel.get("swap_fraction", 0.1),
                intensity_range=tuple(vowel.get("intensity_range", (0.5, 2.0))),
            ),
            masks=MaskParams(
                n_freq_masks=masks.get("n_freq_masks", 2),
                max_freq_width=masks.get("max_freq_width", 27),
                n_time_masks=masks.get("n_time_masks", 2),
                max_time_width=masks.get("max_time_width", 40),
                mask_value=masks.get("mask_value", 0.0),
            ),
            mix=MixParams(alpha=mix.get("alpha", 0.2)),
            stages=tuple(d.get("stages", ("pitch", "amplitude", "vowel"))),
            copies_per_input=d.get("copies_per_input", 1),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def content_hash(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()


def default_policy() -> AugPolicy:
    return AugPolicy()


def load_policy(path: str | Path) -> AugPolicy:
    with open(path) as f:
        return AugPolicy.from_dict(json.load(f))


def save_policy(path: str | Path, policy: AugPolicy) -> None:
    Path(path).write_text(policy.to_json() + "\n")
