"""Manifest-driven batch augmentation engine.

Every (entry, copy) pair is an independent task with its own derived
seed, so outputs are byte-identical for a given (manifest, policy,
global seed) no matter how many workers run or in what order tasks
finish. Per-entry failures are recorded and never abort the batch.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import baseline_aug, spectrogram_aug, waveform_aug, wavio
from .dsp import MelConfig, Waveform, compute_log_mel
from .manifest import ManifestEntry, save_manifest
from .policy import AugPolicy
from .seeding import derive_seed
from .specio import write_spectrogram

log = logging.getLogger(__name__)

_WAVEFORM_STAGES = ("pitch", "amplitude")
_SPEC_STAGES = ("vowel", "spec_augment", "mixup", "spec_mix")


@dataclass(frozen=True)
class EntryStatus:
    entry_id: str
    copy_index: int
    ok: bool
    outputs: tuple[str, ...] = ()
    error: str | None = None


@dataclass
class RunReport:
    processed: int
    failed: int
    statuses: list[EntryStatus]
    global_seed: int
    policy_hash: str
    wall_time_s: float = 0.0


@dataclass(frozen=True)
class _Task:
    index: int
    copy_index: int
    entries: tuple[ManifestEntry, ...]
    policy: AugPolicy
    out_dir: str
    audio_root: str | None
    global_seed: int
    emit: str


def _resolve_audio(path: str, audio_root: str | None) -> Path:
    p = Path(path)
    if not p.is_absolute() and audio_root is not None:
        p = Path(audio_root) / p
    return p


def _load_entry_waveform(entry: ManifestEntry, audio_root: str | None) -> Waveform:
    target = entry.sample_rate_hz or 16000
    return wavio.read_wav(_resolve_audio(entry.audio_path, audio_root), target_rate_hz=target)


def _partner_index(seed: int, self_index: int, n_entries: int) -> int:
    idx = seed % (n_entries - 1)
    return idx + 1 if idx >= self_index else idx


def _process_task(task: _Task) -> tuple[EntryStatus, ManifestEntry | None]:
    entry = task.entries[task.index]
    policy = task.policy
    seed = derive_seed(task.global_seed, entry.id, task.copy_index)
    rng = np.random.default_rng(seed)
    out_dir = Path(task.out_dir)
    out_id = f"{entry.id}__c{task.copy_index}"
    try:
        w = _load_entry_waveform(entry, task.audio_root)
        if "pitch" in policy.stages:
            semitones = waveform_aug.sample_pitch_shift(entry.gender, list(policy.pitch_rules), rng)
            if semitones is not None:
                w = waveform_aug.pitch_shift(w, semitones)
        if "amplitude" in policy.stages:
            factor = float(rng.uniform(policy.amplitude.low, policy.amplitude.high))
            w = waveform_aug.amplitude_scale(w, factor)

        spec_enabled = [s for s in _SPEC_STAGES if s in policy.stages]
        emit = task.emit
        if emit == "auto":
            emit = "spec" if spec_enabled else "wav"

        outputs: list[str] = []
        audio_rel: str | None = None
        if emit in ("wav", "both"):
            wav_name = out_id + ".wav"
            wavio.write_wav(out_dir / wav_name, w)
            outputs.append(wav_name)
            audio_rel = wav_name
        if emit in ("spec", "both"):
            spec = compute_log_mel(w, MelConfig())
            if "vowel" in policy.stages:
                spec = spectrogram_aug.vowel_augment(spec, policy.vowel, rng)
            if "spec_augment" in policy.stages:
                spec = baseline_aug.spec_augment(spec, policy.masks, rng)
            if ("mixup" in policy.stages or "spec_mix" in policy.stages) and len(task.entries) > 1:
                partner = task.entries[_partner_index(seed, task.index, len(task.entries))]
                partner_spec = compute_log_mel(
                    _load_entry_waveform(partner, task.audio_root), MelConfig()
                )
                if "mixup" in policy.stages:
                    lam = baseline_aug.sample_mix_weight(policy.mix, rng)
                    spec = baseline_aug.mixup(spec, partner_spec, lam)
                if "spec_mix" in policy.stages:
                    spec = baseline_aug.spec_mix(spec, partner_spec, policy.mix, rng)
            spec_name = out_id + ".spec"
            write_spectrogram(out_dir / spec_name, spec)
            outputs.append(spec_name)
            audio_rel = audio_rel or spec_name
        status = EntryStatus(entry.id, task.copy_index, ok=True, outputs=tuple(outputs))
        out_entry = ManifestEntry(
            id=out_id, audio_path=audio_rel, text=entry.text, gender=entry.gender
        )
        return status, out_entry
    except Exception as e:  # record-and-continue failure policy
        log.warning("entry %s copy %d failed: %s", entry.id, task.copy_index, e)
        return EntryStatus(entry.id, task.copy_index, ok=False, error=str(e)), None


def run_pipeline(
    entries: list[ManifestEntry],
    policy: AugPolicy,
    out_dir: str | Path,
    global_seed: int,
    workers: int = 1,
    emit: str = "auto",
    audio_root: str | Path | None = None,
) -> RunReport:
    """Augment every manifest entry copies_per_input times into out_dir."""
    if emit not in ("auto", "wav", "spec", "both"):
        raise ValueError(f"bad emit mode {emit!r}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()

    tasks = [
        _Task(
            index=i,
            copy_index=c,
            entries=tuple(entries),
            policy=policy,
            out_dir=str(out_dir),
            audio_root=str(audio_root) if audio_root is not None else None,
            global_seed=global_seed,
            emit=emit,
        )
        for i in range(len(entries))
        for c in range(policy.copies_per_input)
    ]

    if workers <= 1 or not tasks:
        results = [_process_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_process_task, tasks, chunksize=1))

    statuses = [status for status, _ in results]
    out_entries = [entry for _, entry in results if entry is not None]
    save_manifest(out_dir / "augmented.jsonl", out_entries)

    processed = sum(s.ok for s in statuses)
    return RunReport(
        processed=processed,
        failed=len(statuses) - processed,
        statuses=statuses,
        global_seed=global_seed,
        policy_hash=policy.content_hash(),
        wall_time_s=time.perf_counter() - start,
    )
