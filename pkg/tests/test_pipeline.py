import hashlib
import json
from pathlib import Path

import numpy as np
import pytest

from conftest import sine
from vowelaug.manifest import load_manifest
from vowelaug.pipeline import run_pipeline
from vowelaug.policy import AugPolicy, default_policy
from vowelaug.wavio import write_wav


def make_manifest(tmp_path, n_entries=6, seconds=0.2):
    rng = np.random.default_rng(0)
    lines = []
    for i in range(n_entries):
        freq = float(rng.uniform(150, 900))
        name = f"tone{i}.wav"
        write_wav(tmp_path / name, sine(freq, seconds=seconds, amp=0.7))
        lines.append(
            {
                "id": f"utt{i}",
                "audio": name,
                "text": f"tone number {i}",
                "gender": "male" if i % 2 == 0 else "female",
            }
        )
    path = tmp_path / "manifest.jsonl"
    path.write_text("\n".join(json.dumps(line) for line in lines) + "\n")
    return path


def tree_digest(root: Path) -> dict[str, str]:
    return {
        str(p.relative_to(root)): hashlib.sha256(p.read_bytes()).hexdigest()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


def test_empty_manifest(tmp_path):
    report = run_pipeline([], default_policy(), tmp_path / "out", global_seed=0)
    assert report.processed == 0
    assert report.failed == 0
    assert (tmp_path / "out" / "augmented.jsonl").read_text() == ""


def test_run_produces_expected_outputs(tmp_path):
    manifest = make_manifest(tmp_path)
    entries = load_manifest(manifest)
    policy = AugPolicy(copies_per_input=2)
    report = run_pipeline(
        entries, policy, tmp_path / "out", global_seed=5, audio_root=tmp_path
    )
    assert report.processed == 12
    assert report.failed == 0
    out_entries = load_manifest(tmp_path / "out" / "augmented.jsonl")
    assert len(out_entries) == 12
    by_id = {e.id: e for e in entries}
    for out in out_entries:
        src = by_id[out.id.rsplit("__c", 1)[0]]
        assert out.text == src.text
        assert (tmp_path / "out" / out.audio_path).exists()


def test_workers_do_not_change_bytes(tmp_path):
    manifest = make_manifest(tmp_path)
    entries = load_manifest(manifest)
    policy = default_policy()
    run_pipeline(entries, policy, tmp_path / "o1", global_seed=9, workers=1, audio_root=tmp_path)
    run_pipeline(entries, policy, tmp_path / "o2", global_seed=9, workers=4, audio_root=tmp_path)
    assert tree_digest(tmp_path / "o1") == tree_digest(tmp_path / "o2")


def test_missing_audio_recorded_not_fatal(tmp_path):
    manifest = make_manifest(tmp_path, n_entries=3)
    entries = load_manifest(manifest)
    broken = entries[1]
    entries[1] = type(broken)(
        id=broken.id, audio_path="missing.wav", text=broken.text, gender=broken.gender
    )
    report = run_pipeline(entries, default_policy(), tmp_path / "out", 0, audio_root=tmp_path)
    assert report.failed == 1
    assert report.processed == 2
    failed = [s for s in report.statuses if not s.ok]
    assert failed[0].entry_id == "utt1"
    assert failed[0].error


def test_emit_modes(tmp_path):
    manifest = make_manifest(tmp_path, n_entries=2)
    entries = load_manifest(manifest)
    policy = AugPolicy(stages=("amplitude",))
    run_pipeline(entries, policy, tmp_path / "wavout", 0, audio_root=tmp_path)
    assert sorted(p.suffix for p in (tmp_path / "wavout").iterdir()) == [
        ".jsonl", ".wav", ".wav"]
    run_pipeline(entries, policy, tmp_path / "both", 0, emit="both", audio_root=tmp_path)
    suffixes = sorted(p.suffix for p in (tmp_path / "both").iterdir())
    assert suffixes == [".jsonl", ".spec", ".spec", ".wav", ".wav"]
    with pytest.raises(ValueError):
        run_pipeline(entries, policy, tmp_path / "bad", 0, emit="nope")


def test_mix_stages_use_partner(tmp_path):
    manifest = make_manifest(tmp_path, n_entries=4)
    entries = load_manifest(manifest)
    policy = AugPolicy(stages=("mixup", "spec_mix"))
    report = run_pipeline(entries, policy, tmp_path / "out", 3, audio_root=tmp_path)
    assert report.failed == 0
    specs = list((tmp_path / "out").glob("*.spec"))
    assert len(specs) == 4


def test_report_counts_invariant(tmp_path):
    manifest = make_manifest(tmp_path, n_entries=3)
    entries = load_manifest(manifest)
    policy = AugPolicy(copies_per_input=3)
    report = run_pipeline(entries, policy, tmp_path / "out", 1, audio_root=tmp_path)
    assert report.processed + report.failed == len(entries) * policy.copies_per_input
    assert report.policy_hash == policy.content_hash()
