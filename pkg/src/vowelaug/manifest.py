"""Line-delimited JSON manifests pairing audio files with transcriptions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class ManifestEntry:
    id: str
    audio_path: str
    text: str
    gender: str | None = None
    sample_rate_hz: int | None = None

    def to_dict(self) -> dict:
        d = {"id": self.id, "audio": self.audio_path, "text": self.text}
        if self.gender is not None:
            d["gender"] = self.gender
        if self.sample_rate_hz is not None:
            d["sample_rate"] = self.sample_rate_hz
        return d


def load_manifest(path: str | Path) -> list[ManifestEntry]:
    """Parse one JSON object per line; duplicate ids and bad lines are errors."""
    entries: list[ManifestEntry] = []
    seen: dict[str, int] = {}
    with open(path) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise ManifestError(f"{path}:{lineno}: malformed record: {e}") from e
            try:
                entry = ManifestEntry(
                    id=record["id"],
                    audio_path=record["audio"],
                    text=record["text"],
                    gender=record.get("gender"),
                    sample_rate_hz=record.get("sample_rate"),
                )
            except KeyError as e:
                raise ManifestError(f"{path}:{lineno}: missing field {e}") from e
            if entry.gender not in (None, "male", "female"):
                raise ManifestError(f"{path}:{lineno}: bad gender {entry.gender!r}")
            if entry.id in seen:
                raise ManifestError(
                    f"{path}:{lineno}: duplicate id {entry.id!r} (first on line {seen[entry.id]})"
                )
            seen[entry.id] = lineno
            entries.append(entry)
    return entries


def save_manifest(path: str | Path, entries: Iterable[ManifestEntry]) -> None:
    with open(path, "w") as f:
        for entry in entries:
            f.write(json.dumps(entry.to_dict(), sort_keys=True) + "\n")
