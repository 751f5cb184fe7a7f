"""Deterministic per-task seed derivation.

Seeds depend only on (global seed, entry id, copy index), never on
processing order, so any worker count reproduces identical per-entry
random streams.
"""

from __future__ import annotations

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    """SplitMix64 finalizer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def derive_seed(global_seed: int, entry_id: str, copy_index: int) -> int:
    """Stable 64-bit seed from a canonical byte encoding of the inputs."""
    payload = entry_id.encode("utf-8")
    words = [len(payload), copy_index & _MASK]
    for offset in range(0, len(payload), 8):
        words.append(int.from_bytes(payload[offset : offset + 8], "little"))
    state = _mix(global_seed & _MASK)
    for i, word in enumerate(words):
        state = _mix(state ^ word ^ ((i + 1) * _GOLDEN & _MASK))
    return state
