"""Word error rate via minimum-edit-distance alignment.

WER = (substitutions + deletions + insertions) / reference words, pooled
over the corpus by summing counts (micro average), not by averaging
per-utterance rates. Backtrace ties prefer substitution over insertion
over deletion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

_TOKEN_RE = re.compile(r"[^a-z0-9']+")


@dataclass(frozen=True)
class WerBreakdown:
    substitutions: int
    deletions: int
    insertions: int
    ref_words: int

    @property
    def errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    @property
    def wer(self) -> float:
        return self.errors / self.ref_words


def normalize_text(s: str) -> list[str]:
    """Lowercase, strip punctuation except intra-word apostrophes, tokenize."""
    tokens = _TOKEN_RE.sub(" ", s.lower()).split()
    tokens = [t.strip("'") for t in tokens]
    return [t for t in tokens if t]


def wer(reference: Sequence[str], hypothesis: Sequence[str]) -> WerBreakdown:
    """Align two token sequences with unit edit costs and count error types."""
    n, m = len(reference), len(hypothesis)
    if n == 0:
        raise ValueError("empty reference: WER denominator undefined")

    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        d[i][0] = i
    for j in range(1, m + 1):
        d[0][j] = j
    for i in range(1, n + 1):
        ref_word = reference[i - 1]
        for j in range(1, m + 1):
            sub = d[i - 1][j - 1] + (ref_word != hypothesis[j - 1])
            d[i][j] = min(sub, d[i][j - 1] + 1, d[i - 1][j] + 1)

    subs = dels = ins = 0
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and d[i][j] == d[i - 1][j - 1] + (reference[i - 1] != hypothesis[j - 1]):
            subs += reference[i - 1] != hypothesis[j - 1]
            i, j = i - 1, j - 1
        elif j > 0 and d[i][j] == d[i][j - 1] + 1:
            ins += 1
            j -= 1
        else:
            dels += 1
            i -= 1
    return WerBreakdown(substitutions=subs, deletions=dels, insertions=ins, ref_words=n)


def aggregate_wer(pairs: Sequence[tuple[Sequence[str], Sequence[str]]]) -> WerBreakdown:
    """Pool edit counts over a corpus: sum(S+D+I) / sum(ref words)."""
    subs = dels = ins = ref_words = 0
    for reference, hypothesis in pairs:
        if len(reference) == 0:
            continue
        b = wer(reference, hypothesis)
        subs += b.substitutions
        dels += b.deletions
        ins += b.insertions
        ref_words += b.ref_words
    if ref_words == 0:
        raise ValueError("no pair has a non-empty reference")
    return WerBreakdown(substitutions=subs, deletions=dels, insertions=ins, ref_words=ref_words)
