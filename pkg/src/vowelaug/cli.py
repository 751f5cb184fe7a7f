"""Command-line interface.

Subcommands:
    augment   batch-augment a manifest into an output directory
    eval-wer  pooled word error rate from reference/hypothesis TSVs
    render    spectrogram binary -> PGM image
    inspect   print a spectrogram binary's header

Set VOWELAUG_LOG=debug|info|warning to control log verbosity.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .manifest import load_manifest
from .pipeline import run_pipeline
from .policy import default_policy, load_policy
from .specio import export_image, read_spectrogram
from .wer import aggregate_wer, normalize_text, wer


def _read_tsv(path: str) -> dict[str, str]:
    table: dict[str, str] = {}
    with open(path) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t", 1)
            if len(parts) != 2:
                raise SystemExit(f"{path}:{lineno}: expected 'id<TAB>text'")
            table[parts[0]] = parts[1]
    return table


def cmd_augment(args) -> int:
    entries = load_manifest(args.manifest)
    policy = load_policy(args.policy) if args.policy else default_policy()
    if args.copies is not None:
        from dataclasses import replace

        policy = replace(policy, copies_per_input=args.copies)
    report = run_pipeline(
        entries,
        policy,
        out_dir=args.out,
        global_seed=args.seed,
        workers=args.workers,
        emit=args.emit,
        audio_root=Path(args.manifest).parent,
    )
    print(
        f"processed={report.processed} failed={report.failed} "
        f"seed={report.global_seed} policy={report.policy_hash[:12]} "
        f"wall={report.wall_time_s:.2f}s"
    )
    for s in report.statuses:
        if not s.ok:
            print(f"FAILED {s.entry_id} copy {s.copy_index}: {s.error}", file=sys.stderr)
    return 0 if report.failed == 0 else 1


def cmd_eval_wer(args) -> int:
    refs = _read_tsv(args.ref)
    hyps = _read_tsv(args.hyp)
    pairs = []
    records = []
    for utt_id, ref_text in refs.items():
        ref_tokens = normalize_text(ref_text)
        hyp_tokens = normalize_text(hyps.get(utt_id, ""))
        if not ref_tokens:
            continue
        b = wer(ref_tokens, hyp_tokens)
        pairs.append((ref_tokens, hyp_tokens))
        records.append(
            {
                "id": utt_id,
                "substitutions": b.substitutions,
                "deletions": b.deletions,
                "insertions": b.insertions,
                "ref_words": b.ref_words,
                "wer": b.wer,
            }
        )
    if not pairs:
        raise SystemExit("no scorable utterances (all references empty)")
    pooled = aggregate_wer(pairs)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for record in records:
            print(json.dumps(record, sort_keys=True), file=out)
        print(
            json.dumps(
                {
                    "id": "__corpus__",
                    "substitutions": pooled.substitutions,
                    "deletions": pooled.deletions,
                    "insertions": pooled.insertions,
                    "ref_words": pooled.ref_words,
                    "wer": pooled.wer,
                },
                sort_keys=True,
            ),
            file=out,
        )
    finally:
        if args.out:
            out.close()
    print(f"WER {100.0 * pooled.wer:.2f}%", file=sys.stderr)
    return 0


def cmd_render(args) -> int:
    export_image(args.spec, args.pgm)
    return 0


def cmd_inspect(args) -> int:
    spec, stats = read_spectrogram(args.spec)
    print(f"n_mels     {spec.n_mels}")
    print(f"n_frames   {spec.n_frames}")
    print(f"normalized {spec.normalized}")
    print(f"min_val    {stats.min_val}")
    print(f"max_val    {stats.max_val}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vowelaug", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("augment", help="batch-augment a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--policy", help="policy JSON (defaults to the built-in policy)")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--copies", type=int, default=None)
    p.add_argument("--emit", choices=("auto", "wav", "spec", "both"), default="auto")
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("eval-wer", help="pooled WER from two TSV files")
    p.add_argument("--ref", required=True)
    p.add_argument("--hyp", required=True)
    p.add_argument("--out", help="write per-utterance records here instead of stdout")
    p.set_defaults(func=cmd_eval_wer)

    p = sub.add_parser("render", help="spectrogram binary -> PGM")
    p.add_argument("--spec", required=True)
    p.add_argument("--pgm", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("inspect", help="print spectrogram header")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    level = os.environ.get("VOWELAUG_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
