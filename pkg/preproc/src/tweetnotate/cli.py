"""tweetnotate CLI: annotate raw tweets, emit a similarity TSV.

Exit code 0 on success, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .annotate import annotate_file
from .similarity import build_similarity
from .tokenize import lemmatize


def cmd_annotate(args) -> int:
    src = Path(args.infile)
    if not src.exists():
        print(f"error: input file not found: {src}", file=sys.stderr)
        return 2
    errors: list = []
    count = annotate_file(src, args.out, mark_events=args.mark_events, error_sink=errors)
    for err in errors:
        print(f"warning: {err}", file=sys.stderr)
    print(f"annotated {count} records -> {args.out}", file=sys.stderr)
    if count == 0:
        print("error: no valid raw records", file=sys.stderr)
        return 2
    return 0


def _vocab_from_annotated(path) -> set[str]:
    vocab = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            record = json.loads(line)
            for tok in record.get("tokens", ()):
                if tok["pos"].startswith(("NN", "VB")):
                    vocab.add(tok["lemma"].lstrip("#"))
    return vocab


def cmd_similarity(args) -> int:
    if bool(args.vocab) == bool(args.from_annotated):
        print("error: give exactly one of --vocab or --from-annotated", file=sys.stderr)
        return 2
    if args.vocab:
        path = Path(args.vocab)
        if not path.exists():
            print(f"error: vocab file not found: {path}", file=sys.stderr)
            return 2
        vocab = {lemmatize(line.strip()) for line in path.read_text(encoding="utf-8").splitlines() if line.strip()}
    else:
        path = Path(args.from_annotated)
        if not path.exists():
            print(f"error: annotated file not found: {path}", file=sys.stderr)
            return 2
        vocab = _vocab_from_annotated(path)
    if not vocab:
        print("error: empty vocabulary", file=sys.stderr)
        return 2
    count = build_similarity(vocab, args.out)
    print(f"wrote {count} similarity pairs -> {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tweetnotate", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("annotate", help="raw JSONL -> annotated JSONL")
    p.add_argument("--in", dest="infile", required=True, help="raw tweet JSONL")
    p.add_argument("--out", required=True, help="annotated JSONL output")
    p.add_argument("--mark-events", action="store_true", dest="mark_events",
                   help="emit main-verb event indices")
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("similarity", help="emit a similarity TSV for a vocabulary")
    p.add_argument("--vocab", help="one lemma per line")
    p.add_argument("--from-annotated", dest="from_annotated",
                   help="derive the vocabulary from an annotated JSONL file")
    p.add_argument("--out", required=True, help="TSV output path")
    p.set_defaults(func=cmd_similarity)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
