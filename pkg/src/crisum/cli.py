"""Command-line interface.

Subcommands: ``summarize`` (window summary report), ``topics`` (ranked
sub-topic report), ``evaluate`` (unigram recall against a gold file),
``bench`` (stage timings), ``validate`` (schema check of a corpus file).
Exit code 0 on success, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import evaluation, ingest, lexicon, synthetic, topics as topics_mod
from .pipeline import PipelineConfig, summarize_window

logger = logging.getLogger("crisum")


class InputError(Exception):
    pass


def _day_bounds(date_str: str) -> tuple[int, int]:
    try:
        day = datetime.strptime(date_str, "%Y-%m-%d").replace(tzinfo=timezone.utc)
    except ValueError:
        raise InputError(f"invalid date {date_str!r}, expected YYYY-MM-DD") from None
    start = int(day.timestamp())
    return start, start + 86400


def _load_corpus(path: str, min_confidence: float = 0.8):
    p = Path(path)
    if not p.exists():
        raise InputError(f"corpus file not found: {path}")
    errors: list = []
    tweets = ingest.parse_corpus_path(p, min_confidence, error_sink=errors)
    for err in errors:
        print(f"warning: {err}", file=sys.stderr)
    if not tweets:
        raise InputError(f"no usable records in {path}")
    return tweets


def _build_window(args) -> ingest.Window:
    tweets = _load_corpus(args.corpus, args.min_confidence)
    start, end = _day_bounds(args.date)
    window = ingest.make_window(tweets, args.class_label, start, end, args.dedup)
    if not window.tweets:
        raise InputError(
            f"no tweets for class {args.class_label!r} on {args.date} in {args.corpus}"
        )
    return window


def _write_json(path: str | None, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_resources(args):
    table = gazetteer = None
    if getattr(args, "sim", None):
        if not Path(args.sim).exists():
            raise InputError(f"similarity file not found: {args.sim}")
        table = lexicon.SimilarityTable.from_tsv(args.sim)
    if getattr(args, "gazetteer", None):
        if not Path(args.gazetteer).exists():
            raise InputError(f"gazetteer file not found: {args.gazetteer}")
        gazetteer = lexicon.load_gazetteer(args.gazetteer)
    return table, gazetteer


def _config_from(args) -> PipelineConfig:
    return PipelineConfig(
        summary_length=getattr(args, "length", 200),
        extract_budget=getattr(args, "extract_budget", 1000),
        dedup_jaccard=args.dedup,
        weighting="tfidf" if getattr(args, "idf", False) else "tf",
        background_lm=getattr(args, "lm_corpus", None),
        edge_threshold=getattr(args, "edge_threshold", 0.0),
    )


def cmd_summarize(args) -> int:
    window = _build_window(args)
    table, gazetteer = _load_resources(args)
    config = _config_from(args)
    result = summarize_window(
        window, config, table, gazetteer, dump_ilp=args.dump_ilp
    )
    report = result.to_report(config)
    report["class"] = args.class_label
    report["date"] = args.date
    _write_json(args.out, report)
    if args.out:
        print(result.summary.text)
    return 0


def cmd_topics(args) -> int:
    window = _build_window(args)
    phrases = topics_mod.mine_topics(
        window,
        min_freq=args.min_freq,
        mode=args.mode,
        window_size=args.window_size,
        strict_overlap=args.overlap_strict,
    )
    report = []
    for phrase in phrases[: args.top]:
        summary = topics_mod.topic_summary(window, phrase, args.summary_length)
        report.append(
            {
                "noun": phrase.noun,
                "event": phrase.event,
                "overlap": phrase.overlap,
                "support": phrase.support,
                "summary": summary.text,
            }
        )
    _write_json(args.out, report)
    return 0


def cmd_evaluate(args) -> int:
    summary_path = Path(args.summary)
    gold_path = Path(args.gold)
    for p in (summary_path, gold_path):
        if not p.exists():
            raise InputError(f"file not found: {p}")
    if summary_path.suffix == ".json":
        payload = json.loads(summary_path.read_text(encoding="utf-8"))
        candidate = payload.get("summary", "")
    else:
        candidate = summary_path.read_text(encoding="utf-8")
    gold = gold_path.read_text(encoding="utf-8")
    try:
        score = evaluation.rouge1_recall(candidate, gold)
    except ValueError as e:
        raise InputError(str(e)) from None
    _write_json(None, {"rouge1_recall": score})
    return 0


def cmd_bench(args) -> int:
    if args.corpus:
        tweets = _load_corpus(args.corpus, args.min_confidence)
    else:
        tweets = synthetic.make_window_tweets(args.seed, args.synthetic, "infrastructure")
        print(f"benchmarking on {len(tweets)} synthetic tweets", file=sys.stderr)
    results = []
    for class_label, start, end in sorted(ingest.iter_windows(tweets)):
        window = ingest.make_window(tweets, class_label, start, end, args.dedup)
        if not window.tweets:
            continue
        timings = evaluation.time_pipeline(window, _config_from(args))
        results.append(
            {
                "window": window.key(),
                "tweets": len(window),
                "stages_ms": {k: round(v, 3) for k, v in timings.items()},
            }
        )
    _write_json(args.out, results)
    return 0


def cmd_validate(args) -> int:
    p = Path(args.corpus)
    if not p.exists():
        raise InputError(f"corpus file not found: {p}")
    errors: list = []
    tweets = ingest.parse_corpus_path(p, 0.0, error_sink=errors)
    payload = {
        "records": len(tweets),
        "errors": [{"line": e.line, "message": e.message} for e in errors],
    }
    _write_json(None, payload)
    return 0 if not errors else 2


def _add_corpus_args(p, with_window=True):
    p.add_argument("--corpus", required=with_window, help="annotated JSONL file")
    p.add_argument("--min-confidence", type=float, default=0.8, dest="min_confidence")
    p.add_argument("--dedup", type=float, default=0.7, help="near-duplicate Jaccard threshold")
    if with_window:
        p.add_argument("--class", required=True, dest="class_label", help="message class")
        p.add_argument("--date", required=True, help="UTC day, YYYY-MM-DD")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crisum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", help="summarize one class/day window")
    _add_corpus_args(p)
    p.add_argument("--length", type=int, default=200, help="summary word budget")
    p.add_argument("--extract-budget", type=int, default=1000, dest="extract_budget")
    p.add_argument("--sim", help="similarity TSV (lemma, lemma, score)")
    p.add_argument("--gazetteer", help="place names, one per line")
    p.add_argument("--lm-corpus", dest="lm_corpus", help="background LM text file")
    p.add_argument("--idf", action="store_true", help="tf-idf content-word weights")
    p.add_argument("--edge-threshold", type=float, default=0.0, dest="edge_threshold",
                   help="drop similarity edges below this score before clustering")
    p.add_argument("--dump-ilp", dest="dump_ilp", help="dump the path ILP instance as JSON")
    p.add_argument("--out", help="report JSON path (default: stdout)")
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("topics", help="mine ranked sub-topic phrases")
    _add_corpus_args(p)
    p.add_argument("--min-freq", type=int, default=10, dest="min_freq")
    p.add_argument("--mode", choices=["dependency", "window"], default="dependency")
    p.add_argument("--window-size", type=int, default=3, dest="window_size")
    p.add_argument("--overlap-strict", action="store_true", dest="overlap_strict")
    p.add_argument("--summary-length", type=int, default=50, dest="summary_length")
    p.add_argument("--top", type=int, default=20, help="number of topics to report")
    p.add_argument("--out", help="report JSON path (default: stdout)")
    p.set_defaults(func=cmd_topics)

    p = sub.add_parser("evaluate", help="ROUGE-1 recall of a summary against gold")
    p.add_argument("--summary", required=True, help="summary text file or report JSON")
    p.add_argument("--gold", required=True, help="gold summary text file")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("bench", help="per-stage wall-clock timings")
    _add_corpus_args(p, with_window=False)
    p.add_argument("--synthetic", type=int, default=20000, help="synthetic window size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length", type=int, default=200)
    p.add_argument("--extract-budget", type=int, default=1000, dest="extract_budget")
    p.add_argument("--idf", action="store_true")
    p.add_argument("--out", help="timing JSON path (default: stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("validate", help="schema-check an annotated corpus")
    p.add_argument("--corpus", required=True)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
