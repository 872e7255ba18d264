"""Summary scoring and timing: unigram recall, association precision, stages.

ROUGE-1 recall is computed with count clipping, lowercasing, and no stemming
or stopword removal; tokenization is plain whitespace splitting, matching how
summaries are assembled from pre-tokenized tweets.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass

from .ingest import Window
from .tokenrules import is_symbol_token


@dataclass(frozen=True)
class Summary:
    text: str
    token_count: int          # under the #/@/RT/URL-exclusion counting rule
    window_id: str
    method: str
    requested_length: int


def tokenize_plain(text: str) -> list[str]:
    return text.lower().split()


def rouge1_recall(candidate: Summary | str, gold: str) -> float:
    """Count-clipped unigram recall of the candidate against the gold text."""
    gold_tokens = tokenize_plain(gold)
    if not gold_tokens:
        raise ValueError("gold summary has no tokens")
    text = candidate.text if isinstance(candidate, Summary) else candidate
    cand_counts = Counter(tokenize_plain(text))
    gold_counts = Counter(gold_tokens)
    matched = sum(min(count, cand_counts[tok]) for tok, count in gold_counts.items())
    return matched / len(gold_tokens)


def association_precision(predicted: set, gold: set) -> float:
    if not predicted:
        raise ValueError("association precision is undefined for an empty prediction set")
    return len(set(predicted) & set(gold)) / len(set(predicted))


def random_baseline(window: Window, length: int, seed: int = 0) -> Summary:
    """Random tweets of equal total length; the trivial comparison baseline."""
    rng = random.Random(seed)
    order = list(window.tweets)
    rng.shuffle(order)
    chosen = []
    remaining = length
    for tweet in order:
        n = sum(1 for t in tweet.tokens if not is_symbol_token(t.surface))
        n = max(1, n)
        if n <= remaining:
            chosen.append(tweet)
            remaining -= n
    chosen.sort(key=lambda t: (t.timestamp, t.id))
    text = " ".join(t.text for t in chosen)
    return Summary(text, length - remaining, window.key(), "random", length)


def time_pipeline(window: Window, config=None, **kwargs) -> dict[str, float]:
    """Wall-clock milliseconds per pipeline stage, plus the total.

    File I/O is excluded: the window must already be in memory.
    """
    from .pipeline import PipelineConfig, summarize_window

    config = config or PipelineConfig()
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    summarize_window(window, config, timings=timings, **kwargs)
    total = (time.perf_counter() - t0) * 1000.0
    out = dict(timings)
    out["total"] = total
    return out
