"""First-stage tweet selection by content-word coverage under a word budget.

Builds a coverage program over whole tweets (content words weighted by term
frequency in the window) and solves it exactly where feasible; on large
windows the solver returns its best incumbent, flagged non-optimal. The
selected subset is what the fusion stage operates on.
"""

from __future__ import annotations

import logging
import math
from collections import Counter

from . import ilp
from .ingest import AnnotatedTweet, Window
from .lexicon import extract_content_words
from .tokenrules import count_words, strip_hashtag

logger = logging.getLogger(__name__)

# Tie-break coefficient on tweet indicators: small enough never to outweigh
# a single content word, large enough to prefer covering with fewer words.
TWEET_EPSILON = 1e-3


def tweet_length(tweet: AnnotatedTweet) -> int:
    """Budgeted length of a tweet: tokens excluding #/@/RT/URL symbols.

    Floored at 1 so that symbol-only tweets still cost something.
    """
    return max(1, count_words(tweet.tokens))


def build_instance(
    tweets: list[AnnotatedTweet],
    budget: int,
    weighting: str = "tf",
    gazetteer=None,
) -> tuple[ilp.IlpInstance, list[str]]:
    """Coverage instance over tweets; returns (instance, word id list)."""
    if weighting not in ("tf", "tfidf"):
        raise ValueError(f"unknown weighting {weighting!r}")

    content_sets = [
        frozenset(cw.lemma for cw in extract_content_words(t, gazetteer)) for t in tweets
    ]
    # token-level term frequency and tweet-level document frequency
    tf: Counter[str] = Counter()
    df: Counter[str] = Counter()
    for tweet, lemmas in zip(tweets, content_sets):
        df.update(lemmas)
        for tok in tweet.tokens:
            lemma = strip_hashtag(tok.lemma)
            if lemma:
                tf[lemma] += 1

    word_ids = sorted({lem for s in content_sets for lem in s})
    index = {w: j for j, w in enumerate(word_ids)}
    n_docs = len(tweets)
    weights = []
    for w in word_ids:
        freq = max(1, tf[w])
        if weighting == "tfidf":
            # smoothed idf keeps weights >= 1 even for ubiquitous words
            weights.append(freq * (math.log(n_docs / df[w]) + 1.0))
        else:
            weights.append(float(freq))

    instance = ilp.IlpInstance(
        lengths=tuple(tweet_length(t) for t in tweets),
        gains=tuple(TWEET_EPSILON for _ in tweets),
        coverage=tuple(
            tuple(sorted(index[lem] for lem in lemmas)) for lemmas in content_sets
        ),
        num_words=len(word_ids),
        budget=budget,
        word_weights=tuple(weights) if word_ids else None,
    )
    return instance, word_ids


def select(
    window: Window,
    budget: int,
    weighting: str = "tf",
    gazetteer=None,
    time_limit: float = ilp.DEFAULT_TIME_LIMIT,
    node_budget: int | None = None,
) -> tuple[list[AnnotatedTweet], ilp.IlpSolution]:
    """Coverage-maximal subset of the window within ``budget`` words."""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    if budget == 0 or not window.tweets:
        return [], ilp.IlpSolution((), frozenset(), 0.0, True)

    tweets = list(window.tweets)
    instance, _ = build_instance(tweets, budget, weighting, gazetteer)
    solution = ilp.solve(instance, time_limit=time_limit, node_budget=node_budget)
    if not solution.optimal:
        logger.info(
            "extractive selection cut off after %d nodes; best incumbent kept",
            solution.nodes,
        )
    chosen = [tweets[i] for i in solution.selected]
    chosen.sort(key=lambda t: (t.timestamp, t.id))
    return chosen, solution


def select_tweets(window: Window, budget: int, **kwargs) -> list[AnnotatedTweet]:
    tweets, _ = select(window, budget, **kwargs)
    return tweets
