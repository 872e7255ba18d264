"""Sub-topic phrase mining: (noun, event) pairs ranked by overlap.

A topic phrase is a noun directly connected to an event verb in the
dependency tree (or, as a baseline, within a token window of it). Phrases
are kept when both constituents are frequent enough and ranked by the
overlap coefficient of their supporting tweet sets:

    overlap(N, E) = |X & Y| / min(|X|, |Y|)

with X the tweets containing N and Y the tweets containing E.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass

from sklearn.base import BaseEstimator

from . import extractive
from .evaluation import Summary
from .ingest import AnnotatedTweet, Window
from .tokenrules import AUX_DEP_LABELS, AUX_LEMMAS, is_noun, is_verb, strip_hashtag

logger = logging.getLogger(__name__)

DEPENDENCY = "dependency"
WINDOW = "window"


@dataclass(frozen=True)
class TopicPhrase:
    noun: str
    event: str
    tweets_with_noun: frozenset[str]
    tweets_with_event: frozenset[str]
    overlap: float

    @property
    def support(self) -> int:
        return len(self.tweets_with_noun & self.tweets_with_event)


def overlap_coefficient(x: frozenset, y: frozenset) -> float:
    if not x or not y:
        return 0.0
    return len(x & y) / min(len(x), len(y))


def detect_events(tweet: AnnotatedTweet) -> list[int]:
    """Event token indices: the annotation when present, else main verbs.

    The fallback takes VB*-tagged tokens that are not light/auxiliary verbs
    and are not aux/cop dependents of another verb.
    """
    if tweet.event_tokens is not None:
        return list(tweet.event_tokens)
    aux_dependents = {
        e.dependent
        for e in tweet.deps
        if e.label.lower() in AUX_DEP_LABELS and is_verb(tweet.tokens[e.head].pos)
    }
    return [
        i
        for i, tok in enumerate(tweet.tokens)
        if is_verb(tok.pos) and tok.lemma not in AUX_LEMMAS and i not in aux_dependents
    ]


def associate(
    tweet: AnnotatedTweet, mode: str = DEPENDENCY, window_size: int = 3
) -> list[tuple[str, str]]:
    """(noun, event) lemma pairs for one tweet.

    ``dependency`` mode pairs a noun with an event only when a dependency
    edge directly connects the two tokens; ``window`` mode pairs nouns within
    ``window_size`` tokens on either side of the event.
    """
    events = detect_events(tweet)
    nouns = [i for i, tok in enumerate(tweet.tokens) if is_noun(tok.pos)]
    pairs = set()

    if mode == DEPENDENCY:
        if not tweet.deps:
            raise ValueError(
                f"tweet {tweet.id} has no dependency edges; use window mode instead"
            )
        event_set = set(events)
        noun_set = set(nouns)
        for edge in tweet.deps:
            a, b = edge.head, edge.dependent
            if a in noun_set and b in event_set:
                pairs.add((a, b))
            elif b in noun_set and a in event_set:
                pairs.add((b, a))
    elif mode == WINDOW:
        if window_size < 1:
            raise ValueError("window_size must be >= 1")
        for e in events:
            for n in nouns:
                if n != e and abs(n - e) <= window_size:
                    pairs.add((n, e))
    else:
        raise ValueError(f"unknown association mode {mode!r}")

    out = {
        (strip_hashtag(tweet.tokens[n].lemma), strip_hashtag(tweet.tokens[e].lemma))
        for n, e in pairs
    }
    return sorted(p for p in out if p[0] and p[1])


def mine_topics(
    window: Window,
    min_freq: int = 10,
    mode: str = DEPENDENCY,
    window_size: int = 3,
    strict_overlap: bool = False,
) -> list[TopicPhrase]:
    """Aggregate associations over a window into ranked topic phrases.

    Pairs survive only when the noun and the event each occur in at least
    ``min_freq`` tweets. With ``strict_overlap`` the supporting sets X and Y
    are restricted to tweets where the word took part in some association,
    rather than all tweets containing it.
    """
    if min_freq < 1:
        raise ValueError("min_freq must be >= 1")

    containing: dict[str, set[str]] = defaultdict(set)
    for tweet in window.tweets:
        for tok in tweet.tokens:
            lemma = strip_hashtag(tok.lemma)
            if lemma:
                containing[lemma].add(tweet.id)

    fired_pairs: set[tuple[str, str]] = set()
    fired_noun: dict[str, set[str]] = defaultdict(set)
    fired_event: dict[str, set[str]] = defaultdict(set)
    skipped = 0
    for tweet in window.tweets:
        if mode == DEPENDENCY and not tweet.deps:
            skipped += 1
            continue
        for noun, event in associate(tweet, mode, window_size):
            fired_pairs.add((noun, event))
            fired_noun[noun].add(tweet.id)
            fired_event[event].add(tweet.id)
    if skipped:
        logger.warning("%d tweets without dependency edges skipped in topic mining", skipped)

    phrases = []
    for noun, event in fired_pairs:
        x = frozenset(containing[noun])
        y = frozenset(containing[event])
        if len(x) < min_freq or len(y) < min_freq:
            continue
        if strict_overlap:
            x = frozenset(fired_noun[noun])
            y = frozenset(fired_event[event])
        phrases.append(TopicPhrase(noun, event, x, y, overlap_coefficient(x, y)))
    phrases.sort(key=lambda p: (-p.overlap, p.noun, p.event))
    return phrases


def topic_summary(
    window: Window,
    topic: TopicPhrase,
    length: int = 50,
    time_limit: float = 10.0,
) -> Summary:
    """Extractive summary of the tweets containing both topic constituents."""
    matching = tuple(
        t
        for t in window.tweets
        if {topic.noun, topic.event}
        <= {strip_hashtag(tok.lemma) for tok in t.tokens}
    )
    if not matching:
        logger.warning(
            "no tweet contains both %r and %r; empty topic summary", topic.noun, topic.event
        )
        return Summary("", 0, window.key(), "topic", length)
    sub = Window(window.class_label, window.start, window.end, matching)
    chosen, _ = extractive.select(sub, length, time_limit=time_limit)
    text = " ".join(t.text for t in chosen)
    tokens = sum(extractive.tweet_length(t) for t in chosen)
    return Summary(text, tokens, window.key(), "topic", length)


class TopicMiner(BaseEstimator):
    """Estimator wrapper: fit a window, read ``phrases_``."""

    def __init__(self, min_freq=10, mode=DEPENDENCY, window_size=3, strict_overlap=False):
        self.min_freq = min_freq
        self.mode = mode
        self.window_size = window_size
        self.strict_overlap = strict_overlap

    def fit(self, window: Window):
        self.phrases_ = mine_topics(
            window,
            min_freq=self.min_freq,
            mode=self.mode,
            window_size=self.window_size,
            strict_overlap=self.strict_overlap,
        )
        return self

    def fit_predict(self, window: Window) -> list[TopicPhrase]:
        return self.fit(window).phrases_
