"""Parse, validate, filter, window, and near-deduplicate annotated tweets.

Input is line-delimited JSON, one record per line:

    {"id": str, "ts": int, "class": str, "conf": float, "text": str,
     "tokens": [{"surface": str, "lemma": str, "pos": str}, ...],
     "deps": [{"head": int, "dep": int, "label": str}, ...],
     "events": [int]}          # optional

Indices are 0-based into ``tokens``. Parsing is streaming and single-pass;
everything produced is immutable and safe to share across threads.
"""

from __future__ import annotations

import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .tokenrules import AUX_LEMMAS, is_noun, is_numeral, is_verb, strip_hashtag

logger = logging.getLogger(__name__)

KNOWN_CLASSES = frozenset({"missing", "infrastructure", "shelter"})


class SchemaError(ValueError):
    """A single malformed input record; parsing continues past it."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    lemma: str
    pos: str


@dataclass(frozen=True, slots=True)
class DepEdge:
    head: int
    dependent: int
    label: str


@dataclass(frozen=True, slots=True)
class AnnotatedTweet:
    id: str
    timestamp: int          # UTC seconds
    class_label: str        # canonical lowercase
    confidence: float
    text: str
    tokens: tuple[Token, ...]
    deps: tuple[DepEdge, ...]
    event_tokens: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Window:
    """A chronologically ordered, near-deduplicated slice of one class."""

    class_label: str
    start: int
    end: int
    tweets: tuple[AnnotatedTweet, ...]

    def key(self) -> str:
        return f"{self.class_label}@[{self.start},{self.end})"

    def __len__(self) -> int:
        return len(self.tweets)


def canonical_class(label: str) -> str:
    return label.strip().lower()


def content_lemma_set(tweet: AnnotatedTweet) -> frozenset[str]:
    """Content-word lemmas (nouns, non-auxiliary verbs, numerals), hashtag-stripped."""
    out = set()
    for tok in tweet.tokens:
        if is_noun(tok.pos) or is_numeral(tok.pos):
            out.add(strip_hashtag(tok.lemma))
        elif is_verb(tok.pos) and tok.lemma not in AUX_LEMMAS:
            out.add(strip_hashtag(tok.lemma))
    out.discard("")
    return frozenset(out)


def jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    """Jaccard similarity; two empty sets compare as 0 (never near-duplicates)."""
    if not a or not b:
        return 0.0
    inter = len(a & b)
    return inter / (len(a) + len(b) - inter)


# ---------------------------------------------------------------------------
# parsing / serialization


def _parse_record(obj, line_no: int) -> AnnotatedTweet:
    if not isinstance(obj, dict):
        raise SchemaError(line_no, "record is not a JSON object")
    for key in ("id", "ts", "class", "conf", "text", "tokens", "deps"):
        if key not in obj:
            raise SchemaError(line_no, f"missing field {key!r}")

    if not isinstance(obj["ts"], int) or isinstance(obj["ts"], bool):
        raise SchemaError(line_no, "ts must be an integer (UTC seconds)")
    conf = obj["conf"]
    if not isinstance(conf, (int, float)) or isinstance(conf, bool) or not 0.0 <= conf <= 1.0:
        raise SchemaError(line_no, f"conf must be a number in [0, 1], got {conf!r}")

    tokens = []
    for i, tok in enumerate(obj["tokens"]):
        try:
            surface, lemma, pos = tok["surface"], tok["lemma"], tok["pos"]
        except (TypeError, KeyError):
            raise SchemaError(line_no, f"token {i} is malformed") from None
        if not surface or not pos:
            raise SchemaError(line_no, f"token {i}: surface and pos must be non-empty")
        if lemma != lemma.lower():
            raise SchemaError(line_no, f"token {i}: lemma {lemma!r} is not lowercase")
        tokens.append(Token(surface, lemma, pos))

    n = len(tokens)
    deps = []
    for i, edge in enumerate(obj["deps"]):
        try:
            head, dep, label = edge["head"], edge["dep"], edge["label"]
        except (TypeError, KeyError):
            raise SchemaError(line_no, f"dep edge {i} is malformed") from None
        if not (0 <= head < n and 0 <= dep < n):
            raise SchemaError(line_no, f"dep edge {i}: index out of range for {n} tokens")
        if head == dep:
            raise SchemaError(line_no, f"dep edge {i}: head equals dependent")
        deps.append(DepEdge(head, dep, label))

    events = obj.get("events")
    if events is not None:
        for idx in events:
            if not isinstance(idx, int) or not 0 <= idx < n:
                raise SchemaError(line_no, f"event index {idx!r} out of range")
        events = tuple(events)

    text = obj["text"]
    if text and not tokens:
        raise SchemaError(line_no, "non-empty text but empty token list")

    return AnnotatedTweet(
        id=str(obj["id"]),
        timestamp=obj["ts"],
        class_label=canonical_class(str(obj["class"])),
        confidence=float(conf),
        text=text,
        tokens=tuple(tokens),
        deps=tuple(deps),
        event_tokens=events,
    )


def parse_corpus(
    stream: Iterable[str] | IO[str],
    min_confidence: float = 0.8,
    error_sink: list | None = None,
) -> list[AnnotatedTweet]:
    """Parse a JSONL stream, keeping records with confidence >= min_confidence.

    Malformed lines are logged with their line number (and collected into
    ``error_sink`` when given); parsing continues. Tweets with no tokens are
    dropped with a warning. An unreadable stream raises the underlying OSError.
    """
    out = []
    for line_no, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            err = SchemaError(line_no, f"invalid JSON ({e.msg})")
            logger.warning("%s", err)
            if error_sink is not None:
                error_sink.append(err)
            continue
        try:
            tweet = _parse_record(obj, line_no)
        except SchemaError as err:
            logger.warning("%s", err)
            if error_sink is not None:
                error_sink.append(err)
            continue
        if not tweet.tokens:
            logger.warning("line %d: tweet %s has no tokens, dropped", line_no, tweet.id)
            continue
        if tweet.confidence >= min_confidence:
            out.append(tweet)
    return out


def parse_corpus_path(path, min_confidence: float = 0.8, error_sink=None):
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh, min_confidence, error_sink)


def tweet_to_obj(tweet: AnnotatedTweet) -> dict:
    obj = {
        "id": tweet.id,
        "ts": tweet.timestamp,
        "class": tweet.class_label,
        "conf": tweet.confidence,
        "text": tweet.text,
        "tokens": [
            {"surface": t.surface, "lemma": t.lemma, "pos": t.pos} for t in tweet.tokens
        ],
        "deps": [
            {"head": e.head, "dep": e.dependent, "label": e.label} for e in tweet.deps
        ],
    }
    if tweet.event_tokens is not None:
        obj["events"] = list(tweet.event_tokens)
    return obj


def serialize_tweet(tweet: AnnotatedTweet) -> str:
    return json.dumps(tweet_to_obj(tweet), ensure_ascii=False, separators=(",", ":"))


# ---------------------------------------------------------------------------
# windowing


def make_window(
    tweets: Iterable[AnnotatedTweet],
    class_label: str,
    start: int,
    end: int,
    dedup_jaccard: float = 0.7,
) -> Window:
    """Select tweets of one class inside [start, end) and drop near-duplicates.

    Among near-duplicate pairs (Jaccard over content-word lemma sets >=
    ``dedup_jaccard``, or byte-identical text) only the earliest tweet
    survives. Output is sorted by (timestamp, id).
    """
    if start > end:
        raise ValueError(f"invalid window range: start {start} > end {end}")
    if not 0.0 <= dedup_jaccard <= 1.0:
        raise ValueError(f"dedup_jaccard must lie in [0, 1], got {dedup_jaccard}")

    label = canonical_class(class_label)
    matching = sorted(
        (t for t in tweets if t.class_label == label and start <= t.timestamp < end),
        key=lambda t: (t.timestamp, t.id),
    )

    kept: list[AnnotatedTweet] = []
    kept_sets: list[frozenset[str]] = []
    seen_texts: set[str] = set()
    # Inverted index lemma -> kept indices; a candidate is compared only
    # against earlier kept tweets sharing at least one content lemma.
    by_lemma: dict[str, list[int]] = defaultdict(list)

    for tweet in matching:
        if tweet.text in seen_texts:
            continue
        lemmas = content_lemma_set(tweet)
        shared: dict[int, int] = defaultdict(int)
        for lem in lemmas:
            for idx in by_lemma.get(lem, ()):
                shared[idx] += 1
        duplicate = False
        for idx, inter in shared.items():
            union = len(lemmas) + len(kept_sets[idx]) - inter
            if union and inter / union >= dedup_jaccard:
                duplicate = True
                break
        if duplicate:
            continue
        pos = len(kept)
        kept.append(tweet)
        kept_sets.append(lemmas)
        seen_texts.add(tweet.text)
        for lem in lemmas:
            by_lemma[lem].append(pos)

    return Window(label, start, end, tuple(kept))


def iter_windows(tweets, day_seconds: int = 86400) -> Iterator[tuple[str, int, int]]:
    """Yield (class_label, day_start, day_end) keys present in a corpus."""
    seen = set()
    for t in tweets:
        day = t.timestamp - (t.timestamp % day_seconds)
        key = (t.class_label, day, day + day_seconds)
        if key not in seen:
            seen.add(key)
            yield key
