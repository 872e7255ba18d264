"""Shared fixture builders for the test suite."""

from __future__ import annotations

from crisum.ingest import AnnotatedTweet, DepEdge, Token, Window


def tok(surface: str, pos: str, lemma: str | None = None) -> Token:
    return Token(surface, lemma if lemma is not None else surface.lower(), pos)


def tagged(spec: str) -> tuple[Token, ...]:
    """Build tokens from "surface/POS surface|lemma/POS ..." strings."""
    tokens = []
    for item in spec.split():
        word, _, pos = item.rpartition("/")
        if "|" in word:
            surface, lemma = word.split("|", 1)
        else:
            surface, lemma = word, word.lower()
        tokens.append(Token(surface, lemma, pos))
    return tuple(tokens)


def tw(
    id: str,
    spec: str,
    ts: int = 1000,
    cls: str = "infrastructure",
    conf: float = 0.9,
    deps=(),
    events=None,
    text: str | None = None,
) -> AnnotatedTweet:
    tokens = tagged(spec)
    return AnnotatedTweet(
        id=id,
        timestamp=ts,
        class_label=cls,
        confidence=conf,
        text=text if text is not None else " ".join(t.surface for t in tokens),
        tokens=tokens,
        deps=tuple(DepEdge(*d) for d in deps),
        event_tokens=tuple(events) if events is not None else None,
    )


def window_of(*tweets, cls: str = "infrastructure", start: int = 0, end: int = 10**10) -> Window:
    ordered = tuple(sorted(tweets, key=lambda t: (t.timestamp, t.id)))
    return Window(cls, start, end, ordered)
