"""Token-level classification rules shared across the pipeline.

POS conventions follow the Penn treebank (``NN*`` nouns, ``VB*`` verbs,
``CD`` numerals). Hashtags, mentions, URLs, and retweet markers are
recognized by surface form because upstream taggers label them
inconsistently; those tokens never count toward word budgets.
"""

from __future__ import annotations

# Light and auxiliary verbs excluded from the event vocabulary. Lemma level;
# common inflections included defensively for sloppy lemmatizers.
AUX_LEMMAS = frozenset({
    "be", "am", "is", "are", "was", "were", "been", "being",
    "have", "has", "had", "having",
    "do", "does", "did", "done", "doing",
    "say", "says", "said", "saying",
    "get", "gets", "got", "gotten", "getting",
    "can", "could", "will", "would", "shall", "should", "may", "might", "must",
})

AUX_DEP_LABELS = frozenset({"aux", "auxpass", "aux:pass", "cop"})


def is_noun(pos: str) -> bool:
    return pos.startswith("NN")


def is_proper_noun(pos: str) -> bool:
    return pos.startswith("NNP")


def is_verb(pos: str) -> bool:
    return pos.startswith("VB")


def is_numeral(pos: str) -> bool:
    return pos == "CD"


def is_hashtag(surface: str) -> bool:
    return len(surface) > 1 and surface.startswith("#")


def is_mention(surface: str) -> bool:
    return len(surface) > 1 and surface.startswith("@")


def is_url(surface: str) -> bool:
    low = surface.lower()
    return low.startswith("http://") or low.startswith("https://") or low.startswith("www.")


def is_rt_marker(surface: str) -> bool:
    return surface.lower() == "rt"


def is_symbol_token(surface: str) -> bool:
    """True for tokens excluded from word counts: #tag, @user, RT, URLs."""
    return (
        is_hashtag(surface)
        or is_mention(surface)
        or is_url(surface)
        or is_rt_marker(surface)
    )


def strip_hashtag(lemma: str) -> str:
    return lemma[1:] if lemma.startswith("#") else lemma


def count_words(tokens) -> int:
    """Number of tokens under the summary counting rule (no #/@/RT/URLs)."""
    return sum(1 for t in tokens if not is_symbol_token(t.surface))
