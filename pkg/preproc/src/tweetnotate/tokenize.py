"""Tweet tokenizer and lemmatizer.

Hashtags, mentions, and URLs stay single tokens; decimals and comma
grouped numbers stay whole; clitics split off. Lemmas come from an
irregular-form map plus conservative suffix stripping; outside the map
they are consistent rather than dictionary-perfect ("restored" and
"restoring" meet at the same lemma), which is what downstream matching
needs. Everything is pure string processing and deterministic.
"""

from __future__ import annotations

import re

TOKEN_RE = re.compile(
    r"""
    https?://\S+ | www\.\S+            # URLs
    | \#\w+                            # hashtags
    | @\w+                             # mentions
    | \d+(?:[.,]\d+)*(?:th|st|nd|rd)?  # numbers, decimals, ordinals
    | [A-Za-z]+(?:'[A-Za-z]+)?         # words, with a trailing clitic
    | \.\.\. | [^\sA-Za-z0-9]          # ellipsis, then single symbols
    """,
    re.VERBOSE,
)

CLITIC_RE = re.compile(r"^([A-Za-z]+)'(s|m|d|re|ve|ll|t)$", re.IGNORECASE)


def tokenize(text: str) -> list[str]:
    out = []
    for raw in TOKEN_RE.findall(text):
        if raw.lower().endswith("n't") and len(raw) > 3:
            out.append(raw[:-3])
            out.append(raw[-3:])
            continue
        m = CLITIC_RE.match(raw)
        if m:
            out.append(m.group(1))
            out.append("'" + m.group(2))
            continue
        out.append(raw)
    return out


IRREGULAR_LEMMAS = {
    # irregular and e-final verbs common in crisis reporting
    "said": "say", "says": "say", "sent": "send", "went": "go", "gone": "go",
    "struck": "strike", "took": "take", "taken": "take", "got": "get",
    "left": "leave", "lost": "lose", "found": "find", "felt": "feel",
    "fell": "fall", "fallen": "fall", "began": "begin", "begun": "begin",
    "broke": "break", "broken": "break", "brought": "bring", "built": "build",
    "came": "come", "did": "do", "done": "do", "gave": "give", "given": "give",
    "held": "hold", "kept": "keep", "knew": "know", "known": "know",
    "made": "make", "met": "meet", "ran": "run", "rose": "rise",
    "saw": "see", "seen": "see", "shut": "shut", "spoke": "speak",
    "stood": "stand", "stuck": "stick", "told": "tell", "thought": "think",
    "was": "be", "were": "be", "been": "be", "is": "be", "are": "be", "am": "be",
    "being": "be", "has": "have", "had": "have", "having": "have",
    "flew": "fly", "flown": "fly", "hit": "hit", "led": "lead", "dug": "dig",
    "toppled": "topple", "toppling": "topple", "closed": "close",
    "closing": "close", "collapsed": "collapse", "collapsing": "collapse",
    "damaged": "damage", "damaging": "damage", "cancelled": "cancel",
    "canceled": "cancel", "cancelling": "cancel", "restored": "restore",
    "restoring": "restore", "declared": "declare", "declaring": "declare",
    "injured": "injure", "wounded": "wound", "stranded": "strand",
    "trapped": "trap", "trapping": "trap", "rescued": "rescue",
    "rescuing": "rescue", "located": "locate", "locating": "locate",
    "equipped": "equip", "deployed": "deploy", "distributed": "distribute",
    "distributing": "distribute", "arrived": "arrive", "arriving": "arrive",
    "opened": "open", "opening": "open", "reported": "report",
    "treated": "treat", "cleared": "clear", "cracked": "crack",
    "buried": "bury", "evacuated": "evacuate", "evacuating": "evacuate",
    "imposed": "impose", "resumed": "resume", "suspended": "suspend",
    "diverted": "divert", "affected": "affect", "continued": "continue",
    "received": "receive", "confirmed": "confirm", "searching": "search",
    "searched": "search", "praying": "pray", "prayed": "pray",
    # irregular plurals
    "people": "people", "children": "child", "men": "man", "women": "woman",
    "feet": "foot", "lives": "life", "crises": "crisis", "injuries": "injury",
    "bodies": "body", "families": "family", "supplies": "supply",
    "casualties": "casualty", "authorities": "authority", "cities": "city",
    "facilities": "facility", "countries": "country", "buses": "bus",
}

_DOUBLED = re.compile(r"([bcdfghjkmnpqrtv])\1$")


def _fix_stem(stem: str) -> str:
    """Porter-style step-1b fixups after stripping -ed/-ing."""
    if _DOUBLED.search(stem):
        return stem[:-1]
    if stem.endswith(("at", "iz", "bl")):
        return stem + "e"
    return stem


def lemmatize(surface: str) -> str:
    """Lowercased lemma; symbols and numbers pass through unchanged."""
    low = surface.lower()
    if not low or not low[0].isalpha():
        return low  # hashtags keep their #, mentions their @, numbers as-is
    if low in IRREGULAR_LEMMAS:
        return IRREGULAR_LEMMAS[low]
    if low.endswith("ies") and len(low) > 4:
        return low[:-3] + "y"
    if low.endswith(("sses", "shes", "ches", "xes")):
        return low[:-2]
    if low.endswith("s") and not low.endswith(("ss", "us", "is")) and len(low) > 3:
        return low[:-1]
    if low.endswith("ing") and len(low) > 5:
        return _fix_stem(low[:-3])
    if low.endswith("ed") and len(low) > 4:
        return _fix_stem(low[:-2])
    return low
