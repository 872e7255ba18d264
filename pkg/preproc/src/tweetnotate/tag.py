"""Rule- and lexicon-based POS tagger for tweets, Penn-style tags.

Priority: symbol classes (URL/USR/HT/RT, punctuation), numbers, a
closed-class function-word lexicon, an open-class lexicon of words common
in crisis reporting, then suffix and capitalization heuristics with a
noun default. One contextual pass fixes verb inflections after subjects
and participles after auxiliaries. Deliberately self-contained: no model
downloads, identical output everywhere.
"""

from __future__ import annotations

import re

from .tokenize import IRREGULAR_LEMMAS

PROPER_LEXICON = {
    "nepal", "kathmandu", "pokhara", "lalitpur", "bhaktapur", "gorkha",
    "tibet", "india", "delhi", "china", "everest", "sindhupalchok",
    "lamjung", "dharahara", "tundikhel", "tribhuvan", "unicef", "ocha",
}

CLOSED_CLASS = {
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "that": "DT",
    "these": "DT", "those": "DT", "all": "DT", "every": "DT", "each": "DT",
    "some": "DT", "any": "DT", "no": "DT", "several": "JJ", "few": "JJ",
    "in": "IN", "on": "IN", "at": "IN", "of": "IN", "from": "IN", "by": "IN",
    "with": "IN", "after": "IN", "before": "IN", "near": "IN", "under": "IN",
    "over": "IN", "into": "IN", "through": "IN", "about": "IN", "for": "IN",
    "during": "IN", "against": "IN", "between": "IN", "across": "IN",
    "around": "IN", "amid": "IN", "without": "IN", "if": "IN", "because": "IN",
    "as": "IN", "since": "IN", "while": "IN", "than": "IN", "out": "IN",
    "off": "IN", "via": "IN", "per": "IN", "despite": "IN", "inside": "IN",
    "outside": "IN", "to": "TO",
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC", "plus": "CC",
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "them": "PRP", "him": "PRP", "her": "PRP",
    "us": "PRP", "me": "PRP", "everyone": "NN", "someone": "NN",
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "its": "PRP$",
    "our": "PRP$", "their": "PRP$",
    "who": "WP", "what": "WP", "which": "WDT", "when": "WRB", "where": "WRB",
    "how": "WRB", "why": "WRB",
    "can": "MD", "could": "MD", "will": "MD", "would": "MD", "shall": "MD",
    "should": "MD", "may": "MD", "might": "MD", "must": "MD", "cannot": "MD",
    "is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD", "am": "VBP",
    "be": "VB", "been": "VBN", "being": "VBG",
    "has": "VBZ", "have": "VBP", "had": "VBD", "having": "VBG",
    "do": "VBP", "does": "VBZ", "did": "VBD", "done": "VBN",
    "not": "RB", "n't": "RB", "never": "RB", "also": "RB", "just": "RB",
    "still": "RB", "now": "RB", "here": "RB", "there": "EX", "very": "RB",
    "so": "RB", "too": "RB", "again": "RB", "soon": "RB", "already": "RB",
    "currently": "RB", "today": "NN", "tonight": "NN", "tomorrow": "NN",
    "yesterday": "NN", "overnight": "RB", "underway": "RB", "please": "UH",
    "pls": "UH", "plz": "UH", "breaking": "UH", "update": "NN", "'s": "POS",
    "'m": "VBP", "'re": "VBP", "'ve": "VBP", "'ll": "MD", "'d": "MD",
}

# base-form verbs; inflections are derived by suffix against this list
VERB_LEXICON = {
    "close", "open", "reopen", "collapse", "topple", "crumble", "damage",
    "destroy", "crack", "block", "clear", "cancel", "divert", "suspend",
    "resume", "restore", "cut", "break", "shut", "strike", "hit", "shake",
    "kill", "injure", "wound", "hurt", "die", "trap", "strand", "bury",
    "rescue", "save", "evacuate", "search", "locate", "find", "miss",
    "send", "dispatch", "deploy", "deliver", "distribute", "donate",
    "help", "need", "ask", "urge", "appeal", "request", "offer", "provide",
    "supply", "equip", "declare", "impose", "report", "confirm", "say",
    "tell", "warn", "announce", "tweet", "share", "post", "spread",
    "arrive", "land", "leave", "depart", "reach", "return", "flee", "escape",
    "stay", "remain", "shelter", "house", "treat", "admit", "operate",
    "pray", "hope", "mourn", "cry", "fear", "panic", "watch", "see", "hear",
    "feel", "know", "think", "believe", "stand", "support", "join", "come",
    "go", "get", "take", "give", "make", "put", "run", "work", "try",
    "start", "stop", "continue", "happen", "occur", "affect", "cause",
    "grow", "rise", "fall", "drop", "track", "monitor", "assess", "survey",
    "rebuild", "repair", "restock", "airlift", "accommodate", "show",
    "reduce", "carry", "bring", "fly", "gather", "express", "face",
}

NOUN_LEXICON = {
    "earthquake", "quake", "tremor", "aftershock", "magnitude", "epicenter",
    "disaster", "crisis", "emergency", "damage", "rubble", "debris",
    "landslide", "avalanche", "airport", "runway", "terminal", "flight",
    "plane", "aircraft", "helicopter", "jet", "bridge", "road", "highway",
    "street", "building", "tower", "temple", "school", "hospital", "clinic",
    "house", "home", "wall", "roof", "power", "electricity", "water",
    "phone", "line", "network", "communication", "internet", "signal",
    "people", "person", "man", "woman", "child", "family", "resident",
    "villager", "tourist", "trekker", "climber", "pilgrim", "student",
    "victim", "survivor", "casualty", "body", "death", "toll", "injury",
    "rescue", "rescuer", "team", "crew", "volunteer", "doctor", "nurse",
    "medic", "army", "police", "government", "official", "authority",
    "agency", "embassy", "ministry", "relief", "aid", "supply", "material",
    "food", "blanket", "tent", "camp", "shelter", "medicine", "kit",
    "help", "helpline", "database", "contact", "number", "report", "news",
    "footage", "photo", "video", "image", "update", "alert", "warning",
    "area", "region", "district", "valley", "village", "town", "city",
    "country", "border", "zone", "site", "ground", "base", "station",
    "center", "centre", "square", "market", "office", "day", "night",
    "morning", "hour", "time", "week", "thought", "prayer", "love",
    "strength", "support", "solidarity", "heart", "condolence", "tragedy",
    "situation", "condition", "service", "operation", "effort", "response",
    "donation", "fund", "money", "generator", "fuel", "convoy", "truck",
}

# predicative participles (closed, trapped, injured...) are deliberately
# absent: in crisis tweets they are usually the main event verb
ADJ_LEXICON = {
    "massive", "major", "strong", "powerful", "huge", "deadly", "severe",
    "terrible", "devastating", "historic", "ancient", "old", "new", "safe",
    "missing", "displaced", "homeless", "dead", "alive", "local",
    "international", "main", "central", "mobile", "medical", "urgent",
    "heavy", "scary", "sad", "heartbreaking", "awful", "grateful",
    "available", "free",
}

PUNCT_TAGS = {".": ".", ",": ",", ":": ":", ";": ":", "!": ".", "?": ".",
              "...": ":", "(": "(", ")": ")", '"': "``", "'": "''", "-": ":",
              "&": "CC", "/": ":", "#": "#", "@": "SYM", "%": "SYM"}

NUMBER_RE = re.compile(r"^\d+([.,]\d+)*$")
ORDINAL_RE = re.compile(r"^\d+(th|st|nd|rd)$")


def _lexical_tag(word: str, lower: str) -> str | None:
    if lower in CLOSED_CLASS:
        return CLOSED_CLASS[lower]
    if lower in PROPER_LEXICON:
        return "NNP"
    if lower in VERB_LEXICON and lower in NOUN_LEXICON:
        return "NN"  # ambiguous: noun default, contextual pass may flip it
    if lower in VERB_LEXICON:
        return "VB"
    irregular = IRREGULAR_LEMMAS.get(lower)
    if irregular in VERB_LEXICON and irregular != lower:
        # irregular inflection of a known verb: sent, struck, says, ...
        return "VBZ" if lower == irregular + "s" else "VBD"
    if lower in NOUN_LEXICON:
        return "NN"
    if lower in ADJ_LEXICON:
        return "JJ"
    return None


def _suffix_tag(word: str, lower: str, position: int) -> str:
    if lower.endswith("ed") and len(lower) > 4:
        return "VBD"
    if lower.endswith("ing") and len(lower) > 5:
        return "VBG"
    if lower.endswith("ly") and len(lower) > 4:
        return "RB"
    if word[0].isupper() and position > 0:
        return "NNP"
    if lower.endswith(("tion", "sion", "ment", "ness", "ship", "age", "ism", "ist", "ery")):
        return "NN"
    if lower.endswith(("ous", "ful", "ive", "able", "ible", "al", "ic")) and len(lower) > 4:
        return "JJ"
    return "NN"


def _plural_or_verb(word: str, lower: str, prev_tag: str | None) -> str:
    base = lower[:-1]
    if base in VERB_LEXICON and base not in NOUN_LEXICON:
        return "VBZ"
    if base in VERB_LEXICON and prev_tag in ("NN", "NNS", "NNP", "PRP"):
        return "VBZ"
    return "NNS"


def tag(tokens: list[str]) -> list[str]:
    """Penn-style tags, one per token."""
    tags: list[str] = []
    for i, word in enumerate(tokens):
        lower = word.lower()
        if lower.startswith(("http://", "https://", "www.")):
            tags.append("URL")
        elif word.startswith("@") and len(word) > 1:
            tags.append("USR")
        elif word.startswith("#") and len(word) > 1:
            tags.append("HT")
        elif lower == "rt":
            tags.append("RT")
        elif ORDINAL_RE.match(lower):
            tags.append("JJ")
        elif NUMBER_RE.match(lower):
            tags.append("CD")
        elif word in PUNCT_TAGS:
            tags.append(PUNCT_TAGS[word])
        elif not word[0].isalnum():
            tags.append("SYM")
        else:
            lex = _lexical_tag(word, lower)
            if lex is not None:
                tags.append(lex)
            elif lower.endswith("s") and not lower.endswith("ss") and len(lower) > 3:
                tags.append(_plural_or_verb(word, lower, tags[-1] if tags else None))
            else:
                tags.append(_suffix_tag(word, lower, i))

    # contextual fixups
    for i, t in enumerate(tags):
        prev = tags[i - 1] if i else None
        nxt = tags[i + 1] if i + 1 < len(tags) else None
        if t == "VB" and prev in ("NNS", "PRP"):
            tags[i] = "VBP"
        elif t == "VB" and prev in ("NN", "NNP"):
            tags[i] = "VBZ" if tokens[i].lower().endswith("s") else "VBP"
        elif t == "VBD" and prev in ("VBZ", "VBP", "VBD", "VBN", "MD"):
            # "was closed", "is damaged": participle after an auxiliary
            tags[i] = "VBN"
        elif t == "VBD" and prev in ("IN", "TO", "DT") and nxt and nxt.startswith("NN"):
            # "in collapsed school": prenominal participle, not a clause verb
            tags[i] = "JJ"
        elif t == "NN" and prev in ("MD", "TO") and tokens[i].lower() in VERB_LEXICON:
            tags[i] = "VB"
    return tags
