"""Curated lexical similarity resource and TSV emitter.

The resource is a set of synonym groups (score 0.85 within a group) plus
hand-picked related pairs with their own scores. `build_similarity`
restricts it to a vocabulary and writes the undirected TSV the summarizer
consumes: one line per unordered pair, self-pairs and zero scores omitted.
"""

from __future__ import annotations

SYNONYM_GROUPS: list[set[str]] = [
    {"earthquake", "quake", "tremor", "aftershock"},
    {"collapse", "topple", "crumble"},
    {"close", "shut"},
    {"open", "reopen"},
    {"block", "obstruct"},
    {"injure", "wound", "hurt"},
    {"kill", "die", "perish"},
    {"trap", "stick"},
    {"strand", "maroon"},
    {"rescue", "save"},
    {"search", "locate", "find"},
    {"send", "dispatch", "deploy"},
    {"damage", "destroy", "wreck"},
    {"repair", "restore", "rebuild"},
    {"declare", "announce", "proclaim"},
    {"help", "aid", "assist"},
    {"road", "highway", "street"},
    {"building", "structure"},
    {"house", "home", "dwelling"},
    {"doctor", "medic", "physician"},
    {"hospital", "clinic", "infirmary"},
    {"camp", "shelter", "tent"},
    {"supply", "provision", "material"},
    {"victim", "casualty"},
    {"team", "crew", "squad"},
    {"phone", "telephone"},
    {"photo", "image", "picture"},
    {"plane", "aircraft", "jet"},
]

RELATED_PAIRS: dict[tuple[str, str], float] = {
    ("airport", "flight"): 0.7,
    ("airport", "runway"): 0.7,
    ("airport", "plane"): 0.6,
    ("flight", "plane"): 0.75,
    ("hospital", "doctor"): 0.6,
    ("hospital", "patient"): 0.6,
    ("rescue", "helicopter"): 0.5,
    ("water", "tanker"): 0.5,
    ("power", "electricity"): 0.8,
    ("phone", "line"): 0.55,
    ("phone", "network"): 0.6,
    ("bridge", "road"): 0.55,
    ("temple", "heritage"): 0.5,
    ("relief", "aid"): 0.8,
    ("tent", "blanket"): 0.5,
    ("earthquake", "landslide"): 0.5,
    ("earthquake", "avalanche"): 0.5,
    ("death", "casualty"): 0.7,
    ("rubble", "debris"): 0.85,
}

GROUP_SCORE = 0.85


def _known_vocabulary() -> set[str]:
    vocab = set()
    for group in SYNONYM_GROUPS:
        vocab |= group
    for a, b in RELATED_PAIRS:
        vocab.add(a)
        vocab.add(b)
    return vocab


def score(a: str, b: str) -> float:
    """Resource similarity for a lemma pair; 0.0 when unknown."""
    if a == b:
        return 1.0
    for group in SYNONYM_GROUPS:
        if a in group and b in group:
            return GROUP_SCORE
    key = (a, b) if a <= b else (b, a)
    return RELATED_PAIRS.get(key, RELATED_PAIRS.get((key[1], key[0]), 0.0))


def pairs_for(vocab) -> list[tuple[str, str, float]]:
    """Nonzero similarity pairs within the vocabulary, canonically ordered."""
    known = sorted(set(vocab) & _known_vocabulary())
    out = []
    for i, a in enumerate(known):
        for b in known[i + 1 :]:
            s = score(a, b)
            if s > 0.0:
                out.append((a, b, s))
    return out


def build_similarity(vocab, out_path) -> int:
    """Write the similarity TSV for a vocabulary; returns the line count."""
    vocab = set(vocab)
    if not vocab:
        raise ValueError("build_similarity requires a non-empty vocabulary")
    rows = pairs_for(vocab)
    with open(out_path, "w", encoding="utf-8") as fh:
        for a, b, s in rows:
            fh.write(f"{a}\t{b}\t{s}\n")
    return len(rows)
