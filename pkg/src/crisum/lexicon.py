"""Content-word extraction, similarity tables, and concept/event clusters.

Nouns are clustered into concepts and verbs into events using affinity
propagation over a lemma-level similarity table. The table may come from a
precomputed resource (TSV) or, as a fallback, from the cosine of PPMI
co-occurrence vectors over the tweets of a window.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .clustering import AffinityPropagationClusterer
from .ingest import AnnotatedTweet, Window
from .tokenrules import (
    AUX_LEMMAS,
    is_noun,
    is_numeral,
    is_proper_noun,
    is_verb,
    strip_hashtag,
)
from .validation import check_unit_interval

logger = logging.getLogger(__name__)

NUMERAL = "numeral"
PLACE = "place"
NOUN = "noun"
VERB = "verb"


@dataclass(frozen=True, slots=True)
class ContentWord:
    lemma: str
    kind: str


def extract_content_words(
    tweet: AnnotatedTweet, gazetteer: frozenset[str] | set[str] | None = None
) -> set[ContentWord]:
    """Nouns, non-auxiliary verbs, and cardinal numbers of a tweet.

    Proper nouns found in the gazetteer are tagged as places. Lemmas are
    hashtag-stripped so "#kathmandu" and "kathmandu" coincide.
    """
    words = set()
    for tok in tweet.tokens:
        lemma = strip_hashtag(tok.lemma)
        if not lemma:
            continue
        if is_numeral(tok.pos):
            words.add(ContentWord(lemma, NUMERAL))
        elif is_noun(tok.pos):
            if gazetteer and is_proper_noun(tok.pos) and lemma in gazetteer:
                words.add(ContentWord(lemma, PLACE))
            else:
                words.add(ContentWord(lemma, NOUN))
        elif is_verb(tok.pos) and tok.lemma not in AUX_LEMMAS:
            words.add(ContentWord(lemma, VERB))
    return words


def load_gazetteer(path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return frozenset(line.strip().lower() for line in fh if line.strip())


class SimilarityTable:
    """Symmetric lemma-pair similarity scores in [0, 1].

    Pairs are stored under a canonical (min, max) key, so symmetry holds by
    construction; ``get`` returns 1.0 on the diagonal and 0.0 for absent pairs.
    """

    def __init__(self):
        self._scores: dict[tuple[str, str], float] = {}

    @staticmethod
    def _key(a: str, b: str) -> tuple[str, str]:
        return (a, b) if a <= b else (b, a)

    def set(self, a: str, b: str, score: float) -> None:
        if a == b:
            return
        check_unit_interval(score, "similarity score")
        self._scores[self._key(a, b)] = score

    def get(self, a: str, b: str) -> float:
        if a == b:
            return 1.0
        return self._scores.get(self._key(a, b), 0.0)

    def items(self):
        return self._scores.items()

    def __len__(self) -> int:
        return len(self._scores)

    def vocabulary(self) -> set[str]:
        vocab = set()
        for a, b in self._scores:
            vocab.add(a)
            vocab.add(b)
        return vocab

    def restrict(self, vocab) -> "SimilarityTable":
        vocab = set(vocab)
        out = SimilarityTable()
        for (a, b), s in self._scores.items():
            if a in vocab and b in vocab:
                out._scores[(a, b)] = s
        return out

    def to_matrix(self, vocab_order: list[str]) -> np.ndarray:
        n = len(vocab_order)
        S = np.zeros((n, n))
        index = {w: i for i, w in enumerate(vocab_order)}
        for (a, b), s in self._scores.items():
            i, j = index.get(a), index.get(b)
            if i is not None and j is not None:
                S[i, j] = S[j, i] = s
        np.fill_diagonal(S, 1.0)
        return S

    @classmethod
    def from_tsv(cls, path) -> "SimilarityTable":
        """Load ``lemma1<TAB>lemma2<TAB>score`` lines (undirected, UTF-8)."""
        table = cls()
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise ValueError(f"{path}: line {line_no}: expected 3 tab-separated fields")
                a, b, score = parts[0], parts[1], float(parts[2])
                table.set(a, b, score)
        return table

    def to_tsv(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for (a, b), s in sorted(self._scores.items()):
                fh.write(f"{a}\t{b}\t{s}\n")


def similarity(
    vocab,
    resource: SimilarityTable | None = None,
    window: Window | None = None,
    edge_threshold: float = 0.0,
) -> SimilarityTable:
    """Similarity table restricted to ``vocab``.

    With a resource table, scores pass through unchanged. Otherwise a
    distributional fallback is computed: cosine of PPMI co-occurrence vectors
    over the window's tweets. Pairs absent from both are 0.
    """
    vocab = set(vocab)
    if not vocab:
        raise ValueError("similarity requires a non-empty vocabulary")

    if resource is not None:
        table = resource.restrict(vocab)
    else:
        if window is None:
            raise ValueError("fallback similarity requires a window of tweets")
        table = _ppmi_cosine(sorted(vocab), window.tweets)

    if edge_threshold > 0.0:
        pruned = SimilarityTable()
        for (a, b), s in table.items():
            if s >= edge_threshold:
                pruned.set(a, b, s)
        return pruned
    return table


def _ppmi_cosine(vocab_order: list[str], tweets) -> SimilarityTable:
    n = len(vocab_order)
    index = {w: i for i, w in enumerate(vocab_order)}
    singles = np.zeros(n)
    pair_counts: Counter[tuple[int, int]] = Counter()
    n_tweets = 0
    for tweet in tweets:
        present = sorted(
            {index[lem] for tok in tweet.tokens if (lem := strip_hashtag(tok.lemma)) in index}
        )
        if not present:
            continue
        n_tweets += 1
        for i in present:
            singles[i] += 1
        for a_pos, i in enumerate(present):
            for j in present[a_pos + 1 :]:
                pair_counts[(i, j)] += 1

    table = SimilarityTable()
    if n_tweets == 0 or not pair_counts:
        return table

    # PPMI over tweet-level co-occurrence; self dimension zeroed so that two
    # words with identical contexts get cosine 1 even though they are distinct.
    M = np.zeros((n, n))
    for (i, j), c in pair_counts.items():
        pmi = math.log(c * n_tweets / (singles[i] * singles[j]))
        if pmi > 0:
            M[i, j] = M[j, i] = pmi
    norms = np.linalg.norm(M, axis=1)
    nz = norms > 0
    unit = np.zeros_like(M)
    unit[nz] = M[nz] / norms[nz, None]
    cos = np.clip(unit @ unit.T, 0.0, 1.0)
    for i in range(n):
        for j in range(i + 1, n):
            if cos[i, j] > 0:
                table.set(vocab_order[i], vocab_order[j], float(cos[i, j]))
    return table


@dataclass(frozen=True)
class ConceptClusters:
    """Partition of a vocabulary into exemplar-labeled clusters."""

    kind: str  # NOUN or VERB
    clusters: tuple[tuple[str, frozenset[str]], ...]  # (exemplar, members)

    def exemplar_of(self, lemma: str) -> str:
        return self._index().get(lemma, lemma)

    def _index(self) -> dict[str, str]:
        idx = getattr(self, "_cached_index", None)
        if idx is None:
            idx = {m: ex for ex, members in self.clusters for m in members}
            object.__setattr__(self, "_cached_index", idx)
        return idx

    def vocabulary(self) -> set[str]:
        return set(self._index())

    def __len__(self) -> int:
        return len(self.clusters)


def cluster_words(
    vocab,
    table: SimilarityTable,
    kind: str,
    damping: float = 0.9,
    preference: float | None = None,
    max_iter: int = 1000,
) -> ConceptClusters:
    """Cluster ``vocab`` into concepts/events via affinity propagation.

    Rows enter the similarity matrix in lexicographic lemma order, so ties in
    exemplar assignment resolve to the lexicographically smallest lemma.
    """
    order = sorted(set(vocab))
    if not order:
        return ConceptClusters(kind, ())
    S = table.to_matrix(order)
    clusterer = AffinityPropagationClusterer(
        damping=damping, preference=preference, max_iter=max_iter
    )
    clusterer.fit(S)
    if not clusterer.converged_:
        logger.warning(
            "affinity propagation did not converge after %d iterations (%d %s lemmas)",
            clusterer.n_iter_, len(order), kind,
        )
    groups: dict[str, set[str]] = {}
    for row, pos in enumerate(clusterer.labels_):
        exemplar = order[clusterer.exemplar_indices_[pos]]
        groups.setdefault(exemplar, set()).add(order[row])
    clusters = tuple((ex, frozenset(members)) for ex, members in sorted(groups.items()))
    return ConceptClusters(kind, clusters)


def cluster_of(lemma: str, clusters: ConceptClusters) -> str:
    """Exemplar of the cluster containing ``lemma``; unseen lemmas are singletons."""
    return clusters.exemplar_of(lemma)
