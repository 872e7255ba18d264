"""Trigram language model with stupid-backoff scoring.

Fluency of a candidate fused sentence is the geometric mean of per-position
trigram scores, which keeps the value in (0, 1] and length-normalized. The
model trains on the window's own tweets by default; a background corpus
(plain text, one sentence per line) can be supplied instead.
"""

from __future__ import annotations

import math
from collections import Counter

from sklearn.base import BaseEstimator

BOS = "<s>"
EOS = "</s>"


class TrigramBackoffModel(BaseEstimator):
    """Counts-based trigram scorer with stupid backoff.

    score(w | u, v) falls back from the trigram ratio to alpha times the
    bigram ratio, then alpha^2 times the unigram relative frequency; the
    unigram level is floored at 1/(V+1), so no position ever scores below
    alpha^2/(V+1).
    """

    def __init__(self, alpha: float = 0.4):
        self.alpha = alpha

    def fit(self, sentences):
        """Train on an iterable of token-string lists."""
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        tri: Counter[tuple[str, str, str]] = Counter()
        bi: Counter[tuple[str, str]] = Counter()
        uni: Counter[str] = Counter()
        total = 0
        n_sentences = 0
        for sentence in sentences:
            words = [w for w in sentence if w]
            if not words:
                continue
            n_sentences += 1
            padded = [BOS, BOS] + words + [EOS]
            for w in padded:
                uni[w] += 1
                total += 1
            for a, b in zip(padded, padded[1:]):
                bi[(a, b)] += 1
            for a, b, c in zip(padded, padded[1:], padded[2:]):
                tri[(a, b, c)] += 1
        if n_sentences == 0:
            raise ValueError("cannot train a trigram model on an empty corpus")
        self.trigram_ = tri
        self.bigram_ = bi
        self.unigram_ = uni
        self.total_ = total
        self.vocab_size_ = len(uni)
        return self

    def score(self, word: str, context: tuple[str, str]) -> float:
        """Stupid-backoff score of ``word`` after the two-word context."""
        u, v = context
        tri_count = self.trigram_.get((u, v, word), 0)
        if tri_count:
            return tri_count / self.bigram_[(u, v)]
        bi_count = self.bigram_.get((v, word), 0)
        if bi_count:
            return self.alpha * bi_count / self.unigram_[v]
        # unigram relative frequency, floored at 1/(V+1) so rare and unseen
        # words alike never drag a score below the floor
        floor = 1.0 / (self.vocab_size_ + 1)
        relative = self.unigram_.get(word, 0) / self.total_
        return self.alpha * self.alpha * max(relative, floor)

    def sentence_score(self, words) -> float:
        """Geometric mean of per-position scores, boundaries included."""
        words = list(words)
        padded = [BOS, BOS] + words + [EOS]
        log_sum = 0.0
        steps = 0
        for i in range(2, len(padded)):
            log_sum += math.log(self.score(padded[i], (padded[i - 2], padded[i - 1])))
            steps += 1
        return math.exp(log_sum / steps)


def train_trigram(sentences, alpha: float = 0.4) -> TrigramBackoffModel:
    return TrigramBackoffModel(alpha=alpha).fit(sentences)


def linguistic_quality(path, model: TrigramBackoffModel) -> float:
    """Fluency of a tweet-path: geometric mean trigram score of its lemmas."""
    return model.sentence_score([t.lemma for t in path.tokens])
