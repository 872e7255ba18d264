"""Bigram word graph over tweets, candidate fused paths, and path scoring.

Each node is a (lemma, POS, lemma, POS) bigram; two tweet positions merge
into one node only when both lemmas *and* both POS tags agree, which stops
unrelated tweets from fusing through homographs. Every tweet contributes a
START -> ... -> END chain, and candidate sentences are depth-bounded walks
through the merged graph.
"""

from __future__ import annotations

import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, replace

from .ingest import AnnotatedTweet, Token
from .tokenrules import is_noun, is_symbol_token, is_verb, strip_hashtag

logger = logging.getLogger(__name__)

START = ("<start>",)
END = ("<end>",)


def _bigram_nodes(tweet: AnnotatedTweet) -> list[tuple]:
    toks = tweet.tokens
    return [
        (toks[i].lemma, toks[i].pos, toks[i + 1].lemma, toks[i + 1].pos)
        for i in range(len(toks) - 1)
    ]


@dataclass(frozen=True)
class TweetPath:
    """A START->END walk read as a candidate fused sentence."""

    tokens: tuple[Token, ...]
    source_tweets: frozenset[str]
    edge_weight: int
    informativeness: float | None = None
    quality: float | None = None
    content_ids: frozenset = frozenset()

    def lemma_text(self) -> str:
        return " ".join(t.lemma for t in self.tokens)

    def surface_text(self) -> str:
        return " ".join(t.surface for t in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


class WordGraph:
    """Directed bigram graph with traversal counts and source-tweet sets."""

    def __init__(self):
        self.edges: dict[tuple, Counter] = defaultdict(Counter)  # u -> {v: count}
        self.sources: dict[tuple, set[str]] = defaultdict(set)
        self.surfaces: dict[tuple, tuple[str, str]] = {}
        self._adjacency: dict[tuple, list[tuple]] | None = None

    def add_tweet(self, tweet: AnnotatedTweet) -> bool:
        nodes = _bigram_nodes(tweet)
        if not nodes:
            return False
        chain = [START] + nodes + [END]
        for u, v in zip(chain, chain[1:]):
            self.edges[u][v] += 1
        for i, node in enumerate(nodes):
            self.sources[node].add(tweet.id)
            if node not in self.surfaces:
                self.surfaces[node] = (tweet.tokens[i].surface, tweet.tokens[i + 1].surface)
        self._adjacency = None
        return True

    @property
    def nodes(self) -> set[tuple]:
        out = set(self.surfaces)
        out.add(START)
        out.add(END)
        return out

    def edge_count(self, u, v) -> int:
        return self.edges[u][v]

    def successors(self, u) -> list[tuple]:
        """Neighbors ordered by descending traversal count, then node key."""
        if self._adjacency is None:
            self._adjacency = {
                u: sorted(counts, key=lambda v: (-counts[v], v))
                for u, counts in self.edges.items()
            }
        return self._adjacency.get(u, [])

    def has_walk(self, tweet: AnnotatedTweet) -> bool:
        """True when the tweet's own bigram chain survives in the graph."""
        nodes = _bigram_nodes(tweet)
        if not nodes:
            return False
        chain = [START] + nodes + [END]
        return all(self.edges[u][v] >= 1 for u, v in zip(chain, chain[1:]))


def build_graph(tweets) -> WordGraph:
    tweets = list(tweets)
    if not tweets:
        raise ValueError("cannot build a word graph from no tweets")
    graph = WordGraph()
    added = 0
    for tweet in tweets:
        if len(tweet.tokens) < 2:
            logger.warning("tweet %s has fewer than 2 tokens, skipped", tweet.id)
            continue
        graph.add_tweet(tweet)
        added += 1
    if added == 0:
        raise ValueError("all tweets are shorter than 2 tokens; no graph")
    return graph


def _path_tokens(graph: WordGraph, nodes: list[tuple]) -> tuple[Token, ...]:
    first = nodes[0]
    surfaces = graph.surfaces[first]
    tokens = [Token(surfaces[0], first[0], first[1]), Token(surfaces[1], first[2], first[3])]
    for node in nodes[1:]:
        tokens.append(Token(graph.surfaces[node][1], node[2], node[3]))
    return tuple(tokens)


def generate_paths(
    graph: WordGraph,
    min_len: int = 5,
    max_len: int = 25,
    max_paths: int = 500,
    max_expansions: int = 250_000,
) -> list[TweetPath]:
    """Depth-bounded START->END walks without node revisits.

    A walk of k bigram nodes reads as k+1 tokens. Candidates must contain at
    least one noun and one verb and respect [min_len, max_len]; results are
    ordered by descending sum of traversed edge counts. Exploration stops
    deterministically after ``max_expansions`` node visits.
    """
    if not 0 < min_len <= max_len:
        raise ValueError(f"need 0 < min_len <= max_len, got ({min_len}, {max_len})")

    max_nodes = max_len - 1
    # Search effort and the candidate quota are split across the graph's
    # entry nodes: one heavily-templated region (many tweets sharing an
    # opening skeleton) must not crowd every other opening out of the list.
    starts = graph.successors(START)
    if not starts:
        return []
    region_budget = max(2000, max_expansions // len(starts))
    region_quota = max(4, -(-max_paths // len(starts)))  # ceil division

    candidates: list[TweetPath] = []

    def collect(nodes, weight: int) -> bool:
        tokens = _path_tokens(graph, nodes)
        if not any(is_noun(t.pos) for t in tokens):
            return False
        if not any(is_verb(t.pos) for t in tokens):
            return False
        sources = frozenset().union(*(graph.sources[n] for n in nodes))
        candidates.append(TweetPath(tokens, sources, weight))
        return True

    for start in starts:
        expansions = 0
        collected = 0
        path = [start]
        visited = {start}

        def walk(node, weight: int):
            nonlocal expansions, collected
            if expansions >= region_budget or collected >= region_quota:
                return
            expansions += 1
            for succ in graph.successors(node):
                if collected >= region_quota:
                    return
                if succ == END:
                    n_tokens = len(path) + 1
                    if min_len <= n_tokens <= max_len:
                        if collect(path, weight + graph.edge_count(node, END)):
                            collected += 1
                    continue
                if succ in visited or len(path) >= max_nodes:
                    continue
                if expansions >= region_budget:
                    return
                visited.add(succ)
                path.append(succ)
                walk(succ, weight + graph.edge_count(node, succ))
                path.pop()
                visited.remove(succ)

        walk(start, graph.edge_count(START, start))

    candidates.sort(key=lambda p: (-p.edge_weight, p.lemma_text()))
    return candidates[:max_paths]


# ---------------------------------------------------------------------------
# informativeness


def _countable_lemmas(tokens) -> list[str]:
    return [
        strip_hashtag(t.lemma)
        for t in tokens
        if not is_symbol_token(t.surface) and strip_hashtag(t.lemma)
    ]


def window_centroid(tweets) -> dict[str, float]:
    """tf-idf centroid of a window: term frequency within the window times
    log(N / document frequency) across its tweets."""
    tweets = list(tweets)
    tf: Counter[str] = Counter()
    df: Counter[str] = Counter()
    for tweet in tweets:
        lemmas = _countable_lemmas(tweet.tokens)
        tf.update(lemmas)
        df.update(set(lemmas))
    n = len(tweets)
    centroid = {}
    for term, freq in tf.items():
        idf = math.log(n / df[term]) if n else 0.0
        if idf > 0:
            centroid[term] = freq * idf
    return centroid


def informativeness(path: TweetPath, centroid: dict[str, float]) -> float:
    """Cosine similarity between the path's term profile and the centroid."""
    norm_c = math.sqrt(sum(v * v for v in centroid.values()))
    if norm_c == 0.0:
        return 0.0
    vec = Counter(_countable_lemmas(path.tokens))
    dot = sum(count * centroid.get(term, 0.0) for term, count in vec.items())
    norm_p = math.sqrt(sum(c * c for c in vec.values()))
    if norm_p == 0.0:
        return 0.0
    return min(1.0, max(0.0, dot / (norm_c * norm_p)))


def score_path(path: TweetPath, centroid, model) -> TweetPath:
    from .fluency import linguistic_quality

    return replace(
        path,
        informativeness=informativeness(path, centroid),
        quality=linguistic_quality(path, model),
    )
