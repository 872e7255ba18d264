"""End-to-end summarization of one window: select, fuse, score, optimize.

Stage order: coverage-based tweet selection shrinks the window, the bigram
word graph over the survivors yields candidate fused sentences, content
words of each candidate are collapsed to concept/event cluster exemplars,
and an exact 0-1 solver picks the final paths under the word budget. When
fusion produces no usable path the extractive stage output is returned
instead, flagged as a fallback.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field, replace

from sklearn.base import BaseEstimator

from . import extractive, ilp, lexicon, wordgraph
from .evaluation import Summary
from .fluency import TrigramBackoffModel
from .ingest import Window
from .lexicon import ConceptClusters, SimilarityTable
from .tokenrules import (
    AUX_LEMMAS,
    count_words,
    is_noun,
    is_numeral,
    is_proper_noun,
    is_verb,
    strip_hashtag,
)
from .wordgraph import TweetPath


@dataclass(frozen=True)
class PipelineConfig:
    summary_length: int = 200
    extract_budget: int = 1000
    dedup_jaccard: float = 0.7
    min_path_len: int = 5
    max_path_len: int = 25
    max_paths: int = 500
    damping: float = 0.9
    ap_preference: float | None = None
    ap_max_iter: int = 1000
    min_topic_freq: int = 10
    time_limit: float = 10.0
    lm_alpha: float = 0.4
    weighting: str = "tf"
    edge_threshold: float = 0.0
    background_lm: str | None = None
    node_budget: int | None = None

    def __post_init__(self):
        if self.summary_length < 0 or self.extract_budget < 0:
            raise ValueError("budgets must be >= 0")
        if not 0.0 <= self.dedup_jaccard <= 1.0:
            raise ValueError("dedup_jaccard must lie in [0, 1]")
        if not 0 < self.min_path_len <= self.max_path_len:
            raise ValueError("need 0 < min_path_len <= max_path_len")
        if not 0.5 <= self.damping < 1.0:
            raise ValueError("damping must lie in [0.5, 1)")
        if self.max_paths < 1 or self.ap_max_iter < 1 or self.min_topic_freq < 1:
            raise ValueError("max_paths, ap_max_iter, and min_topic_freq must be >= 1")
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if not 0.0 < self.lm_alpha < 1.0:
            raise ValueError("lm_alpha must lie in (0, 1)")
        if self.weighting not in ("tf", "tfidf"):
            raise ValueError("weighting must be 'tf' or 'tfidf'")


@dataclass
class PipelineResult:
    summary: Summary
    fallback: bool
    paths: list[TweetPath] = field(default_factory=list)
    n_candidate_paths: int = 0
    solution: ilp.IlpSolution | None = None
    extract_solution: ilp.IlpSolution | None = None
    selected_tweet_ids: list[str] = field(default_factory=list)

    def to_report(self, config: PipelineConfig) -> dict:
        return {
            "window": self.summary.window_id,
            "method": self.summary.method,
            "fallback": self.fallback,
            "length_budget": self.summary.requested_length,
            "token_count": self.summary.token_count,
            "summary": self.summary.text,
            "paths": [
                {
                    "text": p.surface_text(),
                    "informativeness": p.informativeness,
                    "quality": p.quality,
                    "tokens": len(p),
                }
                for p in self.paths
            ],
            "candidate_paths": self.n_candidate_paths,
            "selected_tweets": self.selected_tweet_ids,
            "ilp": {
                "objective": self.solution.objective if self.solution else 0.0,
                "optimal": self.solution.optimal if self.solution else True,
            },
            "config": {k: v for k, v in asdict(config).items() if v is not None},
        }


@contextmanager
def _stage(timings: dict | None, name: str):
    t0 = time.perf_counter()
    try:
        yield
    finally:
        if timings is not None:
            timings[name] = timings.get(name, 0.0) + (time.perf_counter() - t0) * 1000.0


def path_content_ids(
    tokens,
    noun_clusters: ConceptClusters,
    verb_clusters: ConceptClusters,
    gazetteer=None,
) -> frozenset[tuple[str, str]]:
    """Content-word ids of a token sequence, with semantically similar words
    collapsed: nouns map to concept exemplars, verbs to event exemplars."""
    ids = set()
    for tok in tokens:
        lemma = strip_hashtag(tok.lemma)
        if not lemma:
            continue
        if is_numeral(tok.pos):
            ids.add(("num", lemma))
        elif is_noun(tok.pos):
            if gazetteer and is_proper_noun(tok.pos) and lemma in gazetteer:
                ids.add(("place", lemma))
            else:
                ids.add(("concept", noun_clusters.exemplar_of(lemma)))
        elif is_verb(tok.pos) and tok.lemma not in AUX_LEMMAS:
            ids.add(("event", verb_clusters.exemplar_of(lemma)))
    return frozenset(ids)


def _cluster_vocab(tweets, window, similarity_table, config, gazetteer):
    nouns, verbs = set(), set()
    for tweet in tweets:
        for cw in lexicon.extract_content_words(tweet, gazetteer):
            if cw.kind == lexicon.NOUN:
                nouns.add(cw.lemma)
            elif cw.kind == lexicon.VERB:
                verbs.add(cw.lemma)

    def build(vocab, kind):
        if not vocab:
            return ConceptClusters(kind, ())
        table = lexicon.similarity(
            vocab,
            resource=similarity_table,
            window=None if similarity_table is not None else window,
            edge_threshold=config.edge_threshold,
        )
        return lexicon.cluster_words(
            vocab,
            table,
            kind,
            damping=config.damping,
            preference=config.ap_preference,
            max_iter=config.ap_max_iter,
        )

    return build(nouns, lexicon.NOUN), build(verbs, lexicon.VERB)


def _extractive_summary(window, budget, config, gazetteer, timings) -> tuple[Summary, ilp.IlpSolution]:
    with _stage(timings, "fallback_extractive"):
        chosen, solution = extractive.select(
            window,
            budget,
            weighting=config.weighting,
            gazetteer=gazetteer,
            time_limit=config.time_limit,
            node_budget=config.node_budget,
        )
    text = " ".join(t.text for t in chosen)
    tokens = sum(extractive.tweet_length(t) for t in chosen)
    return Summary(text, tokens, window.key(), "fusion", budget), solution


def summarize_window(
    window: Window,
    config: PipelineConfig | None = None,
    similarity_table: SimilarityTable | None = None,
    gazetteer=None,
    timings: dict | None = None,
    dump_ilp=None,
) -> PipelineResult:
    """Summarize one window; see the module docstring for the stage order."""
    config = config or PipelineConfig()
    L = config.summary_length

    if not window.tweets or L == 0:
        return PipelineResult(Summary("", 0, window.key(), "fusion", L), fallback=False)

    with _stage(timings, "extractive"):
        selected, extract_solution = extractive.select(
            window,
            config.extract_budget,
            weighting=config.weighting,
            gazetteer=gazetteer,
            time_limit=config.time_limit,
            node_budget=config.node_budget,
        )
    if not selected:
        return PipelineResult(
            Summary("", 0, window.key(), "fusion", L),
            fallback=False,
            extract_solution=extract_solution,
        )

    paths: list[TweetPath] = []
    with _stage(timings, "graph"):
        try:
            graph = wordgraph.build_graph(selected)
        except ValueError:
            graph = None
    if graph is not None:
        with _stage(timings, "paths"):
            paths = wordgraph.generate_paths(
                graph,
                min_len=config.min_path_len,
                max_len=config.max_path_len,
                max_paths=config.max_paths,
            )

    if not paths:
        summary, solution = _extractive_summary(window, L, config, gazetteer, timings)
        return PipelineResult(
            summary,
            fallback=True,
            solution=solution,
            extract_solution=extract_solution,
            selected_tweet_ids=[t.id for t in selected],
        )

    with _stage(timings, "clustering"):
        noun_clusters, verb_clusters = _cluster_vocab(
            selected, window, similarity_table, config, gazetteer
        )

    with _stage(timings, "lm"):
        if config.background_lm:
            with open(config.background_lm, encoding="utf-8") as fh:
                sentences = [line.split() for line in fh if line.strip()]
        else:
            sentences = [[t.lemma for t in tweet.tokens] for tweet in window.tweets]
        model = TrigramBackoffModel(alpha=config.lm_alpha).fit(sentences)
        centroid = wordgraph.window_centroid(window.tweets)

    with _stage(timings, "scoring"):
        scored = []
        for p in paths:
            p = wordgraph.score_path(p, centroid, model)
            ids = path_content_ids(p.tokens, noun_clusters, verb_clusters, gazetteer)
            scored.append(replace(p, content_ids=ids))

    with _stage(timings, "ilp"):
        word_ids = sorted({w for p in scored for w in p.content_ids})
        index = {w: j for j, w in enumerate(word_ids)}
        instance = ilp.IlpInstance(
            lengths=tuple(max(1, count_words(p.tokens)) for p in scored),
            gains=tuple(p.quality * p.informativeness for p in scored),
            coverage=tuple(
                tuple(sorted(index[w] for w in p.content_ids)) for p in scored
            ),
            num_words=len(word_ids),
            budget=L,
        )
        if dump_ilp:
            ilp.dump_instance(instance, dump_ilp)
        solution = ilp.solve(
            instance, time_limit=config.time_limit, node_budget=config.node_budget
        )

    chosen = [scored[i] for i in solution.selected]
    if not chosen:
        summary, fb_solution = _extractive_summary(window, L, config, gazetteer, timings)
        return PipelineResult(
            summary,
            fallback=True,
            n_candidate_paths=len(scored),
            solution=fb_solution,
            extract_solution=extract_solution,
            selected_tweet_ids=[t.id for t in selected],
        )

    with _stage(timings, "assemble"):
        chosen.sort(key=lambda p: (-(p.quality * p.informativeness), p.lemma_text()))
        # standalone separator keeps whitespace tokenization clean for scoring
        text = " . ".join(p.surface_text() for p in chosen)
        token_count = sum(instance.lengths[i] for i in solution.selected)
        summary = Summary(text, token_count, window.key(), "fusion", L)

    return PipelineResult(
        summary,
        fallback=False,
        paths=chosen,
        n_candidate_paths=len(scored),
        solution=solution,
        extract_solution=extract_solution,
        selected_tweet_ids=[t.id for t in selected],
    )


class FusionSummarizer(BaseEstimator):
    """Estimator facade over the pipeline: ``fit`` a window, read ``summary_``."""

    def __init__(
        self,
        summary_length=200,
        extract_budget=1000,
        min_path_len=5,
        max_path_len=25,
        max_paths=500,
        damping=0.9,
        ap_preference=None,
        ap_max_iter=1000,
        time_limit=10.0,
        lm_alpha=0.4,
        weighting="tf",
        edge_threshold=0.0,
        background_lm=None,
        node_budget=None,
    ):
        self.summary_length = summary_length
        self.extract_budget = extract_budget
        self.min_path_len = min_path_len
        self.max_path_len = max_path_len
        self.max_paths = max_paths
        self.damping = damping
        self.ap_preference = ap_preference
        self.ap_max_iter = ap_max_iter
        self.time_limit = time_limit
        self.lm_alpha = lm_alpha
        self.weighting = weighting
        self.edge_threshold = edge_threshold
        self.background_lm = background_lm
        self.node_budget = node_budget

    def _config(self) -> PipelineConfig:
        return PipelineConfig(
            summary_length=self.summary_length,
            extract_budget=self.extract_budget,
            min_path_len=self.min_path_len,
            max_path_len=self.max_path_len,
            max_paths=self.max_paths,
            damping=self.damping,
            ap_preference=self.ap_preference,
            ap_max_iter=self.ap_max_iter,
            time_limit=self.time_limit,
            lm_alpha=self.lm_alpha,
            weighting=self.weighting,
            edge_threshold=self.edge_threshold,
            background_lm=self.background_lm,
            node_budget=self.node_budget,
        )

    def fit(self, window: Window, similarity_table=None, gazetteer=None):
        self.result_ = summarize_window(
            window, self._config(), similarity_table, gazetteer
        )
        self.summary_ = self.result_.summary
        self.fallback_ = self.result_.fallback
        return self

    def summarize(self, window: Window, **kwargs) -> Summary:
        return self.fit(window, **kwargs).summary_
