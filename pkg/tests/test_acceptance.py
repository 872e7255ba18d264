"""Acceptance suite: one test per acceptance criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion. Everything here runs on checked-in fixtures or seeded
generators; no network, no external solvers, no secondary tooling.
"""

import itertools
import json
import random
import statistics
import subprocess
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

from crisum import ilp
from crisum.clustering import AffinityPropagationClusterer
from crisum.evaluation import association_precision, random_baseline, rouge1_recall
from crisum.extractive import build_instance, select
from crisum.ingest import make_window, parse_corpus_path
from crisum.pipeline import PipelineConfig, summarize_window
from crisum.synthetic import DAY_2015_04_25, gold_text, make_window_tweets
from crisum.topics import associate, overlap_coefficient
from crisum.wordgraph import build_graph, generate_paths

from conftest import FIXTURES
from helpers import tw, window_of


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    print(f"ACCEPTANCE {name}: PASS")


def random_instance(rng, n_max=12, m_max=30):
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    return ilp.IlpInstance(
        lengths=tuple(rng.randint(1, 12) for _ in range(n)),
        gains=tuple(rng.random() for _ in range(n)),
        coverage=tuple(
            tuple(sorted(rng.sample(range(m), rng.randint(0, min(m, 6)))))
            for _ in range(n)
        ),
        num_words=m,
        budget=rng.randint(0, 40),
    )


def test_ilp_optimality_on_100_random_instances():
    with criterion("ILP optimality (100 instances, n<=12, m<=30)"):
        rng = random.Random(20250425)
        for trial in range(100):
            instance = random_instance(rng)
            t0 = time.perf_counter()
            got = ilp.solve(instance)
            elapsed = time.perf_counter() - t0
            want = ilp.oracle_solve(instance)
            assert got.optimal, f"trial {trial}: not certified optimal"
            assert got.objective == want.objective, f"trial {trial}: objective mismatch"
            assert elapsed < 1.0, f"trial {trial}: {elapsed:.3f}s"


def test_constraint_suite_on_1000_fuzzed_instances():
    with criterion("constraint suite (1000 fuzzed instances, zero violations)"):
        rng = random.Random(77)
        violations = 0
        for _ in range(1000):
            n = rng.randint(1, 24)
            m = rng.randint(1, 50)
            instance = ilp.IlpInstance(
                lengths=tuple(rng.randint(1, 15) for _ in range(n)),
                gains=tuple(rng.random() for _ in range(n)),
                coverage=tuple(
                    tuple(sorted(rng.sample(range(m), rng.randint(0, min(m, 8)))))
                    for _ in range(n)
                ),
                num_words=m,
                budget=rng.randint(0, 60),
                word_weights=tuple(rng.randint(1, 9) + rng.random() for _ in range(m))
                if rng.random() < 0.5
                else None,
            )
            solution = ilp.solve(instance, node_budget=1500)
            violations += len(ilp.check_solution(instance, solution))
        assert violations == 0


def _subset_oracle_objective(instance):
    best = 0.0
    n = instance.n_items
    for r in range(n + 1):
        for subset in itertools.combinations(range(n), r):
            if sum(instance.lengths[i] for i in subset) > instance.budget:
                continue
            covered = ilp.derive_covered(instance, subset)
            best = max(best, ilp.objective_value(instance, subset, covered))
    return best


def test_extractive_matches_exhaustive_enumeration():
    with criterion("extractive selection == exhaustive subset enumeration (<=15 tweets)"):
        rng = random.Random(8)
        vocab = ["airport", "bridge", "quake", "water", "tower", "road", "camp",
                 "tent", "relief", "school"]
        fixtures = []
        for trial in range(30):
            tweets = []
            for i in range(rng.randint(1, 15)):
                words = rng.sample(vocab, rng.randint(1, 4))
                spec = " ".join(f"{w}/NN" for w in words)
                tweets.append(tw(f"t{trial}-{i}", spec, ts=i, text=f"{trial}-{i}"))
            fixtures.append((window_of(*tweets), rng.randint(0, 20)))
        for w, budget in fixtures:
            instance, _ = build_instance(list(w.tweets), budget)
            _, solution = select(w, budget)
            assert solution.optimal
            assert solution.objective == _subset_oracle_objective(instance)


OVERLAP_FIXTURES = [
    # (|X|, |Y|, |X & Y|, expected overlap)
    (20, 10, 5, 0.5),
    (10, 10, 10, 1.0),
    (7, 3, 3, 1.0),
    (8, 4, 1, 0.25),
    (50, 2, 1, 0.5),
    (6, 5, 0, 0.0),
    (16, 4, 3, 0.75),
    (12, 8, 2, 0.25),
    (5, 5, 4, 0.8),
    (40, 10, 9, 0.9),
    (10, 20, 5, 0.5),
    (3, 30, 3, 1.0),
    (32, 16, 4, 0.25),
    (25, 5, 1, 0.2),
    (18, 6, 3, 0.5),
    (9, 12, 9, 1.0),
    (64, 8, 6, 0.75),
    (11, 10, 1, 0.1),
    (15, 4, 2, 0.5),
    (100, 50, 35, 0.7),
]


def test_overlap_arithmetic_on_20_fixture_pairs():
    with criterion("overlap coefficient arithmetic (20 hand-computed pairs)"):
        assert len(OVERLAP_FIXTURES) == 20
        for nx, ny, ninter, expected in OVERLAP_FIXTURES:
            assert ninter <= min(nx, ny)
            inter = {f"c{i}" for i in range(ninter)}
            x = frozenset(inter | {f"x{i}" for i in range(nx - ninter)})
            y = frozenset(inter | {f"y{i}" for i in range(ny - ninter)})
            assert (len(x), len(y)) == (nx, ny)
            assert overlap_coefficient(x, y) == expected


def _planted(sizes, within=0.9, across=0.1):
    n = sum(sizes)
    S = np.full((n, n), across)
    blocks, start = [], 0
    for size in sizes:
        S[start : start + size, start : start + size] = within
        blocks.append(frozenset(range(start, start + size)))
        start += size
    np.fill_diagonal(S, 1.0)
    return S, blocks


def _purity(labels, blocks):
    clusters = {}
    for i, lab in enumerate(labels):
        clusters.setdefault(lab, set()).add(i)
    hits = sum(max(len(c & b) for b in blocks) for c in clusters.values())
    return hits / len(labels)


def test_clustering_recovers_planted_partitions():
    with criterion("affinity propagation recovers 2-block and 3-block plants (purity 1.0)"):
        for sizes in ([6, 6], [5, 5, 5], [7, 8], [4, 5, 6]):
            S, blocks = _planted(sizes)
            clusterer = AffinityPropagationClusterer().fit(S)
            assert _purity(clusterer.labels_, blocks) == 1.0
            got = {frozenset(np.flatnonzero(clusterer.labels_ == k).tolist())
                   for k in set(clusterer.labels_)}
            assert got == set(blocks)


def test_fusion_fidelity_on_airport_pair():
    with criterion("word-graph fusion produces the merged airport sentence"):
        tweets = parse_corpus_path(FIXTURES / "airport_pair.jsonl", 0.8)
        assert len(tweets) == 2
        graph = build_graph(tweets)
        for t in tweets:
            assert graph.has_walk(t), f"round trip failed for {t.id}"
        lemma_texts = {p.lemma_text() for p in generate_paths(graph, 5, 25)}
        assert (
            "tribhuvan international airport close after 7.9 earthquake in kathmandu"
            in lemma_texts
        )


def test_association_dependency_beats_window_baseline():
    with criterion("dependency association precision > 3-token-window baseline"):
        tweets = parse_corpus_path(FIXTURES / "assoc50.jsonl", 0.8)
        assert len(tweets) == 50
        gold = {
            tuple(p)
            for p in json.loads((FIXTURES / "assoc50_gold.json").read_text())["pairs"]
        }
        dep_pairs, win_pairs = set(), set()
        for t in tweets:
            dep_pairs.update(associate(t, "dependency"))
            win_pairs.update(associate(t, "window", 3))
        dep_precision = association_precision(dep_pairs, gold)
        win_precision = association_precision(win_pairs, gold)
        print(
            f"  dependency precision {dep_precision:.3f} "
            f"vs window(3) {win_precision:.3f}",
            end=" ",
        )
        assert dep_precision > win_precision


def test_rouge_improvement_over_random_baseline():
    with criterion("summary ROUGE-1 recall >= 1.1x random baseline (10 seeds)"):
        gold = gold_text("infrastructure")
        fusion_scores, random_scores = [], []
        for seed in range(10):
            tweets = make_window_tweets(seed, 600, fact_share=0.45)
            window = make_window(
                tweets, "infrastructure", DAY_2015_04_25, DAY_2015_04_25 + 86400
            )
            result = summarize_window(window, PipelineConfig(summary_length=200))
            fusion_scores.append(rouge1_recall(result.summary, gold))
            random_scores.append(
                rouge1_recall(random_baseline(window, 200, seed=seed), gold)
            )
        mean_fusion = statistics.mean(fusion_scores)
        mean_random = statistics.mean(random_scores)
        print(
            f"  mean fusion {mean_fusion:.3f} vs random {mean_random:.3f} "
            f"({100 * (mean_fusion - mean_random) / mean_random:+.1f}% relative)",
            end=" ",
        )
        assert mean_fusion >= 1.1 * mean_random


def test_timing_on_20k_tweet_window():
    with criterion("20,000-tweet window summarized end-to-end in < 60 s"):
        from crisum.evaluation import time_pipeline

        tweets = make_window_tweets(0, 20000, fact_share=0.45)
        window = make_window(
            tweets, "infrastructure", DAY_2015_04_25, DAY_2015_04_25 + 86400
        )
        timings = time_pipeline(window, PipelineConfig())
        stages = {k: round(v, 1) for k, v in timings.items()}
        print(f"  stage timings (ms): {stages}", end=" ")
        assert timings["total"] < 60_000.0


def test_determinism_across_processes():
    with criterion("byte-identical summary and topic reports across two runs"):
        import tempfile
        from pathlib import Path

        corpus = str(FIXTURES / "mini_corpus.jsonl")
        with tempfile.TemporaryDirectory() as tmp:
            outputs = []
            for run in ("a", "b"):
                report = Path(tmp) / f"report_{run}.json"
                topics = Path(tmp) / f"topics_{run}.json"
                for args in (
                    ["summarize", "--corpus", corpus, "--class", "infrastructure",
                     "--date", "2015-04-25", "--length", "100", "--out", str(report)],
                    ["topics", "--corpus", corpus, "--class", "infrastructure",
                     "--date", "2015-04-25", "--min-freq", "3", "--out", str(topics)],
                ):
                    proc = subprocess.run(
                        [sys.executable, "-m", "crisum.cli", *args],
                        capture_output=True, text=True, timeout=300,
                    )
                    assert proc.returncode == 0, proc.stderr
                outputs.append((report.read_bytes(), topics.read_bytes()))
            assert outputs[0][0] == outputs[1][0], "summary reports differ"
            assert outputs[0][1] == outputs[1][1], "topic reports differ"
