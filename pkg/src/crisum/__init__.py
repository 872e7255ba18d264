"""Crisis-tweet summarization engine.

Two-stage pipeline: coverage-based extractive selection shrinks a class/day
window, a POS-aware bigram word graph fuses the survivors into candidate
sentences, and an exact 0-1 solver picks the final paths under a word
budget. Sub-topic (noun, event) phrases are mined from dependency edges and
summarized per topic.
"""

from .clustering import AffinityPropagationClusterer
from .evaluation import Summary, association_precision, random_baseline, rouge1_recall
from .extractive import select_tweets
from .fluency import TrigramBackoffModel, linguistic_quality, train_trigram
from .ilp import IlpInstance, IlpSolution, oracle_solve, solve
from .ingest import AnnotatedTweet, DepEdge, Token, Window, make_window, parse_corpus
from .lexicon import (
    ConceptClusters,
    SimilarityTable,
    cluster_of,
    cluster_words,
    extract_content_words,
    similarity,
)
from .pipeline import FusionSummarizer, PipelineConfig, summarize_window
from .topics import TopicMiner, TopicPhrase, associate, detect_events, mine_topics, topic_summary
from .wordgraph import TweetPath, WordGraph, build_graph, generate_paths, informativeness

__version__ = "0.1.0"

__all__ = [
    "AffinityPropagationClusterer",
    "AnnotatedTweet",
    "ConceptClusters",
    "DepEdge",
    "FusionSummarizer",
    "IlpInstance",
    "IlpSolution",
    "PipelineConfig",
    "SimilarityTable",
    "Summary",
    "Token",
    "TopicMiner",
    "TopicPhrase",
    "TrigramBackoffModel",
    "TweetPath",
    "Window",
    "WordGraph",
    "associate",
    "association_precision",
    "build_graph",
    "cluster_of",
    "cluster_words",
    "detect_events",
    "extract_content_words",
    "generate_paths",
    "informativeness",
    "linguistic_quality",
    "make_window",
    "mine_topics",
    "oracle_solve",
    "parse_corpus",
    "random_baseline",
    "rouge1_recall",
    "select_tweets",
    "similarity",
    "solve",
    "summarize_window",
    "topic_summary",
    "train_trigram",
    "__version__",
]
