"""Offline tweet annotation for the crisum summarizer's JSONL schema."""

from .annotate import annotate_file, annotate_record, annotate_stream
from .similarity import build_similarity, score
from .tag import tag
from .tokenize import lemmatize, tokenize

__version__ = "0.1.0"

__all__ = [
    "annotate_file",
    "annotate_record",
    "annotate_stream",
    "build_similarity",
    "lemmatize",
    "score",
    "tag",
    "tokenize",
    "__version__",
]
