import json

from crisum.ingest import parse_corpus
from crisum.synthetic import (
    FACTS,
    gold_pairs,
    gold_text,
    make_corpus,
    make_window_tweets,
    write_jsonl,
)


class TestGenerator:
    def test_deterministic_across_calls(self):
        assert make_window_tweets(5, 50) == make_window_tweets(5, 50)
        assert make_corpus(5, 20) == make_corpus(5, 20)

    def test_different_seeds_differ(self):
        assert make_window_tweets(1, 50) != make_window_tweets(2, 50)

    def test_emitted_records_pass_schema_validation(self, tmp_path):
        path = tmp_path / "corpus.jsonl"
        write_jsonl(make_corpus(7, 30), path)
        errors = []
        with open(path, encoding="utf-8") as fh:
            tweets = parse_corpus(fh, min_confidence=0.0, error_sink=errors)
        assert errors == []
        assert len(tweets) == 90

    def test_every_class_has_gold(self):
        for label in FACTS:
            assert gold_text(label)
            assert gold_pairs(label)

    def test_gold_pairs_are_noun_verb_lemmas(self):
        for noun, verb in gold_pairs("infrastructure"):
            assert noun == noun.lower()
            assert verb == verb.lower()

    def test_all_tweets_have_tokens_and_valid_events(self):
        for t in make_window_tweets(3, 200):
            assert t.tokens
            if t.event_tokens is not None:
                assert all(0 <= i < len(t.tokens) for i in t.event_tokens)
