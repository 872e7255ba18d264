import pytest

from crisum.topics import (
    TopicPhrase,
    associate,
    detect_events,
    mine_topics,
    overlap_coefficient,
    topic_summary,
)
from helpers import tw, window_of


def building_tweet(events=None):
    # "#China media says buildings toppled in #Tibet": the edge connects
    # buildings<->toppled; "says" has media as its subject but no edge to
    # buildings.
    return tw(
        "b1",
        "#China|#china/HT media/NN says|say/VBZ buildings|building/NNS "
        "toppled|topple/VBD in/IN #Tibet|#tibet/HT",
        deps=[(2, 1, "nsubj"), (4, 3, "nsubj"), (2, 4, "ccomp")],
        events=events,
    )


class TestDetectEvents:
    def test_annotation_passthrough(self):
        t = tw("a", "airport/NN closed|close/VBD", events=[3 - 2])
        assert detect_events(t) == [1]

    def test_fallback_finds_main_verbs(self):
        t = tw("a", "bridge/NN collapsed|collapse/VBD overnight/RB")
        assert detect_events(t) == [1]

    def test_stoplisted_light_verb_excluded(self):
        t = building_tweet()
        idx = detect_events(t)
        lemmas = [t.tokens[i].lemma for i in idx]
        assert "say" not in lemmas
        assert "topple" in lemmas

    def test_aux_dependent_of_verb_excluded(self):
        t = tw(
            "a",
            "airport/NN was/VBD closed|close/VBN",
            deps=[(2, 1, "auxpass"), (2, 0, "nsubjpass")],
        )
        assert detect_events(t) == [2]

    def test_empty_annotation_means_no_events(self):
        t = tw("a", "bridge/NN collapsed|collapse/VBD", events=[])
        assert detect_events(t) == []


class TestAssociate:
    def test_dependency_mode_pairs_connected_noun(self):
        t = building_tweet(events=[2, 4])  # tagger marked both says and toppled
        pairs = associate(t, "dependency")
        assert ("building", "topple") in pairs
        assert ("building", "say") not in pairs
        assert ("media", "say") in pairs

    def test_dependency_mode_requires_edges(self):
        t = tw("a", "bridge/NN collapsed|collapse/VBD")
        with pytest.raises(ValueError, match="window mode"):
            associate(t, "dependency")

    def test_window_mode_catches_nearby_nouns(self):
        # "India sent 4 Ton relief material": relief is 3 after sent
        t = tw(
            "a",
            "India|india/NNP sent|send/VBD 4/CD Ton|ton/NN relief/NN material/NN",
        )
        pairs = associate(t, "window", window_size=3)
        assert ("relief", "send") in pairs
        assert ("material", "send") not in pairs  # 4 tokens away

    def test_window_mode_overgenerates_compared_to_dependency(self):
        t = building_tweet(events=[2, 4])
        window_pairs = set(associate(t, "window", window_size=3))
        assert ("building", "say") in window_pairs  # the spurious pair

    def test_dependency_edges_direction_agnostic(self):
        t = tw(
            "a",
            "relief/NN sent|send/VBD",
            deps=[(0, 1, "acl")],  # noun as head of the verb
        )
        assert associate(t, "dependency") == [("relief", "send")]

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError, match="mode"):
            associate(building_tweet(), "magic")

    def test_dependency_pairs_bounded_by_complete_graph(self):
        # replacing the real edges with a complete graph can only add pairs
        from dataclasses import replace
        from crisum.ingest import DepEdge

        for tweet in (building_tweet(events=[2, 4]), building_tweet()):
            complete = tuple(
                DepEdge(i, j, "dep")
                for i in range(len(tweet.tokens))
                for j in range(len(tweet.tokens))
                if i != j
            )
            saturated = replace(tweet, deps=complete)
            assert set(associate(tweet, "dependency")) <= set(
                associate(saturated, "dependency")
            )


class TestOverlap:
    def test_equal_sets_score_one(self):
        x = frozenset({"a", "b"})
        assert overlap_coefficient(x, x) == 1.0

    def test_direct_arithmetic(self):
        x = frozenset(f"x{i}" for i in range(20))
        y = frozenset(list(x)[:5] + [f"y{i}" for i in range(5)])
        assert len(y) == 10 and len(x & y) == 5
        assert overlap_coefficient(x, y) == 0.5

    def test_symmetric(self):
        x = frozenset({"a", "b", "c"})
        y = frozenset({"b", "z"})
        assert overlap_coefficient(x, y) == overlap_coefficient(y, x)


def topic_window(n_pairs=12, n_other=3):
    tweets = []
    for i in range(n_pairs):
        tweets.append(
            tw(
                f"p{i}",
                "flight/NN cancelled|cancel/VBD today/NN",
                ts=i,
                deps=[(1, 0, "nsubj")],
                text=f"flight cancelled today {i}",
            )
        )
    for i in range(n_other):
        tweets.append(
            tw(
                f"o{i}",
                "tower/NN toppled|topple/VBD",
                ts=100 + i,
                deps=[(1, 0, "nsubj")],
                text=f"tower toppled {i}",
            )
        )
    return window_of(*tweets)


class TestMineTopics:
    def test_below_frequency_threshold_excluded(self):
        w = topic_window(n_pairs=9, n_other=0)
        assert mine_topics(w, min_freq=10) == []

    def test_at_threshold_included(self):
        w = topic_window(n_pairs=10, n_other=0)
        phrases = mine_topics(w, min_freq=10)
        assert [(p.noun, p.event) for p in phrases] == [("flight", "cancel")]

    def test_scores_and_order(self):
        w = topic_window(n_pairs=12, n_other=5)
        phrases = mine_topics(w, min_freq=2)
        assert phrases[0].overlap == 1.0
        overlaps = [p.overlap for p in phrases]
        assert overlaps == sorted(overlaps, reverse=True)

    def test_every_phrase_supported_by_some_tweet(self):
        w = topic_window()
        for phrase in mine_topics(w, min_freq=1):
            fired = False
            for t in w.tweets:
                if not t.deps:
                    continue
                if (phrase.noun, phrase.event) in associate(t, "dependency"):
                    fired = True
                    break
            assert fired

    def test_deterministic(self):
        w = topic_window()
        assert mine_topics(w, min_freq=1) == mine_topics(w, min_freq=1)

    def test_min_freq_validated(self):
        with pytest.raises(ValueError):
            mine_topics(topic_window(), min_freq=0)


class TestTopicSummary:
    def test_summary_drawn_from_matching_tweets(self):
        w = topic_window()
        [phrase] = mine_topics(w, min_freq=10)
        summary = topic_summary(w, phrase, length=50)
        assert "flight" in summary.text
        assert "tower" not in summary.text

    def test_no_matching_tweets_gives_empty_summary(self):
        w = topic_window()
        ghost = TopicPhrase("zeppelin", "land", frozenset(), frozenset(), 0.0)
        summary = topic_summary(w, ghost, length=50)
        assert summary.text == ""
        assert summary.token_count == 0

    def test_length_budget_respected(self):
        w = topic_window(n_pairs=30)
        [phrase] = mine_topics(w, min_freq=10)
        summary = topic_summary(w, phrase, length=7)
        assert summary.token_count <= 7
