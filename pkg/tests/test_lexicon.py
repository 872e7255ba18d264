import pytest
from hypothesis import given, settings, strategies as st

from crisum import lexicon
from crisum.ingest import Window
from crisum.lexicon import (
    ContentWord,
    SimilarityTable,
    cluster_of,
    cluster_words,
    extract_content_words,
    similarity,
)

from helpers import tw, window_of


class TestExtractContentWords:
    def test_cardinal_number_is_numeral(self):
        t = tw("a", "7.9/CD earthquake/NN in/IN kathmandu/NNP")
        words = extract_content_words(t)
        assert ContentWord("7.9", lexicon.NUMERAL) in words

    def test_common_noun_is_noun(self):
        t = tw("a", "airport/NN closed/VBD")
        assert ContentWord("airport", lexicon.NOUN) in extract_content_words(t)

    def test_determiner_excluded(self):
        t = tw("a", "the/DT quake/NN")
        kinds = {w.lemma for w in extract_content_words(t)}
        assert "the" not in kinds

    def test_gazetteer_place(self):
        t = tw("a", "kathmandu/NNP airport/NN")
        words = extract_content_words(t, gazetteer={"kathmandu"})
        assert ContentWord("kathmandu", lexicon.PLACE) in words
        assert ContentWord("airport", lexicon.NOUN) in words

    def test_common_noun_not_place_even_if_in_gazetteer(self):
        t = tw("a", "airport/NN")
        words = extract_content_words(t, gazetteer={"airport"})
        assert words == {ContentWord("airport", lexicon.NOUN)}

    def test_auxiliary_verb_excluded(self):
        t = tw("a", "is/VBZ closed|close/VBD")
        lemmas = {w.lemma for w in extract_content_words(t)}
        assert lemmas == {"close"}

    def test_hashtag_stripped(self):
        t = tw("a", "#kathmandu|#kathmandu/NNP shaken|shake/VBD")
        lemmas = {w.lemma for w in extract_content_words(t)}
        assert "kathmandu" in lemmas

    def test_empty_result_allowed(self):
        t = tw("a", "the/DT of/IN")
        assert extract_content_words(t) == set()


class TestSimilarityTable:
    def test_symmetry_by_construction(self):
        table = SimilarityTable()
        table.set("airport", "flight", 0.8)
        assert table.get("flight", "airport") == 0.8

    def test_diagonal_implied(self):
        assert SimilarityTable().get("x", "x") == 1.0

    def test_absent_pair_is_zero(self):
        assert SimilarityTable().get("x", "y") == 0.0

    def test_score_range_enforced(self):
        with pytest.raises(ValueError):
            SimilarityTable().set("a", "b", 1.5)

    def test_tsv_round_trip(self, tmp_path):
        table = SimilarityTable()
        table.set("airport", "flight", 0.8)
        table.set("injured", "wounded", 0.75)
        path = tmp_path / "sim.tsv"
        table.to_tsv(path)
        again = SimilarityTable.from_tsv(path)
        assert again.get("flight", "airport") == 0.8
        assert again.get("injured", "wounded") == 0.75


class TestSimilarity:
    def test_empty_vocab_rejected(self):
        with pytest.raises(ValueError, match="non-empty"):
            similarity(set())

    def test_resource_passthrough(self):
        table = SimilarityTable()
        table.set("airport", "flight", 0.8)
        table.set("airport", "zebra", 0.4)
        out = similarity({"airport", "flight"}, resource=table)
        assert out.get("airport", "flight") == 0.8
        assert out.get("airport", "zebra") == 0.0  # outside vocab

    def test_fallback_isolated_word_zero_everywhere(self):
        w = window_of(
            tw("a", "airport/NN flight/NN", ts=1),
            tw("b", "airport/NN runway/NN", ts=2, text="b"),
            tw("c", "zebra/NN", ts=3, text="c"),
        )
        out = similarity({"airport", "flight", "runway", "zebra"}, window=w)
        assert out.get("zebra", "airport") == 0.0
        assert out.get("zebra", "flight") == 0.0

    def test_fallback_identical_rows_give_one(self):
        # injured and wounded never co-occur with each other but share the
        # same companions -> identical co-occurrence rows -> cosine 1; the
        # unrelated third tweet keeps the companions' PMI positive
        w = window_of(
            tw("a", "people/NNS injured|injure/VBD quake/NN", ts=1),
            tw("b", "people/NNS wounded|wound/VBD quake/NN", ts=2),
            tw("c", "airport/NN closed|close/VBD", ts=3),
        )
        out = similarity({"injure", "wound", "people", "quake", "airport", "close"}, window=w)
        assert out.get("injure", "wound") == pytest.approx(1.0)

    def test_edge_threshold_prunes(self):
        table = SimilarityTable()
        table.set("a", "b", 0.2)
        table.set("a", "c", 0.9)
        out = similarity({"a", "b", "c"}, resource=table, edge_threshold=0.5)
        assert out.get("a", "b") == 0.0
        assert out.get("a", "c") == 0.9

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.lists(st.sampled_from("abcdef"), min_size=1, max_size=4), min_size=1, max_size=8))
    def test_fallback_symmetric_and_bounded(self, docs):
        tweets = tuple(
            tw(f"t{i}", " ".join(f"{w}/NN" for w in ws), ts=i, text=str(i))
            for i, ws in enumerate(docs)
        )
        w = Window("infrastructure", 0, 10**9, tweets)
        vocab = {w for ws in docs for w in ws}
        out = similarity(vocab, window=w)
        for a in vocab:
            for b in vocab:
                assert out.get(a, b) == out.get(b, a)
                assert 0.0 <= out.get(a, b) <= 1.0


class TestClusterWords:
    def pair_table(self):
        table = SimilarityTable()
        table.set("injured", "wounded", 0.9)
        table.set("injured", "closed", 0.05)
        table.set("wounded", "closed", 0.05)
        return table

    def test_similar_verbs_club_together(self):
        clusters = cluster_words({"injured", "wounded", "closed"}, self.pair_table(), lexicon.VERB)
        assert clusters.exemplar_of("injured") == clusters.exemplar_of("wounded")
        assert clusters.exemplar_of("closed") != clusters.exemplar_of("injured")

    def test_partition_covers_vocab(self):
        vocab = {"injured", "wounded", "closed"}
        clusters = cluster_words(vocab, self.pair_table(), lexicon.VERB)
        members = [m for _, ms in clusters.clusters for m in ms]
        assert sorted(members) == sorted(vocab)  # disjoint + total
        for exemplar, ms in clusters.clusters:
            assert exemplar in ms

    def test_single_word_is_singleton(self):
        clusters = cluster_words({"airport"}, SimilarityTable(), lexicon.NOUN)
        assert clusters.clusters == (("airport", frozenset({"airport"})),)

    def test_zero_similarity_gives_singletons(self):
        vocab = {"a", "b", "c"}
        clusters = cluster_words(vocab, SimilarityTable(), lexicon.NOUN)
        assert len(clusters) == 3

    def test_cluster_of_exemplar_is_itself(self):
        clusters = cluster_words({"injured", "wounded"}, self.pair_table(), lexicon.VERB)
        exemplar = clusters.exemplar_of("injured")
        assert cluster_of(exemplar, clusters) == exemplar

    def test_cluster_of_unseen_lemma_is_singleton(self):
        clusters = cluster_words({"injured", "wounded"}, self.pair_table(), lexicon.VERB)
        assert cluster_of("heliport", clusters) == "heliport"

    def test_deterministic(self):
        vocab = {"injured", "wounded", "closed", "blocked"}
        table = self.pair_table()
        table.set("blocked", "closed", 0.85)
        a = cluster_words(vocab, table, lexicon.VERB)
        b = cluster_words(vocab, table, lexicon.VERB)
        assert a == b
