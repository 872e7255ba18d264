import pytest

from tweetnotate.similarity import build_similarity, pairs_for, score


class TestScore:
    def test_synonym_group_members(self):
        assert score("quake", "earthquake") == 0.85
        assert score("injure", "wound") == 0.85

    def test_related_pair(self):
        assert score("airport", "flight") == 0.7

    def test_symmetric(self):
        assert score("flight", "airport") == score("airport", "flight")

    def test_unknown_pair_zero(self):
        assert score("airport", "zebra") == 0.0

    def test_scores_in_unit_interval(self):
        for a, b, s in pairs_for({"quake", "earthquake", "airport", "flight", "road"}):
            assert 0.0 < s <= 1.0


class TestBuildSimilarity:
    def test_tsv_format_and_symmetry(self, tmp_path):
        out = tmp_path / "sim.tsv"
        n = build_similarity({"airport", "flight", "quake", "earthquake", "zebra"}, out)
        lines = out.read_text().splitlines()
        assert len(lines) == n
        seen = set()
        for line in lines:
            a, b, s = line.split("\t")
            assert a < b  # canonical order, one line per unordered pair
            assert 0.0 < float(s) <= 1.0
            assert frozenset((a, b)) not in seen
            seen.add(frozenset((a, b)))

    def test_self_pairs_omitted(self, tmp_path):
        out = tmp_path / "sim.tsv"
        build_similarity({"quake"}, out)
        assert out.read_text() == ""

    def test_unknown_lemmas_omitted(self, tmp_path):
        out = tmp_path / "sim.tsv"
        build_similarity({"zebra", "xylophone"}, out)
        assert out.read_text() == ""

    def test_empty_vocab_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            build_similarity(set(), tmp_path / "sim.tsv")
