from tweetnotate.deps import sketch_deps
from tweetnotate.tag import tag
from tweetnotate.tokenize import tokenize


def edges_of(text):
    toks = tokenize(text)
    tags = tag(toks)
    deps = sketch_deps(toks, tags)
    return {(toks[d["head"]].lower(), d["label"], toks[d["dep"]].lower()) for d in deps}


def noun_verb_links(text):
    toks = tokenize(text)
    tags = tag(toks)
    out = set()
    for d in sketch_deps(toks, tags):
        h, m = d["head"], d["dep"]
        if tags[h].startswith("VB") and tags[m].startswith("NN"):
            out.add((toks[m].lower(), toks[h].lower()))
        elif tags[m].startswith("VB") and tags[h].startswith("NN"):
            out.add((toks[h].lower(), toks[m].lower()))
    return out


class TestSketchDeps:
    def test_subject_edge(self):
        assert ("toppled", "nsubj", "buildings") in edges_of("buildings toppled in #Tibet")

    def test_attribution_does_not_steal_inner_subject(self):
        links = noun_verb_links("#China media says buildings toppled in #Tibet")
        assert ("buildings", "toppled") in links
        assert ("media", "says") in links
        assert ("buildings", "says") not in links

    def test_object_and_subject(self):
        links = noun_verb_links("India sent 4 Ton relief material to Nepal")
        assert ("india", "sent") in links
        assert ("material", "sent") in links

    def test_oblique_after_preposition(self):
        assert ("blocked", "obl", "landslide") in edges_of(
            "roads blocked by landslide near Pokhara"
        )

    def test_auxiliary_attachment(self):
        # "closed" is a passive participle after "was", hence auxpass
        assert ("closed", "auxpass", "was") in edges_of("airport was closed")
        assert ("arrived", "aux", "have") in edges_of("teams have arrived")

    def test_compound_inside_noun_group(self):
        assert ("teams", "compound", "rescue") in edges_of("rescue teams located survivors")

    def test_clause_boundary_respected(self):
        # the comma separates the clauses, so verbs cannot reach across it
        links = noun_verb_links("airport closed, volunteers distributed tents")
        assert ("airport", "closed") in links
        assert ("volunteers", "distributed") in links
        assert ("tents", "closed") not in links
        assert ("airport", "distributed") not in links

    def test_no_self_loops_and_indices_valid(self):
        toks = tokenize("rescue teams located survivors in Sindhupalchok today")
        deps = sketch_deps(toks, tag(toks))
        for d in deps:
            assert d["head"] != d["dep"]
            assert 0 <= d["head"] < len(toks)
            assert 0 <= d["dep"] < len(toks)

    def test_empty_input(self):
        assert sketch_deps([], []) == []
