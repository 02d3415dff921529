import random

import pytest

from brinkhuis.admissibility import ReversalClass, admissible_classes
from brinkhuis.compatibility import (CompatibilityHypergraph, MorphismChoice,
                                     apply_morphism, build_hypergraph,
                                     class_pair_good, class_triple_good,
                                     pattern_product, product_squarefree,
                                     word_set_is_brinkhuis)
from brinkhuis.enumeration import GrimmClass
from brinkhuis.errors import PreconditionViolated
from brinkhuis.words import Word, is_squarefree_oracle, tau
from conftest import TRIPLE18
from oracles import brinkhuis_set_bruteforce, squarefree_words_bruteforce


class TestPatternProduct:
    def test_assembly(self):
        pp = pattern_product("012", (Word("01"), Word("01"), Word("01")))
        assert pp.product == "011220"
        assert pp.pattern == "012"

    def test_identity_shift(self):
        pp = pattern_product("000", (Word("012"), Word("201"), Word("120")))
        assert pp.product == "012201120"


class TestProductSquarefree:
    def test_clean(self):
        w = TRIPLE18[0]
        assert product_squarefree(w, tau(w, 1), tau(w, 2))

    def test_square_across_boundary(self):
        assert not product_squarefree("012", "012", "021")

    def test_rejects_bad_blocks(self):
        with pytest.raises(PreconditionViolated):
            product_squarefree("00", "01", "02")
        with pytest.raises(PreconditionViolated):
            product_squarefree("0", "01", "02")


class TestWordSetIsBrinkhuis:
    def test_empty_set(self):
        assert word_set_is_brinkhuis([], 5) is True

    def test_18_pair(self):
        assert word_set_is_brinkhuis(TRIPLE18, 18) is True

    def test_singleton_matches_admissibility(self):
        from brinkhuis.admissibility import is_admissible
        for w in ["010212", TRIPLE18[0]]:
            w = Word(w)
            assert word_set_is_brinkhuis([w], len(w)) == is_admissible(w)

    def test_length_mismatch(self):
        with pytest.raises(PreconditionViolated):
            word_set_is_brinkhuis(["012", "0121"], 3)

    def test_matches_bruteforce_on_random_sets(self):
        rng = random.Random(11)
        pool = [w for w in squarefree_words_bruteforce(9)]
        for _ in range(40):
            words = rng.sample(pool, rng.randrange(1, 4))
            assert word_set_is_brinkhuis(words, 9) == \
                brinkhuis_set_bruteforce(words, 9)


@pytest.fixture(scope="module")
def classes35():
    return admissible_classes(GrimmClass.CLASS1, 35)


class TestClassGoodness:
    def test_pair_edges_match_pairwise_checks(self, classes35):
        hg = build_hypergraph(classes35)
        m = len(classes35)
        for i in range(m):
            for j in range(i + 1, m):
                assert ((i, j) in hg.pair_edges) == \
                    class_pair_good(classes35[i], classes35[j])

    def test_requires_admissible_members(self):
        bad = ReversalClass.of(Word("012"))  # squarefree but inadmissible
        with pytest.raises(PreconditionViolated):
            class_pair_good(bad, bad)

    def test_requires_distinct(self, classes35):
        with pytest.raises(PreconditionViolated):
            class_triple_good(classes35[0], classes35[0], classes35[1])


class TestBuildHypergraph:
    def test_published_edge_counts_n35(self):
        hg1 = build_hypergraph(admissible_classes(GrimmClass.CLASS1, 35))
        hg2 = build_hypergraph(admissible_classes(GrimmClass.CLASS2, 35))
        assert len(hg1.triple_edges) == 328
        assert len(hg2.triple_edges) == 483

    def test_pruned_equals_definition(self):
        classes = admissible_classes(GrimmClass.CLASS1, 18)
        fast = build_hypergraph(classes, prune=True)
        slow = build_hypergraph(classes, prune=False)
        assert fast.pair_edges == slow.pair_edges
        assert fast.triple_edges == slow.triple_edges

    def test_triples_imply_pairs(self):
        hg = build_hypergraph(admissible_classes(GrimmClass.CLASS2, 20))
        for a, b, c in hg.triple_edges:
            assert {(a, b), (a, c), (b, c)} <= hg.pair_edges

    def test_result_type(self):
        hg = build_hypergraph(admissible_classes(GrimmClass.CLASS1, 14))
        assert isinstance(hg, CompatibilityHypergraph)
        assert len(hg.vertices) == len(
            admissible_classes(GrimmClass.CLASS1, 14))


class TestApplyMorphism:
    def test_image_is_concatenation_of_shifts(self):
        b0 = TRIPLE18
        choice = MorphismChoice(source=Word("012"), assignment=(0, 1, 0))
        image = apply_morphism(b0, choice)
        assert image == b0[0] + tau(b0[1], 1) + tau(b0[0], 2)

    def test_squarefree_source_gives_squarefree_image(self):
        b0 = TRIPLE18
        rng = random.Random(3)
        for src in squarefree_words_bruteforce(5):
            choice = MorphismChoice(
                source=Word(src),
                assignment=tuple(rng.randrange(2) for _ in src))
            assert is_squarefree_oracle(apply_morphism(b0, choice))

    def test_rejects_square_source(self):
        with pytest.raises(PreconditionViolated):
            apply_morphism(TRIPLE18, MorphismChoice(Word("0101"), (0, 0, 0, 0)))

    def test_rejects_bad_assignment(self):
        with pytest.raises(PreconditionViolated):
            apply_morphism(TRIPLE18, MorphismChoice(Word("012"), (0, 1)))
        with pytest.raises(PreconditionViolated):
            apply_morphism(TRIPLE18, MorphismChoice(Word("012"), (0, 1, 2)))
