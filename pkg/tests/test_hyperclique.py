import itertools
import random

import pytest

from brinkhuis.admissibility import admissible_classes
from brinkhuis.compatibility import build_hypergraph
from brinkhuis.enumeration import GrimmClass
from brinkhuis.errors import IndexOutOfRange, PreconditionViolated
from brinkhuis.hyperclique import (EXACT_OPTIMAL, HEURISTIC_BEST,
                                   CliqueInstance, exact_max_clique,
                                   is_clique, rhcs)
from oracles import max_clique_bruteforce, random_instance


def complete_instance(m):
    pairs = set(itertools.combinations(range(m), 2))
    triples = set(itertools.combinations(range(m), 3))
    return CliqueInstance.build(m, pairs, triples)


class TestCliqueInstance:
    def test_build_normalizes(self):
        inst = CliqueInstance.build(3, {(1, 0), (1, 2), (0, 2)}, {(2, 0, 1)})
        assert inst.pair_edges == {(0, 1), (1, 2), (0, 2)}
        assert inst.triple_edges == {(0, 1, 2)}

    def test_rejects_missing_subpair(self):
        with pytest.raises(PreconditionViolated):
            CliqueInstance.build(3, {(0, 1), (0, 2)}, {(0, 1, 2)})

    def test_rejects_degenerate_edges(self):
        with pytest.raises(PreconditionViolated):
            CliqueInstance.build(2, {(0, 0)}, set())
        with pytest.raises(PreconditionViolated):
            CliqueInstance.build(2, {(0, 2)}, set())

    def test_from_triple_edges(self):
        inst = CliqueInstance.from_triple_edges(4, {(0, 1, 2)})
        assert inst.pair_edges == {(0, 1), (0, 2), (1, 2)}

    def test_tri_mask(self):
        inst = complete_instance(4)
        assert inst.tri_mask(0, 1) == 0b1100
        assert inst.tri_mask(1, 0) == 0b1100


class TestIsClique:
    def test_small_sets_vacuous(self):
        inst = CliqueInstance.build(3, set(), set())
        assert is_clique(inst, [])
        assert is_clique(inst, [2])
        assert not is_clique(inst, [0, 1])

    def test_requires_triples(self):
        inst = CliqueInstance.build(
            3, {(0, 1), (0, 2), (1, 2)}, set())
        assert is_clique(inst, [0, 1])
        assert not is_clique(inst, [0, 1, 2])

    def test_out_of_range(self):
        inst = complete_instance(3)
        with pytest.raises(IndexOutOfRange):
            is_clique(inst, [0, 3])


class TestExact:
    def test_complete_instance(self):
        res = exact_max_clique(complete_instance(6))
        assert res.size == 6
        assert res.vertices == tuple(range(6))
        assert res.certificate == EXACT_OPTIMAL

    def test_empty_instance(self):
        res = exact_max_clique(CliqueInstance.build(5, set(), set()))
        assert res.size == 1  # singletons are always cliques

    def test_no_vertices(self):
        res = exact_max_clique(CliqueInstance.build(0, set(), set()))
        assert res.size == 0

    def test_matches_bruteforce_random(self):
        rng = random.Random(2026)
        for _ in range(120):
            inst = random_instance(rng, max_vertices=13)
            res = exact_max_clique(inst)
            assert res.certificate == EXACT_OPTIMAL
            assert is_clique(inst, res.vertices)
            assert res.size == max_clique_bruteforce(inst)

    def test_deterministic(self):
        rng = random.Random(5)
        inst = random_instance(rng, max_vertices=14)
        assert exact_max_clique(inst) == exact_max_clique(inst)


class TestRHCS:
    def test_finds_optimum_on_random_instances(self):
        rng = random.Random(99)
        for _ in range(30):
            inst = random_instance(rng, max_vertices=12)
            target = max_clique_bruteforce(inst)
            res = rhcs(inst, seed=0, restarts=100)
            assert is_clique(inst, res.vertices)
            assert res.size <= target
            # small instances: the heuristic should not miss
            assert res.size == target

    def test_reproducible(self):
        rng = random.Random(1)
        inst = random_instance(rng, max_vertices=14)
        assert rhcs(inst, seed=42) == rhcs(inst, seed=42)

    def test_certificate_and_seed(self):
        res = rhcs(complete_instance(4), seed=7, restarts=5)
        assert res.certificate == HEURISTIC_BEST
        assert res.seed == 7
        assert res.size == 4

    def test_rejects_zero_restarts(self):
        with pytest.raises(PreconditionViolated):
            rhcs(complete_instance(3), seed=0, restarts=0)


class TestOnPublishedHypergraphs:
    @pytest.mark.parametrize("gc,expected_size", [
        (GrimmClass.CLASS1, 10)])
    def test_n35_max_clique(self, gc, expected_size):
        hg = build_hypergraph(admissible_classes(gc, 35))
        inst = CliqueInstance.build(len(hg.vertices), hg.pair_edges,
                                    hg.triple_edges)
        exact = exact_max_clique(inst)
        assert exact.size == expected_size
        assert rhcs(inst, seed=0, restarts=100).size == expected_size
