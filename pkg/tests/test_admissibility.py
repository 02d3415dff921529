import random

import pytest

from brinkhuis.admissibility import (ALL_PATTERNS, REDUCED_PATTERNS,
                                     AdmissibleCensus, ReversalClass,
                                     admissible_census, admissible_classes,
                                     admissible_words, is_admissible)
from brinkhuis.enumeration import GrimmClass, enumerate_grimm_class
from brinkhuis.errors import LengthTooSmall, NotSquarefree
from brinkhuis.verify import TripleCandidate, verify_triple
from brinkhuis.words import Word, is_palindrome, reverse
from conftest import TRIPLE18


def test_pattern_sets():
    assert len(ALL_PATTERNS) == 12
    assert REDUCED_PATTERNS == ("010", "012", "020", "021")


class TestIsAdmissible:
    def test_short_word_fails(self):
        # "012"."120"... already holds the square "1212" inside pattern 012
        assert is_admissible(Word("012")) is False

    def test_18_generator_is_admissible(self):
        assert is_admissible(TRIPLE18[0]) is True

    def test_published_success_word(self):
        w = Word("01202102010212010201202120102120210")
        assert is_admissible(w) is True

    def test_rejects_non_squarefree(self):
        with pytest.raises(NotSquarefree):
            is_admissible(Word("0101"))

    def test_reduction_matches_full_patterns(self):
        from brinkhuis.words import has_square_ending_at_last

        def random_squarefree(rng, n):
            w = ""
            while len(w) < n:
                choices = [c for c in "012"
                           if not has_square_ending_at_last(Word(w + c))]
                if not choices:
                    w = w[:-2]  # backtrack past the dead end
                    continue
                w += rng.choice(choices)
            return Word(w)

        rng = random.Random(7)
        for _ in range(100):
            word = random_squarefree(rng, rng.randrange(12, 41))
            assert is_admissible(word, reduced=True) == \
                is_admissible(word, reduced=False)


class TestReversalClass:
    def test_of_pair(self):
        c = ReversalClass.of(Word("0122"))
        assert c.representative == "0122"
        assert c.members == frozenset({Word("0122"), Word("2210")})
        assert not c.palindromic

    def test_of_palindrome(self):
        c = ReversalClass.of(Word("2112"))
        assert c.members == frozenset({Word("2112")})
        assert c.palindromic

    def test_18_pair_is_one_class(self):
        assert ReversalClass.of(TRIPLE18[0]) == ReversalClass.of(TRIPLE18[1])


class TestAdmissibleAtN35:
    @pytest.mark.parametrize("gc,b,b_p,b_n", [
        (GrimmClass.CLASS1, 30, 4, 13),
        (GrimmClass.CLASS2, 43, 3, 20)])
    def test_published_census(self, gc, b, b_p, b_n):
        assert admissible_census(gc, 35) == AdmissibleCensus(35, b, b_p, b_n)

    def test_class_counts(self):
        assert len(admissible_classes(GrimmClass.CLASS1, 35)) == 17
        assert len(admissible_classes(GrimmClass.CLASS2, 35)) == 23

    def test_matches_success_log(self, success_entries):
        classes = (admissible_classes(GrimmClass.CLASS1, 35)
                   + admissible_classes(GrimmClass.CLASS2, 35))
        assert [(c.representative, c.palindromic) for c in classes] == \
            success_entries

    def test_reversal_closure(self):
        words = set(admissible_words(GrimmClass.CLASS1, 35))
        assert {reverse(w) for w in words} == words

    def test_subset_of_grimm_class(self):
        members = set(enumerate_grimm_class(GrimmClass.CLASS1, 35))
        assert set(admissible_words(GrimmClass.CLASS1, 35)) <= members

    def test_too_small(self):
        with pytest.raises(LengthTooSmall):
            admissible_words(GrimmClass.CLASS1, 11)


class TestAdmissibleElsewhere:
    def test_even_n_has_no_palindromes(self):
        for gc in GrimmClass:
            c = admissible_census(gc, 18)
            assert c.b_p == 0
            assert c.b == c.b_p + 2 * c.b_n

    def test_singleton_verification_equivalence(self):
        # Definition of admissibility is exactly the k=1 verification
        words = admissible_words(GrimmClass.CLASS1, 18)
        sample = words[:3] if words else []
        for w in sample:
            report = verify_triple(TripleCandidate.from_words([w]))
            assert report.passed

    def test_census_palindrome_split(self):
        for gc in GrimmClass:
            members = admissible_words(gc, 19)
            c = admissible_census(gc, 19)
            assert c.b == len(members)
            assert c.b_p == sum(1 for w in members if is_palindrome(w))
