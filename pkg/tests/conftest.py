import pathlib

import pytest

from brinkhuis import TripleCandidate, Word, expand_with_reversals, parse_word_file

DATA = pathlib.Path(__file__).parent / "data"

#: The published 18/2 generator pair (the second word is the first reversed).
TRIPLE18 = (Word("210201202120102012"), Word("210201021202102012"))


@pytest.fixture(scope="session")
def b0_words():
    return parse_word_file(DATA / "b0_476.txt")


@pytest.fixture(scope="session")
def candidate_952(b0_words):
    return TripleCandidate.from_words(expand_with_reversals(b0_words), n=54)


@pytest.fixture(scope="session")
def success_entries():
    """(word, palindromic) pairs from the published n=35 run log."""
    out = []
    for line in (DATA / "success_n35.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        out.append((Word(parts[0]), len(parts) > 1))
    return out


@pytest.fixture(scope="session")
def triple18_candidate():
    return TripleCandidate.from_words(TRIPLE18)
