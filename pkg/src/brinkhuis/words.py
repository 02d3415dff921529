"""Ternary words and the repetition-detection primitives everything else uses.

Two square detectors live here on purpose.  `is_squarefree_oracle` is a plain
exhaustive scan over all (start, period) pairs in pure Python: slow, obviously
correct, and the reference every faster path is tested against.
`find_square` delegates to the compiled kernels and is the one used in anger.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidSymbol

_ALPHABET = frozenset("012")
_TAU_TABLES = (
    str.maketrans("012", "012"),
    str.maketrans("012", "120"),
    str.maketrans("012", "201"),
)


class Word(str):
    """An immutable ternary word.

    Subclasses str, so equality, hashing and ordering are the usual
    lexicographic string semantics, which coincide with symbol-value order
    for the alphabet {0,1,2}.  ASCII spaces and tabs in the input text are
    ignored (published data groups symbols six per block).
    """

    __slots__ = ()

    def __new__(cls, text=""):
        if isinstance(text, Word):
            return text
        cleaned = text.replace(" ", "").replace("\t", "")
        for col, ch in enumerate(cleaned):
            if ch not in _ALPHABET:
                raise InvalidSymbol(f"invalid symbol {ch!r} at position {col}",
                                    column=col)
        return str.__new__(cls, cleaned)

    @property
    def symbols(self):
        """Symbol values as a tuple of ints."""
        return tuple(ord(c) - 48 for c in self)

    def __repr__(self):
        return f"Word({str.__repr__(self)})"


@dataclass(frozen=True)
class SquareWitness:
    """Location of a square: symbols[start:start+period] repeats immediately."""

    start: int
    period: int

    def recheck(self, w):
        """Confirm the witnessed square actually occurs in w."""
        i, p = self.start, self.period
        return (p >= 1 and i >= 0 and i + 2 * p <= len(w)
                and w[i:i + p] == w[i + p:i + 2 * p])


def to_array(w):
    """Word -> uint8 array of symbol values for the kernels."""
    return np.frombuffer(w.encode("ascii"), dtype=np.uint8) - 48


def from_array(a):
    """uint8 symbol-value array -> Word."""
    return Word((a + 48).tobytes().decode("ascii"))


def is_squarefree_oracle(w):
    """Reference squarefree test: exhaustive scan, correctness over speed."""
    n = len(w)
    for start in range(n):
        for period in range(1, (n - start) // 2 + 1):
            if w[start:start + period] == w[start + period:start + 2 * period]:
                return False
    return True


def find_square(w):
    """First square by minimal (start, period), or None if squarefree."""
    if len(w) < 2:
        return None
    start, period = _kernels.first_square(to_array(w))
    if start < 0:
        return None
    return SquareWitness(start=start, period=period)


def has_square_ending_at_last(w):
    """True iff some square of w ends exactly at the final symbol.

    For a word whose length-(n-1) prefix is squarefree this is the full
    squarefreeness test, which is what makes backtracking enumeration cheap.
    """
    n = len(w)
    if n < 1:
        raise ValueError("word must be nonempty")
    for p in range(1, n // 2 + 1):
        if w[n - 2 * p:n - p] == w[n - p:]:
            return True
    return False


def tau(w, power):
    """Apply the cyclic symbol permutation 0->1->2->0 `power` times."""
    if power not in (0, 1, 2):
        raise ValueError("power must be 0, 1 or 2")
    return Word(str.translate(w, _TAU_TABLES[power]))


def reverse(w):
    """Symbols in reverse order."""
    return Word(str(w)[::-1])


def is_palindrome(w):
    """True iff w reads the same in both directions (empty word included)."""
    return str(w) == str(w)[::-1]
