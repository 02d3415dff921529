"""Backtracking enumeration of squarefree words and the two Grimm classes.

The DFS extends a word one symbol at a time in symbol order 0,1,2 and prunes
with the ends-in-a-square test, so output arrives in lexicographic order with
no post-sorting needed.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import LengthTooSmall, ResourceLimitExceeded
from .words import Word, is_palindrome

#: Refuse to materialize enumerations beyond this length without a sink.
DEFAULT_ENUMERATION_CEILING = 30


class GrimmClass(Enum):
    """The two prefix/suffix-constrained families that exhaust the search.

    Each class fixes a 6-symbol prefix and its reversal as suffix; only the
    middle of the word is free.
    """

    CLASS1 = ("012021", "120210")
    CLASS2 = ("012102", "201210")

    @property
    def prefix(self):
        return Word(self.value[0])

    @property
    def suffix(self):
        return Word(self.value[1])

    @property
    def index(self):
        return 1 if self is GrimmClass.CLASS1 else 2


@dataclass(frozen=True)
class ClassCensus:
    """Word / palindrome / reversal-pair counts for one Grimm class.

    a_n counts unordered {w, reverse(w)} pairs with w != reverse(w), so
    a == a_p + 2 * a_n always holds.
    """

    n: int
    a: int
    a_p: int
    a_n: int


def _ends_with_square(w):
    """Square test anchored at the last symbol of the plain string w."""
    n = len(w)
    for p in range(1, n // 2 + 1):
        if w[n - 2 * p:n - p] == w[n - p:]:
            return True
    return False


def _dfs(prefix, length, alphabet, visit):
    """Yield squarefree extensions of `prefix` to `length`, lex order.

    `prefix` must itself be squarefree.  `visit` is called with each complete
    word (a plain str).
    """
    symbols = "012"[:alphabet]

    def recurse(w):
        if len(w) == length:
            visit(w)
            return
        for c in symbols:
            ext = w + c
            if not _ends_with_square(ext):
                recurse(ext)

    recurse(prefix)


def count_squarefree(n, alphabet_size=3):
    """Exact number of squarefree words of length n over the given alphabet."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if alphabet_size not in (2, 3):
        raise ValueError("alphabet_size must be 2 or 3")
    if n == 0:
        return 1
    count = 0

    def visit(_):
        nonlocal count
        count += 1

    _dfs("", n, alphabet_size, visit)
    return count


def enumerate_squarefree(n, ceiling=DEFAULT_ENUMERATION_CEILING, sink=None):
    """All ternary squarefree words of length n, lexicographically sorted.

    With a `sink` callable the words are streamed in enumeration order and
    nothing is materialized (the return value is then None); without one,
    n above `ceiling` is refused since the result grows exponentially.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if sink is not None:
        _dfs("", n, 3, lambda w: sink(Word(w)))
        return None
    if n > ceiling:
        raise ResourceLimitExceeded(
            f"n={n} exceeds the ceiling {ceiling}; supply a streaming sink")
    out = []
    _dfs("", n, 3, lambda w: out.append(Word(w)))
    return out


def enumerate_grimm_class(grimm_class, n):
    """Squarefree words of length n with the class prefix and suffix, sorted."""
    if n < 12:
        raise LengthTooSmall(f"Grimm classes need n >= 12, got {n}")
    prefix = str(grimm_class.prefix)
    suffix = str(grimm_class.suffix)
    out = []

    def visit(middle_word):
        w = middle_word + suffix
        # The middle part is squarefree; only squares ending inside the
        # appended suffix can appear.
        for end in range(len(middle_word) + 1, len(w) + 1):
            if _ends_with_square(w[:end]):
                return
        out.append(Word(w))

    _dfs(prefix, n - 6, 3, visit)
    return out


def census(grimm_class, n):
    """Word, palindrome and reversal-pair counts for one Grimm class."""
    members = enumerate_grimm_class(grimm_class, n)
    a = len(members)
    a_p = sum(1 for w in members if is_palindrome(w))
    return ClassCensus(n=n, a=a, a_p=a_p, a_n=(a - a_p) // 2)
