"""Admissible words and their reversal classes.

A word is admissible when the three tau-rotations of it already form a
Brinkhuis triple on their own: every squarefree 3-letter pattern, filled with
the appropriately rotated copies, must give a squarefree product.  Because
squarefreeness is tau-invariant, fixing the first pattern symbol to 0 leaves
just four patterns to check (010, 012, 020, 021).
"""

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .errors import LengthTooSmall, NotSquarefree
from .words import Word, find_square, is_palindrome, reverse, tau, to_array

#: All twelve squarefree length-3 patterns, for the unreduced cross-check.
ALL_PATTERNS = tuple(
    f"{i1}{i2}{i3}"
    for i1 in range(3) for i2 in range(3) for i3 in range(3)
    if i1 != i2 and i2 != i3
)

#: The tau-reduced pattern set with the first symbol pinned to 0.
REDUCED_PATTERNS = tuple(p for p in ALL_PATTERNS if p[0] == "0")


@dataclass(frozen=True)
class ReversalClass:
    """The set {w, reverse(w)}, canonicalized by its lexicographic minimum."""

    representative: Word
    members: frozenset
    palindromic: bool

    @classmethod
    def of(cls, w):
        w = Word(w)
        r = reverse(w)
        return cls(representative=min(w, r), members=frozenset((w, r)),
                   palindromic=(w == r))

    def sorted_members(self):
        return sorted(self.members)


@dataclass(frozen=True)
class AdmissibleCensus:
    """Admissible word / palindrome / reversal-pair counts for one class."""

    n: int
    b: int
    b_p: int
    b_n: int


def _pattern_product_has_square(w, pattern):
    arrays = [to_array(tau(w, int(d))) for d in pattern]
    return bool(_kernels.product_has_square(*arrays))


def is_admissible(w, reduced=True):
    """True iff {w, tau(w), tau2(w)} alone forms a special Brinkhuis triple.

    Rejects non-squarefree input with NotSquarefree.  `reduced=False` checks
    all twelve patterns instead of the four-pattern reduction; the two must
    always agree and the flag exists for cross-checking.
    """
    w = Word(w)
    if find_square(w) is not None:
        raise NotSquarefree(f"{w!r} contains a square")
    patterns = REDUCED_PATTERNS if reduced else ALL_PATTERNS
    return not any(_pattern_product_has_square(w, p) for p in patterns)


@lru_cache(maxsize=1 << 16)
def _is_admissible_cached(w):
    return is_admissible(w)


def admissible_words(grimm_class, n):
    """The admissible subset of a Grimm class, lexicographically sorted."""
    from .enumeration import enumerate_grimm_class

    if n < 12:
        raise LengthTooSmall(f"Grimm classes need n >= 12, got {n}")
    return [w for w in enumerate_grimm_class(grimm_class, n)
            if _is_admissible_cached(w)]


def admissible_classes(grimm_class, n):
    """Reversal classes over the admissible words, sorted by representative."""
    seen = {}
    for w in admissible_words(grimm_class, n):
        c = ReversalClass.of(w)
        seen[c.representative] = c
    return [seen[rep] for rep in sorted(seen)]


def admissible_census(grimm_class, n):
    """b, b_p, b_n counts; b == b_p + 2 * b_n by construction."""
    members = admissible_words(grimm_class, n)
    b = len(members)
    b_p = sum(1 for w in members if is_palindrome(w))
    return AdmissibleCensus(n=n, b=b, b_p=b_p, b_n=(b - b_p) // 2)
