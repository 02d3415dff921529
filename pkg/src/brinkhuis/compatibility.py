"""Brinkhuis product tests over sets of words and reversal classes.

The expensive object here is the ordered product tau^{i1}(w_{j1}) .
tau^{i2}(w_{j2}) . tau^{i3}(w_{j3}).  Squarefreeness of such a product
decomposes into two boundary conditions plus a spanning-square condition,
and the boundary results depend only on the ordered word pair and the
relative tau-shift, so they are computed once per family and shared between
the O(k^2) pair layer and the O(k^3) triple layer.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .admissibility import REDUCED_PATTERNS, ReversalClass, _is_admissible_cached
from .errors import PreconditionViolated
from .words import Word, find_square, tau, to_array

#: (i2, i3) shift pairs of the reduced patterns, in kernel order.
_REDUCED_SHIFTS = tuple((int(p[1]), int(p[2])) for p in REDUCED_PATTERNS)


@dataclass(frozen=True)
class PatternProduct:
    """One concrete length-3n product: which pattern, which slot words."""

    pattern: Word
    slots: tuple
    product: Word


@dataclass(frozen=True)
class MorphismChoice:
    """A source word and, per position, which generator word to substitute."""

    source: Word
    assignment: tuple


@dataclass(frozen=True)
class CompatibilityHypergraph:
    """Reversal-class vertices plus the surviving pair and triple edges."""

    vertices: tuple
    pair_edges: frozenset
    triple_edges: frozenset


def pattern_product(pattern, slots):
    """Assemble the product word for a pattern and an ordered slot triple."""
    pattern = Word(pattern)
    product = Word("".join(tau(w, int(d)) for d, w in zip(pattern, slots)))
    return PatternProduct(pattern=pattern, slots=tuple(slots), product=product)


def _require_squarefree_blocks(blocks):
    lengths = {len(b) for b in blocks}
    if len(lengths) != 1:
        raise PreconditionViolated(f"block lengths differ: {sorted(lengths)}")
    for b in blocks:
        if find_square(b) is not None:
            raise PreconditionViolated(f"block {b!r} is not squarefree")


def product_squarefree(x, y, z):
    """True iff x.y.z is squarefree, for squarefree equal-length blocks."""
    x, y, z = Word(x), Word(y), Word(z)
    _require_squarefree_blocks((x, y, z))
    return not bool(
        _kernels.product_has_square(to_array(x), to_array(y), to_array(z)))


class _ProductFamily:
    """Shifted symbol arrays and the memoized boundary table for a word list."""

    def __init__(self, words):
        self.words = list(words)
        k = len(self.words)
        n = len(self.words[0]) if k else 0
        self.shifted = np.empty((k, 3, n), dtype=np.uint8)
        for j, w in enumerate(self.words):
            base = to_array(w)
            for d in range(3):
                self.shifted[j, d] = (base + d) % 3
        self.pair_ok = _kernels.fill_pair_table(self.shifted)
        self._buf = np.empty(3 * n, dtype=np.uint8)
        self.n = n

    def product_clean(self, j1, j2, j3, d1, d2):
        """Squarefreeness of w_{j1} . tau^{d1}(w_{j2}) . tau^{d2}(w_{j3})."""
        if self.pair_ok[j1, j2, d1 - 1] == 0:
            return False
        if self.pair_ok[j2, j3, (d2 - d1) % 3 - 1] == 0:
            return False
        n = self.n
        s = self._buf
        s[:n] = self.shifted[j1, 0]
        s[n:2 * n] = self.shifted[j2, d1]
        s[2 * n:] = self.shifted[j3, d2]
        return not bool(_kernels.has_spanning_square(s, n))

    def first_bad_product(self, groups=None, require_groups=None):
        """First failing reduced-pattern product, or None.

        `groups` labels each word; with `require_groups` set, only slot
        combinations whose labels cover that whole set are evaluated.
        """
        k = len(self.words)
        for (d1, d2) in _REDUCED_SHIFTS:
            for j1, j2, j3 in itertools.product(range(k), repeat=3):
                if require_groups is not None:
                    if {groups[j1], groups[j2], groups[j3]} != require_groups:
                        continue
                if not self.product_clean(j1, j2, j3, d1, d2):
                    return pattern_product(
                        f"0{d1}{d2}",
                        (self.words[j1], self.words[j2], self.words[j3]))
        return None


def word_set_is_brinkhuis(words, n):
    """Definition-level test: every reduced-pattern product is squarefree.

    Slot words range over the whole set with repetition, so a singleton set
    reduces exactly to the admissibility test.
    """
    words = sorted(Word(w) for w in set(words))
    if not words:
        return True
    if any(len(w) != n for w in words):
        raise PreconditionViolated("all words must have length n")
    _require_squarefree_blocks(words)
    return _ProductFamily(words).first_bad_product() is None


def _require_admissible_classes(classes, distinct=True):
    if distinct and len({c.representative for c in classes}) != len(classes):
        raise PreconditionViolated("classes must be distinct")
    lengths = {len(c.representative) for c in classes}
    if len(lengths) > 1:
        raise PreconditionViolated("classes must have uniform word length")
    for c in classes:
        for w in c.members:
            if not _is_admissible_cached(w):
                raise PreconditionViolated(f"member {w!r} is not admissible")


def class_pair_good(c1, c2):
    """True iff the two classes' member union is jointly Brinkhuis."""
    _require_admissible_classes((c1, c2))
    union = set(c1.members) | set(c2.members)
    return word_set_is_brinkhuis(union, len(c1.representative))


def class_triple_good(c1, c2, c3):
    """True iff the three classes' member union is jointly Brinkhuis."""
    _require_admissible_classes((c1, c2, c3))
    union = set(c1.members) | set(c2.members) | set(c3.members)
    return word_set_is_brinkhuis(union, len(c1.representative))


def build_hypergraph(classes, prune=True):
    """Pair and triple edges over reversal-class vertices.

    With `prune` (the default) each class is first checked as a set by
    itself, pair edges are computed from boundary-table lookups, and triples
    are only evaluated when all three sub-pairs survive; by monotonicity of
    the Brinkhuis condition this yields exactly the unpruned edge sets,
    which `prune=False` computes directly from the definition.
    """
    classes = list(classes)
    _require_admissible_classes(classes)
    if not prune:
        m = len(classes)
        pair_edges = frozenset(
            (i, j) for i, j in itertools.combinations(range(m), 2)
            if class_pair_good(classes[i], classes[j]))
        triple_edges = frozenset(
            (i, j, k) for i, j, k in itertools.combinations(range(m), 3)
            if class_triple_good(classes[i], classes[j], classes[k]))
        return CompatibilityHypergraph(vertices=tuple(classes),
                                       pair_edges=pair_edges,
                                       triple_edges=triple_edges)

    words = []
    groups = []
    for ci, c in enumerate(classes):
        for w in c.sorted_members():
            words.append(w)
            groups.append(ci)
    family = _ProductFamily(words)
    by_group = {}
    for j, g in enumerate(groups):
        by_group.setdefault(g, []).append(j)

    def clean(group_set):
        idxs = [j for g in group_set for j in by_group[g]]
        sub_groups = [groups[j] for j in idxs]
        for (d1, d2) in _REDUCED_SHIFTS:
            for a, b, c in itertools.product(range(len(idxs)), repeat=3):
                if {sub_groups[a], sub_groups[b], sub_groups[c]} != group_set:
                    continue
                if not family.product_clean(idxs[a], idxs[b], idxs[c], d1, d2):
                    return False
        return True

    m = len(classes)
    for g in range(m):
        if not clean({g}):
            raise PreconditionViolated(
                f"class {classes[g].representative!r} fails as a set by itself "
                "(a product mixing a word with its reversal has a square)")
    pair_edges = frozenset(
        (i, j) for i, j in itertools.combinations(range(m), 2)
        if clean({i, j}))
    triple_edges = frozenset(
        (i, j, k) for i, j, k in itertools.combinations(range(m), 3)
        if (i, j) in pair_edges and (i, k) in pair_edges
        and (j, k) in pair_edges and clean({i, j, k}))
    return CompatibilityHypergraph(vertices=tuple(classes),
                                   pair_edges=pair_edges,
                                   triple_edges=triple_edges)


def apply_morphism(b0, choice):
    """Image of the source word under the generator-substitution morphism.

    Position p of the source contributes tau^{source[p]}(b0[assignment[p]]).
    """
    source = Word(choice.source)
    if find_square(source) is not None:
        raise PreconditionViolated(f"source {source!r} is not squarefree")
    if len(choice.assignment) != len(source):
        raise PreconditionViolated("assignment length must match source length")
    if any(not 0 <= j < len(b0) for j in choice.assignment):
        raise PreconditionViolated("assignment index out of range")
    return Word("".join(
        tau(b0[j], int(d)) for d, j in zip(source, choice.assignment)))
