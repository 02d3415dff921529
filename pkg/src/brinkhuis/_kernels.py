"""Numba kernels for square detection and bulk product scanning.

Everything here operates on uint8 arrays of symbol values (0, 1, 2), not on
ASCII text.  The pure-Python oracle in :mod:`brinkhuis.words` is deliberately
kept independent of this module so the two can cross-check each other.

The product-decomposition used throughout: for squarefree blocks x, y, z of
equal length n, any square in x.y.z either lies inside x.y and crosses the
first boundary, lies inside y.z and crosses the second boundary, or covers y
entirely (which forces period >= (n+2)//2).
"""

import numpy as np
from numba import njit

# The four squarefree length-3 patterns with first symbol fixed to 0, as
# (i2, i3) shift pairs: 010, 012, 020, 021.
PATTERNS_I1_ZERO = np.array([[1, 0], [1, 2], [2, 0], [2, 1]], dtype=np.int64)


@njit(cache=True)
def first_square(s):
    """Minimal (start, period) square in s, or (-1, -1) if squarefree."""
    n = s.size
    for start in range(n - 1):
        max_p = (n - start) // 2
        for p in range(1, max_p + 1):
            ok = True
            for i in range(p):
                if s[start + i] != s[start + p + i]:
                    ok = False
                    break
            if ok:
                return start, p
    return -1, -1


@njit(cache=True)
def has_square_ending_at(s, end):
    """True iff some square of s ends exactly at index `end` (inclusive)."""
    length = end + 1
    for p in range(1, length // 2 + 1):
        ok = True
        for i in range(p):
            if s[end - i] != s[end - p - i]:
                ok = False
                break
        if ok:
            return True
    return False


@njit(cache=True)
def has_crossing_square(s, boundary, lo, hi):
    """True iff s[lo:hi] contains a square straddling index `boundary`.

    A square occupying [start, start+2p) straddles the boundary when
    start < boundary < start + 2p.
    """
    max_p = (hi - lo) // 2
    for p in range(1, max_p + 1):
        start_lo = boundary - 2 * p + 1
        if start_lo < lo:
            start_lo = lo
        start_hi = hi - 2 * p
        if start_hi > boundary - 1:
            start_hi = boundary - 1
        for start in range(start_lo, start_hi + 1):
            if s[start] != s[start + p]:
                continue
            ok = True
            for i in range(1, p):
                if s[start + i] != s[start + p + i]:
                    ok = False
                    break
            if ok:
                return True
    return False


@njit(cache=True)
def has_spanning_square(s, n):
    """True iff s (length 3n) has a square covering the middle block entirely.

    Such a square starts before index n and ends after index 2n, forcing
    period >= (n+2)//2.
    """
    for p in range((n + 2) // 2, (3 * n) // 2 + 1):
        start_lo = 2 * n - 2 * p + 1
        if start_lo < 0:
            start_lo = 0
        start_hi = 3 * n - 2 * p
        if start_hi > n - 1:
            start_hi = n - 1
        for start in range(start_lo, start_hi + 1):
            if s[start] != s[start + p]:
                continue
            ok = True
            for i in range(1, p):
                if s[start + i] != s[start + p + i]:
                    ok = False
                    break
            if ok:
                return True
    return False


@njit(cache=True)
def product_has_square(x, y, z):
    """Square test for x.y.z given squarefree equal-length blocks."""
    n = x.size
    s = np.empty(3 * n, dtype=np.uint8)
    s[:n] = x
    s[n:2 * n] = y
    s[2 * n:] = z
    if has_crossing_square(s, n, 0, 2 * n):
        return True
    if has_crossing_square(s, 2 * n, n, 3 * n):
        return True
    return has_spanning_square(s, n)


@njit(cache=True)
def fill_pair_table(shifted):
    """Boundary table over a word family.

    shifted has shape (k, 3, n): word j under tau^d is shifted[j, d].
    Returns a uint8 array `ok` of shape (k, k, 2) where ok[a, b, d-1] == 1
    iff word_a . tau^d(word_b) has no square crossing its midpoint, for
    d in {1, 2}.  By tau-invariance this covers every adjacent slot pair of
    every i1=0 pattern product.
    """
    k = shifted.shape[0]
    n = shifted.shape[2]
    ok = np.empty((k, k, 2), dtype=np.uint8)
    s = np.empty(2 * n, dtype=np.uint8)
    for a in range(k):
        s[:n] = shifted[a, 0]
        for b in range(k):
            for d in range(1, 3):
                s[n:] = shifted[b, d]
                if has_crossing_square(s, n, 0, 2 * n):
                    ok[a, b, d - 1] = 0
                else:
                    ok[a, b, d - 1] = 1
    return ok


@njit(cache=True)
def scan_triple_range(shifted, pair_ok, t_start, t_stop):
    """Scan ordered-product indices [t_start, t_stop) for a failing product.

    The index space has size 4*k^3; index t decodes to (pattern, j1, j2, j3)
    with the pattern index varying slowest.  Each product is certified by two
    boundary lookups in pair_ok plus an explicit spanning-square check.

    Returns (first_failing_index, products_checked); the first element is -1
    when the whole range is clean.
    """
    k = shifted.shape[0]
    n = shifted.shape[2]
    s = np.empty(3 * n, dtype=np.uint8)
    checked = 0
    for t in range(t_start, t_stop):
        r = t
        j3 = r % k
        r //= k
        j2 = r % k
        r //= k
        j1 = r % k
        pat = r // k
        d1 = PATTERNS_I1_ZERO[pat, 0]
        d2 = PATTERNS_I1_ZERO[pat, 1]
        checked += 1
        if pair_ok[j1, j2, d1 - 1] == 0:
            return t, checked
        delta2 = (d2 - d1) % 3
        if pair_ok[j2, j3, delta2 - 1] == 0:
            return t, checked
        s[:n] = shifted[j1, 0]
        s[n:2 * n] = shifted[j2, d1]
        s[2 * n:] = shifted[j3, d2]
        if has_spanning_square(s, n):
            return t, checked
    return -1, checked


@njit(cache=True)
def scan_triple_list(shifted, pair_ok, indices):
    """Like scan_triple_range, but over an explicit array of product indices."""
    k = shifted.shape[0]
    n = shifted.shape[2]
    s = np.empty(3 * n, dtype=np.uint8)
    checked = 0
    for idx in range(indices.size):
        t = indices[idx]
        r = t
        j3 = r % k
        r //= k
        j2 = r % k
        r //= k
        j1 = r % k
        pat = r // k
        d1 = PATTERNS_I1_ZERO[pat, 0]
        d2 = PATTERNS_I1_ZERO[pat, 1]
        checked += 1
        if pair_ok[j1, j2, d1 - 1] == 0:
            return t, checked
        delta2 = (d2 - d1) % 3
        if pair_ok[j2, j3, delta2 - 1] == 0:
            return t, checked
        s[:n] = shifted[j1, 0]
        s[n:2 * n] = shifted[j2, d1]
        s[2 * n:] = shifted[j3, d2]
        if has_spanning_square(s, n):
            return t, checked
    return -1, checked
