"""Verification of candidate triples from published word files, plus the
growth-rate bound they imply.

A candidate stores only the generator set; the other two sets of the triple
are its tau-images and are never materialized.  Full verification walks the
ordered-product index space of size 4*k^3 (four reduced patterns times all
slot choices); for the published 54/952 candidate that is ~3.45e9 products,
so the triple stage also comes in a sampled flavor and a checkpointable
range-scan for long runs.
"""

import json
import math
import random
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .admissibility import REDUCED_PATTERNS
from .compatibility import _ProductFamily, pattern_product
from .errors import DomainError, EmptyFile, InvalidSymbol
from .words import Word, find_square, reverse

#: Above this many triple products, full mode emits a resource warning.
FULL_MODE_WARN_THRESHOLD = 10 ** 8

STAGE_PARSE = "parse"
STAGE_SQUAREFREE = "squarefree"
STAGE_ADMISSIBLE = "admissible"
STAGE_PAIR = "pair"
STAGE_TRIPLE = "triple"


@dataclass(frozen=True)
class TripleCandidate:
    """Generator set of a candidate triple; the tau-images are implied."""

    n: int
    k: int
    b0: tuple

    @classmethod
    def from_words(cls, words, n=None):
        words = tuple(Word(w) for w in words)
        if n is None:
            n = len(words[0]) if words else 0
        return cls(n=n, k=len(words), b0=words)


@dataclass
class VerificationReport:
    """Structured verdict with a first-failure witness and the implied bound."""

    passed: bool
    n: int
    k: int
    mode: str
    checks_performed: int
    stage_failed: str = None
    witness: tuple = None
    bound: float = None

    def to_json(self):
        d = {
            "passed": self.passed, "n": self.n, "k": self.k,
            "mode": self.mode, "checks_performed": self.checks_performed,
            "stage_failed": self.stage_failed, "bound": self.bound,
        }
        if self.witness is not None:
            pattern, slots, sq = self.witness
            d["witness"] = {
                "pattern": str(pattern), "slots": list(slots),
                "square_start": sq.start if sq else None,
                "square_period": sq.period if sq else None,
            }
        else:
            d["witness"] = None
        return json.dumps(d, indent=2, sort_keys=True)


def parse_word_file(path):
    """Words from a plain ASCII file, one per nonblank line.

    Spaces and tabs inside a line are ignored (published data groups symbols
    six per block); lines starting with '#' are comments; order is kept.
    """
    words = []
    with open(path) as f:
        for lineno, line in enumerate(f, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                words.append(Word(stripped))
            except InvalidSymbol as exc:
                raise InvalidSymbol(
                    f"{path}:{lineno}: {exc}", line=lineno,
                    column=exc.column) from None
    if not words:
        raise EmptyFile(f"{path} contains no words")
    return words


def write_word_file(path, words, group=6):
    """Inverse of parse_word_file, grouping symbols `group` per block."""
    with open(path, "w") as f:
        for w in words:
            if group:
                blocks = [w[i:i + group] for i in range(0, len(w), group)]
                f.write(" ".join(blocks) + "\n")
            else:
                f.write(w + "\n")


def expand_with_reversals(words):
    """Input words followed by their reversals, palindrome duplicates dropped."""
    out = list(words)
    seen = set(words)
    for w in words:
        r = reverse(w)
        if r not in seen:
            out.append(r)
            seen.add(r)
    return out


def compute_bound(n, k):
    """The growth-rate lower bound k**(1/(n-1)) implied by an (n, k) triple."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return k ** (1.0 / (n - 1))


def triple_space_size(k):
    """Number of ordered products in the reduced full verification."""
    return 4 * k ** 3


def decode_triple_index(t, k):
    """Product index -> (pattern string, (j1, j2, j3))."""
    j3 = t % k
    t //= k
    j2 = t % k
    t //= k
    j1 = t % k
    return REDUCED_PATTERNS[t // k], (j1, j2, j3)


def _witness_for_product(cand, pattern, slots):
    pp = pattern_product(pattern, tuple(cand.b0[j] for j in slots))
    return (pp.pattern, slots, find_square(pp.product))


class TripleVerifier:
    """Staged verifier over one candidate, with reusable pair-table state.

    Stages run in order: parse (lengths, duplicates), squarefreeness,
    singleton admissibility, all boundary pairs, then triples.  The pair
    table certifies every adjacent slot boundary, so the triple stage only
    needs the spanning-square check per product.
    """

    def __init__(self, cand):
        self.cand = cand
        self.checks = 0
        self._family = None

    @property
    def family(self):
        if self._family is None:
            self._family = _ProductFamily(list(self.cand.b0))
            self.checks += 2 * self.cand.k ** 2
        return self._family

    def check_parse(self):
        cand = self.cand
        bad = [w for w in cand.b0 if len(w) != cand.n]
        if bad:
            return STAGE_PARSE, (None, (), None)
        if len(set(cand.b0)) != cand.k or len(cand.b0) != cand.k:
            return STAGE_PARSE, (None, (), None)
        return None

    def check_squarefree(self):
        for j, w in enumerate(self.cand.b0):
            self.checks += 1
            sq = find_square(w)
            if sq is not None:
                return STAGE_SQUAREFREE, (None, (j,), sq)
        return None

    def check_admissible(self):
        for j, w in enumerate(self.cand.b0):
            for p in REDUCED_PATTERNS:
                self.checks += 1
                pp = pattern_product(p, (w, w, w))
                sq = find_square(pp.product)
                if sq is not None:
                    return STAGE_ADMISSIBLE, (pp.pattern, (j, j, j), sq)
        return None

    def check_pairs(self):
        fam = self.family
        bad = np.argwhere(fam.pair_ok == 0)
        if bad.size:
            j1, j2, d = (int(v) for v in bad[0])
            return STAGE_PAIR, _witness_for_product(self.cand, f"0{d + 1}",
                                                    (j1, j2))
        return None

    def check_triples_range(self, t_start, t_stop):
        """Scan [t_start, t_stop) of the product index space; None if clean."""
        fam = self.family
        first_bad, checked = _kernels.scan_triple_range(
            fam.shifted, fam.pair_ok, t_start, t_stop)
        self.checks += int(checked)
        if first_bad >= 0:
            pattern, slots = decode_triple_index(int(first_bad), self.cand.k)
            return STAGE_TRIPLE, _witness_for_product(self.cand, pattern, slots)
        return None

    def check_triples_sampled(self, seed, samples):
        fam = self.family
        rng = random.Random(seed)
        total = triple_space_size(self.cand.k)
        idx = np.fromiter((rng.randrange(total) for _ in range(samples)),
                          dtype=np.int64, count=samples)
        first_bad, checked = _kernels.scan_triple_list(
            fam.shifted, fam.pair_ok, idx)
        self.checks += int(checked)
        if first_bad >= 0:
            pattern, slots = decode_triple_index(int(first_bad), self.cand.k)
            return STAGE_TRIPLE, _witness_for_product(self.cand, pattern, slots)
        return None


def verify_triple(cand, mode="full", seed=0, samples=10 ** 6):
    """Run the staged verification and report the outcome.

    Full mode checks every ordered product under the four-pattern reduction
    and therefore certifies the Brinkhuis property; sampled mode checks all
    pairs but only a seeded uniform sample of triple products and is a smoke
    test, not a certificate.
    """
    if mode not in ("full", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    v = TripleVerifier(cand)
    if mode == "full" and triple_space_size(cand.k) > FULL_MODE_WARN_THRESHOLD:
        warnings.warn(
            f"full verification needs {triple_space_size(cand.k):.2e} product "
            "checks; consider sampled mode or the checkpointed range scan",
            ResourceWarning, stacklevel=2)
    failure = (v.check_parse() or v.check_squarefree()
               or v.check_admissible() or v.check_pairs())
    if failure is None:
        if mode == "full":
            failure = v.check_triples_range(0, triple_space_size(cand.k))
        else:
            failure = v.check_triples_sampled(seed, samples)
    if failure is not None:
        stage, witness = failure
        return VerificationReport(
            passed=False, n=cand.n, k=cand.k, mode=mode,
            checks_performed=v.checks, stage_failed=stage, witness=witness)
    return VerificationReport(
        passed=True, n=cand.n, k=cand.k, mode=mode,
        checks_performed=v.checks, bound=compute_bound(cand.n, cand.k))


def scan_triples_checkpointed(cand, t_start, t_stop, checkpoint_path,
                              chunk_size=10 ** 6, verifier=None,
                              max_chunks=None):
    """Cover [t_start, t_stop) of the triple index space with resume support.

    Progress is written to `checkpoint_path` after every chunk as JSON with
    the next unscanned index; rerunning with the same arguments resumes
    there.  `max_chunks` stops early after that many chunks (simulating an
    interrupted long run).  Returns (failure_or_None, products_checked).
    """
    v = verifier if verifier is not None else TripleVerifier(cand)
    pos = t_start
    try:
        with open(checkpoint_path) as f:
            state = json.load(f)
        if (state.get("t_start") == t_start and state.get("t_stop") == t_stop
                and state.get("k") == cand.k):
            pos = state["next"]
    except (OSError, ValueError):
        pass
    v.family  # build the pair table up front so it isn't counted below
    checked_before = v.checks
    failure = None
    chunks = 0
    while pos < t_stop and failure is None:
        if max_chunks is not None and chunks >= max_chunks:
            break
        end = min(pos + chunk_size, t_stop)
        failure = v.check_triples_range(pos, end)
        pos = end
        chunks += 1
        with open(checkpoint_path, "w") as f:
            json.dump({"t_start": t_start, "t_stop": t_stop, "k": cand.k,
                       "next": pos, "failed": failure is not None}, f)
    return failure, v.checks - checked_before
