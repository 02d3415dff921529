"""Exact and heuristic maximum-clique search on 3-uniform hypergraphs.

A clique here is a vertex set whose 2-subsets are all pair edges and whose
3-subsets are all triple edges.  The exact solver is a deterministic
branch-and-bound over a static degeneracy order with bitmask candidate
filtering; the heuristic is seeded random-restart greedy growth with plateau
escapes, returning the best clique over all restarts.
"""

import itertools
import random
import time
from dataclasses import dataclass, field

from .errors import IndexOutOfRange, PreconditionViolated

EXACT_OPTIMAL = "exact-optimal"
HEURISTIC_BEST = "heuristic-best"


@dataclass(frozen=True)
class CliqueInstance:
    """Vertices with symmetric pair edges and sorted triple edges.

    Every triple edge's three sub-pairs must be pair edges; this is enforced
    at construction.
    """

    vertex_count: int
    pair_edges: frozenset
    triple_edges: frozenset
    _adj: tuple = field(repr=False, default=())
    _tri: dict = field(repr=False, default_factory=dict)

    @classmethod
    def build(cls, vertex_count, pair_edges, triple_edges):
        pairs = frozenset(tuple(sorted(e)) for e in pair_edges)
        triples = frozenset(tuple(sorted(e)) for e in triple_edges)
        for e in pairs:
            if len(set(e)) != 2 or not all(0 <= v < vertex_count for v in e):
                raise PreconditionViolated(f"bad pair edge {e}")
        for e in triples:
            if len(set(e)) != 3 or not all(0 <= v < vertex_count for v in e):
                raise PreconditionViolated(f"bad triple edge {e}")
            for sub in itertools.combinations(e, 2):
                if sub not in pairs:
                    raise PreconditionViolated(
                        f"triple edge {e} has missing sub-pair {sub}")
        adj = [0] * vertex_count
        for a, b in pairs:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        tri = {}
        for a, b, c in triples:
            tri.setdefault((a, b), 0)
            tri.setdefault((a, c), 0)
            tri.setdefault((b, c), 0)
            tri[(a, b)] |= 1 << c
            tri[(a, c)] |= 1 << b
            tri[(b, c)] |= 1 << a
        return cls(vertex_count=vertex_count, pair_edges=pairs,
                   triple_edges=triples, _adj=tuple(adj), _tri=tri)

    @classmethod
    def from_triple_edges(cls, vertex_count, triple_edges):
        """Instance whose pair edges are exactly the triples' sub-pairs.

        This is what an edges file (which stores only triples) can convey;
        it only affects cliques of size two.
        """
        pairs = set()
        for e in triple_edges:
            a, b, c = sorted(e)
            pairs.update([(a, b), (a, c), (b, c)])
        return cls.build(vertex_count, pairs, triple_edges)

    def tri_mask(self, a, b):
        """Bitmask of vertices forming a triple edge with the pair (a, b)."""
        key = (a, b) if a < b else (b, a)
        return self._tri.get(key, 0)


@dataclass(frozen=True)
class CliqueResult:
    """A clique plus how it was found; `certificate` says whether the size
    is proven maximum or merely the best seen."""

    vertices: tuple
    size: int
    certificate: str
    seed: int = None
    budget_exhausted: bool = False


def is_clique(inst, s):
    """True iff every 2-subset of s is a pair edge and every 3-subset a
    triple edge; sets of size <= 1 are vacuously cliques."""
    s = sorted(set(s))
    for v in s:
        if not 0 <= v < inst.vertex_count:
            raise IndexOutOfRange(f"vertex {v} out of range")
    for a, b in itertools.combinations(s, 2):
        if (a, b) not in inst.pair_edges:
            return False
    for e in itertools.combinations(s, 3):
        if e not in inst.triple_edges:
            return False
    return True


def _degeneracy_order(inst):
    """Repeatedly remove a minimum-degree vertex (lowest index on ties)."""
    alive = set(range(inst.vertex_count))
    deg = {v: bin(inst._adj[v]).count("1") for v in alive}
    order = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        order.append(v)
        alive.remove(v)
        for u in alive:
            if inst._adj[v] >> u & 1:
                deg[u] -= 1
    return order


def _compatible_mask(inst, clique, cand_mask, v):
    """Restrict candidates to vertices compatible with clique + {v}."""
    mask = cand_mask & inst._adj[v]
    for w in clique:
        mask &= inst.tri_mask(v, w)
    return mask


def exact_max_clique(inst, time_budget=None):
    """Maximum clique by branch-and-bound, deterministic for a fixed instance.

    If `time_budget` (seconds) expires, the best clique found so far is
    returned with a heuristic-best certificate and budget_exhausted set.
    """
    deadline = None if time_budget is None else time.monotonic() + time_budget
    order = _degeneracy_order(inst)
    rank = {v: i for i, v in enumerate(order)}
    best = []
    expired = False

    def extend(clique, cand_mask):
        nonlocal best, expired
        if expired:
            return
        if len(clique) > len(best):
            best = list(clique)
        if deadline is not None and time.monotonic() > deadline:
            expired = True
            return
        cand = sorted((v for v in range(inst.vertex_count)
                       if cand_mask >> v & 1), key=lambda v: rank[v])
        while cand:
            if len(clique) + len(cand) <= len(best):
                return
            v = cand.pop(0)
            cand_mask &= ~(1 << v)
            extend(clique + [v], _compatible_mask(inst, clique, cand_mask, v))
            if expired:
                return

    extend([], (1 << inst.vertex_count) - 1)
    if expired:
        return CliqueResult(vertices=tuple(sorted(best)), size=len(best),
                            certificate=HEURISTIC_BEST, budget_exhausted=True)
    return CliqueResult(vertices=tuple(sorted(best)), size=len(best),
                        certificate=EXACT_OPTIMAL)


def rhcs(inst, seed, restarts=100, plateau_limit=20):
    """Random restart greedy hyperclique search.

    Each restart draws its own RNG stream from (seed, restart index), starts
    from a random vertex, repeatedly adds a uniformly random compatible
    vertex, and on stalls escapes the plateau by dropping a random member,
    up to `plateau_limit` non-improving escapes.  The best clique over all
    restarts is returned; results are reproducible for fixed parameters.
    """
    if restarts < 1:
        raise PreconditionViolated("restarts must be >= 1")
    best = []
    full = (1 << inst.vertex_count) - 1
    for r in range(restarts):
        rng = random.Random(f"{seed}:{r}")
        if inst.vertex_count == 0:
            break
        clique = [rng.randrange(inst.vertex_count)]
        cand_mask = _compatible_mask(inst, [], full & ~(1 << clique[0]),
                                     clique[0])
        drops = 0
        local_best = list(clique)
        while True:
            if cand_mask:
                v = rng.choice([u for u in range(inst.vertex_count)
                                if cand_mask >> u & 1])
                cand_mask = _compatible_mask(inst, clique,
                                             cand_mask & ~(1 << v), v)
                clique.append(v)
                if len(clique) > len(local_best):
                    local_best = list(clique)
                continue
            if drops >= plateau_limit or len(clique) <= 1:
                break
            drops += 1
            clique.pop(rng.randrange(len(clique)))
            cand_mask = _recompute_candidates(inst, clique, full)
        if len(local_best) > len(best):
            best = local_best
    return CliqueResult(vertices=tuple(sorted(best)), size=len(best),
                        certificate=HEURISTIC_BEST, seed=seed)


def _recompute_candidates(inst, clique, full):
    mask = full
    for v in clique:
        mask &= ~(1 << v)
    for i, v in enumerate(clique):
        mask &= inst._adj[v]
        for w in clique[:i]:
            mask &= inst.tri_mask(v, w)
    return mask
