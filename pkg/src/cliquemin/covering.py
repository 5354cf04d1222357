"""Exact pattern-covering numbers: the minimum number of vertices meeting
every copy of a pattern graph in a host graph.

Copies are materialized as vertex sets and the minimum hitting set is found by
branch and bound on the copy hypergraph: branch on the vertices of an
uncovered copy, lower-bound by greedy disjoint copies, upper-bound by greedy
hitting.  Two copies on the same vertex set are hit together, so vertex-set
dedup is applied after noting that equivalence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, count_cliques, count_copies, automorphism_count


class BudgetExceededError(RuntimeError):
    pass


DEFAULT_COPY_BUDGET = 10 ** 7


def _clique_sets(g, k, budget):
    """Vertex sets of all k-cliques as bitmasks."""
    out = []
    rows = g.rows

    def grow(chosen, mask, depth):
        if depth == 0:
            out.append(chosen)
            if len(out) > budget:
                raise BudgetExceededError(f"more than {budget} copies")
            return
        m = mask
        while m:
            b = m & -m
            m ^= b
            grow(chosen | b, m & rows[b.bit_length() - 1], depth - 1)

    grow(0, (1 << g.n) - 1, k)
    return out


def _pattern_sets(g, f, budget):
    """Vertex sets (bitmasks) carrying at least one copy of f, deduplicated."""
    from .graphs import _embedding_order

    order = _embedding_order(f)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in range(f.n) if f.has_edge(order[i], u) and pos[u] < i]
            for i in range(f.n)]
    grows = g.rows
    full = (1 << g.n) - 1
    seen = set()
    image = [0] * f.n

    def place(i, used):
        if i == f.n:
            seen.add(used)
            if len(seen) > budget:
                raise BudgetExceededError(f"more than {budget} copies")
            return
        cand = full & ~used
        for j in back[i]:
            cand &= grows[image[j]]
        while cand:
            b = cand & -cand
            cand ^= b
            image[i] = b.bit_length() - 1
            place(i + 1, used | b)

    place(0, 0)
    return sorted(seen)


def enumerate_copies(g, f, budget=DEFAULT_COPY_BUDGET):
    """List of copy vertex sets as sorted vertex tuples."""
    masks = _copy_masks(g, f, budget)
    out = []
    for m in masks:
        vs = []
        while m:
            b = m & -m
            m ^= b
            vs.append(b.bit_length() - 1)
        out.append(tuple(vs))
    return out


def _copy_masks(g, f, budget):
    if _is_complete(f):
        return _clique_sets(g, f.n, budget)
    return _pattern_sets(g, f, budget)


def _is_complete(f):
    return f.edge_count() == f.n * (f.n - 1) // 2


@dataclass
class CoverInstance:
    host: Graph
    pattern: Graph
    copy_sets: list  # bitmasks


@dataclass
class CoverResult:
    tau: int
    witness: tuple           # vertex labels hitting every copy
    disjoint_copies: tuple   # pairwise disjoint copy vertex-tuples, a lower-bound certificate
    copies: int

    def to_json(self):
        return json.dumps(
            {
                "tau": self.tau,
                "witness": list(self.witness),
                "disjoint_copies": [list(c) for c in self.disjoint_copies],
                "copies": self.copies,
            },
            sort_keys=True,
        )


def is_cover(g, f, vertices, budget=DEFAULT_COPY_BUDGET):
    """True iff every copy of f in g meets the given vertex set."""
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    return all(c & mask for c in _copy_masks(g, f, budget))


def _greedy_disjoint(copy_sets):
    """Pairwise vertex-disjoint copies picked greedily; their count lower
    bounds tau."""
    used = 0
    picked = []
    for c in copy_sets:
        if not c & used:
            picked.append(c)
            used |= c
    return picked


def _greedy_hitting(copy_sets, n):
    """Hit the most-frequent vertex repeatedly; gives an upper bound."""
    remaining = list(copy_sets)
    chosen = 0
    while remaining:
        counts = [0] * n
        for c in remaining:
            m = c
            while m:
                b = m & -m
                m ^= b
                counts[b.bit_length() - 1] += 1
        v = max(range(n), key=lambda i: counts[i])
        chosen |= 1 << v
        remaining = [c for c in remaining if not c >> v & 1]
    return chosen


def _bits(mask):
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def covering_number(g, f, budget=DEFAULT_COPY_BUDGET):
    """Exact minimum size of a vertex set meeting every copy of f in g."""
    copy_sets = _copy_masks(g, f, budget)
    ncopies = len(copy_sets)
    if not copy_sets:
        return CoverResult(tau=0, witness=(), disjoint_copies=(), copies=0)

    best_mask = _greedy_hitting(copy_sets, g.n)
    best = [best_mask.bit_count(), best_mask]
    disjoint = _greedy_disjoint(copy_sets)

    def uncovered(cover):
        # deterministic pick: fewest vertices outside the cover, then lowest sets
        pick = None
        pick_key = None
        for c in copy_sets:
            if c & cover:
                continue
            key = ((c & ~cover).bit_count(), c)
            if pick_key is None or key < pick_key:
                pick, pick_key = c, key
        return pick

    def lower_bound(cover):
        used = 0
        cnt = 0
        for c in copy_sets:
            if c & cover or c & used:
                continue
            used |= c
            cnt += 1
        return cnt

    def branch(cover, size):
        c = uncovered(cover)
        if c is None:
            if size < best[0]:
                best[0], best[1] = size, cover
            return
        if size + max(1, lower_bound(cover)) >= best[0]:
            return
        for v in _bits(c):
            branch(cover | 1 << v, size + 1)

    branch(0, 0)
    tau = best[0]
    assert tau >= len(_greedy_disjoint(copy_sets)) >= 0
    cert = disjoint if len(disjoint) == tau else _greedy_disjoint(copy_sets)
    return CoverResult(
        tau=tau,
        witness=tuple(_bits(best[1])),
        disjoint_copies=tuple(tuple(_bits(c)) for c in cert),
        copies=ncopies,
    )
