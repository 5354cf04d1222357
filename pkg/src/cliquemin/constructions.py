"""Generators for the extremal families: complete multipartite hosts plus a
matching inside the largest part, minus a small set of cross-pair removals.

Vertices are labeled part by part, parts in nonincreasing size order, so every
construction is deterministic.  Each generator checks its feasibility
inequalities explicitly and refuses with the failed inequality named.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .formulas import (
    ParameterError,
    balanced_sizes,
    clique_params,
    triangle_params,
    turan_edge_count,
)
from .graphs import Graph, GraphError


class InfeasibleConstructionError(ValueError):
    """Raised when the requested parameters violate a feasibility inequality;
    the message names the inequality that failed."""


def _require(cond, inequality):
    if not cond:
        raise InfeasibleConstructionError(f"infeasible: requires {inequality}")


@dataclass
class ConstructionSpec:
    """Deterministic description of a built graph: family name, parameters,
    and the explicit added/removed pairs on top of the multipartite host."""

    family: str
    params: dict
    part_sizes: tuple
    added: list = field(default_factory=list)
    removed: list = field(default_factory=list)

    def to_json(self):
        return json.dumps(
            {
                "family": self.family,
                "params": self.params,
                "part_sizes": list(self.part_sizes),
                "added_edges": [list(e) for e in self.added],
                "removed_edges": [list(e) for e in self.removed],
            },
            sort_keys=True,
        )


def part_ranges(sizes):
    """Start offsets of each part under part-by-part labeling."""
    starts = []
    pos = 0
    for x in sizes:
        starts.append(pos)
        pos += x
    return starts


def complete_multipartite(sizes):
    """All cross pairs adjacent, no inside pairs."""
    if not sizes or any(x < 1 for x in sizes):
        raise GraphError("part sizes must be positive")
    n = sum(sizes)
    rows = [0] * n
    full = (1 << n) - 1
    pos = 0
    for x in sizes:
        part = ((1 << x) - 1) << pos
        other = full ^ part
        for v in range(pos, pos + x):
            rows[v] = other
        pos += x
    return Graph.from_rows(rows)


def turan_graph(n, parts):
    if parts < 2:
        raise GraphError("parts must be >= 2")
    return complete_multipartite(balanced_sizes(n, parts))


def pattern_is_triangle_free(edges):
    """Side condition on the added+removed pairs: no three of them form a
    triangle."""
    es = {tuple(sorted(e)) for e in edges}
    verts = sorted({v for e in es for v in e})
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if (a, b) not in es:
                continue
            for c in verts:
                if c > b and (a, c) in es and (b, c) in es:
                    return False
    return True


def _bm_spec(n, s, t):
    p = triangle_params(n, s, t)
    _require(p.n_plus >= 2 * s, f"n_plus >= 2s (got n_plus={p.n_plus}, s={s})")
    _require(p.n_minus >= p.m_st, f"n_minus >= m_st (got n_minus={p.n_minus}, m_st={p.m_st})")
    # V1 = [0, n_plus), V2 = [n_plus, n); matching pairs (i, s+i) in V1,
    # removals pair v_i with a distinct V2 vertex each
    added = [(i, s + i) for i in range(s)]
    removed = [(s + i, p.n_plus + i) for i in range(p.m_st)]
    return p, ConstructionSpec(
        family="bm", params={"n": n, "s": s, "t": t, "m": p.m_st},
        part_sizes=(p.n_plus, p.n_minus), added=added, removed=removed,
    )


def bm_graph(n, s, t):
    """Bipartite host on (n_plus, n_minus) plus an s-matching inside the big
    part, minus m_st vertex-disjoint cross removals.  Edge count t_2(n)+t."""
    p, spec = _bm_spec(n, s, t)
    g = complete_multipartite(spec.part_sizes).with_edges(add=spec.added, remove=spec.removed)
    assert g.edge_count() == turan_edge_count(n, 2) + t
    return g


def bm_spec(n, s, t):
    return _bm_spec(n, s, t)[1]


def _bs_spec(n, s, t):
    p = triangle_params(n, s, t)
    _require(p.n_plus >= 2 * (s - 1), f"n_plus >= 2(s-1) (got n_plus={p.n_plus}, s={s})")
    _require(p.n_minus >= 2, f"n_minus >= 2 (got n_minus={p.n_minus})")
    _require(p.m_st <= s - 1, f"m_st <= s-1 (got m_st={p.m_st}, s={s})")
    # s-1 matching pairs (i, s-1+i) in V1, one pair at the start of V2;
    # removals join v_i in V1 to the V2 matched vertex v'_s
    u2, v2 = p.n_plus, p.n_plus + 1
    added = [(i, s - 1 + i) for i in range(s - 1)] + [(u2, v2)]
    removed = [(s - 1 + i, v2) for i in range(p.m_st)]
    return p, ConstructionSpec(
        family="bs", params={"n": n, "s": s, "t": t, "m": p.m_st},
        part_sizes=(p.n_plus, p.n_minus), added=added, removed=removed,
    )


def bs_graph(n, s, t):
    """Like bm_graph but with one matched pair moved to the small part and
    single-sink removals; each removal kills exactly two triangles."""
    p, spec = _bs_spec(n, s, t)
    g = complete_multipartite(spec.part_sizes).with_edges(add=spec.added, remove=spec.removed)
    assert g.edge_count() == turan_edge_count(n, 2) + t
    return g


def bs_spec(n, s, t):
    return _bs_spec(n, s, t)[1]


def _triangle_free_added(x1, s):
    """s distinct triangle-free edges inside a part of size x1: a matching
    when 2s vertices fit, otherwise bipartite pairs taken diagonal-first so
    the pattern stays as close to a matching as possible."""
    if x1 >= 2 * s:
        return [(i, s + i) for i in range(s)]
    half = x1 // 2
    pairs = [(a, b) for a in range(x1 - half) for b in range(x1 - half, x1)]
    _require(s <= len(pairs), f"s <= floor(x_1/2)*ceil(x_1/2) (got s={s}, x_1={x1})")
    # pick pairs greedily by lowest current endpoint degrees, keeping the
    # pattern matching-like so some vertex of degree one remains available
    degree = [0] * x1
    chosen = []
    for _ in range(s):
        best = min((p for p in pairs if p not in chosen),
                   key=lambda p: (degree[p[0]] + degree[p[1]], p))
        chosen.append(best)
        degree[best[0]] += 1
        degree[best[1]] += 1
    return chosen


def _km_spec(x, m, s):
    sizes = tuple(x)
    if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
        raise ParameterError("part sizes must be nonincreasing")
    if len(sizes) < 2:
        raise ParameterError("need at least 2 parts")
    _require(s > m >= 0, f"s > m >= 0 (got s={s}, m={m})")
    _require(sizes[-1] >= m, f"x_last >= m (got x_last={sizes[-1]}, m={m})")
    last = sum(sizes) - sizes[-1]
    added = _triangle_free_added(sizes[0], s)
    # removal anchors must sit on exactly one added edge so each removal
    # cancels exactly one middle-part product of cliques
    degree = {}
    for u, v in added:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    anchors = sorted(v for v, d in degree.items() if d == 1)
    _require(len(anchors) >= m,
             f"m vertices on exactly one added edge (got m={m}, available={len(anchors)})")
    removed = [(anchors[i], last + i) for i in range(m)]
    assert pattern_is_triangle_free(added + removed)
    return ConstructionSpec(
        family="km", params={"sizes": list(sizes), "m": m, "s": s},
        part_sizes=sizes, added=added, removed=removed,
    )


def km_graph(x, m, s):
    """Complete multipartite on x plus an s-matching in the largest part,
    minus m vertex-disjoint removals into the smallest part.

    Edge count sum_{i<j} x_i x_j + s - m; clique count
    s * prod(x_2..x_{k-1}) - m * prod(x_2..x_{k-2})."""
    spec = _km_spec(x, m, s)
    return complete_multipartite(spec.part_sizes).with_edges(add=spec.added, remove=spec.removed)


def km_spec(x, m, s):
    return _km_spec(x, m, s)


def km_graph_formula_cliques(x, m, s):
    """Closed-form clique count of km_graph(x, m, s)."""
    prod_rest = 1
    for v in x[1:]:
        prod_rest *= v
    prod_mid = 1
    for v in x[1:-1]:
        prod_mid *= v
    return s * prod_rest - m * prod_mid


def _km_special_spec(n, k, s, t):
    p = clique_params(n, k, s, t)
    if not p.n_minus_is_integer:
        num = 2 * (k - 1) * (s - t) + (k - 1 - p.r) * p.r
        raise InfeasibleConstructionError(
            f"infeasible: requires n_minus integral; radicand {num}/{k - 2} "
            f"does not give an integer part size for n={n}"
        )
    n_minus = p.n_minus_int
    n_plus = n - (k - 2) * n_minus
    _require(n_plus >= 2 * s, f"n_plus >= 2s (got n_plus={n_plus}, s={s})")
    _require(n_minus >= 1, f"n_minus >= 1 (got n_minus={n_minus})")
    sizes = tuple([n_plus] + [n_minus] * (k - 2))
    added = [(i, s + i) for i in range(s)]
    return ConstructionSpec(
        family="km_special", params={"n": n, "k": k, "s": s, "t": t},
        part_sizes=sizes, added=added, removed=[],
    )


def km_special(n, k, s, t):
    """Parts (n_plus, n_minus, ..., n_minus) plus an s-matching in the big
    part, no removals; edge count t_{k-1}(n)+t, clique count s*n_minus^(k-2)."""
    spec = _km_special_spec(n, k, s, t)
    g = complete_multipartite(spec.part_sizes).with_edges(add=spec.added)
    assert g.edge_count() == turan_edge_count(n, k - 1) + t
    return g


def km_special_spec(n, k, s, t):
    return _km_special_spec(n, k, s, t)


def t_box(n, k):
    """Turan graph with edges u1v1 (inside part 1) and u2v2 (inside part 2)
    added and the cross pair v1v2 removed; edge count t_{k-1}(n)+1."""
    if k < 4:
        raise ParameterError("k must be >= 4")
    sizes = balanced_sizes(n, k - 1)
    _require(all(x >= 2 for x in sizes[:2]), f"first two parts >= 2 (got {sizes[:2]})")
    u1, v1 = 0, 1
    u2, v2 = sizes[0], sizes[0] + 1
    g = complete_multipartite(sizes).with_edges(add=[(u1, v1), (u2, v2)], remove=[(v1, v2)])
    assert g.edge_count() == turan_edge_count(n, k - 1) + 1
    return g


def t_box_formula_cliques(n, k):
    """Closed-form K_k count of t_box: (x1 + x2 - 2) * prod(x3..x_{k-1})."""
    sizes = balanced_sizes(n, k - 1)
    value = sizes[0] + sizes[1] - 2
    for x in sizes[2:]:
        value *= x
    return value


def enumerate_bm_patterns(n, s, t, limit=1000):
    """All members of the bipartite-plus-matching family obtained by removing
    m_st distinct cross pairs at the matched v-vertices, filtered by the
    triangle-free side condition on added+removed pairs.  No isomorphism
    dedup; capped at `limit` graphs."""
    import itertools

    p = triangle_params(n, s, t)
    _require(p.n_plus >= 2 * s, f"n_plus >= 2s (got n_plus={p.n_plus}, s={s})")
    added = [(i, s + i) for i in range(s)]
    candidates = [(s + i, p.n_plus + j) for i in range(s) for j in range(p.n_minus)]
    host = complete_multipartite((p.n_plus, p.n_minus))
    out = []
    for removed in itertools.combinations(candidates, p.m_st):
        if not pattern_is_triangle_free(added + list(removed)):
            continue
        g = host.with_edges(add=added, remove=removed)
        assert g.edge_count() == turan_edge_count(n, 2) + t
        out.append(g)
        if len(out) >= limit:
            break
    return out


def build(family, **params):
    """Dispatch by family name; used by the command-line layer."""
    if family == "bm":
        return bm_graph(params["n"], params["s"], params["t"])
    if family == "bs":
        return bs_graph(params["n"], params["s"], params["t"])
    if family == "km":
        return km_graph(params["sizes"], params["m"], params["s"])
    if family == "km-special":
        return km_special(params["n"], params["k"], params["s"], params["t"])
    if family == "t-box":
        return t_box(params["n"], params["k"])
    if family == "turan":
        return turan_graph(params["n"], params["parts"])
    if family == "complete-multipartite":
        return complete_multipartite(params["sizes"])
    raise ParameterError(f"unknown family {family!r}")
