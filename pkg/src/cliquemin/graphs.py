"""Simple undirected graphs with bit-row adjacency, plus exact counting kernels.

Vertices are labeled 0..n-1.  Each adjacency row is a Python int used as a
bitset, so graphs of a few hundred vertices cost nothing special and counts
never overflow (Python ints are arbitrary precision).
"""

from __future__ import annotations

import itertools


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph: no loops, no multi-edges, symmetric adjacency."""

    __slots__ = ("n", "rows")

    def __init__(self, n, edges=()):
        if n < 0:
            raise GraphError("vertex count must be >= 0")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows):
        g = object.__new__(cls)
        g.n = len(rows)
        g.rows = tuple(rows)
        return g

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def degree(self, v):
        return self.rows[v].bit_count()

    def edges(self):
        out = []
        for u in range(self.n):
            m = self.rows[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                out.append((u, b.bit_length() - 1))
                m ^= b
        return out

    def edge_count(self):
        return sum(r.bit_count() for r in self.rows) // 2

    def with_edges(self, add=(), remove=()):
        rows = list(self.rows)
        for u, v in add:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"bad edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for u, v in remove:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph.from_rows(rows)

    def relabel(self, perm):
        """New graph where old vertex i gets label perm[i]."""
        rows = [0] * self.n
        for u, v in self.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        return Graph.from_rows(rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def complete_graph(n):
    full = (1 << n) - 1
    return Graph.from_rows([full ^ (1 << v) for v in range(n)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def edge_count(g):
    return g.edge_count()


def _cliques_in(rows, mask, k):
    # k-cliques inside candidate mask; bits are consumed in ascending order so
    # each clique is counted once, at its sorted vertex sequence.
    if k == 1:
        return mask.bit_count()
    total = 0
    while mask:
        b = mask & -mask
        mask ^= b
        sub = mask & rows[b.bit_length() - 1]
        if sub:
            total += _cliques_in(rows, sub, k - 1)
    return total


def count_cliques(g, k):
    """Number of k-vertex subsets of g inducing a complete graph."""
    if k < 1:
        raise GraphError("k must be >= 1")
    if k == 1:
        return g.n
    rows = g.rows
    if k == 3:
        # one count per edge (u,v) with u<v: common neighbors above v
        total = 0
        for u in range(g.n):
            ru = rows[u]
            m = ru >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                m ^= b
                v = b.bit_length() - 1
                total += (ru & rows[v] >> (v + 1) << (v + 1)).bit_count()
        return total
    return _cliques_in(rows, (1 << g.n) - 1, k)


def _embedding_order(f):
    # place high-degree vertices first, then prefer vertices with many
    # already-placed neighbors, so candidate sets shrink fast
    n = f.n
    if n == 0:
        return []
    order = [max(range(n), key=lambda v: (f.degree(v), -v))]
    placed = 1 << order[0]
    while len(order) < n:
        best = max(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: ((f.rows[v] & placed).bit_count(), f.degree(v), -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def count_embeddings(g, f):
    """Number of injective maps V(f) -> V(g) sending every f-edge to a g-edge."""
    if f.n == 0:
        raise GraphError("pattern must be nonempty")
    if f.n > g.n:
        return 0
    order = _embedding_order(f)
    pos = {v: i for i, v in enumerate(order)}
    # for each placement step, the already-placed f-neighbors
    back = [[pos[u] for u in range(f.n) if f.has_edge(order[i], u) and pos[u] < i]
            for i in range(f.n)]
    grows = g.rows
    full = (1 << g.n) - 1
    total = 0
    image = [0] * f.n

    def place(i, used):
        nonlocal total
        if i == f.n:
            total += 1
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
    return total


def automorphism_count(f):
    """|Aut(f)| by exhaustive permutation search (edge-preserving injections
    of f into itself are exactly its automorphisms)."""
    return count_embeddings(f, f)


def count_copies(g, f):
    """Number of (unlabeled) copies of f in g: distinct subgraphs isomorphic
    to f, i.e. labeled embeddings divided by |Aut(f)|."""
    emb = count_embeddings(g, f)
    aut = automorphism_count(f)
    if emb % aut:
        raise GraphError("embedding count not divisible by automorphism count")
    return emb // aut


DEFAULT_CHROMATIC_LIMIT = 32


def _is_colorable(g, k, order):
    n = g.n
    colors = [-1] * n

    def assign(i, used):
        if i == n:
            return True
        v = order[i]
        seen = 0
        m = g.rows[v]
        for u in order[:i]:
            if m >> u & 1:
                seen |= 1 << colors[u]
        limit = min(k, used + 1)
        for c in range(limit):
            if not seen >> c & 1:
                colors[v] = c
                if assign(i + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return assign(0, 0)


def _greedy_clique_size(g):
    best = 0
    for v in range(g.n):
        clique = 1 << v
        cand = g.rows[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= g.rows[u]
        best = max(best, clique.bit_count())
    return best


def chromatic_number(g, limit=DEFAULT_CHROMATIC_LIMIT):
    """Exact chromatic number by iterated k-colorability (backtracking)."""
    if g.n > limit:
        raise GraphError(f"chromatic_number limited to n <= {limit}, got n={g.n}")
    if g.n == 0:
        return 0
    if g.edge_count() == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    for k in range(max(2, _greedy_clique_size(g)), g.n + 1):
        if _is_colorable(g, k, order):
            return k
    return g.n


def is_k_critical(f, k):
    """True iff chi(f) = k and removing some edge drops the chromatic number."""
    if k < 3:
        raise GraphError("criticality is defined for k >= 3")
    if chromatic_number(f) != k:
        return False
    return any(chromatic_number(f.with_edges(remove=[e])) < k for e in f.edges())


# ---------------------------------------------------------------------------
# graph6 encoding (standard ASCII format for simple undirected graphs)

def _g6_size_bytes(n):
    if n < 0:
        raise GraphError("negative n")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError("n too large for graph6")


def to_graph6(g):
    n = g.n
    bits = []
    for v in range(1, n):
        col = g.rows[v]
        bits.extend((col >> u) & 1 for u in range(v))
    data = bytearray(_g6_size_bytes(n))
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        data.append(val + 63)
    return data.decode("ascii")


def from_graph6(s):
    s = s.strip()
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphError("invalid graph6 character")
    if data[0] != 63:
        n, body = data[0], data[1:]
    elif len(data) > 1 and data[1] != 63:
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        body = data[8:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError("graph6 body has wrong length")
    bits = []
    for d in body:
        bits.extend((d >> s_) & 1 for s_ in range(5, -1, -1))
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph.from_rows(rows)


def canonical_form(g):
    """Lexicographically smallest edge-bitstring over all relabelings.
    Brute force over permutations; intended for n <= 8 witnesses only."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = 0
        for u, v in g.edges():
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            key |= 1 << (b * (b - 1) // 2 + a)
        if best is None or key < best:
            best = key
    return g.n, best
