"""Small simple undirected graphs over bitmask adjacency rows.

A graph on n <= 32 vertices stores one int bitmask per vertex, so adjacency
tests, neighbourhood intersections and degree counts are single-word
operations.  Everything here is pure and allocation-light; Graph values are
immutable and safe to share between search workers.
"""

from __future__ import annotations

from typing import Iterable, Sequence

MAX_VERTICES = 32


class GraphError(ValueError):
    """Invalid graph construction or malformed graph input."""


def _bits(mask: int):
    """Yield the set bit positions of mask, lowest first."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1, n <= 32.

    adj[v] is the neighbour bitmask of v.  The edge order used throughout
    the package is the lexicographic order of pairs (i, j) with i < j.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows, expected {n}")
        full = (1 << n) - 1
        for i, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {i} references a vertex >= {n}")
            if (row >> i) & 1:
                raise GraphError(f"self-loop at vertex {i}")
        for i, row in enumerate(adj):
            for j in _bits(row):
                if not (adj[j] >> i) & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")
        self.n = n
        self.adj = adj

    @property
    def q(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j), i < j, in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i] >> (i + 1) << (i + 1))]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        self.n, self.adj = state


def lex_edges(n: int) -> list[tuple[int, int]]:
    """All edges of K_n as (i, j), i < j, lexicographic."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an explicit edge list.

    Rejects loops, duplicate edges (in either orientation) and endpoints
    outside 0..n-1.
    """
    adj = [0] * n
    seen = set()
    for e in edges:
        i, j = e
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge {e} out of range for n={n}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, adj)


def degree_profile(g: Graph) -> tuple[int, int, bool, bool]:
    """(max degree, min degree, has isolated vertex, connected).

    An edgeless graph has max = min = 0; the empty graph counts as connected.
    """
    if g.n == 0:
        return (0, 0, False, True)
    degs = g.degrees()
    dmax, dmin = max(degs), min(degs)
    return (dmax, dmin, dmin == 0, is_connected(g))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def components(g: Graph) -> list[Graph]:
    """Connected components as separate graphs, re-indexed, in order of
    their smallest original vertex."""
    remaining = (1 << g.n) - 1
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        verts = list(_bits(comp))
        index = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for v in verts:
            for w in _bits(g.adj[v]):
                adj[index[v]] |= 1 << index[w]
        out.append(Graph(len(verts), adj))
        remaining &= ~comp
    return out


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and its incident edges; remaining vertices keep their
    relative order."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    keep = [u for u in range(g.n) if u != v]
    index = {u: i for i, u in enumerate(keep)}
    adj = [0] * (g.n - 1)
    for u in keep:
        for w in _bits(g.adj[u] & ~(1 << v)):
            adj[index[u]] |= 1 << index[w]
    return Graph(g.n - 1, adj)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertices are shifted up by a.n."""
    n = a.n + b.n
    if n > MAX_VERTICES:
        raise GraphError(f"union has {n} vertices, cap is {MAX_VERTICES}")
    adj = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(n, adj)


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

def _refine_colors(g: Graph) -> list[int]:
    """Iterated degree refinement: vertices get dense colours such that any
    isomorphism preserves colours.  Stops once the partition is stable."""
    n, adj = g.n, g.adj
    colors = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        keys = []
        for v in range(n):
            nb = tuple(sorted(colors[u] for u in _bits(adj[v])))
            keys.append((colors[v], nb))
        rank = {k: r for r, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if new == colors:
            break
        colors = new
    return colors


def canonical_form(g: Graph) -> Graph:
    """A fixed representative of g's isomorphism class.

    Vertices are first partitioned by iterated degree refinement; the result
    is the relabeling, among those that list each refinement cell in order of
    its colour, whose upper-triangle bit string (column-major, the graph6 bit
    order) is lexicographically least.  Branch-and-bound on the partial bit
    string keeps this fast for the sizes we enumerate (n <= ~12).
    """
    n, adj = g.n, g.adj
    if n <= 1:
        return Graph(n, g.adj)
    colors = _refine_colors(g)
    pos_color = sorted(colors)

    placed = [0] * n
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    used = [0]  # bitmask of placed vertices

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    cols = [0] * n

    def dfs(p: int, eq: bool) -> bool:
        nonlocal best_cols, best_perm
        if p == n:
            if best_cols is None or not eq:
                best_cols = cols[:]
                best_perm = placed[:]
                return True
            return False
        improved = False
        tried: list[int] = []
        for v in by_color[pos_color[p]]:
            bv = 1 << v
            if used[0] & bv:
                continue
            # twins (same neighbourhood apart from each other) are swapped
            # by an automorphism, so trying one of them suffices
            if any((adj[u] & ~bv) == (adj[v] & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            col = 0
            av = adj[v]
            for i in range(p):
                col = (col << 1) | ((av >> placed[i]) & 1)
            if eq and best_cols is not None:
                bc = best_cols[p]
                if col > bc:
                    continue
                child_eq = col == bc
            else:
                child_eq = False
            placed[p] = v
            used[0] |= bv
            cols[p] = col
            if dfs(p + 1, child_eq):
                improved = True
                eq = True  # path now equals the freshly installed best
            used[0] &= ~bv
        return improved

    dfs(0, True)
    assert best_perm is not None
    new_adj = [0] * n
    for p in range(n):
        vp = best_perm[p]
        for r in range(n):
            if (adj[vp] >> best_perm[r]) & 1:
                new_adj[p] |= 1 << r
    return Graph(n, new_adj)


# ---------------------------------------------------------------------------
# subgraph containment (non-induced monomorphism)
# ---------------------------------------------------------------------------

def _match_order(h: Graph) -> list[int]:
    """Pattern vertex order: components by decreasing edge count, each walked
    from its highest-degree vertex so later vertices have mapped neighbours."""
    order: list[int] = []
    for comp_mask in sorted(_component_masks(h), key=lambda m: -sum(h.adj[v].bit_count() for v in _bits(m))):
        verts = list(_bits(comp_mask))
        start = max(verts, key=lambda v: h.adj[v].bit_count())
        seen = {start}
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(_bits(h.adj[v]), key=lambda w: -h.adj[w].bit_count()):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _component_masks(g: Graph) -> list[int]:
    masks = []
    remaining = (1 << g.n) - 1
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        masks.append(comp)
        remaining &= ~comp
    return masks


def embeds(h: Graph, g: Graph) -> bool:
    """True iff some injective vertex map carries every edge of h onto an
    edge of g (subgraph containment, not induced)."""
    if h.n > g.n or h.q > g.q:
        return False
    if h.n == 0:
        return True
    order = _match_order(h)
    h_adj = h.adj
    g_adj = g.adj
    g_deg = [row.bit_count() for row in g_adj]
    h_deg = [row.bit_count() for row in h_adj]
    all_mask = (1 << g.n) - 1
    phi = [-1] * h.n

    def place(t: int, used: int) -> bool:
        if t == len(order):
            return True
        v = order[t]
        need = h_deg[v]
        cand = all_mask & ~used
        anchored = h_adj[v]
        for w in _bits(anchored):
            if phi[w] >= 0:
                cand &= g_adj[phi[w]]
        for x in _bits(cand):
            if g_deg[x] < need:
                continue
            phi[v] = x
            if place(t + 1, used | (1 << x)):
                return True
        phi[v] = -1
        return False

    return place(0, 0)


def isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test for small graphs."""
    if a.n != b.n or a.q != b.q:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    # an edge-preserving injection between graphs of equal order and size
    # is an isomorphism
    return embeds(a, b)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    """Standard graph6: header byte n+63, then the upper triangle column by
    column, packed into 6-bit groups, each +63."""
    n = g.n
    out = [chr(n + 63)]
    buf = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            buf = (buf << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(buf + 63))
                buf = 0
                nbits = 0
    if nbits:
        buf <<= 6 - nbits
        out.append(chr(buf + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string for n <= 32.

    Raises GraphError on wrong length, bytes outside the printable range
    63..126, nonzero padding bits, or trailing garbage.
    """
    s = text.rstrip("\n")
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"byte {ord(ch)} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 order {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) != 1 + need:
        raise GraphError(f"graph6 string has {len(s)} bytes, expected {1 + need} for n={n}")
    adj = [0] * n
    k = 0
    for idx in range(need):
        group = ord(s[1 + idx]) - 63
        for b in range(5, -1, -1):
            bit = (group >> b) & 1
            if k >= nbits:
                if bit:
                    raise GraphError("nonzero padding bits in graph6 string")
                continue
            if bit:
                i, j = _edge_of_column_index(k)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def _edge_of_column_index(k: int) -> tuple[int, int]:
    # column-major upper triangle: bits (0,1), (0,2), (1,2), (0,3), ...
    j = 1
    while j * (j - 1) // 2 + j <= k:
        j += 1
    i = k - j * (j - 1) // 2
    return i, j
