"""Finite simple graphs: invariants, recognizers and one-vertex constructions.

Vertices are dense integers 0..n-1.  Graphs are immutable values and every
operation returns a fresh Graph.  The NP-hard invariants (matching numbers,
induced-pattern detection, canonical forms) use exact exponential search with
pruning and are meant for desk-scale inputs, roughly n <= 10; plain storage
and the graph6 codec go up to n = 62.
"""

from __future__ import annotations

from itertools import combinations


class Graph:
    """Immutable simple graph on vertex set {0, ..., n-1}."""

    __slots__ = ("n", "edges", "_masks")

    def __init__(self, n: int, edges=()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {tuple(e)!r} out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        masks = [0] * n
        for u, v in norm:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._masks = tuple(masks)

    # -- basic views ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._masks[u] >> v) & 1)

    def neighbors(self, v: int) -> frozenset:
        """Neighborhood of v as a frozenset of vertices."""
        self._check_vertex(v)
        m = self._masks[v]
        return frozenset(u for u in range(self.n) if (m >> u) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return bin(self._masks[v]).count("1")

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._masks[v]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def isolated_vertices(self) -> tuple:
        """Vertices of degree zero (accepted, but edge-ideal work ignores them)."""
        return tuple(v for v in range(self.n) if not self._masks[v])

    def _check_vertex(self, v) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValueError(f"invalid vertex {v!r} for n={self.n}")

    # -- value semantics --------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {sorted(self.edges)})"


# -- builders ---------------------------------------------------------------


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def anticycle(n: int) -> Graph:
    """Complement of the cycle on n >= 3 vertices."""
    return complement(cycle(n))


def path(n: int) -> Graph:
    """Path on n >= 1 vertices (n - 1 edges)."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError("a complete graph needs at least 1 vertex")
    return Graph(n, combinations(range(n), 2))


def claw() -> Graph:
    """Star with center 0 and leaves 1, 2, 3."""
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def cricket() -> Graph:
    """Vertex 0 joined to 1, 2, 3, 4 plus the extra edge {3, 4}."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (3, 4)])


# -- elementary operations ----------------------------------------------------


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    return Graph(
        g.n,
        (e for e in combinations(range(g.n), 2) if e not in g.edges),
    )


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph on the given vertex subset, re-indexed to 0..|W|-1.

    Vertices are relabeled in increasing order of their original index.
    """
    w = sorted(vertices)
    if len(w) != len(set(w)):
        raise ValueError("vertex subset contains duplicates")
    for v in w:
        g._check_vertex(v)
    pos = {v: i for i, v in enumerate(w)}
    keep = set(w)
    return Graph(
        len(w),
        ((pos[u], pos[v]) for u, v in g.edges if u in keep and v in keep),
    )


def is_independent_set(g: Graph, s) -> bool:
    """True when no edge of g has both endpoints in s."""
    ss = set(s)
    for v in ss:
        g._check_vertex(v)
    return not any(u in ss and v in ss for u, v in g.edges)


def is_vertex_cover(g: Graph, u) -> bool:
    """True when every edge of g meets u."""
    us = set(u)
    for v in us:
        g._check_vertex(v)
    return all(a in us or b in us for a, b in g.edges)


# -- matchings ---------------------------------------------------------------


def matching_number(g: Graph) -> int:
    """Maximum size of a set of pairwise disjoint edges (exact branch and bound)."""
    edges = sorted(g.edges)
    best = 0

    def rec(avail, size):
        nonlocal best
        if size > best:
            best = size
        if not avail:
            return
        # touched vertices bound: |V(avail)| // 2 more edges at most
        touched = set()
        for e in avail:
            touched.update(e)
        if size + len(touched) // 2 <= best:
            return
        u = avail[0][0]
        # branch: u stays unmatched
        rec([e for e in avail if u not in e], size)
        # branch: u matched through one of its available edges
        for e in avail:
            if u in e:
                a, b = e
                v = b if a == u else a
                rec([f for f in avail if u not in f and v not in f], size + 1)

    rec(edges, 0)
    return best


def induced_matching_number(g: Graph) -> int:
    """Maximum size of an induced matching; raises on edgeless graphs."""
    edges = sorted(g.edges)
    if not edges:
        raise ValueError("induced matching number is undefined for an edgeless graph")
    k = len(edges)
    # compatible[i][j]: edges i and j are disjoint and no edge meets both
    compatible = [[False] * k for _ in range(k)]
    for i in range(k):
        ei = set(edges[i])
        for j in range(i + 1, k):
            ej = set(edges[j])
            if ei & ej:
                continue
            if any(set(e) & ei and set(e) & ej for e in edges):
                continue
            compatible[i][j] = compatible[j][i] = True
    best = 0

    def rec(start, chosen):
        nonlocal best
        if len(chosen) > best:
            best = len(chosen)
        if len(chosen) + (k - start) <= best:
            return
        for i in range(start, k):
            if all(compatible[i][j] for j in chosen):
                chosen.append(i)
                rec(i + 1, chosen)
                chosen.pop()

    rec(0, [])
    return best


def is_gap_free(g: Graph) -> bool:
    """True when the induced matching number equals 1."""
    return induced_matching_number(g) == 1


# -- chordality ----------------------------------------------------------------


def is_chordal(g: Graph) -> bool:
    """Chordality via maximum-cardinality search plus elimination-ordering check."""
    n = g.n
    if n <= 2:
        return True
    weights = [0] * n
    numbered = [False] * n
    order = []
    for _ in range(n):
        v = max(
            (w for w in range(n) if not numbered[w]),
            key=lambda w: (weights[w], -w),
        )
        numbered[v] = True
        order.append(v)
        for u in range(n):
            if not numbered[u] and (g._masks[v] >> u) & 1:
                weights[u] += 1
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # reversed MCS order is a perfect elimination ordering iff g is chordal:
    # for each v, its earlier-numbered neighbors must form a clique
    for v in range(n):
        earlier = [u for u in range(n) if (g._masks[v] >> u) & 1 and pos[u] < pos[v]]
        for a, b in combinations(earlier, 2):
            if not (g._masks[a] >> b) & 1:
                return False
    return True


# -- small induced patterns ------------------------------------------------------


def _wl_colors(g: Graph):
    # iterated neighborhood-multiset refinement; invariant under isomorphism
    n = g.n
    color = [g.degree(v) for v in range(n)]
    while True:
        sig = [
            (color[v], tuple(sorted(color[u] for u in range(n) if (g._masks[v] >> u) & 1)))
            for v in range(n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[sig[v]] for v in range(n)]
        if new == color:
            return color
        color = new


def _canonical_rows(g: Graph):
    """Lexicographically smallest adjacency-row encoding over color-respecting orders."""
    n = g.n
    if n == 0:
        return ()
    colors = _wl_colors(g)
    slots = sorted(colors)
    pools = {}
    for v in range(n):
        pools.setdefault(colors[v], []).append(v)
    masks = g._masks
    placed = []
    rows = [0] * n
    used = [False] * n

    # greedy first completion gives the initial bound
    best = None
    for p in range(n):
        cand = None
        cand_r = None
        for v in pools[slots[p]]:
            if used[v]:
                continue
            m = masks[v]
            r = 0
            for k in range(p):
                if (m >> placed[k]) & 1:
                    r |= 1 << k
            if cand is None or r < cand_r:
                cand, cand_r = v, r
        used[cand] = True
        placed.append(cand)
        rows[p] = cand_r
    best = rows[:]
    for v in placed:
        used[v] = False
    placed.clear()

    def rec(p, equal_prefix):
        nonlocal best
        if p == n:
            best = rows[:]
            return
        for v in pools[slots[p]]:
            if used[v]:
                continue
            m = masks[v]
            r = 0
            for k in range(p):
                if (m >> placed[k]) & 1:
                    r |= 1 << k
            if equal_prefix:
                if r > best[p]:
                    continue
                child_equal = r == best[p]
            else:
                child_equal = False
            used[v] = True
            placed.append(v)
            rows[p] = r
            rec(p + 1, child_equal)
            placed.pop()
            used[v] = False

    rec(0, True)
    return tuple(best)


def canonical_key(g: Graph):
    """Hashable isomorphism invariant: equal keys iff isomorphic graphs."""
    return (g.n, _canonical_rows(g))


def canonical_graph(g: Graph) -> Graph:
    """Canonical representative of the isomorphism class of g."""
    n, rows = canonical_key(g)
    edges = []
    for p in range(n):
        r = rows[p]
        for k in range(p):
            if (r >> k) & 1:
                edges.append((k, p))
    return Graph(n, edges)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(a.degree(v) for v in range(a.n)) != sorted(b.degree(v) for v in range(b.n)):
        return False
    return canonical_key(a) == canonical_key(b)


_CLAW_KEY = canonical_key(claw())
_CRICKET_KEY = canonical_key(cricket())


def _has_induced(g: Graph, size: int, key) -> bool:
    if g.n < size:
        return False
    return any(
        canonical_key(induced_subgraph(g, sub)) == key
        for sub in combinations(range(g.n), size)
    )


def has_induced_claw(g: Graph) -> bool:
    """True when some 4 vertices induce a star with 3 leaves."""
    return _has_induced(g, 4, _CLAW_KEY)


def has_induced_cricket(g: Graph) -> bool:
    """True when some 5 vertices induce the cricket pattern."""
    return _has_induced(g, 5, _CRICKET_KEY)


def has_induced_subgraph(g: Graph, pattern: Graph) -> bool:
    """True when some vertex subset of g induces a graph isomorphic to the pattern."""
    return _has_induced(g, pattern.n, canonical_key(pattern))


def _complement_is_cycle(h: Graph) -> bool:
    if h.n < 3:
        return False
    c = complement(h)
    if any(c.degree(v) != 2 for v in range(c.n)):
        return False
    # connected 2-regular graph is a single cycle
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in range(c.n):
            if (c._masks[v] >> u) & 1 and u not in seen:
                seen.add(u)
                frontier.append(u)
    return len(seen) == c.n


def min_induced_anticycle(g: Graph):
    """Smallest l >= 5 such that some l vertices induce an anticycle, else None."""
    for l in range(5, g.n + 1):
        for sub in combinations(range(g.n), l):
            if _complement_is_cycle(induced_subgraph(g, sub)):
                return l
    return None


# -- constructions -----------------------------------------------------------------


def s_suspension(g: Graph, s) -> Graph:
    """Add one vertex z = n adjacent to every vertex outside the independent set s."""
    ss = frozenset(s)
    if not is_independent_set(g, ss):
        raise ValueError("suspension set must be independent")
    if len(ss) == g.n:
        raise ValueError("suspension over the whole vertex set would isolate the new vertex")
    z = g.n
    new_edges = set(g.edges)
    new_edges.update((v, z) for v in range(g.n) if v not in ss)
    return Graph(g.n + 1, new_edges)


def one_vertex_extensions(g: Graph):
    """All 2^n - 1 graphs adding one vertex z = n with a nonempty neighborhood in g."""
    out = []
    for mask in range(1, 1 << g.n):
        extra = [(v, g.n) for v in range(g.n) if (mask >> v) & 1]
        out.append(Graph(g.n + 1, set(g.edges) | set(extra)))
    return out


def independent_sets(g: Graph):
    """All independent sets of g as sorted tuples, smallest first."""
    if g.n > 20:
        raise ValueError("independent-set enumeration is desk scale only (n <= 20)")
    out = []
    for size in range(g.n + 1):
        for sub in combinations(range(g.n), size):
            if is_independent_set(g, sub):
                out.append(tuple(sub))
    return out


def minimal_vertex_covers(g: Graph):
    """All minimal vertex covers (complements of the maximal independent sets)."""
    indep = [set(s) for s in independent_sets(g)]
    vertices = set(range(g.n))
    covers = []
    for s in indep:
        if any(s < t for t in indep):
            continue
        covers.append(tuple(sorted(vertices - s)))
    return sorted(covers)
