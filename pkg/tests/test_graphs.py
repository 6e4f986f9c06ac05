"""Graph invariants against brute-force oracles and frozen small cases."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeideals.graphs import (
    Graph,
    anticycle,
    canonical_graph,
    canonical_key,
    claw,
    complement,
    complete,
    cricket,
    cycle,
    has_induced_claw,
    has_induced_cricket,
    independent_sets,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    is_gap_free,
    is_independent_set,
    is_isomorphic,
    is_vertex_cover,
    matching_number,
    min_induced_anticycle,
    minimal_vertex_covers,
    one_vertex_extensions,
    path,
    s_suspension,
)

TWO_K2 = Graph(4, [(0, 1), (2, 3)])


def graph_from_mask(n, mask):
    pairs = list(combinations(range(n), 2))
    return Graph(n, (pairs[i] for i in range(len(pairs)) if (mask >> i) & 1))


def random_graph(rnd, n, p=0.5):
    return Graph(n, (e for e in combinations(range(n), 2) if rnd.random() < p))


# -- brute-force oracles -------------------------------------------------------


def brute_matching(g):
    edges = sorted(g.edges)
    best = 0
    for r in range(len(edges), 0, -1):
        for sub in combinations(edges, r):
            seen = set()
            ok = True
            for e in sub:
                if e[0] in seen or e[1] in seen:
                    ok = False
                    break
                seen.update(e)
            if ok:
                return r
    return best


def brute_induced_matching(g):
    edges = sorted(g.edges)
    best = 0
    for r in range(len(edges), 0, -1):
        for sub in combinations(edges, r):
            seen = set()
            ok = True
            for e in sub:
                if e[0] in seen or e[1] in seen:
                    ok = False
                    break
                seen.update(e)
            if not ok:
                continue
            if any(
                set(e) & set(a) and set(e) & set(b)
                for e in edges
                for a, b in combinations(sub, 2)
            ):
                continue
            return r
    return best


def _induces_cycle(g, sub):
    h = induced_subgraph(g, sub)
    if any(h.degree(v) != 2 for v in range(h.n)):
        return False
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in h.neighbors(v):
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return len(seen) == h.n


def brute_chordal(g):
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            if _induces_cycle(g, sub):
                return False
    return True


def has_gap_pair(g):
    edges = sorted(g.edges)
    for e1, e2 in combinations(edges, 2):
        if set(e1) & set(e2):
            continue
        if not any(set(e) & set(e1) and set(e) & set(e2) for e in edges):
            return True
    return False


# -- construction and elementary views ----------------------------------------


def test_graph_rejects_loops_and_bad_indices():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_complement_examples():
    assert is_isomorphic(complement(cycle(5)), cycle(5))
    assert complement(Graph(2, [(0, 1)])).edges == frozenset()
    assert complement(cycle(4)) == Graph(4, [(0, 2), (1, 3)])


def test_complement_involution():
    rnd = random.Random(7)
    for _ in range(25):
        g = random_graph(rnd, rnd.randint(1, 7))
        assert complement(complement(g)) == g


def test_induced_subgraph_examples():
    assert is_isomorphic(induced_subgraph(cycle(5), [0, 1, 2, 3]), path(4))
    g = random_graph(random.Random(1), 6)
    assert induced_subgraph(g, range(6)) == g
    assert induced_subgraph(cycle(4), [0, 2]).edges == frozenset()
    with pytest.raises(ValueError):
        induced_subgraph(cycle(4), [0, 5])
    with pytest.raises(ValueError):
        induced_subgraph(cycle(4), [0, 0, 1])


def test_neighborhood_and_degree():
    star = claw()
    assert star.neighbors(0) == frozenset({1, 2, 3})
    assert star.degree(0) == 3
    c5 = cycle(5)
    assert c5.neighbors(0) == frozenset({1, 4})
    assert c5.degree(0) == 2
    lonely = Graph(1)
    assert lonely.neighbors(0) == frozenset()
    assert lonely.degree(0) == 0
    assert Graph(3, [(0, 1)]).isolated_vertices() == (2,)


def test_chordal_examples():
    assert is_chordal(cycle(3))
    assert not is_chordal(cycle(4))
    assert not is_chordal(complement(cycle(5)))
    assert is_chordal(complete(6))
    assert is_chordal(path(6))


def test_chordal_against_brute_force_small():
    for n in range(1, 6):
        pairs = n * (n - 1) // 2
        for mask in range(1 << pairs):
            g = graph_from_mask(n, mask)
            assert is_chordal(g) == brute_chordal(g), g


def test_chordal_against_brute_force_random_n7():
    rnd = random.Random(42)
    for _ in range(200):
        g = random_graph(rnd, 7, rnd.choice([0.2, 0.5, 0.8]))
        assert is_chordal(g) == brute_chordal(g), g


def test_chordal_against_brute_force_all_classes_n7():
    # chordality is isomorphism invariant, so classes cover all graphs n <= 7
    from edgeideals.enumeration import enumerate_graphs

    for g in enumerate_graphs(7):
        assert is_chordal(g) == brute_chordal(g), g


def test_matching_examples():
    assert matching_number(Graph(2, [(0, 1)])) == 1
    assert matching_number(cycle(4)) == 2
    assert matching_number(cycle(5)) == brute_matching(cycle(5)) == 2


def test_induced_matching_examples():
    assert induced_matching_number(TWO_K2) == 2
    assert induced_matching_number(cycle(5)) == brute_induced_matching(cycle(5)) == 1
    assert induced_matching_number(path(5)) == brute_induced_matching(path(5)) == 2
    with pytest.raises(ValueError):
        induced_matching_number(Graph(3))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=(1 << 15) - 1))
def test_matching_invariants_exhaustive_oracle(mask):
    g = graph_from_mask(6, mask)
    m = matching_number(g)
    assert m == brute_matching(g)
    if g.edges:
        im = induced_matching_number(g)
        assert im == brute_induced_matching(g)
        assert im <= m


def test_gap_free_examples():
    assert not is_gap_free(TWO_K2)
    assert is_gap_free(cycle(4))
    assert is_gap_free(anticycle(5))


def test_gap_free_matches_direct_pair_search():
    for n in range(2, 6):
        pairs = n * (n - 1) // 2
        for mask in range(1, 1 << pairs):
            g = graph_from_mask(n, mask)
            if not g.edges:
                continue
            assert is_gap_free(g) == (not has_gap_pair(g)), g


def test_claw_and_cricket_patterns():
    assert has_induced_claw(cricket())
    assert has_induced_cricket(cricket())
    assert not has_induced_cricket(anticycle(5))
    assert has_induced_claw(claw())
    assert not has_induced_claw(cycle(5))


def test_generic_induced_subgraph_search():
    from edgeideals.graphs import has_induced_subgraph

    assert has_induced_subgraph(cycle(6), path(4))
    assert has_induced_subgraph(cricket(), claw())
    assert not has_induced_subgraph(complete(5), TWO_K2)
    assert has_induced_subgraph(anticycle(6), anticycle(6))
    assert not has_induced_subgraph(anticycle(6), anticycle(5))


def test_every_cricket_bearing_graph_has_a_claw():
    rnd = random.Random(3)
    hits = 0
    for _ in range(300):
        g = random_graph(rnd, rnd.randint(5, 7), rnd.choice([0.3, 0.5]))
        if has_induced_cricket(g):
            hits += 1
            assert has_induced_claw(g)
    assert hits > 0


def test_independent_and_cover_examples():
    c4 = cycle(4)
    assert is_independent_set(c4, {0, 2})
    assert not is_independent_set(c4, {0, 1})
    assert not is_vertex_cover(c4, {0, 1})
    assert is_vertex_cover(c4, range(4))
    with pytest.raises(ValueError):
        is_independent_set(c4, {9})


def test_s_suspension_examples():
    star = s_suspension(path(3), {0, 2})
    assert star == Graph(4, [(0, 1), (1, 2), (1, 3)])
    cone = s_suspension(cycle(5), frozenset())
    assert cone.neighbors(5) == frozenset(range(5))
    with pytest.raises(ValueError):
        s_suspension(cycle(4), {0, 1})
    with pytest.raises(ValueError):
        s_suspension(Graph(2), {0, 1})


def test_s_suspension_restricts_to_original():
    rnd = random.Random(11)
    for _ in range(40):
        g = random_graph(rnd, rnd.randint(2, 6))
        sets = [s for s in independent_sets(g) if len(s) < g.n]
        s = rnd.choice(sets)
        assert induced_subgraph(s_suspension(g, s), range(g.n)) == g


def test_one_vertex_extensions():
    k2 = Graph(2, [(0, 1)])
    exts = one_vertex_extensions(k2)
    assert len(exts) == 3
    exts3 = one_vertex_extensions(path(3))
    assert len(exts3) == 7
    for ext in exts3:
        assert induced_subgraph(ext, range(3)) == path(3)
        assert ext.degree(3) > 0


def test_min_induced_anticycle():
    assert min_induced_anticycle(anticycle(5)) == 5
    assert min_induced_anticycle(cycle(4)) is None
    assert min_induced_anticycle(anticycle(6)) == 6
    assert min_induced_anticycle(complete(6)) is None


def test_builders():
    assert cycle(4).edge_count == 4
    assert is_isomorphic(anticycle(5), cycle(5))
    assert anticycle(4) == Graph(4, [(0, 2), (1, 3)])
    assert path(1).edge_count == 0
    assert complete(4).edge_count == 6
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        anticycle(2)


def test_minimal_vertex_covers():
    assert minimal_vertex_covers(cycle(4)) == [(0, 2), (1, 3)]
    assert minimal_vertex_covers(path(4)) == [(0, 2), (1, 2), (1, 3)]
    for cover in minimal_vertex_covers(cycle(5)):
        assert is_vertex_cover(cycle(5), cover)
        assert len(cover) == 3


# -- canonical forms -------------------------------------------------------------


def test_canonical_key_is_isomorphism_invariant():
    rnd = random.Random(5)
    for _ in range(60):
        n = rnd.randint(1, 7)
        g = random_graph(rnd, n)
        perm = list(range(n))
        rnd.shuffle(perm)
        h = Graph(n, ((perm[u], perm[v]) for u, v in g.edges))
        assert canonical_key(g) == canonical_key(h)
        assert is_isomorphic(g, h)


def test_canonical_graph_is_a_fixed_point():
    rnd = random.Random(6)
    for _ in range(30):
        g = random_graph(rnd, rnd.randint(1, 7))
        cg = canonical_graph(g)
        assert canonical_graph(cg) == cg
        assert is_isomorphic(g, cg)


def test_non_isomorphic_graphs_have_distinct_keys():
    assert canonical_key(cycle(6)) != canonical_key(path(6))
    assert canonical_key(TWO_K2) != canonical_key(path(4))
    assert not is_isomorphic(cycle(6), complete(6))
