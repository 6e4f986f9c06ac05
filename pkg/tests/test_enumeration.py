"""Exhaustive family generation: counts and canonicality."""

import random
from itertools import combinations

import pytest

from edgeideals.enumeration import enumerate_graphs, graphs_on
from edgeideals.graphs import Graph, canonical_key

# isomorphism class counts for simple graphs on n labeled-free vertices
COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_class_counts():
    for n in range(0, 7):
        assert len(graphs_on(n)) == COUNTS[n], n


def test_representatives_are_canonical_and_distinct():
    for n in range(1, 6):
        reps = graphs_on(n)
        keys = {canonical_key(g) for g in reps}
        assert len(keys) == len(reps)
        for g in reps:
            assert g.n == n


def test_every_labeled_graph_has_a_representative():
    pairs = list(combinations(range(4), 2))
    keys = {canonical_key(g) for g in graphs_on(4)}
    for mask in range(1 << 6):
        g = Graph(4, (pairs[i] for i in range(6) if (mask >> i) & 1))
        assert canonical_key(g) in keys


def test_enumerate_graphs_filters():
    fam = enumerate_graphs(4, min_n=2, require_edge=True)
    assert all(g.edges for g in fam)
    assert all(2 <= g.n <= 4 for g in fam)
    assert len(fam) == (2 - 1) + (4 - 1) + (11 - 1)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        graphs_on(9)
