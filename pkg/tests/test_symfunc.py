from fractions import Fraction

import pytest
from hypothesis import given

from conftest import graphs
from lapforge.charpoly import charpoly
from lapforge.errors import PreconditionError
from lapforge.graph import WeightedGraph
from lapforge.poly import RatPoly
from lapforge.symfunc import (
    PSym,
    chromatic_polynomial,
    colouring_expansion,
    csf,
    phi,
    psym_expansion,
    stable_partition_types,
)
from oracles import subset_csf

K3 = WeightedGraph({i: 1 for i in range(3)}, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def test_frozen_values():
    # frozen from the edge-subset expansion oracle
    assert csf(WeightedGraph({0: 1, 1: 1}, [(0, 1, 1)])) == PSym({(1, 1): 1, (2,): -1})
    assert csf(K3) == PSym({(1, 1, 1): 1, (2, 1): -3, (3,): 2})
    P4 = WeightedGraph({i: 1 for i in range(4)}, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
    assert csf(P4) == PSym({(1, 1, 1, 1): 1, (2, 1, 1): -3, (2, 2): 1, (3, 1): 2, (4,): -1})
    multi = WeightedGraph({0: 2, 1: 1, 2: 3}, [(0, 1, 1), (0, 1, 1), (1, 2, 1)])
    assert csf(multi) == PSym({(3, 2, 1): 1, (3, 3): -1, (4, 2): -1, (6,): 1})


def test_psym_algebra():
    a = PSym.p(2, 1)
    assert a * PSym.p(1) == PSym.p(2, 1, 1)
    assert (a - a).is_zero()
    assert repr(PSym.p(1) * 3) == "PSym(3*p[1])"
    assert PSym({(1, 2): 1}) == PSym.p(2, 1)


def test_forest_bridge_and_negative_control():
    F = WeightedGraph({0: 2, 1: 1, 2: 3, 3: 1}, [(0, 1, 1), (1, 2, 1)])
    assert phi(csf(F)) == charpoly(F)
    assert phi(csf(K3)) == RatPoly([0, 6, -6, 1])
    assert phi(csf(K3)) != charpoly(K3)


def test_rejects_non_unit_edges_and_fractions():
    with pytest.raises(PreconditionError):
        csf(WeightedGraph({0: 1, 1: 1}, [(0, 1, 2)]))
    with pytest.raises(PreconditionError):
        csf(WeightedGraph({0: Fraction(1, 2)}))


def test_loop_kills():
    assert csf(WeightedGraph({0: 1}, [(0, 0, 1)])).is_zero()


@given(graphs(max_n=5, max_m=6, integer_vertices=True, unit_edges=True))
def test_matches_subset_expansion(G):
    assert csf(G) == subset_csf(G)


@given(graphs(max_n=4, max_m=5, integer_vertices=True, unit_edges=True))
def test_matches_colouring_definition(G):
    N = G.n
    assert psym_expansion(csf(G), N) == {k: Fraction(v) for k, v in colouring_expansion(G, N).items()}


@given(graphs(max_n=5, max_m=6, integer_vertices=True, unit_edges=True))
def test_homogeneous(G):
    assert csf(G).is_homogeneous(int(G.total_vertex_weight()))


@given(graphs(max_n=6, max_m=5, integer_vertices=True, unit_edges=True))
def test_chromatic_polynomial_counts_colourings(G):
    if G.loops():
        return
    P = chromatic_polynomial(csf(G))
    for k in range(1, 4):
        total = sum(colouring_expansion(G, k).values())
        assert P(k) == total


@given(graphs(max_n=5, max_m=5, integer_vertices=True, unit_edges=True))
def test_stable_partitions_count_colourings(G):
    # a colouring with N colours is a stable partition with b blocks and an injective block colouring
    for N in (1, 2, 3):
        types = stable_partition_types(G, N)
        falling = lambda b: 1 if b == 0 else falling(b - 1) * (N - b + 1)
        assert sum(c * falling(len(a)) for a, c in types.items()) == sum(colouring_expansion(G, N).values())


def test_forest_bridge_on_weighted_forests():
    for weights in ([1, 1, 1], [2, 3, 1], [4, 4, 2]):
        F = WeightedGraph(dict(enumerate(weights)), [(0, 1, 1), (1, 2, 1)])
        assert phi(csf(F)) == charpoly(F)
