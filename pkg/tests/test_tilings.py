from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs
from lapforge.corpus import SplitMix64
from lapforge.errors import PreconditionError
from lapforge.graph import WeightedGraph
from lapforge.spectra import eigenvalues, shifted_bounds
from lapforge.tilings import (
    EXAMPLE_TILING,
    Rect,
    Tiling,
    guillotine_tiling,
    kirchhoff_check,
    new_vertices,
    substitute_edge,
    tiling_to_network,
)


def test_worked_example_network():
    net = tiling_to_network(EXAMPLE_TILING)
    assert net.graph.vertices == ((0,), (1,), (2,))
    assert [e.weight for e in net.graph.edges] == [Fraction(1, 2), 1, Fraction(2, 3), Fraction(3, 2), 3]
    assert sorted(e.weight for e in net.graph.edges) == [Fraction(1, 2), Fraction(2, 3), 1, Fraction(3, 2), 3]
    assert net.field == {0: 2, 1: 1, 2: 3, 3: 2, 4: 1}
    assert kirchhoff_check(net.graph, net.field, net.bottom, net.top)
    assert EXAMPLE_TILING.aspect == 2


def test_invalid_tilings():
    with pytest.raises(PreconditionError):
        Tiling(Rect(0, 0, 2, 1), (Rect(0, 0, 1, 1),))
    with pytest.raises(PreconditionError):
        Tiling(Rect(0, 0, 2, 1), (Rect(0, 0, 2, 1), Rect(1, 0, 1, 1)))
    with pytest.raises(PreconditionError):
        Rect(0, 0, 0, 1)


def test_substitute_rejects_wrong_aspect():
    G = WeightedGraph({0: 1, 1: 1}, [(0, 1, 3)])
    with pytest.raises(PreconditionError):
        substitute_edge(G, 0, EXAMPLE_TILING)
    H = substitute_edge(WeightedGraph({0: 1, 1: 1}, [(0, 1, 2)]), 0, EXAMPLE_TILING, {2: 5})
    assert H.n == 3 and H.weight(2) == 5 and H.m == 5


@given(st.integers(0, 10**9), st.integers(1, 5))
def test_random_tilings_satisfy_kirchhoff(seed, cuts):
    T = guillotine_tiling(Rect(0, 0, Fraction(5, 3), 1), SplitMix64(seed), cuts)
    net = tiling_to_network(T)
    assert kirchhoff_check(net.graph, net.field, net.bottom, net.top)


@given(connected_graphs(min_n=2, max_n=5, extra=3), st.integers(0, 10**9), st.data())
def test_substitution_interlacing(G, seed, data):
    e = data.draw(st.sampled_from(G.nonloop_edges()))
    rng = SplitMix64(seed)
    T = guillotine_tiling(Rect(0, 0, e.weight, 1), rng, rng.randint(1, 4))
    new = new_vertices(G, T)
    w = {v: data.draw(st.sampled_from([Fraction(1, 2), 1, 3])) for v in new}
    H = substitute_edge(G, e.id, T, w)
    assert H.n == G.n + len(new)
    assert shifted_bounds(eigenvalues(G), eigenvalues(H), 0, len(new))
