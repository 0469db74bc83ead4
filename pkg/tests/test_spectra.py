from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, graphs, weights
from lapforge.errors import PreconditionError
from lapforge.graph import WeightedGraph
from lapforge.spectra import (
    bipartite_components,
    eigenpairs,
    eigenvalues,
    interlaces,
    merge_parameters,
    shifted_bounds,
    trace,
    verify_delcon_chain,
    verify_edge_deletion,
    verify_merge,
    verify_normalised_range,
    verify_quotient,
    verify_subgraph_deletion,
    verify_vertex_weight_decrease,
)
from oracles import numpy_spectrum


def test_path_spectra():
    P3 = WeightedGraph({i: 1 for i in range(3)}, [(0, 1, 1), (1, 2, 1)])
    assert np.allclose(list(eigenvalues(P3)), [0, 1, 3], atol=1e-12)
    assert np.allclose(list(eigenvalues(P3, "normalised")), [0, 1, 2], atol=1e-12)
    assert eigenvalues(P3).kernel_dimension() == 1


def test_shifted_bounds_and_interlaces():
    assert interlaces([0, 1, 3], [0.5, 2], 1)
    assert not interlaces([0, 1, 3], [1.5, 2], 1)
    with pytest.raises(PreconditionError):
        interlaces([0, 1], [0, 1, 2], 1)
    assert shifted_bounds([1.0], [0.0, 2.0], 0, 1)
    assert shifted_bounds([5.0], [0.0], None, None)


@given(graphs(max_n=6))
def test_matches_numpy_and_trace(G):
    spec = eigenvalues(G)
    assert np.allclose(list(spec), numpy_spectrum(G), atol=1e-9)
    assert abs(sum(spec) - float(trace(G))) < 1e-9
    assert spec.kernel_dimension() == len(G.components())


@given(graphs(max_n=6))
def test_combinatorial_kind_ignores_vertex_weights(G):
    ones = {v: 1 for v in G.vertices}
    assert np.allclose(list(eigenvalues(G, "combinatorial")), numpy_spectrum(G, ones), atol=1e-9)


@given(connected_graphs(max_n=6))
def test_eigenpairs_solve_the_laplacian(G):
    from lapforge.fields import laplacian_matrix

    L = np.array([[float(x) for x in row] for row in laplacian_matrix(G)])
    vals, vecs = eigenpairs(G)
    assert np.allclose(L @ vecs, vecs * vals, atol=1e-9)


@given(graphs(min_n=2, max_n=6))
def test_edge_deletion_and_delcon(G):
    for e in G.edges:
        assert verify_edge_deletion(G, e.id)
        if not e.is_loop:
            assert verify_delcon_chain(G, e.id)


@given(graphs(min_n=2, max_n=6), st.data())
def test_quotient_all_kinds(G, data):
    vs = list(G.vertices)
    slots = data.draw(st.lists(st.integers(0, 2), min_size=len(vs), max_size=len(vs)))
    blocks = [[v for v, s in zip(vs, slots) if s == k] for k in range(3)]
    blocks = [b for b in blocks if b]
    assert verify_quotient(G, blocks, "weighted")
    assert verify_quotient(G, blocks, "combinatorial")
    if not G.isolated_vertices():
        assert verify_quotient(G, blocks, "normalised")


@given(graphs(max_n=5), st.data())
def test_merge_bounds(G, data):
    fresh = max(G.labels(), default=-1) + 1
    pool = list(G.vertices) + [(fresh,), (fresh + 1,)]
    verts = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4, unique=True))
    edges = data.draw(st.lists(st.tuples(st.sampled_from(verts), st.sampled_from(verts), weights), max_size=4))
    H = WeightedGraph({v: data.draw(weights) for v in verts}, edges)
    assert verify_merge(G, H)
    p = merge_parameters(G, H)
    assert p["s"] == H.n and p["k"] == sum(1 for v in verts if not G.has_vertex(v))


@given(graphs(min_n=2, max_n=6, max_m=8), st.data())
def test_subgraph_deletion(G, data):
    if not G.m:
        return
    R = data.draw(st.lists(st.integers(0, G.m - 1), min_size=1, unique=True))
    isolated = list(G.delete_edges(R).isolated_vertices())
    S = [v for v in isolated if data.draw(st.booleans())]
    if len(S) < G.n:
        assert verify_subgraph_deletion(G, R, S, "weighted")
        assert verify_subgraph_deletion(G, R, S, "combinatorial")
    if not G.isolated_vertices() and len(isolated) < G.n:
        assert verify_subgraph_deletion(G, R, kind="normalised")


@given(graphs(max_n=6), st.data())
def test_vertex_weight_decrease(G, data):
    v = data.draw(st.sampled_from(G.vertices))
    w = G.weight(v) * data.draw(st.sampled_from([Fraction(1, 2), Fraction(1, 7), Fraction(9, 10)]))
    assert verify_vertex_weight_decrease(G, v, w)
    with pytest.raises(PreconditionError):
        verify_vertex_weight_decrease(G, v, G.weight(v))


@given(graphs(max_n=7))
def test_normalised_range(G):
    if G.isolated_vertices():
        return
    assert verify_normalised_range(G)


def test_bipartite_components():
    G = WeightedGraph({i: 1 for i in range(5)}, [(0, 1, 1), (2, 3, 1), (3, 4, 1), (2, 4, 1)])
    assert bipartite_components(G) == 1
    spec = eigenvalues(G, "normalised")
    assert spec.multiplicity(2.0) == 1
