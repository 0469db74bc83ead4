"""Network reductions: star-mesh, Kron reduction and addition-reduction."""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from itertools import combinations

from lapforge.charpoly import charpoly
from lapforge.errors import ConsistencyError, PreconditionError
from lapforge.fields import combinatorial_laplacian
from lapforge.graph import VertexLike, WeightedGraph, as_fraction, as_vertex
from lapforge.linalg import matmul, solve
from lapforge.poly import RatPoly


def _reducible(G: WeightedGraph, v) -> tuple:
    vid = as_vertex(v)
    G.weight(vid)
    incident = G.incident(vid)
    if any(e.is_loop for e in incident):
        raise PreconditionError(f"vertex {vid} has a loop")
    if not incident:
        raise PreconditionError(f"vertex {vid} is isolated")
    return vid, incident


def star_mesh(G: WeightedGraph, v: VertexLike) -> WeightedGraph:
    """Remove ``v`` and join each pair of its distinct neighbours.

    Each pair of incident edges ``u1 v``, ``u2 v`` with ``u1 != u2`` yields a
    new edge of weight ``ε(u1 v) ε(u2 v) / d(v)``.
    """
    vid, incident = _reducible(G, v)
    d = G.degree(vid)
    kept = [(e.u, e.v, e.weight) for e in G.edges if vid not in (e.u, e.v)]
    new = []
    for e1, e2 in combinations(incident, 2):
        u1, u2 = e1.other(vid), e2.other(vid)
        if u1 != u2:
            new.append((u1, u2, e1.weight * e2.weight / d))
    weights = {u: w for u, w in G.vertex_weights().items() if u != vid}
    return WeightedGraph(weights, kept + new)


def schur_complement(G: WeightedGraph, S: Iterable[VertexLike]) -> tuple[list, list]:
    """``L^Ŝ - B D⁻¹ C`` of the edge-weighted Laplacian; returns (kept vertices, matrix)."""
    drop = {as_vertex(v) for v in S}
    for v in drop:
        G.weight(v)
    for comp in G.components():
        if set(comp) <= drop:
            raise PreconditionError(f"S contains the whole component {list(comp)}")
    L = combinatorial_laplacian(G)
    keep = [i for i, v in enumerate(G.vertices) if v not in drop]
    gone = [i for i, v in enumerate(G.vertices) if v in drop]
    A = [[L[i][j] for j in keep] for i in keep]
    if not gone:
        return [G.vertices[i] for i in keep], A
    B = [[L[i][j] for j in gone] for i in keep]
    C = [[L[i][j] for j in keep] for i in gone]
    D = [[L[i][j] for j in gone] for i in gone]
    try:
        X = solve(D, C)
    except ZeroDivisionError:
        raise ConsistencyError("eliminated block is singular") from None
    BX = matmul(B, X)
    return [G.vertices[i] for i in keep], [[A[r][c] - BX[r][c] for c in range(len(keep))] for r in range(len(keep))]


def kron_reduce(G: WeightedGraph, S: Iterable[VertexLike]) -> WeightedGraph:
    """Kron reduction over ``S``: one edge per nonzero off-diagonal of the Schur complement."""
    keep, M = schur_complement(G, S)
    edges = []
    for i in range(len(keep)):
        for j in range(i + 1, len(keep)):
            w = -M[i][j]
            if w < 0:
                raise ConsistencyError("Schur complement has a positive off-diagonal entry")
            if w:
                edges.append((keep[i], keep[j], w))
    return WeightedGraph({v: G.weight(v) for v in keep}, edges)


def iterated_star_mesh(G: WeightedGraph, order: Iterable[VertexLike]) -> WeightedGraph:
    H = G
    for v in order:
        H = star_mesh(H, v)
    return H


def addition_reduction_residual(G: WeightedGraph, v: VertexLike, eta) -> RatPoly:
    """``P(G) - [υ/(υ+η) P(G, υ+η) - η/(υ+η) d(v) P(G/v)]``; zero when the identity holds."""
    vid, _ = _reducible(G, v)
    eta = as_fraction(eta)
    if eta <= 0:
        raise PreconditionError("η must be positive")
    u = G.weight(vid)
    raised = G.with_vertex_weights({vid: u + eta})
    rhs = charpoly(raised) * (u / (u + eta)) - charpoly(star_mesh(G, vid)) * (eta / (u + eta) * G.degree(vid))
    return charpoly(G) - rhs


def neighbour_weight_sums(G: WeightedGraph, v: VertexLike) -> dict:
    """For each neighbour ``u`` of ``v``: ``ε(uv) (d(v) - ε(uv)) / d(v)``."""
    vid, incident = _reducible(G, v)
    d = G.degree(vid)
    to: dict = {}
    for e in incident:
        u = e.other(vid)
        to[u] = to.get(u, Fraction(0)) + e.weight
    return {u: w * (d - w) / d for u, w in to.items()}
