"""The scaled characteristic polynomial ``P(t) = det(t W_υ - L_ε)``.

Two independent routes are provided: exact determinants with interpolation,
and the deletion-contraction recursion.  Spanning-forest enumeration gives
the coefficients combinatorially.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from lapforge.errors import ConsistencyError, PreconditionError
from lapforge.fields import combinatorial_laplacian
from lapforge.graph import VertexLike, WeightedGraph, as_vertex, simplify
from lapforge.linalg import bareiss_det, principal_submatrix
from lapforge.poly import RatPoly

FOREST_CAP = 9


def charpoly(G: WeightedGraph) -> RatPoly:
    """Exact ``P(t)``: Bareiss determinants at ``t = 0..n``, then interpolation."""
    n = G.n
    L = combinatorial_laplacian(G)
    w = [G.weight(v) for v in G.vertices]
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        M = [[(t * w[i] if i == j else 0) - L[i][j] for j in range(n)] for i in range(n)]
        ys.append(bareiss_det(M))
    return RatPoly.interpolate(xs, ys)


# -- deletion-contraction --------------------------------------------------------


def charpoly_dc(G: WeightedGraph) -> RatPoly:
    """``P(t)`` by ``P(G) = P(G - e) - ε(e) P(G / e)``.

    Each branch is simplified first (loops dropped, parallel edges merged),
    then the least remaining edge is deleted and contracted.  The base case
    is an edgeless graph, whose polynomial is ``(∏ υ) tⁿ``.
    """
    S = simplify(G)
    weights = [S.weight(v) for v in S.vertices]
    edges = {(S.index(e.u), S.index(e.v)): e.weight for e in S.edges}
    return RatPoly(_dc(weights, edges))


def _dc(weights: list[Fraction], edges: dict[tuple[int, int], Fraction]) -> list[Fraction]:
    # vertices are positions 0..len(weights)-1; edges keyed (i, j) with i < j
    if not edges:
        prod = Fraction(1)
        for w in weights:
            prod *= w
        return [Fraction(0)] * len(weights) + [prod]
    (i, j) = min(edges)
    eps = edges[(i, j)]

    deleted = dict(edges)
    del deleted[(i, j)]
    p_del = _dc(weights, deleted)

    # contract j into i, renumber vertices above j, merge parallels
    def image(x: int) -> int:
        if x == j:
            return i
        return x - 1 if x > j else x

    merged: dict[tuple[int, int], Fraction] = {}
    for (a, b), w in deleted.items():
        a, b = image(a), image(b)
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        merged[key] = merged.get(key, Fraction(0)) + w
    cweights = weights[:j] + weights[j + 1:]
    cweights[i] = weights[i] + weights[j]
    p_con = _dc(cweights, merged)

    out = list(p_del)
    for k, c in enumerate(p_con):
        out[k] -= eps * c
    return out


def delcon_residual(G: WeightedGraph, eid: int) -> RatPoly:
    """``P(G) - (P(G - e) - ε(e) P(G / e))`` via the determinant route."""
    from lapforge.graph import contract_edge, delete_edge

    e = G.edge(eid)
    if e.is_loop:
        raise PreconditionError(f"edge {eid} is a loop")
    return charpoly(G) - (charpoly(delete_edge(G, eid)) - e.weight * charpoly(contract_edge(G, eid)))


# -- spanning forests -------------------------------------------------------------


@dataclass
class ForestWeightReport:
    """Per component count ``k``: ``c_k`` (summed forest weight) and the forest count."""

    n: int
    c: dict[int, Fraction] = field(default_factory=dict)
    count: dict[int, int] = field(default_factory=dict)

    def signed_poly(self) -> RatPoly:
        """``Σ (-1)^{n-k} c_k t^k``."""
        coeffs = [Fraction(0)] * (self.n + 1)
        for k, ck in self.c.items():
            coeffs[k] = ck if (self.n - k) % 2 == 0 else -ck
        return RatPoly(coeffs)


class _UnionFind:
    __slots__ = ("parent", "history")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.history: list[tuple[int, int]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.history.append((rb, rb))
        return True

    def undo(self) -> None:
        rb, old = self.history.pop()
        self.parent[rb] = old


def _enumerate_forests(n: int, edges: list[tuple[int, int, Fraction]], accept=None):
    """Yield ``(union-find, edge product, edge count)`` for every acyclic edge subset.

    ``accept(uf, a, b)`` may veto a union before it is made.
    """
    uf = _UnionFind(n)
    m = len(edges)

    def rec(k: int, prod: Fraction, size: int):
        if k == m:
            yield uf, prod, size
            return
        yield from rec(k + 1, prod, size)
        a, b, w = edges[k]
        if accept is not None and not accept(uf, a, b):
            return
        if uf.union(a, b):
            yield from rec(k + 1, prod * w, size + 1)
            uf.undo()

    yield from rec(0, Fraction(1), 0)


def forest_coefficients(G: WeightedGraph, cap: int = FOREST_CAP) -> ForestWeightReport:
    """Sum ``w(F)`` over all spanning forests, grouped by component count.

    ``w(F)`` is the product over components of (vertex-weight sum) times the
    product of the forest's edge weights.
    """
    n = G.n
    if n > cap:
        raise PreconditionError(f"forest enumeration capped at {cap} vertices, graph has {n}")
    weights = [G.weight(v) for v in G.vertices]
    edges = [(G.index(e.u), G.index(e.v), e.weight) for e in G.nonloop_edges()]
    report = ForestWeightReport(n)
    for uf, prod, size in _enumerate_forests(n, edges):
        sums: dict[int, Fraction] = {}
        for x in range(n):
            r = uf.find(x)
            sums[r] = sums.get(r, Fraction(0)) + weights[x]
        w = prod
        for s in sums.values():
            w *= s
        k = n - size
        report.c[k] = report.c.get(k, Fraction(0)) + w
        report.count[k] = report.count.get(k, 0) + 1
    return report


def rooted_minor(G: WeightedGraph, roots: Iterable[VertexLike], cap: int = FOREST_CAP) -> Fraction:
    """``det L^Ŝ`` of the edge-weighted Laplacian with the rows/columns of ``S`` removed.

    Computed by Bareiss elimination and by summing edge-weight products over
    ``S``-rooted spanning forests; the two must agree.
    """
    S = {as_vertex(v) for v in roots}
    for v in S:
        G.weight(v)
    keep = [i for i, v in enumerate(G.vertices) if v not in S]
    det = bareiss_det(principal_submatrix(combinatorial_laplacian(G), keep))

    n = G.n
    if n > cap:
        raise PreconditionError(f"forest enumeration capped at {cap} vertices, graph has {n}")
    is_root = [v in S for v in G.vertices]
    edges = [(G.index(e.u), G.index(e.v), e.weight) for e in G.nonloop_edges()]
    total = Fraction(0)
    for uf, prod, size in _enumerate_forests(n, edges):
        # n - |S| edges leave |S| trees; each must hold exactly one root
        if size != n - len(S):
            continue
        roots_seen = {uf.find(x) for x in range(n) if is_root[x]}
        if len(roots_seen) == len(S):
            total += prod
    if total != det:
        raise ConsistencyError(f"rooted minor mismatch: determinant {det}, forest sum {total}")
    return det


def spanning_tree_count(G: WeightedGraph) -> int:
    """Number of spanning trees (edge weights ignored), by brute force."""
    n = G.n
    edges = [(G.index(e.u), G.index(e.v)) for e in G.nonloop_edges()]
    count = 0
    for subset in combinations(edges, max(n - 1, 0)):
        uf = _UnionFind(n)
        if all(uf.union(a, b) for a, b in subset):
            count += 1
    return count
