"""Discrete vector calculus on weighted graphs.

Scalar fields map vertex ids to rationals.  Vector fields map edge ids to the
coefficient of the unit vector along the edge's canonical orientation
(smaller vertex id towards larger).  Loops carry the constant coefficient 0
and never appear in curves or bases.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from lapforge.errors import PreconditionError
from lapforge.graph import Edge, VertexId, VertexLike, WeightedGraph, as_fraction, as_vertex

ScalarField = dict[VertexId, Fraction]
VectorField = dict[int, Fraction]
LaplacianKind = Literal["weighted", "combinatorial", "normalised"]
KINDS: tuple[str, ...] = ("weighted", "combinatorial", "normalised")


@dataclass(frozen=True)
class Curve:
    """A walk from ``start``; each step is ``(edge id, +1 | -1)``.

    ``+1`` traverses the edge along its canonical orientation.
    """

    start: VertexId
    steps: tuple[tuple[int, int], ...] = ()

    def end(self, G: WeightedGraph) -> VertexId:
        return walk_vertices(G, self)[-1]

    def is_closed(self, G: WeightedGraph) -> bool:
        return self.end(G) == self.start


def walk_vertices(G: WeightedGraph, c: Curve) -> list[VertexId]:
    """Vertex sequence visited by ``c``; raises if the steps do not chain."""
    here = as_vertex(c.start)
    G.weight(here)
    seq = [here]
    for eid, direction in c.steps:
        e = G.edge(eid)
        if e.is_loop:
            raise PreconditionError(f"curve step {eid} is a loop")
        if direction == 1:
            tail, head = e.u, e.v
        elif direction == -1:
            tail, head = e.v, e.u
        else:
            raise PreconditionError(f"direction must be +1 or -1, got {direction!r}")
        if tail != here:
            raise PreconditionError(f"curve is broken at edge {eid}: expected tail {here}")
        here = head
        seq.append(here)
    return seq


# -- field construction and validation --------------------------------------


def scalar_field(G: WeightedGraph, values: Mapping[VertexLike, object]) -> ScalarField:
    f = {as_vertex(v): as_fraction(x) for v, x in values.items()}
    _check_scalar(G, f)
    return f


def indicator(G: WeightedGraph, subset: Iterable[VertexLike]) -> ScalarField:
    """The characteristic function ``1_S``."""
    members = {as_vertex(v) for v in subset}
    for v in members:
        G.weight(v)
    return {v: Fraction(int(v in members)) for v in G.vertices}


def constant(G: WeightedGraph, c: object = 1) -> ScalarField:
    value = as_fraction(c)
    return {v: value for v in G.vertices}


def vector_field(G: WeightedGraph, values: Mapping[int, object]) -> VectorField:
    F = {int(k): as_fraction(x) for k, x in values.items()}
    for e in G.edges:
        F.setdefault(e.id, Fraction(0))
    _check_vector(G, F)
    return F


def _check_scalar(G: WeightedGraph, f: Mapping[VertexId, Fraction]) -> None:
    if set(f) != set(G.vertices):
        raise PreconditionError("scalar field domain does not match the vertex set")


def _check_vector(G: WeightedGraph, F: Mapping[int, Fraction]) -> None:
    if set(F) != {e.id for e in G.edges}:
        raise PreconditionError("vector field domain does not match the edge set")
    for e in G.edges:
        if e.is_loop and F[e.id] != 0:
            raise PreconditionError(f"vector field is nonzero on loop {e.id}")


# -- inner products -----------------------------------------------------------


def scalar_inner(G: WeightedGraph, f: Mapping[VertexId, Fraction], g: Mapping[VertexId, Fraction]) -> Fraction:
    """``<f, g>`` in L²(V, υ)."""
    _check_scalar(G, f)
    _check_scalar(G, g)
    return sum((f[v] * g[v] * G.weight(v) for v in G.vertices), Fraction(0))


def vector_inner(G: WeightedGraph, F: Mapping[int, Fraction], H: Mapping[int, Fraction]) -> Fraction:
    """``<F, H>`` in L²(E, ε)."""
    _check_vector(G, F)
    _check_vector(G, H)
    return sum((F[e.id] * H[e.id] * e.weight for e in G.edges), Fraction(0))


# -- gradient and divergence ---------------------------------------------------


def gradient(G: WeightedGraph, f: Mapping[VertexId, Fraction]) -> VectorField:
    """``∇f(uv) = f(v) - f(u)`` along the canonical orientation ``u -> v``."""
    _check_scalar(G, f)
    return {e.id: (Fraction(0) if e.is_loop else f[e.v] - f[e.u]) for e in G.edges}


def divergence(G: WeightedGraph, F: Mapping[int, Fraction]) -> ScalarField:
    """Net inflow per unit vertex weight (the negative divergence ``∂F``)."""
    _check_vector(G, F)
    out = {v: Fraction(0) for v in G.vertices}
    for e in G.edges:
        if e.is_loop:
            continue
        flow = e.weight * F[e.id]
        out[e.v] += flow
        out[e.u] -= flow
    return {v: out[v] / G.weight(v) for v in G.vertices}


# -- matrices -----------------------------------------------------------------


def measure(G: WeightedGraph, kind: str) -> dict[VertexId, Fraction]:
    """Vertex measure used by a Laplacian kind."""
    if kind == "weighted":
        return G.vertex_weights()
    if kind == "combinatorial":
        return {v: Fraction(1) for v in G.vertices}
    if kind == "normalised":
        d = {v: G.degree(v) for v in G.vertices}
        isolated = [v for v, x in d.items() if x == 0]
        if isolated:
            raise PreconditionError(f"normalised Laplacian undefined: isolated vertices {isolated}")
        return d
    raise PreconditionError(f"unknown Laplacian kind {kind!r}")


def combinatorial_laplacian(G: WeightedGraph) -> list[list[Fraction]]:
    """``D - A`` in vertex order; loops cancel and are ignored."""
    n = G.n
    L = [[Fraction(0)] * n for _ in range(n)]
    for e in G.edges:
        if e.is_loop:
            continue
        i, j = G.index(e.u), G.index(e.v)
        L[i][i] += e.weight
        L[j][j] += e.weight
        L[i][j] -= e.weight
        L[j][i] -= e.weight
    return L


def laplacian_matrix(G: WeightedGraph, kind: str = "weighted") -> list[list[Fraction]]:
    """Matrix of the Laplacian in the basis of vertex indicators.

    ``weighted`` is ``W⁻¹(D - A)``; ``combinatorial`` ignores vertex weights;
    ``normalised`` uses the degree as vertex measure.
    """
    mu = measure(G, kind)
    L = combinatorial_laplacian(G)
    return [[x / mu[v] for x in row] for v, row in zip(G.vertices, L)]


def edge_laplacian_matrix(G: WeightedGraph) -> list[list[Fraction]]:
    """Matrix of ``∇∂`` over nonloop edges, basis ``1`` along canonical orientations.

    Column ``j`` holds the coefficients of ``∇∂1_{e_j}``.
    """
    edges = G.nonloop_edges()
    K = [[Fraction(0)] * len(edges) for _ in edges]
    for j, ej in enumerate(edges):
        # ∂1_{e_j} is supported on the two endpoints of e_j
        dv = {ej.v: ej.weight / G.weight(ej.v), ej.u: -ej.weight / G.weight(ej.u)}
        for i, ei in enumerate(edges):
            K[i][j] = dv.get(ei.v, Fraction(0)) - dv.get(ei.u, Fraction(0))
    return K


def apply_matrix(G: WeightedGraph, M: Sequence[Sequence[Fraction]], f: Mapping[VertexId, Fraction]) -> ScalarField:
    vs = G.vertices
    return {vs[i]: sum((M[i][j] * f[vs[j]] for j in range(len(vs))), Fraction(0)) for i in range(len(vs))}


def laplacian_apply(G: WeightedGraph, f: Mapping[VertexId, Fraction]) -> ScalarField:
    return divergence(G, gradient(G, f))


# -- spanning forest, cycles and cuts -----------------------------------------------


def spanning_forest(G: WeightedGraph) -> tuple[list[Edge], dict[VertexId, tuple[VertexId, Edge] | None]]:
    """BFS forest from the smallest vertex of each component.

    Returns the tree edges and a parent map (``None`` at each root).
    """
    incident: dict[VertexId, list[Edge]] = {v: [] for v in G.vertices}
    for e in G.nonloop_edges():
        incident[e.u].append(e)
        incident[e.v].append(e)
    parent: dict[VertexId, tuple[VertexId, Edge] | None] = {}
    tree: list[Edge] = []
    for root in G.vertices:
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in incident[x]:
                y = e.other(x)
                if y not in parent:
                    parent[y] = (x, e)
                    tree.append(e)
                    queue.append(y)
    return tree, parent


def _path_to_root(parent, v: VertexId) -> list[tuple[VertexId, Edge]]:
    path = []
    while parent[v] is not None:
        p, e = parent[v]
        path.append((v, e))
        v = p
    return path


def tree_path(G: WeightedGraph, parent, a: VertexId, b: VertexId) -> list[tuple[int, int]]:
    """Steps of the forest path from ``a`` to ``b`` (same component)."""
    up_a = _path_to_root(parent, a)
    up_b = _path_to_root(parent, b)
    anc_a = [a] + [parent[v][0] for v, _ in up_a]
    anc_b = [b] + [parent[v][0] for v, _ in up_b]
    common = set(anc_a) & set(anc_b)
    steps: list[tuple[int, int]] = []
    for v, e in up_a:
        if v in common:
            break
        p = parent[v][0]
        steps.append((e.id, 1 if (e.u, e.v) == (v, p) else -1))
    down = []
    for v, e in up_b:
        if v in common:
            break
        p = parent[v][0]
        down.append((e.id, 1 if (e.u, e.v) == (p, v) else -1))
    return steps + down[::-1]


def fundamental_cycles(G: WeightedGraph) -> list[Curve]:
    """One simple closed curve per nonloop edge outside the BFS forest."""
    tree, parent = spanning_forest(G)
    tree_ids = {e.id for e in tree}
    cycles = []
    for e in G.nonloop_edges():
        if e.id in tree_ids:
            continue
        steps = [(e.id, 1)] + tree_path(G, parent, e.v, e.u)
        cycles.append(Curve(e.u, tuple(steps)))
    return cycles


def curve_indicator(G: WeightedGraph, c: Curve) -> VectorField:
    """``1_{C/ε}``: each step contributes ``±1/ε(e)`` on its edge."""
    walk_vertices(G, c)
    F = {e.id: Fraction(0) for e in G.edges}
    for eid, direction in c.steps:
        F[eid] += Fraction(direction) / G.edge(eid).weight
    return F


def fundamental_cuts(G: WeightedGraph) -> list[VectorField]:
    """``∇1_S`` for the far side ``S`` of each forest edge."""
    tree, parent = spanning_forest(G)
    children: dict[VertexId, list[VertexId]] = {v: [] for v in G.vertices}
    for v, pe in parent.items():
        if pe is not None:
            children[pe[0]].append(v)
    cuts = []
    for e in tree:
        child = e.v if parent[e.v] is not None and parent[e.v][1].id == e.id else e.u
        side, stack = set(), [child]
        while stack:
            x = stack.pop()
            side.add(x)
            stack.extend(children[x])
        cuts.append(gradient(G, indicator(G, side)))
    return cuts


def cycle_cut_bases(G: WeightedGraph) -> tuple[list[VectorField], list[VectorField]]:
    """Fundamental cycle and cut bases of ``Cyc(E, ε)`` and ``Cut(E, ε)``."""
    return [curve_indicator(G, c) for c in fundamental_cycles(G)], fundamental_cuts(G)


# -- integration -----------------------------------------------------------------


def line_integral(G: WeightedGraph, F: Mapping[int, Fraction], c: Curve) -> Fraction:
    """``∫_{C/ε} F · dε``: the signed sum of F along the steps."""
    _check_vector(G, F)
    walk_vertices(G, c)
    return sum((direction * F[eid] for eid, direction in c.steps), Fraction(0))


def integrate(G: WeightedGraph, f: Mapping[VertexId, Fraction], subset: Iterable[VertexLike] | None = None) -> Fraction:
    """``∫_S f dυ`` (all of V by default)."""
    members = G.vertices if subset is None else [as_vertex(v) for v in subset]
    return sum((f[v] * G.weight(v) for v in members), Fraction(0))


def boundary_flux(G: WeightedGraph, F: Mapping[int, Fraction], subset: Iterable[VertexLike]) -> Fraction:
    """Weighted outward flow of F across the boundary of S."""
    members = {as_vertex(v) for v in subset}
    total = Fraction(0)
    for e in G.nonloop_edges():
        if e.u in members and e.v not in members:
            total += F[e.id] * e.weight
        elif e.v in members and e.u not in members:
            total -= F[e.id] * e.weight
    return total


def is_conservative(G: WeightedGraph, F: Mapping[int, Fraction]) -> bool:
    """True iff F integrates to zero around every fundamental cycle."""
    _check_vector(G, F)
    return all(line_integral(G, F, c) == 0 for c in fundamental_cycles(G))
