"""Immutable vertex- and edge-weighted multigraphs.

A vertex is identified by the sorted tuple of the original integer labels
that were merged into it, so contraction and quotients produce ids that are
stable across recursion branches.  Edge ids are positional and are
regenerated by every structural operation.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from lapforge.errors import PreconditionError

VertexId = tuple[int, ...]
VertexLike = Union[int, Iterable[int]]
WeightLike = Union[int, Fraction, str]

__all__ = [
    "Edge",
    "VertexId",
    "WeightedGraph",
    "as_fraction",
    "as_vertex",
    "contract_edge",
    "degree",
    "delete_edge",
    "merge",
    "quotient",
    "simplify",
]


def as_fraction(value: WeightLike) -> Fraction:
    """Convert an exact weight to a Fraction; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"inexact weight {value!r}; use int, Fraction or 'p/q'")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational weight")


def as_vertex(v: VertexLike) -> VertexId:
    if isinstance(v, int) and not isinstance(v, bool):
        return (v,)
    labels = tuple(sorted(int(x) for x in v))
    if not labels or len(set(labels)) != len(labels):
        raise PreconditionError(f"invalid vertex id {v!r}")
    return labels


@dataclass(frozen=True)
class Edge:
    """An edge with endpoints in canonical order (``u <= v``)."""

    id: int
    u: VertexId
    v: VertexId
    weight: Fraction

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: VertexId) -> VertexId:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise KeyError(x)


class WeightedGraph:
    """A finite multigraph with positive rational vertex and edge weights.

    ``vertices`` maps vertex ids (ints or label collections) to weights and
    ``edges`` is a sequence of ``(u, v, weight)`` triples; ``u == v`` is a
    loop.  Instances are immutable.
    """

    __slots__ = ("_vertices", "_vweight", "_edges", "_index", "_hash")

    def __init__(
        self,
        vertices: Mapping[VertexLike, WeightLike] | Iterable[tuple[VertexLike, WeightLike]],
        edges: Iterable[tuple[VertexLike, VertexLike, WeightLike]] = (),
    ) -> None:
        items = vertices.items() if isinstance(vertices, Mapping) else vertices
        vweight: dict[VertexId, Fraction] = {}
        seen_labels: set[int] = set()
        for raw, w in items:
            vid = as_vertex(raw)
            if vid in vweight:
                raise PreconditionError(f"duplicate vertex {vid}")
            if seen_labels.intersection(vid):
                raise PreconditionError(f"vertex {vid} overlaps another vertex id")
            seen_labels.update(vid)
            weight = as_fraction(w)
            if weight <= 0:
                raise PreconditionError(f"nonpositive weight {weight} on vertex {vid}")
            vweight[vid] = weight
        order = tuple(sorted(vweight))
        self._vertices = order
        self._vweight = {v: vweight[v] for v in order}
        self._index = {v: i for i, v in enumerate(order)}

        built = []
        for eid, (a, b, w) in enumerate(edges):
            u, v = as_vertex(a), as_vertex(b)
            for x in (u, v):
                if x not in self._vweight:
                    raise PreconditionError(f"edge endpoint {x} is not a vertex")
            weight = as_fraction(w)
            if weight <= 0:
                raise PreconditionError(f"nonpositive weight {weight} on edge {u}-{v}")
            if v < u:
                u, v = v, u
            built.append(Edge(eid, u, v, weight))
        self._edges = tuple(built)
        self._hash: int | None = None

    # -- basic queries -----------------------------------------------------

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def weight(self, v: VertexLike) -> Fraction:
        vid = as_vertex(v)
        try:
            return self._vweight[vid]
        except KeyError:
            raise PreconditionError(f"unknown vertex {vid}") from None

    def vertex_weights(self) -> dict[VertexId, Fraction]:
        return dict(self._vweight)

    def edge(self, eid: int) -> Edge:
        if not isinstance(eid, int) or not 0 <= eid < len(self._edges):
            raise PreconditionError(f"unknown edge id {eid!r}")
        return self._edges[eid]

    def index(self, v: VertexLike) -> int:
        vid = as_vertex(v)
        try:
            return self._index[vid]
        except KeyError:
            raise PreconditionError(f"unknown vertex {vid}") from None

    def has_vertex(self, v: VertexLike) -> bool:
        return as_vertex(v) in self._vweight

    def nonloop_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self._edges if not e.is_loop)

    def loops(self) -> tuple[Edge, ...]:
        return tuple(e for e in self._edges if e.is_loop)

    def incident(self, v: VertexLike) -> tuple[Edge, ...]:
        vid = as_vertex(v)
        self.weight(vid)
        return tuple(e for e in self._edges if vid in (e.u, e.v))

    def degree(self, v: VertexLike) -> Fraction:
        """Total incident edge weight; a loop counts twice."""
        vid = as_vertex(v)
        self.weight(vid)
        total = Fraction(0)
        for e in self._edges:
            if e.u == vid:
                total += e.weight
            if e.v == vid:
                total += e.weight
        return total

    def pair_weight(self, u: VertexLike, v: VertexLike) -> Fraction:
        """Total weight between ``u`` and ``v``; loops count twice."""
        a, b = sorted((as_vertex(u), as_vertex(v)))
        total = sum((e.weight for e in self._edges if (e.u, e.v) == (a, b)), Fraction(0))
        return 2 * total if a == b else total

    def total_vertex_weight(self, subset: Iterable[VertexLike] | None = None) -> Fraction:
        if subset is None:
            return sum(self._vweight.values(), Fraction(0))
        return sum((self.weight(v) for v in subset), Fraction(0))

    def total_edge_weight(self) -> Fraction:
        return sum((e.weight for e in self._edges), Fraction(0))

    def labels(self) -> set[int]:
        return {x for v in self._vertices for x in v}

    def is_isolated(self, v: VertexLike) -> bool:
        return self.degree(v) == 0

    def isolated_vertices(self) -> tuple[VertexId, ...]:
        touched = {x for e in self._edges for x in (e.u, e.v)}
        return tuple(v for v in self._vertices if v not in touched)

    def components(self) -> list[tuple[VertexId, ...]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        parent = {v: v for v in self._vertices}

        def find(x: VertexId) -> VertexId:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self._edges:
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[VertexId, list[VertexId]] = {}
        for v in self._vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])

    def is_forest(self) -> bool:
        return not self.loops() and len(self.nonloop_edges()) == self.n - len(self.components())

    def is_bipartite(self) -> bool:
        colour: dict[VertexId, int] = {}
        adj = self.adjacency()
        for start in self._vertices:
            if start in colour:
                continue
            colour[start] = 0
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y == x:
                        return False
                    if y not in colour:
                        colour[y] = 1 - colour[x]
                        stack.append(y)
                    elif colour[y] == colour[x]:
                        return False
        return True

    def adjacency(self) -> dict[VertexId, set[VertexId]]:
        adj: dict[VertexId, set[VertexId]] = {v: set() for v in self._vertices}
        for e in self._edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        return adj

    # -- derived graphs ------------------------------------------------------

    def edge_triples(self) -> list[tuple[VertexId, VertexId, Fraction]]:
        return [(e.u, e.v, e.weight) for e in self._edges]

    def with_vertex_weights(self, weights: Mapping[VertexLike, WeightLike]) -> WeightedGraph:
        """Return a copy with the given vertex weights replaced."""
        new = dict(self._vweight)
        for v, w in weights.items():
            vid = as_vertex(v)
            self.weight(vid)
            new[vid] = as_fraction(w)
        return WeightedGraph(new, self.edge_triples())

    def scaled(self, vertex_factor: WeightLike = 1, edge_factor: WeightLike = 1) -> WeightedGraph:
        cv, ce = as_fraction(vertex_factor), as_fraction(edge_factor)
        return WeightedGraph(
            {v: w * cv for v, w in self._vweight.items()},
            [(u, v, w * ce) for u, v, w in self.edge_triples()],
        )

    def add_edge(self, u: VertexLike, v: VertexLike, weight: WeightLike) -> WeightedGraph:
        return WeightedGraph(self._vweight, self.edge_triples() + [(u, v, weight)])

    def remove_vertices(self, subset: Iterable[VertexLike]) -> WeightedGraph:
        """``G - S``: drop the vertices and every incident edge."""
        drop = {as_vertex(v) for v in subset}
        for v in drop:
            self.weight(v)
        return WeightedGraph(
            {v: w for v, w in self._vweight.items() if v not in drop},
            [(e.u, e.v, e.weight) for e in self._edges if e.u not in drop and e.v not in drop],
        )

    def delete_edges(self, eids: Iterable[int]) -> WeightedGraph:
        drop = set(eids)
        for eid in drop:
            self.edge(eid)
        return WeightedGraph(
            self._vweight, [(e.u, e.v, e.weight) for e in self._edges if e.id not in drop]
        )

    def edge_subgraph(self, eids: Iterable[int]) -> WeightedGraph:
        """``G[R]``: the edges of ``R`` with their incident vertices."""
        keep = [self.edge(eid) for eid in sorted(set(eids))]
        verts = {x for e in keep for x in (e.u, e.v)}
        return WeightedGraph(
            {v: self._vweight[v] for v in verts}, [(e.u, e.v, e.weight) for e in keep]
        )

    def relabel(self, mapping: Mapping[int, int]) -> WeightedGraph:
        """Rename the underlying integer labels (must be injective)."""

        def ren(v: VertexId) -> VertexId:
            return tuple(sorted(mapping.get(x, x) for x in v))

        return WeightedGraph(
            {ren(v): w for v, w in self._vweight.items()},
            [(ren(e.u), ren(e.v), e.weight) for e in self._edges],
        )

    # -- value semantics -----------------------------------------------------

    def _key(self) -> tuple:
        return (
            tuple(self._vweight.items()),
            tuple(sorted((e.u, e.v, e.weight) for e in self._edges)),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        vs = ", ".join(f"{_fmt_vertex(v)}:{w}" for v, w in self._vweight.items())
        es = ", ".join(f"{_fmt_vertex(e.u)}-{_fmt_vertex(e.v)}:{e.weight}" for e in self._edges)
        return f"WeightedGraph({{{vs}}}, [{es}])"


def _fmt_vertex(v: VertexId) -> str:
    return str(v[0]) if len(v) == 1 else "{" + ",".join(map(str, v)) + "}"


def delete_edge(G: WeightedGraph, eid: int) -> WeightedGraph:
    """``G - e``; all vertices survive, including newly isolated ones."""
    return G.delete_edges([eid])


def contract_edge(G: WeightedGraph, eid: int) -> WeightedGraph:
    """``G / e``: merge the endpoints of a nonloop edge, summing their weights.

    Other edges between the two endpoints become loops on the merged vertex.
    """
    e = G.edge(eid)
    if e.is_loop:
        raise PreconditionError(f"edge {eid} is a loop and cannot be contracted")
    merged = tuple(sorted(e.u + e.v))

    def image(x: VertexId) -> VertexId:
        return merged if x in (e.u, e.v) else x

    weights = {v: w for v, w in G.vertex_weights().items() if v not in (e.u, e.v)}
    weights[merged] = G.weight(e.u) + G.weight(e.v)
    return WeightedGraph(
        weights, [(image(f.u), image(f.v), f.weight) for f in G.edges if f.id != eid]
    )


def quotient(G: WeightedGraph, blocks: Iterable[Iterable[VertexLike]]) -> WeightedGraph:
    """Identify the vertices in each block; block weight is the sum.

    Every edge survives with its weight; edges inside a block become loops.
    """
    image: dict[VertexId, VertexId] = {}
    weights: dict[VertexId, Fraction] = {}
    for block in blocks:
        members = [as_vertex(v) for v in block]
        if not members:
            raise PreconditionError("empty block in partition")
        merged = tuple(sorted(x for v in members for x in v))
        for v in members:
            if not G.has_vertex(v):
                raise PreconditionError(f"partition mentions unknown vertex {v}")
            if v in image:
                raise PreconditionError(f"vertex {v} appears in two blocks")
            image[v] = merged
        weights[merged] = sum((G.weight(v) for v in members), Fraction(0))
    if len(image) != G.n:
        raise PreconditionError("partition does not cover every vertex")
    return WeightedGraph(weights, [(image[e.u], image[e.v], e.weight) for e in G.edges])


def merge(G: WeightedGraph, H: WeightedGraph) -> WeightedGraph:
    """``(G + H, υ + υ', ε + ε')``: shared vertex ids are identified.

    Vertex ids present in both graphs have their weights added; the edge
    multisets are concatenated.
    """
    weights = G.vertex_weights()
    for v, w in H.vertex_weights().items():
        weights[v] = weights.get(v, Fraction(0)) + w
    return WeightedGraph(weights, G.edge_triples() + H.edge_triples())


def simplify(G: WeightedGraph) -> WeightedGraph:
    """Drop loops and collapse each parallel class into one summed edge."""
    totals: dict[tuple[VertexId, VertexId], Fraction] = {}
    for e in G.edges:
        if not e.is_loop:
            totals[(e.u, e.v)] = totals.get((e.u, e.v), Fraction(0)) + e.weight
    return WeightedGraph(G.vertex_weights(), [(u, v, w) for (u, v), w in sorted(totals.items())])


def degree(G: WeightedGraph, v: VertexLike) -> Fraction:
    return G.degree(v)
