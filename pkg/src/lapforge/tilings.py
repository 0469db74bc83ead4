"""Rectangular tilings and their electrical networks.

Each horizontal line carrying a tile side becomes a vertex; each tile
becomes an edge from the line of its bottom side to the line of its top
side, with conductance ``width / height`` and current ``height``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from lapforge.errors import PreconditionError
from lapforge.fields import VectorField, divergence, is_conservative
from lapforge.graph import VertexId, VertexLike, WeightedGraph, as_fraction, as_vertex


@dataclass(frozen=True)
class Rect:
    x: Fraction
    y: Fraction
    w: Fraction
    h: Fraction

    def __post_init__(self) -> None:
        for name in ("x", "y", "w", "h"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.w <= 0 or self.h <= 0:
            raise PreconditionError(f"rectangle needs positive width and height, got {self.w}x{self.h}")

    @property
    def top(self) -> Fraction:
        return self.y + self.h

    @property
    def right(self) -> Fraction:
        return self.x + self.w

    @property
    def area(self) -> Fraction:
        return self.w * self.h

    def contains(self, other: Rect) -> bool:
        return self.x <= other.x and other.right <= self.right and self.y <= other.y and other.top <= self.top

    def overlaps(self, other: Rect) -> bool:
        """True iff the interiors intersect."""
        return (
            max(self.x, other.x) < min(self.right, other.right)
            and max(self.y, other.y) < min(self.top, other.top)
        )


@dataclass(frozen=True)
class Tiling:
    """A rectangle ``outer`` subdivided into interior-disjoint ``tiles``.

    Validity is checked exactly: containment, pairwise interior-disjointness
    and equality of total area.
    """

    outer: Rect
    tiles: tuple[Rect, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tiles", tuple(self.tiles))
        if not self.tiles:
            raise PreconditionError("a tiling needs at least one tile")
        for r in self.tiles:
            if not self.outer.contains(r):
                raise PreconditionError(f"tile {r} lies outside the outer rectangle")
        for i, r in enumerate(self.tiles):
            for s in self.tiles[i + 1:]:
                if r.overlaps(s):
                    raise PreconditionError(f"tiles {r} and {s} overlap")
        if sum((r.area for r in self.tiles), Fraction(0)) != self.outer.area:
            raise PreconditionError("tiles do not cover the outer rectangle")

    @property
    def aspect(self) -> Fraction:
        return self.outer.w / self.outer.h


@dataclass(frozen=True)
class TilingNetwork:
    graph: WeightedGraph
    field: VectorField
    bottom: VertexId
    top: VertexId
    line_y: dict[VertexId, Fraction]


def tiling_to_network(T: Tiling, first_label: int = 0) -> TilingNetwork:
    """Network of a tiling; line vertices are labelled upwards from ``first_label``.

    Tile ``j`` becomes edge ``j``.  All vertex weights are 1.
    """
    ys = sorted({r.y for r in T.tiles} | {r.top for r in T.tiles})
    vid = {y: (first_label + i,) for i, y in enumerate(ys)}
    edges = [(vid[r.y], vid[r.top], r.w / r.h) for r in T.tiles]
    G = WeightedGraph({v: 1 for v in vid.values()}, edges)
    # bottom line has the smaller label, so the canonical orientation points upwards
    F = {j: r.h for j, r in enumerate(T.tiles)}
    return TilingNetwork(G, F, vid[T.outer.y], vid[T.outer.top], {v: y for y, v in vid.items()})


def kirchhoff_check(G: WeightedGraph, F: Mapping[int, Fraction], a: VertexLike, b: VertexLike) -> bool:
    """``∂F`` vanishes off the poles and ``F`` is conservative."""
    poles = {as_vertex(a), as_vertex(b)}
    div = divergence(G, F)
    if any(div[v] != 0 for v in G.vertices if v not in poles):
        return False
    return is_conservative(G, F)


def substitute_edge(
    G: WeightedGraph,
    eid: int,
    T: Tiling,
    new_weights: Mapping[VertexLike, object] | None = None,
) -> WeightedGraph:
    """Replace edge ``e = ab`` (``a`` the smaller endpoint) by the network of ``T``.

    The bottom line is identified with ``a`` and the top line with ``b``.
    Interior lines become new vertices labelled after the largest existing
    label, in increasing height; their weights come from ``new_weights``
    (default 1).
    """
    e = G.edge(eid)
    if e.is_loop:
        raise PreconditionError(f"edge {eid} is a loop")
    if e.weight != T.aspect:
        raise PreconditionError(f"edge weight {e.weight} differs from tiling aspect ratio {T.aspect}")
    net = tiling_to_network(T)
    start = max(G.labels(), default=-1) + 1
    image: dict[VertexId, VertexId] = {net.bottom: e.u, net.top: e.v}
    interior = [v for v in net.graph.vertices if v not in image]
    for j, v in enumerate(interior):
        image[v] = (start + j,)
    weights = G.vertex_weights()
    given = {as_vertex(k): as_fraction(w) for k, w in (new_weights or {}).items()}
    for v in interior:
        weights[image[v]] = given.pop(image[v], Fraction(1))
    if given:
        raise PreconditionError(f"weights given for unknown new vertices {sorted(given)}")
    edges = [(f.u, f.v, f.weight) for f in G.edges if f.id != eid]
    edges += [(image[f.u], image[f.v], f.weight) for f in net.graph.edges]
    return WeightedGraph(weights, edges)


def new_vertices(G: WeightedGraph, T: Tiling) -> list[VertexId]:
    """Ids that ``substitute_edge`` assigns to the interior lines of ``T``."""
    ys = {r.y for r in T.tiles} | {r.top for r in T.tiles}
    start = max(G.labels(), default=-1) + 1
    return [(start + j,) for j in range(len(ys) - 2)]


def guillotine_tiling(outer: Rect, rng, cuts: int, fractions: Sequence[Fraction] = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))) -> Tiling:
    """Random tiling by repeatedly cutting a random tile horizontally or vertically."""
    tiles = [outer]
    for _ in range(cuts):
        i = rng.randrange(len(tiles))
        r = tiles.pop(i)
        f = fractions[rng.randrange(len(fractions))]
        if rng.randrange(2):
            tiles[i:i] = [Rect(r.x, r.y, r.w * f, r.h), Rect(r.x + r.w * f, r.y, r.w * (1 - f), r.h)]
        else:
            tiles[i:i] = [Rect(r.x, r.y, r.w, r.h * f), Rect(r.x, r.y + r.h * f, r.w, r.h * (1 - f))]
    return Tiling(outer, tuple(tiles))


EXAMPLE_TILING = Tiling(
    Rect(0, 0, 6, 3),
    (Rect(0, 0, 1, 2), Rect(0, 2, 1, 1), Rect(1, 0, 2, 3), Rect(3, 0, 3, 2), Rect(3, 2, 3, 1)),
)
