"""Isoperimetric constants, sweep cuts and spectral bounds.

Cut ratios are exact; eigenvalues come from the float solver, so the
inequalities that involve them are checked with an absolute tolerance.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from lapforge.errors import ConsistencyError, PreconditionError
from lapforge.fields import gradient, scalar_inner, vector_inner
from lapforge.graph import VertexId, VertexLike, WeightedGraph, as_vertex, simplify
from lapforge.spectra import TOL, eigenvalues

BRUTE_CAP = 16


@dataclass(frozen=True)
class CutReport:
    """A vertex set ``S`` with its boundary weight and ratio ``θ(S)``.

    ``constant`` is filled in when ``S`` was found by exhaustive search.
    """

    S: tuple[VertexId, ...]
    boundary: Fraction
    ratio: Fraction
    constant: Fraction | None = None


def rayleigh_quotient(G: WeightedGraph, f: Mapping[VertexId, Fraction]) -> Fraction:
    """``<∇f, ∇f>_ε / <f, f>_υ``."""
    denom = scalar_inner(G, f, f)
    if denom == 0:
        raise PreconditionError("Rayleigh quotient of the zero field")
    grad = gradient(G, f)
    return vector_inner(G, grad, grad) / denom


def boundary_weight(G: WeightedGraph, S: Iterable[VertexLike]) -> Fraction:
    """``ε(∇S)``: total weight of edges with exactly one endpoint in ``S``."""
    members = {as_vertex(v) for v in S}
    return sum((e.weight for e in G.edges if (e.u in members) != (e.v in members)), Fraction(0))


def cut_ratio(G: WeightedGraph, S: Iterable[VertexLike]) -> CutReport:
    members = {as_vertex(v) for v in S}
    for v in members:
        G.weight(v)
    if not members or len(members) == G.n:
        raise PreconditionError("a cut needs a proper nonempty vertex set")
    inside = G.total_vertex_weight(members)
    outside = G.total_vertex_weight() - inside
    b = boundary_weight(G, members)
    return CutReport(tuple(sorted(members)), b, b / min(inside, outside))


def isoperimetric_constant(G: WeightedGraph, cap: int = BRUTE_CAP) -> CutReport:
    """Exhaustive ``θ_G``; ties go to the lexicographically least ``S``.

    ``θ(S) = θ(S^c)``, so only sets containing the first vertex are scanned;
    such a set is always the lexicographically smaller of the pair.
    """
    n = G.n
    if n < 2:
        raise PreconditionError("isoperimetric constant needs at least two vertices")
    if n > cap:
        raise PreconditionError(f"brute-force cut search capped at {cap} vertices, graph has {n}")
    vs = G.vertices
    w = [G.weight(v) for v in vs]
    total = sum(w, Fraction(0))
    crossing = [(1 << G.index(e.u), 1 << G.index(e.v), e.weight) for e in G.nonloop_edges()]
    best: tuple | None = None
    full = (1 << n) - 1
    for rest in range(0, 1 << (n - 1)):
        mask = 1 | (rest << 1)
        if mask == full:
            continue
        inside = sum((w[i] for i in range(n) if mask >> i & 1), Fraction(0))
        b = sum((x for bu, bv, x in crossing if bool(mask & bu) != bool(mask & bv)), Fraction(0))
        ratio = b / min(inside, total - inside)
        S = tuple(vs[i] for i in range(n) if mask >> i & 1)
        if best is None or ratio < best[0] or (ratio == best[0] and S < best[1]):
            best = (ratio, S, b)
    ratio, S, b = best
    return CutReport(S, b, ratio, ratio)


def max_degree_ratio(G: WeightedGraph) -> Fraction:
    """``max_v d(v) / υ(v)``."""
    return max(G.degree(v) / G.weight(v) for v in G.vertices)


def project_mean_zero(G: WeightedGraph, f: Mapping[VertexLike, object]) -> dict[VertexId, Fraction]:
    """``f - (∫f dυ / υ(V)) 1_V``."""
    g = {as_vertex(v): Fraction(x) for v, x in f.items()}
    mean = sum((g[v] * G.weight(v) for v in G.vertices), Fraction(0)) / G.total_vertex_weight()
    return {v: g[v] - mean for v in G.vertices}


def sweep_cut(G: WeightedGraph, f: Mapping[VertexId, Fraction]) -> CutReport:
    """Best threshold cut ``S_t = {f <= t}`` of a mean-zero field.

    Raises ``ConsistencyError`` if the cut violates
    ``θ(S_t)² / 2 <= RQ(f) · max d/υ``, which holds for every mean-zero ``f``.
    """
    if G.n < 2:
        raise PreconditionError("sweep cut needs at least two vertices")
    f = {as_vertex(v): Fraction(x) for v, x in f.items()}
    if set(f) != set(G.vertices):
        raise PreconditionError("field domain does not match the vertex set")
    if sum((f[v] * G.weight(v) for v in G.vertices), Fraction(0)) != 0:
        raise PreconditionError("sweep field must integrate to zero")
    levels = sorted(set(f.values()))
    if len(levels) < 2:
        raise PreconditionError("sweep field is constant")
    best: CutReport | None = None
    for t in levels[:-1]:
        rep = cut_ratio(G, [v for v in G.vertices if f[v] <= t])
        if best is None or rep.ratio < best.ratio:
            best = rep
    bound = rayleigh_quotient(G, f) * max_degree_ratio(G)
    if best.ratio**2 / 2 > bound:
        raise ConsistencyError(f"sweep cut ratio {best.ratio} violates the guarantee {bound}")
    return best


def cheeger_check(G: WeightedGraph, tol: float = TOL, cap: int = BRUTE_CAP) -> bool:
    """``λ₂/2 <= θ <= sqrt(2 λ₂ max d/υ)``."""
    lam2 = eigenvalues(G, tol=tol)[1] if G.n >= 2 else 0.0
    theta = float(isoperimetric_constant(G, cap).ratio)
    upper = math.sqrt(max(2 * lam2 * float(max_degree_ratio(G)), 0.0))
    return lam2 / 2 <= theta + tol and theta <= upper + tol


def independent_sets(G: WeightedGraph):
    """Yield every nonempty independent set; a looped vertex is never included."""
    vs = G.vertices
    n = len(vs)
    adj = [0] * n
    banned = 0
    for e in G.edges:
        i, j = G.index(e.u), G.index(e.v)
        if i == j:
            banned |= 1 << i
        else:
            adj[i] |= 1 << j
            adj[j] |= 1 << i

    def rec(start: int, chosen: int, blocked: int):
        for i in range(start, n):
            if not (blocked >> i & 1):
                mask = chosen | 1 << i
                yield tuple(vs[k] for k in range(n) if mask >> k & 1)
                yield from rec(i + 1, mask, blocked | adj[i])

    yield from rec(0, 0, banned)


def independence_bound(G: WeightedGraph, S: Iterable[VertexLike], lam_n: float) -> tuple[float, float]:
    """``(υ(S), υ(V)(λ_n - d(S)/υ(S)) / λ_n)``."""
    S = [as_vertex(v) for v in S]
    uS = G.total_vertex_weight(S)
    dS = sum((G.degree(v) for v in S), Fraction(0))
    return float(uS), float(G.total_vertex_weight()) * (lam_n - float(dS / uS)) / lam_n


def independence_check(G: WeightedGraph, tol: float = TOL, cap: int = BRUTE_CAP) -> bool:
    """The independent-set bound holds for every nonempty independent set."""
    if not G.nonloop_edges():
        raise PreconditionError("independence bound needs a nonloop edge")
    if G.n > cap:
        raise PreconditionError(f"brute-force search capped at {cap} vertices, graph has {G.n}")
    lam_n = eigenvalues(G, tol=tol).largest
    for S in independent_sets(G):
        size, bound = independence_bound(G, S, lam_n)
        if size > bound + tol:
            return False
    return True


def chromatic_number(G: WeightedGraph) -> int:
    """Exact ``χ`` of the underlying simple graph by backtracking."""
    if G.loops():
        raise PreconditionError("chromatic number is undefined with loops")
    if G.n == 0:
        return 0
    adj = {v: set() for v in G.vertices}
    for e in simplify(G).edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    order = sorted(G.vertices, key=lambda v: (-len(adj[v]), v))

    def colourable(k: int) -> bool:
        colour: dict[VertexId, int] = {}

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            taken = {colour[u] for u in adj[v] if u in colour}
            # a fresh colour is only tried once, which removes colour symmetry
            for c in range(min(used + 1, k)):
                if c not in taken:
                    colour[v] = c
                    if place(i + 1, max(used, c + 1)):
                        return True
                    del colour[v]
            return False

        return place(0, 0)

    k = 1
    while not colourable(k):
        k += 1
    return k


def chromatic_check(G: WeightedGraph, tol: float = TOL, cap: int = BRUTE_CAP) -> tuple[int, float, bool]:
    """``(χ, λ_n / (λ_n - 2ε(E)/υ(V)), χ >= bound - tol)``."""
    if G.loops():
        raise PreconditionError("chromatic bound requires a loopless graph")
    if not G.edges:
        raise PreconditionError("chromatic bound requires at least one edge")
    if G.n > cap:
        raise PreconditionError(f"brute-force search capped at {cap} vertices, graph has {G.n}")
    lam_n = eigenvalues(G, tol=tol).largest
    avg = float(2 * G.total_edge_weight() / G.total_vertex_weight())
    bound = lam_n / (lam_n - avg)
    chi = chromatic_number(G)
    return chi, bound, chi >= bound - tol
