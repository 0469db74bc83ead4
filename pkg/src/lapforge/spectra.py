"""Floating-point Laplacian spectra and interlacing verifiers.

Eigenvalues are computed from the symmetric conjugate
``W^{-1/2} (D - A) W^{-1/2}`` of the Laplacian, where ``W`` is the vertex
measure of the requested kind.  Each verifier builds the related graphs,
computes both spectra and checks the index-shifted inequalities within an
absolute tolerance.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from lapforge.charpoly import charpoly
from lapforge.errors import PreconditionError
from lapforge.fields import combinatorial_laplacian, measure
from lapforge.graph import (
    VertexLike,
    WeightedGraph,
    as_fraction,
    as_vertex,
    contract_edge,
    delete_edge,
    merge,
    quotient,
)
from lapforge.jacobi import jacobi_eigh

TOL = 1e-9
ROOT_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues; entries within ``tol`` of zero are stored as 0."""

    values: tuple[float, ...]
    tol: float = TOL

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def multiplicity(self, x: float) -> int:
        return sum(1 for y in self.values if abs(y - x) <= self.tol)

    def kernel_dimension(self) -> int:
        return self.multiplicity(0.0)

    @property
    def largest(self) -> float:
        return self.values[-1] if self.values else 0.0


def make_spectrum(values: Iterable[float], tol: float = TOL) -> Spectrum:
    vals = sorted(float(x) for x in values)
    return Spectrum(tuple(0.0 if abs(x) <= tol else x for x in vals), tol)


def symmetric_laplacian(G: WeightedGraph, kind: str = "weighted") -> np.ndarray:
    """``W^{-1/2} L_ε W^{-1/2}`` in floating point."""
    mu = measure(G, kind)
    L = np.array([[float(x) for x in row] for row in combinatorial_laplacian(G)], dtype=float)
    if G.n == 0:
        return L.reshape(0, 0)
    s = np.array([1.0 / math.sqrt(float(mu[v])) for v in G.vertices])
    return L * s[:, None] * s[None, :]


def eigenvalues(G: WeightedGraph, kind: str = "weighted", tol: float = TOL) -> Spectrum:
    return make_spectrum(jacobi_eigh(symmetric_laplacian(G, kind)), tol)


def eigenpairs(G: WeightedGraph, kind: str = "weighted") -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenfunctions of the Laplacian itself (columns ``W^{-1/2} x``)."""
    mu = measure(G, kind)
    values, vecs = jacobi_eigh(symmetric_laplacian(G, kind), vectors=True)
    s = np.array([1.0 / math.sqrt(float(mu[v])) for v in G.vertices])
    return values, vecs * s[:, None]


# -- interlacing predicates ---------------------------------------------------------


def shifted_bounds(
    mid: Sequence[float], ref: Sequence[float], lo: int | None, hi: int | None, tol: float = TOL
) -> bool:
    """Check ``ref_{i+lo} <= mid_i <= ref_{i+hi}`` wherever the index is defined.

    Indices are 1-based; ``None`` skips that side.
    """
    for i in range(1, len(mid) + 1):
        x = mid[i - 1]
        if lo is not None and 1 <= i + lo <= len(ref) and ref[i + lo - 1] > x + tol:
            return False
        if hi is not None and 1 <= i + hi <= len(ref) and x > ref[i + hi - 1] + tol:
            return False
    return True


def interlaces(A: Sequence[float], B: Sequence[float], k: int, tol: float = TOL) -> bool:
    """True iff ``A_i <= B_i <= A_{i+k}`` for all defined indices, ``|B| = |A| - k``."""
    if k < 0 or len(B) != len(A) - k:
        raise PreconditionError(f"interlacing needs |B| = |A| - k, got {len(A)}, {len(B)}, k={k}")
    return shifted_bounds(B, A, 0, k, tol)


def chain_holds(seq: Sequence[float], tol: float = TOL) -> bool:
    return all(a <= b + tol for a, b in zip(seq, seq[1:]))


def bipartite_components(G: WeightedGraph) -> int:
    """Number of bipartite connected components; a loop spoils bipartiteness."""
    count = 0
    for comp in G.components():
        members = set(comp)
        sub = WeightedGraph(
            {v: G.weight(v) for v in comp},
            [(e.u, e.v, e.weight) for e in G.edges if e.u in members],
        )
        if sub.is_bipartite():
            count += 1
    return count


# -- verifiers ---------------------------------------------------------------------


def verify_edge_deletion(G: WeightedGraph, eid: int, tol: float = TOL) -> bool:
    """``μ_1 <= λ_1 <= μ_2 <= ... <= μ_n <= λ_n`` for ``μ`` of ``G - e``."""
    lam = eigenvalues(G, tol=tol)
    mu = eigenvalues(delete_edge(G, eid), tol=tol)
    return chain_holds([x for pair in zip(mu, lam) for x in pair], tol)


def verify_delcon_chain(G: WeightedGraph, eid: int, tol: float = TOL) -> bool:
    """Deletion, contraction and the interleaving of all three spectra.

    Also checks the exact polynomial identity behind it and that each
    contraction eigenvalue is a root of the contracted polynomial.
    """
    e = G.edge(eid)
    if e.is_loop:
        raise PreconditionError(f"edge {eid} is a loop")
    Gd, Gc = delete_edge(G, eid), contract_edge(G, eid)
    lam, mu, nu = eigenvalues(G, tol=tol), eigenvalues(Gd, tol=tol), eigenvalues(Gc, tol=tol)
    n = G.n
    if not chain_holds([x for pair in zip(mu, lam) for x in pair], tol):
        return False
    # μ_j <= λ_j <= ν_j <= μ_{j+1}
    for j in range(n - 1):
        if not (mu[j] <= lam[j] + tol and lam[j] <= nu[j] + tol and nu[j] <= mu[j + 1] + tol):
            return False
    pc = charpoly(Gc)
    if charpoly(G) != charpoly(Gd) - e.weight * pc:
        return False
    roots = pc.real_roots()
    return len(roots) == len(nu) and all(abs(x - r) <= ROOT_TOL for x, r in zip(nu, roots))


def verify_quotient(
    G: WeightedGraph, blocks: Iterable[Iterable[VertexLike]], kind: str = "weighted", tol: float = TOL
) -> bool:
    """``λ_i <= μ_i <= λ_{i+k}`` for the quotient (``λ_{i+q+k}`` for the combinatorial kind)."""
    blocks = [list(b) for b in blocks]
    if kind == "normalised" and G.isolated_vertices():
        raise PreconditionError("normalised quotient requires a graph without isolated vertices")
    Q = quotient(G, blocks)
    lam, mu = eigenvalues(G, kind, tol), eigenvalues(Q, kind, tol)
    k = G.n - Q.n
    if kind == "combinatorial":
        q = sum(1 for b in blocks if len(b) > 1)
        return shifted_bounds(mu, lam, 0, q + k, tol)
    if kind in ("weighted", "normalised"):
        return shifted_bounds(mu, lam, 0, k, tol)
    raise PreconditionError(f"unknown Laplacian kind {kind!r}")


def merge_parameters(G: WeightedGraph, H: WeightedGraph, tol: float = TOL) -> dict[str, int]:
    """``s``, ``c``, ``b`` and ``k`` of the merge interlacing bounds."""
    lam = eigenvalues(G, tol=tol)
    lam_n = lam.largest if lam.n else 0.0
    eta = eigenvalues(H, tol=tol)
    return {
        "s": H.n,
        "c": len(H.components()),
        "b": sum(1 for x in eta if x >= lam_n - tol),
        "k": sum(1 for v in H.vertices if not G.has_vertex(v)),
    }


def verify_merge(G: WeightedGraph, H: WeightedGraph, tol: float = TOL) -> bool:
    """``μ_{i-s+c+k} <= λ_i <= μ_{i+s-b}`` with ``μ`` the merged spectrum."""
    if H.n == 0:
        return True
    p = merge_parameters(G, H, tol)
    lam = eigenvalues(G, tol=tol)
    mu = eigenvalues(merge(G, H), tol=tol)
    return shifted_bounds(lam, mu, -p["s"] + p["c"] + p["k"], p["s"] - p["b"], tol)


def verify_subgraph_deletion(
    G: WeightedGraph,
    R: Iterable[int],
    S: Iterable[VertexLike] | None = None,
    kind: str = "weighted",
    tol: float = TOL,
) -> bool:
    """Spectra of ``G`` and ``G - R - S`` against the subgraph interlacing bounds.

    For the normalised kind ``S`` must be every isolated vertex of ``G - R``
    and may be omitted.
    """
    R = sorted(set(R))
    GR = G.delete_edges(R)
    isolated = set(GR.isolated_vertices())
    if S is None:
        S = isolated if kind == "normalised" else set()
    S = {as_vertex(v) for v in S}
    if not S <= isolated:
        raise PreconditionError("S must consist of vertices isolated in G - R")
    sub = G.edge_subgraph(R)
    s, c = sub.n, len(sub.components())
    reduced = GR.remove_vertices(S)
    k = len(S)
    if kind in ("weighted", "combinatorial"):
        lam, mu = eigenvalues(G, kind, tol), eigenvalues(reduced, kind, tol)
        return shifted_bounds(mu, lam, -s + c + k, k, tol)
    if kind == "normalised":
        if G.isolated_vertices():
            raise PreconditionError("normalised subgraph deletion requires no isolated vertices")
        if S != isolated:
            raise PreconditionError("normalised subgraph deletion removes all isolated vertices of G - R")
        b = bipartite_components(sub)
        lam, mu = eigenvalues(G, kind, tol), eigenvalues(reduced, kind, tol)
        return shifted_bounds(mu, lam, -s + c + k, s - b, tol)
    raise PreconditionError(f"unknown Laplacian kind {kind!r}")


def verify_vertex_weight_decrease(G: WeightedGraph, v: VertexLike, new_weight, tol: float = TOL) -> bool:
    """``λ_1 <= μ_1 <= λ_2 <= ... <= λ_n <= μ_n`` after lowering one vertex weight."""
    vid = as_vertex(v)
    w = as_fraction(new_weight)
    if not 0 < w < G.weight(vid):
        raise PreconditionError(f"new weight {w} must lie strictly between 0 and {G.weight(vid)}")
    lam = eigenvalues(G, tol=tol)
    mu = eigenvalues(G.with_vertex_weights({vid: w}), tol=tol)
    return chain_holds([x for pair in zip(lam, mu) for x in pair], tol)


def verify_normalised_range(G: WeightedGraph, tol: float = TOL) -> bool:
    """Normalised eigenvalues lie in ``[0, 2]`` and 2 has multiplicity = #bipartite components."""
    spec = eigenvalues(G, "normalised", tol)
    if any(x < -tol or x > 2 + tol for x in spec):
        return False
    return spec.multiplicity(2.0) == bipartite_components(G)


def trace(G: WeightedGraph) -> Fraction:
    """Trace of ``W^{-1}(D - A)``, exactly."""
    return sum((_nonloop_degree(G, v) / G.weight(v) for v in G.vertices), Fraction(0))


def _nonloop_degree(G: WeightedGraph, v) -> Fraction:
    return sum((e.weight for e in G.incident(v) if not e.is_loop), Fraction(0))
