"""Symmetric functions in the power-sum basis and chromatic symmetric functions.

A ``PSym`` is a finite rational combination of power sums ``p_α``; products
concatenate partitions.  The chromatic symmetric function of an integer
vertex-weighted graph is computed by deletion-contraction, and two
brute-force routes through proper colourings are provided as oracles.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from itertools import product

from lapforge.errors import PreconditionError
from lapforge.graph import WeightedGraph
from lapforge.poly import RatPoly

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    out = tuple(sorted((int(x) for x in parts), reverse=True))
    if any(x <= 0 for x in out):
        raise PreconditionError(f"partition parts must be positive, got {out}")
    return out


class PSym:
    """Sparse map from partitions to nonzero rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None) -> None:
        acc: dict[Partition, Fraction] = {}
        for alpha, c in (terms or {}).items():
            key = partition(alpha)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        self.terms: dict[Partition, Fraction] = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def p(cls, *parts: int) -> PSym:
        """The power sum ``p_α``; ``PSym.p()`` is the unit."""
        return cls({parts: 1})

    @classmethod
    def zero(cls) -> PSym:
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(a) for a in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees()
        if degree is None:
            return len(ds) <= 1
        return ds <= {degree}

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.terms.items())

    def __add__(self, other: PSym) -> PSym:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PSym(out)

    def __neg__(self) -> PSym:
        return PSym({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: PSym) -> PSym:
        return self + (-other)

    def __mul__(self, other: PSym | int | Fraction) -> PSym:
        if isinstance(other, PSym):
            return p_mul(self, other)
        c = Fraction(other)
        return PSym({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PSym):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.sorted_terms()))

    def __repr__(self) -> str:
        if not self.terms:
            return "PSym(0)"
        parts = [f"{c}*p{list(a)}" for a, c in self.sorted_terms()]
        return "PSym(" + " + ".join(parts) + ")"


def p_mul(a: PSym, b: PSym) -> PSym:
    """Bilinear product with ``p_α p_β = p_{α ∪ β}``."""
    out: dict[Partition, Fraction] = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            key = partition(ka + kb)
            out[key] = out.get(key, Fraction(0)) + va * vb
    return PSym(out)


# -- chromatic symmetric function --------------------------------------------------


def _integer_weights(G: WeightedGraph) -> list[int]:
    weights = []
    for v in G.vertices:
        w = G.weight(v)
        if w.denominator != 1:
            raise PreconditionError(f"vertex {v} has non-integer weight {w}")
        weights.append(int(w))
    for e in G.edges:
        if e.weight != 1:
            raise PreconditionError(f"edge {e.id} has weight {e.weight}; edge weights must be 1")
    return weights


def csf(G: WeightedGraph) -> PSym:
    """``X_G`` by ``X(G) = X(G - e) - X(G / e)`` on the least nonloop edge.

    Parallel edges are kept; contracting one of a parallel pair leaves a
    loop, and any loop makes the function vanish.
    """
    weights = _integer_weights(G)
    edges = [(G.index(e.u), G.index(e.v)) for e in G.edges]
    out: dict[Partition, int] = {}
    _csf_rec(weights, edges, 1, out)
    return PSym(out)


def _csf_rec(weights: list[int], edges: list[tuple[int, int]], sign: int, out: dict) -> None:
    if any(a == b for a, b in edges):
        return
    if not edges:
        key = tuple(sorted(weights, reverse=True))
        out[key] = out.get(key, 0) + sign
        return
    i, j = min(edges)
    k = edges.index((i, j))
    rest = edges[:k] + edges[k + 1:]
    _csf_rec(weights, rest, sign, out)

    def image(x: int) -> int:
        if x == j:
            return i
        return x - 1 if x > j else x

    merged = weights[:j] + weights[j + 1:]
    merged[i if i < j else i - 1] = weights[i] + weights[j]
    contracted = []
    for a, b in rest:
        a, b = image(a), image(b)
        contracted.append((a, b) if a <= b else (b, a))
    _csf_rec(merged, contracted, -sign, out)


def phi(x: PSym) -> RatPoly:
    """Linear map ``p_α ↦ (∏ α_i) t^{ℓ(α)}``."""
    out = RatPoly()
    for alpha, c in x.terms.items():
        prod = 1
        for part in alpha:
            prod *= part
        out = out + RatPoly.monomial(len(alpha), c * prod)
    return out


def chromatic_polynomial(x: PSym) -> RatPoly:
    """Linear map ``p_α ↦ t^{ℓ(α)}``."""
    out = RatPoly()
    for alpha, c in x.terms.items():
        out = out + RatPoly.monomial(len(alpha), c)
    return out


# -- brute-force oracles ---------------------------------------------------------------


def colouring_expansion(G: WeightedGraph, variables: int) -> dict[tuple[int, ...], int]:
    """``Σ_κ ∏ x_{κ(v)}^{υ(v)}`` over proper colourings ``κ: V -> [variables]``.

    Returns a map from exponent vectors to coefficients.  The cost is
    ``variables ** n``; intended for small graphs.
    """
    weights = _integer_weights(G)
    n = G.n
    pairs = [(G.index(e.u), G.index(e.v)) for e in G.edges]
    out: dict[tuple[int, ...], int] = {}
    for colouring in product(range(variables), repeat=n):
        if any(colouring[a] == colouring[b] for a, b in pairs):
            continue
        exps = [0] * variables
        for v, c in enumerate(colouring):
            exps[c] += weights[v]
        key = tuple(exps)
        out[key] = out.get(key, 0) + 1
    return out


def psym_expansion(x: PSym, variables: int) -> dict[tuple[int, ...], Fraction]:
    """Expand ``x`` as a polynomial in ``variables`` commuting variables."""
    out: dict[tuple[int, ...], Fraction] = {}
    for alpha, c in x.terms.items():
        # p_α = ∏_i (x_1^{α_i} + ... + x_N^{α_i})
        for choice in product(range(variables), repeat=len(alpha)):
            exps = [0] * variables
            for part, j in zip(alpha, choice):
                exps[j] += part
            key = tuple(exps)
            out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v != 0}


def stable_partition_types(G: WeightedGraph, max_blocks: int | None = None) -> dict[Partition, int]:
    """Count partitions of ``V`` into independent sets by block-weight type.

    Grouping proper colourings by their colour classes shows the coefficient
    of each monomial in ``X_G`` is determined by these counts; restricting to
    at most ``max_blocks`` blocks is the same as truncating to that many
    variables.
    """
    weights = _integer_weights(G)
    n = G.n
    limit = n if max_blocks is None else max_blocks
    adj = [0] * n
    for e in G.edges:
        i, j = G.index(e.u), G.index(e.v)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    if any(adj[i] >> i & 1 for i in range(n)):
        return {}
    blocks: list[int] = []
    sums: list[int] = []
    out: dict[Partition, int] = {}

    def rec(v: int) -> None:
        if v == n:
            key = tuple(sorted(sums, reverse=True))
            out[key] = out.get(key, 0) + 1
            return
        for b in range(len(blocks)):
            if not blocks[b] & adj[v]:
                blocks[b] |= 1 << v
                sums[b] += weights[v]
                rec(v + 1)
                blocks[b] &= ~(1 << v)
                sums[b] -= weights[v]
        if len(blocks) < limit:
            blocks.append(1 << v)
            sums.append(weights[v])
            rec(v + 1)
            blocks.pop()
            sums.pop()

    rec(0)
    return out
