"""Seeded random corpora of weighted graphs.

All randomness comes from a SplitMix64 stream, so a seed reproduces the
same corpus on any platform.
"""

from __future__ import annotations

import zlib
from collections.abc import Sequence
from fractions import Fraction

from lapforge.graph import VertexId, WeightedGraph

MASK64 = (1 << 64) - 1
WEIGHT_MENU: tuple[Fraction, ...] = tuple(Fraction(x) for x in ("1", "1/2", "2", "3", "5/3", "7"))


class SplitMix64:
    """The SplitMix64 generator: a Weyl sequence followed by a 64-bit mixer."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection, so there is no modulo bias."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.randrange(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def bernoulli(self, p: float) -> bool:
        return self.random() < p

    def choice(self, seq: Sequence):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def subset(self, items: Sequence, p: float = 0.5) -> list:
        return [x for x in items if self.bernoulli(p)]

    def fork(self, label: str) -> SplitMix64:
        """Independent stream keyed by ``label`` (CRC-32 mixed into the seed)."""
        return SplitMix64(self.next_u64() ^ (zlib.crc32(label.encode()) << 32))


def stream(seed: int, label: str) -> SplitMix64:
    """The stream for one named check under a seed."""
    return SplitMix64(seed).fork(label)


def random_graph(
    rng: SplitMix64,
    min_n: int = 2,
    max_n: int = 8,
    max_m: int = 16,
    p_loop: float = 0.1,
    p_parallel: float = 0.2,
    weights: Sequence[Fraction] = WEIGHT_MENU,
    connected: bool = False,
) -> WeightedGraph:
    """A random multigraph on labels ``0..n-1``.

    ``n`` is uniform in ``[min_n, max_n]`` and the edge count uniform in
    ``[1, max_m]``.  Each edge repeats the endpoints of an earlier nonloop
    edge with probability ``p_parallel``, else is a loop with probability
    ``p_loop``, else joins two distinct uniform vertices.  With
    ``connected`` the first ``n - 1`` edges form a random spanning tree.
    """
    n = rng.randint(min_n, max_n)
    vertices = {(i,): rng.choice(weights) for i in range(n)}
    m = rng.randint(1, max_m)
    pairs: list[tuple[int, int]] = []
    if connected:
        for i in range(1, n):
            pairs.append((rng.randrange(i), i))
    while len(pairs) < m:
        nonloops = [p for p in pairs if p[0] != p[1]]
        if nonloops and rng.bernoulli(p_parallel):
            pairs.append(rng.choice(nonloops))
        elif rng.bernoulli(p_loop):
            v = rng.randrange(n)
            pairs.append((v, v))
        else:
            u = rng.randrange(n)
            v = rng.randrange(n - 1)
            pairs.append((u, v if v < u else v + 1))
    edges = [((a,), (b,), rng.choice(weights)) for a, b in pairs]
    return WeightedGraph(vertices, edges)


def random_partition(rng: SplitMix64, vertices: Sequence[VertexId]) -> list[list[VertexId]]:
    """Random set partition: each vertex picks one of ``1..n`` block slots."""
    slots = rng.randint(1, len(vertices))
    blocks: dict[int, list[VertexId]] = {}
    for v in vertices:
        blocks.setdefault(rng.randrange(slots), []).append(v)
    return [blocks[k] for k in sorted(blocks)]


def random_forest(rng: SplitMix64, max_n: int = 10, max_weight: int = 4, p_attach: float = 0.8) -> WeightedGraph:
    """Random forest with integer vertex weights in ``[1, max_weight]`` and unit edges."""
    n = rng.randint(1, max_n)
    vertices = {(i,): rng.randint(1, max_weight) for i in range(n)}
    edges = [((rng.randrange(i),), (i,), 1) for i in range(1, n) if rng.bernoulli(p_attach)]
    return WeightedGraph(vertices, edges)
