"""Free trees up to isomorphism and the CSF census over them.

Rooted trees are generated as canonical level sequences; each is then put
in a centre-rooted canonical form so that free trees are kept once.
Otter's counting formula and a Prüfer-code enumeration serve as
independent count oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from lapforge.charpoly import charpoly
from lapforge.errors import PreconditionError
from lapforge.graph import WeightedGraph
from lapforge.symfunc import csf, stable_partition_types

CENSUS_RANGE = (2, 10)


def rooted_level_sequences(n: int):
    """All rooted trees on ``n`` vertices as canonical level sequences (root level 0)."""
    if n < 1:
        return
    seq = list(range(n))
    while True:
        yield tuple(seq)
        p = n - 1
        while p > 0 and seq[p] == 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        for i in range(p, n):
            seq[i] = seq[i - p + q]


def level_sequence_edges(levels) -> list[tuple[int, int]]:
    edges = []
    last_at: dict[int, int] = {}
    for i, lv in enumerate(levels):
        if lv > 0:
            edges.append((last_at[lv - 1], i))
        last_at[lv] = i
    return edges


def _adjacency(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def tree_centres(n: int, edges) -> list[int]:
    adj = _adjacency(n, edges)
    deg = [len(x) for x in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _encode(adj, v: int, parent: int) -> str:
    return "(" + "".join(sorted(_encode(adj, u, v) for u in adj[v] if u != parent)) + ")"


def canonical_form(n: int, edges) -> str:
    """Isomorphism-invariant string of a free tree (least encoding over its centres)."""
    adj = _adjacency(n, edges)
    return min(_encode(adj, c, -1) for c in tree_centres(n, edges))


def free_trees(n: int) -> list[list[tuple[int, int]]]:
    """One edge list (on vertices ``0..n-1``) per free tree, ordered by canonical form."""
    found: dict[str, list[tuple[int, int]]] = {}
    for levels in rooted_level_sequences(n):
        edges = level_sequence_edges(levels)
        found.setdefault(canonical_form(n, edges), edges)
    return [found[k] for k in sorted(found)]


def tree_graph(n: int, edges) -> WeightedGraph:
    return WeightedGraph({i: 1 for i in range(n)}, [(a, b, 1) for a, b in edges])


# -- count oracles ---------------------------------------------------------------------


def rooted_tree_counts(limit: int) -> list[int]:
    """``r[0..limit]``: rooted unlabelled trees, by the standard divisor recurrence."""
    r = [0, 1] + [0] * max(limit - 1, 0)
    for m in range(1, limit):
        total = 0
        for k in range(1, m + 1):
            s = sum(d * r[d] for d in range(1, k + 1) if k % d == 0)
            total += s * r[m - k + 1]
        r[m + 1] = total // m
    return r[: limit + 1]


def otter_free_tree_count(n: int) -> int:
    """Free trees on ``n`` vertices from Otter's dissimilarity formula."""
    if n <= 0:
        return 0
    r = rooted_tree_counts(n)
    pairs = sum(r[i] * r[n - i] for i in range(1, n))
    if n % 2 == 0:
        pairs -= r[n // 2]
    return r[n] - pairs // 2


def prufer_free_tree_count(n: int) -> int:
    """Distinct isomorphism classes among all labelled trees, via Prüfer codes."""
    if n <= 2:
        return 1 if n >= 1 else 0
    seen = set()
    for code in product(range(n), repeat=n - 2):
        seen.add(canonical_form(n, prufer_decode(n, code)))
    return len(seen)


def prufer_decode(n: int, code) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


# -- census ----------------------------------------------------------------------------


@dataclass
class CensusReport:
    n: int
    trees: int
    expected: int
    csf_collisions: list[tuple[int, int]] = field(default_factory=list)
    cospectral_pairs: list[tuple[int, int]] = field(default_factory=list)
    cross_check_collisions: list[tuple[int, int]] | None = None

    @property
    def ok(self) -> bool:
        return (
            self.trees == self.expected
            and not self.csf_collisions
            and not self.cross_check_collisions
        )


def _collisions(keys) -> list[tuple[int, int]]:
    groups: dict = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return sorted((a, b) for g in groups.values() for i, a in enumerate(g) for b in g[i + 1:])


def tree_census(n: int, cross_check: bool = False, start_variables: int = 3) -> CensusReport:
    """All free trees on ``n`` vertices with CSF and Laplacian-polynomial collisions.

    With ``cross_check`` the CSFs are also compared through the colouring
    definition truncated to few variables, raising the variable count only
    for pairs that still agree.
    """
    lo, hi = CENSUS_RANGE
    if not lo <= n <= hi:
        raise PreconditionError(f"census needs {lo} <= n <= {hi}, got {n}")
    graphs = [tree_graph(n, edges) for edges in free_trees(n)]
    functions = [csf(G) for G in graphs]
    report = CensusReport(
        n,
        len(graphs),
        otter_free_tree_count(n),
        _collisions(functions),
        _collisions(charpoly(G) for G in graphs),
    )
    if cross_check:
        report.cross_check_collisions = truncated_collisions(graphs, start_variables)
    return report


def truncated_collisions(graphs: list[WeightedGraph], start: int = 3) -> list[tuple[int, int]]:
    """Pairs whose colouring expansions agree even with one variable per vertex.

    Graphs are grouped by their expansion truncated to ``start`` variables;
    any group with more than one member is re-examined with one more
    variable, up to the vertex count where truncation loses nothing.
    """
    pending = [list(range(len(graphs)))]
    variables = start
    while True:
        groups = []
        for members in pending:
            buckets: dict = {}
            for i in members:
                key = tuple(sorted(stable_partition_types(graphs[i], variables).items()))
                buckets.setdefault(key, []).append(i)
            groups.extend(b for b in buckets.values() if len(b) > 1)
        top = max((graphs[i].n for g in groups for i in g), default=0)
        if not groups or variables >= top:
            return sorted((a, b) for g in groups for k, a in enumerate(g) for b in g[k + 1:])
        pending = groups
        variables += 1
