"""Seeded verification suites over random corpora.

A suite is a list of named checks.  Each check pairs a sampler, which draws
one instance (a graph plus JSON-ready parameters) from its own random
stream, with a property that decides the instance.  Because the property
sees only the graph and the parameters, every failure record can be
re-parsed and re-run in isolation with ``rerun_failure``.

Fixed checks run once per suite and cover worked examples and controls.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from lapforge import bounds, jsonio
from lapforge.charpoly import charpoly, charpoly_dc, delcon_residual, forest_coefficients
from lapforge.corpus import WEIGHT_MENU, SplitMix64, random_forest, random_graph, random_partition, stream
from lapforge.errors import LapforgeError, PreconditionError
from lapforge.graph import VertexId, WeightedGraph, simplify
from lapforge.poly import RatPoly
from lapforge.reduction import addition_reduction_residual, iterated_star_mesh, kron_reduce, star_mesh
from lapforge.spectra import (
    eigenpairs,
    eigenvalues,
    shifted_bounds,
    verify_delcon_chain,
    verify_edge_deletion,
    verify_merge,
    verify_normalised_range,
    verify_quotient,
    verify_subgraph_deletion,
    verify_vertex_weight_decrease,
)
from lapforge.symfunc import chromatic_polynomial, colouring_expansion, csf, phi, psym_expansion
from lapforge.tilings import EXAMPLE_TILING, Rect, guillotine_tiling, kirchhoff_check, new_vertices, substitute_edge, tiling_to_network
from lapforge.trees import tree_census

ROOT_AGREEMENT = 1e-7
MAX_DRAWS = 500
FRACTIONS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(9, 10))

Params = dict[str, Any]
Sampler = Callable[[SplitMix64], "tuple[WeightedGraph, Params] | None"]
Property = Callable[[WeightedGraph, Params], bool]


@dataclass(frozen=True)
class Check:
    name: str
    sample: Sampler
    prop: Property


@dataclass(frozen=True)
class Suite:
    name: str
    checks: tuple[Check, ...]
    fixed: tuple[tuple[str, Callable[[], bool]], ...] = ()
    default_count: int = 100


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[dict] = field(default_factory=list)


@dataclass
class SuiteReport:
    suite: str
    seed: int
    count: int
    checks: list[CheckResult]
    fixed: dict[str, bool]
    items_passed: int

    @property
    def ok(self) -> bool:
        return self.items_passed == self.count and all(self.fixed.values())

    def lines(self) -> list[dict]:
        out = []
        for c in self.checks:
            out.append({"suite": self.suite, "check": c.name, "passed": c.passed, "failed": c.failed})
        for name, ok in self.fixed.items():
            out.append({"suite": self.suite, "fixed": name, "ok": ok})
        for c in self.checks:
            out.extend(c.failures)
        out.append(
            {
                "suite": self.suite,
                "seed": self.seed,
                "count": self.count,
                "passed": self.items_passed,
                "failed": self.count - self.items_passed,
                "ok": self.ok,
            }
        )
        return out

    def summary(self) -> str:
        text = f"{self.suite}: {self.items_passed}/{self.count} pass (seed {self.seed})"
        broken = [c.name for c in self.checks if c.failed] + [k for k, v in self.fixed.items() if not v]
        if broken:
            text += "; failing: " + ", ".join(broken)
        return text


# -- parameter encoding ------------------------------------------------------------


def _vid(v: VertexId) -> list[int]:
    return list(v)


def _unvid(raw) -> VertexId:
    return tuple(raw)


def _frac(x) -> str:
    return str(Fraction(x))


def _draw(sample: Sampler, rng: SplitMix64):
    for _ in range(MAX_DRAWS):
        got = sample(rng)
        if got is not None:
            return got
    raise PreconditionError("sampler rejected every draw")


# -- running -----------------------------------------------------------------------


def run_suite(suite: Suite, seed: int, count: int | None = None) -> SuiteReport:
    """Run every check on ``count`` instances; item ``i`` passes iff all checks pass on it."""
    count = suite.default_count if count is None else count
    if count < 0:
        raise PreconditionError("count must be nonnegative")
    results = []
    bad_items: set[int] = set()
    for check in suite.checks:
        res = CheckResult(check.name)
        for i in range(count):
            rng = stream(seed, f"{suite.name}/{check.name}/{i}")
            G, params = _draw(check.sample, rng)
            ok, detail = _evaluate(check.prop, G, params)
            if ok:
                res.passed += 1
            else:
                res.failed += 1
                bad_items.add(i)
                record = {
                    "suite": suite.name,
                    "check": check.name,
                    "item": i,
                    "graph": jsonio.graph_to_json(G),
                    "params": params,
                }
                if detail:
                    record["error"] = detail
                res.failures.append(record)
        results.append(res)
    fixed = {}
    for name, fn in suite.fixed:
        try:
            fixed[name] = bool(fn())
        except LapforgeError:
            fixed[name] = False
    return SuiteReport(suite.name, seed, count, results, fixed, count - len(bad_items))


def _evaluate(prop: Property, G: WeightedGraph, params: Params) -> tuple[bool, str | None]:
    try:
        return bool(prop(G, params)), None
    except LapforgeError as exc:
        return False, f"{type(exc).__name__}: {exc}"


def rerun_failure(record: Mapping, suite: Suite | None = None) -> bool:
    """Re-parse a failure record and evaluate its property again."""
    suite = suite or SUITES[record["suite"]]
    check = next(c for c in suite.checks if c.name == record["check"])
    G = jsonio.parse_graph(record["graph"])
    return _evaluate(check.prop, G, record["params"])[0]


# -- delcon ------------------------------------------------------------------------


def _sample_nonloop_edge(rng: SplitMix64):
    G = random_graph(rng)
    edges = G.nonloop_edges()
    if not edges:
        return None
    return G, {"edge": rng.choice(edges).id}


def _sample_any(rng: SplitMix64):
    return random_graph(rng), {}


def _sample_small(rng: SplitMix64):
    return random_graph(rng, max_n=7), {}


def _prop_residual(G, p) -> bool:
    return delcon_residual(G, p["edge"]).is_zero()


def _prop_two_routes(G, p) -> bool:
    return charpoly(G) == charpoly_dc(G)


def _prop_forests(G, p) -> bool:
    return charpoly(G) == forest_coefficients(G).signed_poly()


def roots_agree(G: WeightedGraph, tol: float = ROOT_AGREEMENT) -> bool:
    """Real roots of ``P`` match the float eigenvalues of the weighted Laplacian."""
    roots = charpoly(G).real_roots()
    spec = eigenvalues(G)
    return len(roots) == len(spec) and all(abs(a - b) <= tol for a, b in zip(roots, spec))


DELCON = Suite(
    "delcon",
    (
        Check("residual", _sample_nonloop_edge, _prop_residual),
        Check("two_routes", _sample_any, _prop_two_routes),
        Check("forests", _sample_small, _prop_forests),
        Check("roots", _sample_any, lambda G, p: roots_agree(G)),
    ),
    (("k3_forests", lambda: _k3_forests()),),
    default_count=500,
)


def _k3_forests() -> bool:
    K3 = complete_graph(3)
    target = RatPoly([0, 9, -6, 1])
    return charpoly(K3) == target and forest_coefficients(K3).signed_poly() == target


def complete_graph(n: int, weight=1) -> WeightedGraph:
    return WeightedGraph({i: 1 for i in range(n)}, [(i, j, weight) for i in range(n) for j in range(i + 1, n)])


# -- interlace ---------------------------------------------------------------------


def _sample_quotient(kind: str) -> Sampler:
    def sample(rng):
        G = random_graph(rng)
        if kind == "normalised" and G.isolated_vertices():
            return None
        blocks = random_partition(rng, list(G.vertices))
        return G, {"blocks": [[_vid(v) for v in b] for b in blocks]}

    return sample


def _prop_quotient(kind: str) -> Property:
    return lambda G, p: verify_quotient(G, [[_unvid(v) for v in b] for b in p["blocks"]], kind)


def _sample_merge(rng: SplitMix64):
    G = random_graph(rng)
    shared = rng.subset(list(G.vertices))
    fresh = [(max(G.labels()) + 1 + j,) for j in range(rng.randint(0, 3))]
    verts = shared + fresh
    if not verts:
        return None
    H_vertices = {v: rng.choice(WEIGHT_MENU) for v in verts}
    pairs = []
    for _ in range(rng.randint(0, 5)):
        a, b = rng.choice(verts), rng.choice(verts)
        pairs.append((a, b, rng.choice(WEIGHT_MENU)))
    H = WeightedGraph(H_vertices, pairs)
    return G, {"H": jsonio.graph_to_json(H)}


def _sample_subgraph(kind: str) -> Sampler:
    def sample(rng):
        G = random_graph(rng)
        if kind == "normalised" and G.isolated_vertices():
            return None
        R = sorted(e.id for e in rng.subset(list(G.edges)))
        if not R:
            return None
        isolated = list(G.delete_edges(R).isolated_vertices())
        S = isolated if kind == "normalised" else rng.subset(isolated)
        if len(S) == G.n:
            return None
        return G, {"R": R, "S": [_vid(v) for v in S]}

    return sample


def _prop_subgraph(kind: str) -> Property:
    return lambda G, p: verify_subgraph_deletion(G, p["R"], [_unvid(v) for v in p["S"]], kind)


def _sample_decrease(rng: SplitMix64):
    G = random_graph(rng)
    v = rng.choice(G.vertices)
    return G, {"vertex": _vid(v), "weight": _frac(G.weight(v) * rng.choice(FRACTIONS))}


def _sample_no_isolated(rng: SplitMix64):
    G = random_graph(rng)
    if G.isolated_vertices():
        return None
    return G, {}


INTERLACE = Suite(
    "interlace",
    (
        Check("delcon_chain", _sample_nonloop_edge, lambda G, p: verify_delcon_chain(G, p["edge"])),
        Check("edge_deletion", lambda rng: (lambda G: (G, {"edge": rng.randrange(G.m)}))(random_graph(rng)),
              lambda G, p: verify_edge_deletion(G, p["edge"])),
        Check("quotient_weighted", _sample_quotient("weighted"), _prop_quotient("weighted")),
        Check("quotient_combinatorial", _sample_quotient("combinatorial"), _prop_quotient("combinatorial")),
        Check("quotient_normalised", _sample_quotient("normalised"), _prop_quotient("normalised")),
        Check("merge", _sample_merge, lambda G, p: verify_merge(G, jsonio.parse_graph(p["H"]))),
        Check("subgraph_weighted", _sample_subgraph("weighted"), _prop_subgraph("weighted")),
        Check("subgraph_combinatorial", _sample_subgraph("combinatorial"), _prop_subgraph("combinatorial")),
        Check("subgraph_normalised", _sample_subgraph("normalised"), _prop_subgraph("normalised")),
        Check("weight_decrease", _sample_decrease,
              lambda G, p: verify_vertex_weight_decrease(G, _unvid(p["vertex"]), Fraction(p["weight"]))),
        Check("normalised_range", _sample_no_isolated, lambda G, p: verify_normalised_range(G)),
    ),
    default_count=500,
)


# -- reduction ---------------------------------------------------------------------


def _reducible_vertices(G: WeightedGraph) -> list[VertexId]:
    return [v for v in G.vertices if G.incident(v) and not any(e.is_loop for e in G.incident(v))]


def _sample_addition(rng: SplitMix64):
    G = random_graph(rng)
    choices = _reducible_vertices(G)
    if not choices:
        return None
    return G, {"vertex": _vid(rng.choice(choices)), "eta": _frac(rng.choice(WEIGHT_MENU))}


def _sample_elimination(rng: SplitMix64):
    G = random_graph(rng)
    S = rng.subset(_reducible_vertices(G))
    if not S or any(set(c) <= set(S) for c in G.components()):
        return None
    rng.shuffle(S)
    return G, {"order": [_vid(v) for v in S]}


def _prop_kron_vs_star(G, p) -> bool:
    order = [_unvid(v) for v in p["order"]]
    return kron_reduce(G, order) == simplify(iterated_star_mesh(G, order))


def _prop_kron_interlacing(G, p) -> bool:
    S = [_unvid(v) for v in p["order"]]
    lam, mu = eigenvalues(G), eigenvalues(kron_reduce(G, S))
    return shifted_bounds(mu, lam, 0, len(S))


def _prop_kron_components(G, p) -> bool:
    return len(kron_reduce(G, [_unvid(v) for v in p["order"]]).components()) == len(G.components())


STAR_MESH_EXAMPLE = WeightedGraph({1: 2, 2: 3, 3: 5, 4: 1}, [(1, 3, 1), (3, 2, 2), (3, 4, 2), (3, 4, 3)])
STAR_MESH_RESULT = WeightedGraph(
    {1: 2, 2: 3, 4: 1},
    [(1, 2, Fraction(1, 4)), (1, 4, Fraction(1, 4)), (1, 4, Fraction(3, 8)), (2, 4, Fraction(1, 2)), (2, 4, Fraction(3, 4))],
)

REDUCTION = Suite(
    "reduction",
    (
        Check("addition_reduction", _sample_addition,
              lambda G, p: addition_reduction_residual(G, _unvid(p["vertex"]), Fraction(p["eta"])).is_zero()),
        Check("kron_vs_star_mesh", _sample_elimination, _prop_kron_vs_star),
        Check("kron_interlacing", _sample_elimination, _prop_kron_interlacing),
        Check("kron_components", _sample_elimination, _prop_kron_components),
    ),
    (("star_mesh_example", lambda: star_mesh(STAR_MESH_EXAMPLE, 3) == STAR_MESH_RESULT),),
    default_count=200,
)


# -- tilings -----------------------------------------------------------------------


def _sample_substitution(rng: SplitMix64):
    G = random_graph(rng)
    edges = G.nonloop_edges()
    if not edges:
        return None
    e = rng.choice(edges)
    T = guillotine_tiling(Rect(0, 0, e.weight, 1), rng, rng.randint(1, 4))
    weights = {_vid(v)[0]: rng.choice(WEIGHT_MENU) for v in new_vertices(G, T)}
    return G, {
        "edge": e.id,
        "tiling": jsonio.tiling_to_json(T),
        "weights": {str(k): _frac(w) for k, w in weights.items()},
    }


def _prop_substitution(G, p) -> bool:
    T = jsonio.parse_tiling(p["tiling"])
    H = substitute_edge(G, p["edge"], T, {int(k): Fraction(w) for k, w in p["weights"].items()})
    k = H.n - G.n
    return shifted_bounds(eigenvalues(G), eigenvalues(H), 0, k)


def _prop_random_kirchhoff(G, p) -> bool:
    net = tiling_to_network(jsonio.parse_tiling(p["tiling"]))
    return kirchhoff_check(net.graph, net.field, net.bottom, net.top)


def _example_tiling() -> bool:
    net = tiling_to_network(EXAMPLE_TILING)
    expected = [Fraction(1, 2), Fraction(1), Fraction(2, 3), Fraction(3, 2), Fraction(3)]
    return [e.weight for e in net.graph.edges] == expected and kirchhoff_check(net.graph, net.field, net.bottom, net.top)


TILINGS = Suite(
    "tilings",
    (
        Check("substitution_interlacing", _sample_substitution, _prop_substitution),
        Check("kirchhoff", _sample_substitution, _prop_random_kirchhoff),
    ),
    (("example", _example_tiling),),
    default_count=100,
)


# -- bounds ------------------------------------------------------------------------


def _sample_connected(rng: SplitMix64):
    return random_graph(rng, max_n=10, connected=True), {}


def _sample_sweep(rng: SplitMix64):
    G = random_graph(rng, max_n=10, connected=True)
    _, vectors = eigenpairs(G)
    raw = {v: Fraction(float(vectors[i, 1])).limit_denominator(10**6) for i, v in enumerate(G.vertices)}
    f = bounds.project_mean_zero(G, raw)
    if len(set(f.values())) < 2:
        return None
    return G, {"field": jsonio.scalar_field_to_json(f)["field"]}


def _prop_sweep(G, p) -> bool:
    f = jsonio.parse_scalar_field({"field": p["field"]})
    bounds.sweep_cut(G, f)
    return True


def _loopless_small(rng: SplitMix64):
    G = random_graph(rng, max_n=7, p_loop=0.0)
    if G.loops() or not G.edges:
        return None
    return G, {}


def _prop_independence(G, p) -> bool:
    if not bounds.independence_check(G):
        return False
    if not bounds.independence_check(G.with_vertex_weights({v: 1 for v in G.vertices})):
        return False
    if not G.isolated_vertices():
        return bounds.independence_check(G.with_vertex_weights({v: G.degree(v) for v in G.vertices}))
    return True


def _k3_tight() -> bool:
    K3 = complete_graph(3)
    chi, bound, ok = bounds.chromatic_check(K3)
    if not (ok and chi == 3 and abs(bound - 3) <= 1e-9):
        return False
    lam_n = eigenvalues(K3).largest
    size, ibound = bounds.independence_bound(K3, [(0,)], lam_n)
    return size == 1 and abs(ibound - 1) <= 1e-9


BOUNDS = Suite(
    "bounds",
    (
        Check("cheeger", _sample_connected, lambda G, p: bounds.cheeger_check(G)),
        Check("sweep", _sample_sweep, _prop_sweep),
        Check("independence", _loopless_small, _prop_independence),
        Check("chromatic", _loopless_small, lambda G, p: bounds.chromatic_check(G)[2]),
    ),
    (("k3_tight", _k3_tight),),
    default_count=200,
)


# -- csf ---------------------------------------------------------------------------


def _sample_forest(rng: SplitMix64):
    return random_forest(rng), {}


def _integer_multigraph(rng: SplitMix64, max_n: int = 6, max_m: int = 8) -> WeightedGraph:
    G = random_graph(rng, max_n=max_n, max_m=max_m, weights=(Fraction(1), Fraction(2), Fraction(3)))
    return WeightedGraph(G.vertex_weights(), [(e.u, e.v, 1) for e in G.edges])


def _sample_relabel(rng: SplitMix64):
    G = _integer_multigraph(rng)
    labels = sorted(G.labels())
    image = list(labels)
    rng.shuffle(image)
    return G, {"mapping": {str(a): b for a, b in zip(labels, image)}}


def _sample_unweighted(rng: SplitMix64):
    G = random_graph(rng, max_n=5, max_m=8, p_loop=0.0)
    if G.loops():
        return None
    return WeightedGraph({v: 1 for v in G.vertices}, [(e.u, e.v, 1) for e in G.edges]), {}


def _prop_brute(G, p) -> bool:
    return psym_expansion(csf(G), G.n) == {k: Fraction(v) for k, v in colouring_expansion(G, G.n).items()}


def _sample_tree(rng: SplitMix64):
    n = rng.randint(1, 10)
    return WeightedGraph({i: 1 for i in range(n)}, [(rng.randrange(i), i, 1) for i in range(1, n)]), {}


def _prop_tree_chromatic(G, p) -> bool:
    expected = RatPoly([0, 1])
    for _ in range(G.n - 1):
        expected = expected * RatPoly([-1, 1])
    return chromatic_polynomial(csf(G)) == expected


def _k3_negative_control() -> bool:
    K3 = complete_graph(3)
    return phi(csf(K3)) != charpoly(K3)


CSF = Suite(
    "csf",
    (
        Check("forest_bridge", _sample_forest, lambda G, p: phi(csf(G)) == charpoly(G)),
        Check("homogeneous", lambda rng: (_integer_multigraph(rng), {}),
              lambda G, p: csf(G).is_homogeneous(int(G.total_vertex_weight()))),
        Check("relabel_invariant", _sample_relabel,
              lambda G, p: csf(G) == csf(G.relabel({int(a): b for a, b in p["mapping"].items()}))),
        Check("colouring_brute_force", _sample_unweighted, _prop_brute),
        Check("tree_chromatic_polynomial", _sample_tree, _prop_tree_chromatic),
    ),
    (("k3_negative_control", _k3_negative_control),),
    default_count=200,
)


SUITES: dict[str, Suite] = {s.name: s for s in (DELCON, INTERLACE, REDUCTION, TILINGS, BOUNDS, CSF)}
SUITE_NAMES = tuple(SUITES) + ("census",)


# -- census ------------------------------------------------------------------------


def census_lines(n: int) -> tuple[list[dict], bool, str]:
    rep = tree_census(n, cross_check=True)
    line = {
        "suite": "census",
        "n": n,
        "trees": rep.trees,
        "expected": rep.expected,
        "collisions": len(rep.csf_collisions),
        "cross_check_collisions": len(rep.cross_check_collisions or []),
        "charpoly_collisions": len(rep.cospectral_pairs),
        "ok": rep.ok,
    }
    summary = f"census {n}: trees={rep.trees}, collisions={len(rep.csf_collisions)}"
    return [line], rep.ok, summary


__all__ = [
    "Check",
    "CheckResult",
    "SUITES",
    "SUITE_NAMES",
    "Suite",
    "SuiteReport",
    "census_lines",
    "complete_graph",
    "rerun_failure",
    "roots_agree",
    "run_suite",
]
