"""Acceptance criteria, each at its stated size and tolerance.

Every test records a one-line verdict that is printed in the terminal
summary, so a full run shows PASS/FAIL per criterion.
"""

import time

from conftest import ACCEPTANCE
from lapforge.charpoly import charpoly, forest_coefficients
from lapforge.poly import RatPoly
from lapforge.suites import SUITES, Suite, complete_graph, run_suite
from lapforge.trees import otter_free_tree_count, prufer_free_tree_count, tree_census

SEED = 0
FREE_TREES = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def run_checks(suite_name, names, count, fixed=()):
    base = SUITES[suite_name]
    checks = tuple(c for c in base.checks if c.name in names)
    assert len(checks) == len(names)
    fixed_checks = tuple(f for f in base.fixed if f[0] in fixed)
    return run_suite(Suite(base.name, checks, fixed_checks), SEED, count)


def record(k, ok, text):
    ACCEPTANCE[k] = (ok, text)
    assert ok, text


def counts(rep):
    return ", ".join(f"{c.name} {c.passed}/{c.passed + c.failed}" for c in rep.checks)


def test_criterion_01_delcon_identity():
    start = time.perf_counter()
    rep = run_checks("delcon", ["residual"], 500)
    elapsed = time.perf_counter() - start
    record(1, rep.ok and elapsed < 60, f"deletion-contraction residual zero: {counts(rep)}; {elapsed:.1f}s (< 60s)")


def test_criterion_02_matrix_forest():
    rep = run_checks("delcon", ["forests"], 500, fixed=("k3_forests",))
    K3 = complete_graph(3)
    k3 = charpoly(K3) == RatPoly([0, 9, -6, 1]) == forest_coefficients(K3).signed_poly()
    record(2, rep.ok and k3, f"charpoly = signed forest sums (n <= 7): {counts(rep)}; K3 t^3-6t^2+9t {k3}")


def test_criterion_03_two_routes():
    rep = run_checks("delcon", ["two_routes"], 500)
    record(3, rep.ok, f"Bareiss route = deletion-contraction route: {counts(rep)}")


def test_criterion_04_interlacing():
    names = [c.name for c in SUITES["interlace"].checks]
    rep = run_checks("interlace", names, 500)
    record(4, rep.ok, f"interlacing, tol 1e-9: {counts(rep)}")


def test_criterion_05_reduction():
    names = [c.name for c in SUITES["reduction"].checks]
    rep = run_checks("reduction", names, 200, fixed=("star_mesh_example",))
    record(5, rep.ok, f"reduction: {counts(rep)}; star-mesh example {rep.fixed['star_mesh_example']}")


def test_criterion_06_tilings():
    names = [c.name for c in SUITES["tilings"].checks]
    rep = run_checks("tilings", names, 100, fixed=("example",))
    record(6, rep.ok, f"tilings: {counts(rep)}; 6x3 example {rep.fixed['example']}")


def test_criterion_07_bounds():
    names = [c.name for c in SUITES["bounds"].checks]
    rep = run_checks("bounds", names, 200, fixed=("k3_tight",))
    record(7, rep.ok, f"bounds: {counts(rep)}; K3 tight {rep.fixed['k3_tight']}")


def test_criterion_08_csf_bridge():
    rep = run_checks("csf", ["forest_bridge"], 200, fixed=("k3_negative_control",))
    record(8, rep.ok, f"phi(X_F) = P_F on forests: {counts(rep)}; K3 control fails as required {rep.fixed['k3_negative_control']}")


def test_criterion_09_census():
    start = time.perf_counter()
    found, ok = {}, True
    for n in range(2, 11):
        rep = tree_census(n, cross_check=True)
        found[n] = rep.trees
        ok &= rep.ok and rep.trees == FREE_TREES[n] == otter_free_tree_count(n)
        if n <= 7:
            ok &= prufer_free_tree_count(n) == rep.trees
    elapsed = time.perf_counter() - start
    listed = ", ".join(str(found[n]) for n in range(2, 11))
    record(9, ok and elapsed < 300, f"free trees n=2..10: {listed}; no CSF collisions; {elapsed:.1f}s (< 300s)")


def test_criterion_10_roots_vs_jacobi():
    rep = run_checks("delcon", ["roots"], 500)
    record(10, rep.ok, f"exact roots vs Jacobi within 1e-7: {counts(rep)}")

