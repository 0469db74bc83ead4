from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lapforge.graph import WeightedGraph

settings.register_profile("lapforge", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("lapforge")

WEIGHTS = [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(3), Fraction(5, 3), Fraction(7)]
weights = st.sampled_from(WEIGHTS)


@st.composite
def graphs(draw, min_n=1, max_n=6, max_m=9, loops=True, integer_vertices=False, unit_edges=False):
    n = draw(st.integers(min_n, max_n))
    vw = st.integers(1, 3) if integer_vertices else weights
    vertices = {i: draw(vw) for i in range(n)}
    ew = st.just(Fraction(1)) if unit_edges else weights
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1]) if n > 1 else st.nothing()
    m = draw(st.integers(0, max_m if (loops or n > 1) else 0))
    edges = [(*draw(pair), draw(ew)) for _ in range(m)]
    return WeightedGraph(vertices, edges)


@st.composite
def connected_graphs(draw, min_n=2, max_n=6, extra=5, loops=False):
    n = draw(st.integers(min_n, max_n))
    vertices = {i: draw(weights) for i in range(n)}
    edges = [(draw(st.integers(0, i - 1)), i, draw(weights)) for i in range(1, n)]
    for _ in range(draw(st.integers(0, extra))):
        a, b = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if a != b or loops:
            edges.append((a, b, draw(weights)))
    return WeightedGraph(vertices, edges)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {text}")
