from hypothesis import given
from hypothesis import strategies as st

from lapforge.corpus import WEIGHT_MENU, SplitMix64, random_forest, random_graph, random_partition, stream

# reference outputs of the published SplitMix64 for seed 0
SEED0 = [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_reference_outputs():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == SEED0
    assert SEED0 == [16294208416658607535, 7960286522194355700, 487617019471545679]


def test_streams_are_reproducible_and_distinct():
    a = [stream(7, "x").next_u64() for _ in range(2)]
    assert a[0] == a[1]
    assert stream(7, "x").next_u64() != stream(7, "y").next_u64()


@given(st.integers(0, 2**64 - 1), st.integers(1, 50))
def test_randrange_bounds(seed, n):
    rng = SplitMix64(seed)
    assert all(0 <= rng.randrange(n) < n for _ in range(20))


@given(st.integers(0, 2**32))
def test_graph_parameters(seed):
    G = random_graph(SplitMix64(seed))
    assert 2 <= G.n <= 8 and 1 <= G.m <= 16
    assert all(e.weight in WEIGHT_MENU for e in G.edges)
    H = random_graph(SplitMix64(seed), max_n=10, connected=True)
    assert len(H.components()) == 1
    assert random_graph(SplitMix64(seed)) == G


@given(st.integers(0, 2**32))
def test_forest_and_partition(seed):
    rng = SplitMix64(seed)
    F = random_forest(rng)
    assert F.is_forest() and F.n <= 10
    assert all(1 <= F.weight(v) <= 4 for v in F.vertices)
    blocks = random_partition(rng, list(F.vertices))
    assert sorted(v for b in blocks for v in b) == list(F.vertices)
