import pytest

from lapforge.errors import PreconditionError
from lapforge.symfunc import chromatic_polynomial, csf
from lapforge.poly import RatPoly
from lapforge.trees import (
    canonical_form,
    free_trees,
    otter_free_tree_count,
    prufer_decode,
    prufer_free_tree_count,
    rooted_level_sequences,
    rooted_tree_counts,
    tree_census,
    tree_centres,
    tree_graph,
    truncated_collisions,
)

FREE = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
ROOTED = [0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def test_rooted_counts():
    assert rooted_tree_counts(10) == ROOTED
    for n in range(1, 9):
        assert sum(1 for _ in rooted_level_sequences(n)) == ROOTED[n]


def test_free_tree_counts_three_ways():
    for n, count in FREE.items():
        assert otter_free_tree_count(n) == count
        assert len(free_trees(n)) == count
    for n in range(1, 8):
        assert prufer_free_tree_count(n) == FREE[n]


def test_canonical_form_is_isomorphism_invariant():
    star = [(0, 1), (0, 2), (0, 3)]
    relabelled = [(3, 0), (3, 1), (3, 2)]
    path = [(0, 1), (1, 2), (2, 3)]
    assert canonical_form(4, star) == canonical_form(4, relabelled)
    assert canonical_form(4, star) != canonical_form(4, path)
    assert tree_centres(4, path) == [1, 2]
    assert tree_centres(4, star) == [0]


def test_prufer_decode():
    assert sorted(prufer_decode(4, (3, 3))) == [(0, 3), (1, 3), (2, 3)]


def test_tree_chromatic_polynomial():
    for n in range(1, 8):
        for edges in free_trees(n):
            expected = RatPoly([0, 1])
            for _ in range(n - 1):
                expected = expected * RatPoly([-1, 1])
            assert chromatic_polynomial(csf(tree_graph(n, edges))) == expected


def test_small_census():
    rep = tree_census(3)
    assert rep.trees == 1 and not rep.csf_collisions and rep.ok
    rep = tree_census(6, cross_check=True)
    assert rep.trees == 6 and rep.csf_collisions == [] and rep.cross_check_collisions == []


def test_census_range():
    with pytest.raises(PreconditionError):
        tree_census(1)
    with pytest.raises(PreconditionError):
        tree_census(11)


def test_truncation_finds_true_collisions():
    # two copies of the same tree can never be separated
    G = tree_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert truncated_collisions([G, G]) == [(0, 1)]
