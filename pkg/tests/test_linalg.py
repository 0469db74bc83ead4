from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lapforge.linalg import bareiss_det, matmul, principal_submatrix, solve

entries = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def leibniz(M):
    from itertools import permutations

    n = len(M)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction((-1) ** inv)
        for i in range(n):
            term *= M[i][p[i]]
        total += term
    return total


def test_known_determinants():
    assert bareiss_det([[2, 0], [0, 3]]) == 6
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0
    assert bareiss_det([]) == 1


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_permutation_expansion(M):
    assert bareiss_det(M) == leibniz(M)


def test_solve_and_matmul():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    B = [[Fraction(1)], [Fraction(2)]]
    X = solve(A, B)
    assert matmul(A, X) == B
    with pytest.raises(ZeroDivisionError):
        solve([[1, 2], [2, 4]], [[1], [1]])


def test_principal_submatrix():
    M = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert principal_submatrix(M, [0, 2]) == [[1, 3], [7, 9]]
