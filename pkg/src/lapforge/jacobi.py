"""Cyclic Jacobi eigenvalue iteration for small dense symmetric matrices."""

from __future__ import annotations

import math

import numpy as np

from lapforge.errors import ConvergenceError

OFF_TOL = 1e-13
MAX_SWEEPS = 100


def _off(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigh(
    matrix, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS, vectors: bool = False
):
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps visit every off-diagonal pair in row order until the off-diagonal
    Frobenius norm is at most ``tol * max(1, ||A||_F)``.  Returns ascending
    eigenvalues, and the matching orthonormal eigenvectors as columns when
    ``vectors`` is set.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix is not square")
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, float(np.abs(a).max(initial=0.0)))):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    v = np.eye(n)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    sweeps = 0
    while _off(a) > threshold:
        if sweeps == max_sweeps:
            raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # rotate rows and columns p, q
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    if vectors:
        return values[order], v[:, order]
    return values[order]
