"""Cyclic Jacobi eigensolver for dense real symmetric matrices.

Self-contained (plane rotations only, no LAPACK), intended for the small
dense matrices this package produces. Convergence is quadratic once the
off-diagonal mass is small, so the sweep limit is generous.
"""

import numpy as np

__all__ = ["jacobi_eigh"]


def _rotation(app: float, aqq: float, apq: float) -> tuple[float, float]:
    """Cosine/sine of the plane rotation annihilating the (p, q) entry."""
    theta = 0.5 * (aqq - app) / apq
    if theta >= 0.0:
        t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
    else:
        t = 1.0 / (theta - np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    return c, t * c


def jacobi_eigh(
    matrix, rel_tol: float = 1e-12, max_sweeps: int = 100
) -> tuple[np.ndarray, np.ndarray]:
    """Diagonalize a real symmetric matrix by cyclic Jacobi rotations.

    Rotates away every off-diagonal entry in row-cyclic order until the
    off-diagonal Frobenius norm is at most ``rel_tol`` times the Frobenius
    norm of the input. Returns ``(eigenvalues, eigenvectors)`` with
    eigenvalues ascending and the eigenvector belonging to
    ``eigenvalues[k]`` in column ``k`` of the orthogonal matrix.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    n = a.shape[0]
    a = 0.5 * (a + a.T)
    vectors = np.eye(n)
    scale = float(np.linalg.norm(a))
    if n == 1 or scale == 0.0:
        return _sorted_pairs(np.diag(a).copy(), vectors)
    threshold = rel_tol * scale
    for _ in range(max_sweeps):
        off = a - np.diag(np.diag(a))
        if float(np.linalg.norm(off)) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                c, s = _rotation(a[p, p], a[q, q], apq)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p = vectors[:, p].copy()
                vec_q = vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s * vec_q
                vectors[:, q] = s * vec_p + c * vec_q
    else:
        raise RuntimeError(f"Jacobi sweep limit ({max_sweeps}) reached before convergence")
    return _sorted_pairs(np.diag(a).copy(), vectors)


def _sorted_pairs(values: np.ndarray, vectors: np.ndarray):
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]
