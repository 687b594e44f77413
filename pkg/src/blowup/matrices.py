"""Dense matrix builders for a graph: A, D, L = D - A, Q = D + A, J, I and kron.

Matrices are plain ``float64`` numpy arrays. Builders produce exactly
symmetric output (integer-valued entries), which is what the Jacobi solver
in :mod:`blowup.eigen` expects.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.edges:
        u, v = np.array(sorted(g.edges)).T
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.asarray(g.degrees, dtype=float))


def laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) - adjacency(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) + adjacency(g)


def ones(n: int) -> np.ndarray:
    """All-ones matrix ``J_n``."""
    return np.ones((n, n))


def identity(n: int) -> np.ndarray:
    return np.eye(n)


def kronecker(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Block matrix whose ``(i, j)`` block is ``a[i, j] * b``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError("kronecker expects two square matrices")
    p, q = a.shape[0], b.shape[0]
    # out[i*q + r, j*q + s] = a[i, j] * b[r, s]
    return np.einsum("ij,rs->irjs", a, b).reshape(p * q, p * q)


def copy_major_to_vertex_major(n: int, t: int) -> np.ndarray:
    """Permutation ``perm`` with ``perm[k*n + v] = v*t + k``.

    With ``P`` the matching permutation matrix, ``M[perm][:, perm]`` style
    reindexing turns ``kron(J_t, A)`` into ``kron(A, J_t)``.
    """
    k, v = np.divmod(np.arange(n * t), n)
    return v * t + k


def is_symmetric(m: np.ndarray) -> bool:
    return m.ndim == 2 and m.shape[0] == m.shape[1] and np.array_equal(m, m.T)
