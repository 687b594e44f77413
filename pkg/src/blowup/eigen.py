"""Cyclic Jacobi eigensolver and tolerance-aware spectrum comparison.

The solver here is the numerical oracle every closed-form spectrum is checked
against, so it deliberately does not call into LAPACK.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

DEFAULT_TOL = 1e-8
JACOBI_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


class Spectrum:
    """Multiset of real eigenvalues, kept sorted in non-increasing order."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[float]):
        arr = np.sort(np.asarray(list(values), dtype=float))[::-1].copy()
        arr.setflags(write=False)
        self.values = arr

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values.tolist())

    def __getitem__(self, i):
        return self.values[i]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.values, dtype=dtype)

    def sum(self) -> float:
        return float(self.values.sum())

    def tolist(self) -> list[float]:
        return self.values.tolist()

    def __repr__(self) -> str:
        return f"Spectrum({self.tolist()})"


@dataclass(frozen=True)
class EigenBasis:
    """Eigenvalues (non-increasing) with eigenvectors as aligned columns."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    @property
    def dim(self) -> int:
        return len(self.values)

    @property
    def pairs(self) -> list[tuple[float, np.ndarray]]:
        return [(float(self.values[i]), self.vectors[:, i]) for i in range(self.dim)]

    def spectrum(self) -> Spectrum:
        return Spectrum(self.values)


@dataclass(frozen=True)
class ComparisonResult:
    equal: bool
    max_deviation: float
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equal


@lru_cache(maxsize=None)
def _round_robin(dim: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Partition all index pairs of ``range(dim)`` into rounds of disjoint pairs.

    Circle method: one sweep visits every ``(p, q)`` exactly once, and the
    rotations inside a round commute, so they can be applied together.
    """
    m = dim + (dim % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < dim and b < dim:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def eig_symmetric(m: np.ndarray, tol: float = JACOBI_TOL) -> EigenBasis:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Each sweep zeroes every off-diagonal entry once (in round-robin order);
    sweeps repeat until the off-diagonal Frobenius norm drops to
    ``tol * (||m||_F + 1)``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    dim = a.shape[0]
    scale = np.abs(a).max(initial=0.0)
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * max(scale, 1.0)):
        raise ValueError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    v = np.eye(dim)
    threshold = tol * (float(np.linalg.norm(a)) + 1.0)

    sweeps = 0
    while _off_norm(a) > threshold:
        if sweeps == MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi did not converge in {MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {_off_norm(a):.3e} > {threshold:.3e})"
            )
        for p, q in _round_robin(dim):
            apq = a[p, q]
            nz = apq != 0.0
            if not nz.any():
                continue
            tan = np.zeros_like(apq)
            # denormal a_pq overflows tau to inf, whose limit tan = 0 is correct
            with np.errstate(over="ignore"):
                tau = (a[q[nz], q[nz]] - a[p[nz], p[nz]]) / (2.0 * apq[nz])
                tan[nz] = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
            c = 1.0 / np.sqrt(1.0 + tan * tan)
            s = tan * c

            rp, rq = a[p, :], a[q, :]
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p], a[:, q]
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p], v[:, q]
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
        a = 0.5 * (a + a.T)
        sweeps += 1

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return EigenBasis(values[order], v[:, order], sweeps)


def oracle_spectrum(m: np.ndarray, tol: float = JACOBI_TOL) -> Spectrum:
    return eig_symmetric(m, tol).spectrum()


def eigenpair_residual(m: np.ndarray, v: np.ndarray, lam: float) -> float:
    """``||M v - lam v||_inf / max(1, ||v||_inf)``."""
    m = np.asarray(m, dtype=float)
    v = np.asarray(v, dtype=float)
    if m.ndim != 2 or m.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: matrix {m.shape}, vector {v.shape}")
    r = m @ v - lam * v
    return float(np.abs(r).max(initial=0.0) / max(1.0, np.abs(v).max(initial=0.0)))


def verify_eigenpair(m: np.ndarray, v: np.ndarray, lam: float, tol: float = DEFAULT_TOL) -> bool:
    return eigenpair_residual(m, v, lam) <= tol


def compare_spectra(a: Iterable[float], b: Iterable[float], tol: float = DEFAULT_TOL) -> ComparisonResult:
    """Multiset equality under tolerance by sorted pairwise matching."""
    xs = np.sort(np.asarray(list(a), dtype=float))[::-1]
    ys = np.sort(np.asarray(list(b), dtype=float))[::-1]
    if len(xs) != len(ys):
        return ComparisonResult(False, math.inf, f"size mismatch: {len(xs)} vs {len(ys)}")
    dev = float(np.abs(xs - ys).max(initial=0.0))
    if dev <= tol:
        return ComparisonResult(True, dev)
    return ComparisonResult(False, dev, f"max deviation {dev:.3e} exceeds tol {tol:.1e}")
