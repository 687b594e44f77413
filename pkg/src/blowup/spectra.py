"""Closed-form spectra of blow-up graphs and the matching eigenvector constructions.

Every function takes base-graph spectra (and degrees) rather than a graph, so
the inputs can come from the Jacobi oracle or from known closed forms.

All vectors use the copy-major ordering of :func:`blowup.graph.blow_up`:
entry ``k*n + v`` belongs to copy ``k`` of vertex ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .eigen import DEFAULT_TOL, Spectrum


@dataclass(frozen=True)
class FormulaSpectrum:
    """Spectrum of a blow-up matrix split into its two parts.

    ``base_part`` holds the ``n`` values transformed from the base graph's
    spectrum; ``bulk_part`` holds ``(value, multiplicity)`` pairs whose
    multiplicities add up to ``n*(t-1)``.
    """

    base_part: tuple[float, ...]
    bulk_part: tuple[tuple[float, int], ...] = field(default_factory=tuple)

    def flatten(self) -> Spectrum:
        values = list(self.base_part)
        for value, mult in self.bulk_part:
            values.extend([value] * mult)
        return Spectrum(values)

    @property
    def size(self) -> int:
        return len(self.base_part) + sum(m for _, m in self.bulk_part)


def _check(t: int, **sizes: int) -> None:
    if t < 1:
        raise ValueError(f"blow-up order must be >= 1, got {t}")
    if len(set(sizes.values())) > 1:
        detail = ", ".join(f"{k}={v}" for k, v in sizes.items())
        raise ValueError(f"size mismatch: {detail}")


def _per_vertex_bulk(values: Sequence[float], t: int) -> tuple[tuple[float, int], ...]:
    if t == 1:
        return ()
    return tuple((float(x), t - 1) for x in values)


def blowup_adjacency_spectrum(base: Sequence[float], n: int, t: int) -> FormulaSpectrum:
    """A(G^(t)): ``t*lambda_i`` plus ``n(t-1)`` zeros."""
    base = list(base)
    _check(t, base=len(base), n=n)
    bulk = ((0.0, n * (t - 1)),) if t > 1 else ()
    return FormulaSpectrum(tuple(t * x for x in base), bulk)


def blowup_adjacency_complement_spectrum(base_complement: Sequence[float], n: int, t: int) -> FormulaSpectrum:
    """A of the complement of G^(t), from the adjacency spectrum of the complement of G."""
    base = list(base_complement)
    _check(t, base_complement=len(base), n=n)
    bulk = ((-1.0, n * (t - 1)),) if t > 1 else ()
    return FormulaSpectrum(tuple(t * x + (t - 1) for x in base), bulk)


def blowup_laplacian_spectrum(base_mu: Sequence[float], degrees: Sequence[int], t: int) -> FormulaSpectrum:
    base = list(base_mu)
    _check(t, base_mu=len(base), degrees=len(degrees))
    return FormulaSpectrum(tuple(t * x for x in base), _per_vertex_bulk([t * d for d in degrees], t))


def blowup_signless_spectrum(base_q: Sequence[float], degrees: Sequence[int], t: int) -> FormulaSpectrum:
    base = list(base_q)
    _check(t, base_q=len(base), degrees=len(degrees))
    return FormulaSpectrum(tuple(t * x for x in base), _per_vertex_bulk([t * d for d in degrees], t))


def blowup_complement_signless_spectrum(
    base_qbar: Sequence[float], degrees: Sequence[int], n: int, t: int
) -> FormulaSpectrum:
    """Q of the complement of G^(t).

    ``base_qbar`` is the signless Laplacian spectrum of the complement of G;
    ``degrees`` are the degrees of G itself. Bulk values ``tn - t*d - 2`` are
    non-negative because ``d <= n - 1``.
    """
    base = list(base_qbar)
    _check(t, base_qbar=len(base), degrees=len(degrees), n=n)
    bulk_values = [t * n - t * d - 2 for d in degrees]
    if t > 1 and min(bulk_values, default=0) < 0:
        raise ValueError(f"degree sequence inconsistent with n={n}: {list(degrees)}")
    return FormulaSpectrum(tuple(t * x + 2 * (t - 1) for x in base), _per_vertex_bulk(bulk_values, t))


def blowup_complement_laplacian_spectrum(
    blowup_mu: Sequence[float], n: int, t: int, tol: float = DEFAULT_TOL
) -> Spectrum:
    """L of the complement of G^(t), from the Laplacian spectrum of G^(t).

    For a graph on ``N`` vertices with Laplacian eigenvalues ``mu``, the
    complement has ``N - mu`` for all but one zero of ``mu``, plus a zero.
    """
    mu = np.asarray(list(blowup_mu), dtype=float)
    size = n * t
    if len(mu) != size:
        raise ValueError(f"size mismatch: got {len(mu)} eigenvalues, expected n*t={size}")
    zero = int(np.argmin(np.abs(mu)))
    if abs(mu[zero]) > tol:
        raise ValueError(f"Laplacian spectrum has no eigenvalue within {tol} of 0")
    rest = np.delete(mu, zero)
    return Spectrum(np.concatenate([size - rest, [0.0]]))


def stacked_eigenvector(x: Sequence[float], t: int) -> np.ndarray:
    """``t`` consecutive copies of ``x``.

    If ``x`` is an eigenvector of L(G), Q(G) or Q(complement of G), the result
    is an eigenvector of the corresponding blow-up matrix for ``t*mu``,
    ``t*q`` and ``t*qbar + 2(t-1)`` respectively.
    """
    if t < 1:
        raise ValueError(f"blow-up order must be >= 1, got {t}")
    return np.tile(np.asarray(x, dtype=float), t)


def difference_eigenvector(i: int, k: int, n: int, t: int) -> np.ndarray:
    """``+1`` on copy ``k-1`` of vertex ``i``, ``-1`` on copy ``k``.

    ``k`` runs over ``1..t-1``. The vector is an eigenvector of L(G^(t)) and
    Q(G^(t)) for ``t*d_i`` and of Q(complement of G^(t)) for ``tn - 2 - t*d_i``.
    """
    if not 0 <= i < n:
        raise ValueError(f"vertex index {i} out of range for n={n}")
    if not 1 <= k <= t - 1:
        raise ValueError(f"copy index {k} out of range 1..{t - 1}")
    e = np.zeros(n * t)
    e[(k - 1) * n + i] = 1.0
    e[k * n + i] = -1.0
    return e
