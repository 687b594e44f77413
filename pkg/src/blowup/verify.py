"""End-to-end check of the blow-up spectra against the Jacobi oracle."""

from __future__ import annotations

import numpy as np

from . import matrices as mx
from .eigen import DEFAULT_TOL, Spectrum, compare_spectra, eig_symmetric, eigenpair_residual, oracle_spectrum
from .formats import FamilyRecord, VerificationReport
from .graph import Graph, blow_up, complement, random_graph
from . import spectra as sp

FAMILIES = ("adjacency", "laplacian", "signless")

# Report order: the five closed forms.
REPORT_FAMILIES = (
    "adjacency",
    "adjacency_complement",
    "laplacian",
    "signless",
    "signless_complement",
)

_BUILDERS = {
    "adjacency": mx.adjacency,
    "laplacian": mx.laplacian,
    "signless": mx.signless_laplacian,
}


def family_matrix(g: Graph, family: str, use_complement: bool = False) -> np.ndarray:
    if family not in _BUILDERS:
        raise ValueError(f"unknown matrix family {family!r}")
    return _BUILDERS[family](complement(g) if use_complement else g)


def formula_spectrum(g: Graph, t: int, family: str, use_complement: bool = False) -> Spectrum:
    """Closed-form spectrum of ``family`` on G^(t) or its complement.

    Base-graph spectra come from the oracle; only the blow-up step uses the
    closed forms.
    """
    n, deg = g.n, g.degrees
    if family == "adjacency":
        if use_complement:
            base = oracle_spectrum(mx.adjacency(complement(g)))
            return sp.blowup_adjacency_complement_spectrum(base, n, t).flatten()
        return sp.blowup_adjacency_spectrum(oracle_spectrum(mx.adjacency(g)), n, t).flatten()
    if family == "laplacian":
        mu = sp.blowup_laplacian_spectrum(oracle_spectrum(mx.laplacian(g)), deg, t).flatten()
        return sp.blowup_complement_laplacian_spectrum(mu, n, t) if use_complement else mu
    if family == "signless":
        if use_complement:
            qbar = oracle_spectrum(mx.signless_laplacian(complement(g)))
            return sp.blowup_complement_signless_spectrum(qbar, deg, n, t).flatten()
        return sp.blowup_signless_spectrum(oracle_spectrum(mx.signless_laplacian(g)), deg, t).flatten()
    raise ValueError(f"unknown matrix family {family!r}")


def _split(name: str) -> tuple[str, bool]:
    family, _, suffix = name.partition("_")
    return family, suffix == "complement"


def eigenvector_checks(g: Graph, t: int):
    """Yield ``(label, matrix, vector, eigenvalue)`` for every constructed eigenvector.

    Covers the stacked vectors built from oracle eigenbases of L(G), Q(G) and
    Q(complement of G), and all difference vectors ``E_i^k``.
    """
    n, deg = g.n, g.degrees
    h = blow_up(g, t)
    hc = complement(h)
    big_l, big_q, big_qc = mx.laplacian(h), mx.signless_laplacian(h), mx.signless_laplacian(hc)

    stacked = (
        ("stacked/laplacian", mx.laplacian(g), big_l, lambda x: t * x),
        ("stacked/signless", mx.signless_laplacian(g), big_q, lambda x: t * x),
        ("stacked/signless_complement", mx.signless_laplacian(complement(g)), big_qc,
         lambda x: t * x + 2 * (t - 1)),
    )
    for label, base, big, shift in stacked:
        for value, x in eig_symmetric(base).pairs:
            yield label, big, sp.stacked_eigenvector(x, t), shift(value)

    for i in range(n):
        for k in range(1, t):
            e = sp.difference_eigenvector(i, k, n, t)
            yield "difference/laplacian", big_l, e, t * deg[i]
            yield "difference/signless", big_q, e, t * deg[i]
            yield "difference/signless_complement", big_qc, e, t * n - 2 - t * deg[i]


def verify_blowup(g: Graph, t: int, tol: float = DEFAULT_TOL, graph_id: str = "") -> VerificationReport:
    h = blow_up(g, t)
    report = VerificationReport(graph_id=graph_id, n=g.n, t=t, tol=tol)
    for name in REPORT_FAMILIES:
        family, comp = _split(name)
        formula = formula_spectrum(g, t, family, comp)
        oracle = oracle_spectrum(family_matrix(h, family, comp))
        result = compare_spectra(formula, oracle, tol)
        report.families.append(
            FamilyRecord(name, formula.tolist(), oracle.tolist(), result.max_deviation, result.equal)
        )

    worst, count = 0.0, 0
    for _, m, v, lam in eigenvector_checks(g, t):
        worst = max(worst, eigenpair_residual(m, v, lam))
        count += 1
    report.eigenvector_residuals = worst
    report.eigenvector_count = count
    return report


def difference_gram_rank(i: int, n: int, t: int) -> int:
    """Rank of the Gram matrix of ``E_i^1 .. E_i^(t-1)``."""
    if t == 1:
        return 0
    e = np.column_stack([sp.difference_eigenvector(i, k, n, t) for k in range(1, t)])
    return int(np.linalg.matrix_rank(e.T @ e))


SUITE_ORDERS = tuple(range(2, 9))
SUITE_DENSITIES = (0.2, 0.5, 0.8)


def random_suite(count: int, seed: int = 0):
    """Yield ``(graph_id, graph)`` for ``count`` Erdos-Renyi graphs.

    Orders are drawn from 2..8 and edge probabilities from 0.2/0.5/0.8.
    """
    rng = np.random.default_rng(seed)
    for idx in range(count):
        n = int(rng.choice(SUITE_ORDERS))
        p = float(rng.choice(SUITE_DENSITIES))
        yield f"er-{seed}-{idx}-n{n}-p{p}", random_graph(n, p, rng)
