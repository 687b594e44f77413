"""Spectra of graph blow-ups, checked against a self-contained Jacobi eigensolver."""

from .eigen import (
    DEFAULT_TOL,
    ComparisonResult,
    ConvergenceError,
    EigenBasis,
    Spectrum,
    compare_spectra,
    eig_symmetric,
    verify_eigenpair,
)
from .formats import (
    GraphFormatError,
    VerificationReport,
    parse_edge_list,
    parse_graph6,
    read_report,
    write_graph6,
    write_report,
)
from .graph import BlowUpParams, Graph, blow_up, complement
from .matrices import adjacency, degree_matrix, kronecker, laplacian, signless_laplacian
from .spectra import (
    FormulaSpectrum,
    blowup_adjacency_complement_spectrum,
    blowup_adjacency_spectrum,
    blowup_complement_laplacian_spectrum,
    blowup_complement_signless_spectrum,
    blowup_laplacian_spectrum,
    blowup_signless_spectrum,
    difference_eigenvector,
    stacked_eigenvector,
)
from .verify import verify_blowup

__version__ = "0.1.0"
