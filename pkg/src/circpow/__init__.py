"""circpow: spectra of circuit distance powers, exactly and numerically.

The package computes closed-form spectra of circulant graphs and circuit
distance powers, decides which integers occur as eigenvalues (with exact
multiplicities from gcd / 2-adic arithmetic), constructs eigenspace bases
whose vectors have entries in {-1, 0, 1} and certifies them in exact
integer arithmetic, and cross-validates everything against a dense
numeric eigensolver, including grid scans of path-power conjectures.
"""

__version__ = "0.1.0"

from .eigenbasis import (
    BasisVector,
    EigenbasisReport,
    basis_all_ones,
    basis_for_eigenvalue,
    basis_kernel,
    basis_minus_one,
    basis_minus_two,
    basis_pm_one,
    exact_rank,
    orthogonality_check,
    verify_exact,
)
from .errors import (
    AmbiguousToleranceWarning,
    CircpowError,
    CompleteGraphError,
    DomainError,
    EigenvalueAbsentError,
    InternalConsistencyError,
    NonConvergenceError,
    TheoremDomainError,
)
from .graphs import (
    CirculantGraph,
    CircuitPower,
    PathPower,
    adjacency,
    circuit_power,
    distance_power_by_bfs,
    jump_set,
)
from .integer_eigs import (
    IntegerEigReport,
    IntegralityVerdict,
    integer_spectrum,
    is_integral,
    mult_minus_one,
    mult_minus_three,
    mult_minus_two,
    mult_one,
    mult_two_d,
    nullity,
    ord_p,
)
from .oracle import (
    EigenDecomposition,
    numeric_multiplicity,
    path_power_spectrum,
    symmetric_eigen,
    symmetric_eigenvalues,
)
from .spectrum import (
    EigenvalueGroup,
    GroupedSpectrum,
    MultTwoBound,
    circuit_power_spectrum,
    circulant_spectrum,
    dirichlet_ratio,
    dirichlet_step,
    group_spectrum,
    mult_two_bound,
)
from .survey import (
    ScanConfig,
    ScanRecord,
    scan_integer_eig_theorems,
    scan_integrality,
    scan_mult_two,
    scan_odd_multiplicity,
    scan_path_conjectures,
    smallest_window_hits,
)

__all__ = [name for name in dir() if not name.startswith("_")]
