"""Achievable information rates of PAM/QAM over the AWGN channel.

Exact mutual information by Gauss-Hermite quadrature (with a Monte-Carlo
cross-check), closed-form sphere-packing and Laplace-method approximations,
minimum-cardinality rules, and sum-rate power allocation built on the
approximations' concavity.
"""

from .allocation import (
    AllocationProblem,
    AllocationSolution,
    allocate,
    expand_qam_streams,
    marginal_rate,
    stream_power_at_level,
)
from .closed_form import (
    MminResult,
    approx_asymptotic_bpsk,
    approx_asymptotic_qpsk,
    approx_pam,
    approx_pam_derivative,
    approx_pam_second_derivative,
    approx_qam,
    capacity_awgn,
    low_snr_approx_pam,
    mmin,
    rate_upper_bound,
)
from .constellation import (
    Constellation,
    Modulation,
    entropy,
    level_differences,
    make_constellation,
    make_pam,
    make_qam,
)
from .errors import CardinalityError, CmrateError, ConvergenceError, DomainError, NumericalError
from .exact_mi import (
    McSpec,
    QuadratureSpec,
    gauss_hermite_rule,
    mi_pam_montecarlo,
    mi_pam_quadrature,
    mi_qam,
    mutual_information,
)
from .rates import Method, RateResult, Snr, as_snr

__version__ = "0.1.0"
