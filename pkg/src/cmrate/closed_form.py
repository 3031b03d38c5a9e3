"""Closed-form rates: AWGN capacity, sphere-packing and Laplace-method
approximations of the PAM/QAM information rate, and derived quantities.

All rates are in bits/symbol/dimension; QAM results carry ``dimension=2`` so
``result.per_symbol`` gives bits per 2-D symbol.  SNR derivatives are taken
with respect to the linear SNR.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constellation import Modulation, qam_side
from .errors import CardinalityError
from .rates import Method, RateResult, Snr, as_snr

__all__ = [
    "MminResult",
    "capacity_awgn",
    "approx_pam",
    "approx_qam",
    "approx_asymptotic_bpsk",
    "approx_asymptotic_qpsk",
    "rate_upper_bound",
    "approx_pam_derivative",
    "approx_pam_second_derivative",
    "low_snr_approx_pam",
    "mmin",
]

_LOG2E = 1.0 / math.log(2.0)


def _check_m(m) -> int:
    if isinstance(m, bool) or not float(m).is_integer() or m < 2:
        raise CardinalityError(f"need an integer cardinality m >= 2, got {m!r}")
    return int(m)


def capacity_awgn(snr: Snr | float) -> RateResult:
    """Unconstrained AWGN capacity ``0.5 * log2(1 + snr)``."""
    gamma = as_snr(snr).linear
    return RateResult(0.5 * math.log1p(gamma) * _LOG2E, Method.CAPACITY)


def _sphere(m: int, gamma: float) -> float:
    return 0.5 * (math.log1p(gamma) - math.log1p(gamma / (m * m))) * _LOG2E


def approx_pam(m: int, snr: Snr | float) -> RateResult:
    """Sphere-packing approximation ``0.5 * log2((1 + snr) / (1 + snr / m**2))``.

    Never exceeds either the capacity or ``log2(m)``; tends to the former as
    ``m`` grows and to the latter as the SNR grows.
    """
    m = _check_m(m)
    return RateResult(_sphere(m, as_snr(snr).linear), Method.APPROX_SPHERE)


def approx_qam(m: int, snr: Snr | float) -> RateResult:
    """Square M-QAM version: ``log2((1 + snr) / (1 + snr / m))`` per symbol."""
    side = qam_side(m)
    return RateResult(_sphere(side, as_snr(snr).linear), Method.APPROX_SPHERE, dimension=2)


def approx_asymptotic_bpsk(snr: Snr | float) -> RateResult:
    """Laplace-method form for 2-PAM: ``1 - log2(1 + exp(-snr))``."""
    gamma = as_snr(snr).linear
    return RateResult(1.0 - math.log1p(math.exp(-gamma)) * _LOG2E, Method.APPROX_ASYMPTOTIC)


def approx_asymptotic_qpsk(snr: Snr | float) -> RateResult:
    """4-QAM counterpart; ``per_symbol`` is exactly twice the 2-PAM value."""
    bpsk = approx_asymptotic_bpsk(snr)
    return RateResult(bpsk.value, Method.APPROX_ASYMPTOTIC, dimension=2)


def rate_upper_bound(m: int, dimension: int, snr: Snr | float) -> RateResult:
    """``min(capacity, log2(m) / dimension)``, per dimension."""
    m = _check_m(m)
    if dimension not in (1, 2):
        raise ValueError(f"dimension must be 1 or 2, got {dimension!r}")
    bound = min(capacity_awgn(snr).value, math.log2(m) / dimension)
    return RateResult(bound, Method.UPPER_BOUND, dimension=dimension)


def approx_pam_derivative(m: int, snr: Snr | float) -> float:
    m = _check_m(m)
    gamma = as_snr(snr).linear
    m2 = float(m * m)
    return 0.5 * _LOG2E * (m2 - 1.0) / ((1.0 + gamma) * (m2 + gamma))


def approx_pam_second_derivative(m: int, snr: Snr | float) -> float:
    m = _check_m(m)
    gamma = as_snr(snr).linear
    m2 = float(m * m)
    num = (1.0 - m2) * (1.0 + m2 + 2.0 * gamma)
    return 0.5 * _LOG2E * num / ((1.0 + gamma) ** 2 * (m2 + gamma) ** 2)


def low_snr_approx_pam(m: int, snr: Snr | float) -> RateResult:
    """First-order expansion ``(1 - 1/m**2) * log2(e) / 2 * snr``.

    Relative to the capacity slope the loss factor is ``1/m**2``, at most a
    quarter (m = 2).
    """
    m = _check_m(m)
    gamma = as_snr(snr).linear
    return RateResult((1.0 - 1.0 / (m * m)) * 0.5 * _LOG2E * gamma, Method.APPROX_SPHERE)


@dataclass(frozen=True)
class MminResult:
    """Smallest cardinality that gets close to capacity at a given SNR.

    ``rounded_pow2`` is the next power of two (next power of four for QAM,
    keeping sqrt(M) integral).  ``upper_bound`` is ``2*sqrt(1 + snr)`` for PAM
    and ``None`` for QAM.
    """

    exact_value: float
    rounded_pow2: int
    upper_bound: float | None


def _next_power(x: float, base: int) -> int:
    p = base
    while p < x:
        p *= base
    return p


def mmin(snr: Snr | float, kind: Modulation | str = Modulation.PAM) -> MminResult:
    gamma = as_snr(snr).linear
    kind = Modulation(kind.lower() if isinstance(kind, str) else kind)
    if kind is Modulation.PAM:
        exact = 2.0 * max(1.0, math.sqrt(gamma))
        return MminResult(exact, _next_power(exact, 2), 2.0 * math.sqrt(1.0 + gamma))
    exact = 4.0 * max(1.0, gamma)
    return MminResult(exact, _next_power(exact, 4), None)
