"""Exact mutual information of equiprobable PAM/QAM over the real AWGN channel.

For a unit-power M-PAM with levels ``a_i`` and noise variance ``1/snr``::

    I = log2(M) - (1/M) sum_j E_z[ log2 sum_i exp(-(d_ij**2 + 2 z d_ij) * snr / 2) ]

with ``d_ij = a_i - a_j`` and ``z ~ N(0, 1/snr)``.  The Gaussian expectation
is evaluated with a Gauss-Hermite rule; :func:`mi_pam_montecarlo` samples the
channel directly and serves as an independent check.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp, roots_hermite

from .constellation import Constellation, Modulation, level_differences, make_pam
from .errors import CardinalityError, NumericalError
from .rates import Method, RateResult, Snr, as_snr

__all__ = [
    "QuadratureSpec",
    "McSpec",
    "gauss_hermite_rule",
    "mi_pam_quadrature",
    "mi_pam_montecarlo",
    "mi_qam",
    "mutual_information",
]

_LN2 = math.log(2.0)
_SQRT_PI = math.sqrt(math.pi)
# elements of the (i, j, node) exponent block evaluated at once
_BLOCK = 1 << 22


@dataclass(frozen=True)
class QuadratureSpec:
    """Gauss-Hermite configuration.

    ``scale`` contracts the abscissae (``t = scale * u``) and reweights them
    so the rule still integrates against ``exp(-t**2)``.  Contracting
    concentrates nodes where the log-sum-exp integrand bends sharply at
    moderate-to-high SNR; with the default 0.5 the 64- and 128-node rules
    agree to ~3e-9 bits for M <= 64 up to 40 dB, where the plain rule
    (``scale=1``) only reaches ~3e-6.
    """

    nodes: int = 64
    scale: float = 0.5

    def __post_init__(self):
        if int(self.nodes) != self.nodes or self.nodes < 8:
            raise ValueError(f"need an integer node count >= 8, got {self.nodes!r}")
        if not 0.0 < self.scale <= 1.0:
            raise ValueError(f"scale must lie in (0, 1], got {self.scale!r}")


@dataclass(frozen=True)
class McSpec:
    """Monte-Carlo configuration (Philox counter-based generator)."""

    samples: int = 10**6
    seed: int = 0

    def __post_init__(self):
        if int(self.samples) != self.samples or self.samples < 10**4:
            raise ValueError(f"need an integer sample count >= 1e4, got {self.samples!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")


@functools.lru_cache(maxsize=32)
def gauss_hermite_rule(nodes: int, scale: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Abscissae ``t`` and weights ``w`` with ``sum(w * f(t)) ~ int f(t) exp(-t**2) dt``.

    The base rule comes from :func:`scipy.special.roots_hermite` (Golub-Welsch
    for small n, asymptotic expansions beyond) and is checked against
    ``sum(w) == sqrt(pi)``.
    """
    u, w = roots_hermite(int(nodes))
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(w))):
        raise NumericalError(f"non-finite Gauss-Hermite rule for n={nodes}")
    if abs(w.sum() - _SQRT_PI) > 1e-12 * _SQRT_PI:
        raise NumericalError(f"Gauss-Hermite weights do not sum to sqrt(pi) for n={nodes}")
    if scale != 1.0:
        with np.errstate(divide="ignore"):
            logw = np.log(w) + (1.0 - scale * scale) * u * u + math.log(scale)
        w = np.exp(logw)
        u = scale * u
        if not np.all(np.isfinite(w)):
            raise NumericalError(f"non-finite scaled weights for n={nodes}, scale={scale}")
    u.setflags(write=False)
    w.setflags(write=False)
    return u, w


def _clamp(value: float, hi: float) -> float:
    return min(max(value, 0.0), hi)


def mi_pam_quadrature(
    c: Constellation, snr: Snr | float, q: QuadratureSpec = QuadratureSpec()
) -> RateResult:
    """Exact M-PAM mutual information (bits/symbol) by Gauss-Hermite quadrature."""
    if c.kind is not Modulation.PAM:
        raise CardinalityError("mi_pam_quadrature expects a PAM constellation; use mi_qam")
    gamma = as_snr(snr).linear
    t, w = gauss_hermite_rule(q.nodes, q.scale)
    d = level_differences(c)
    m = c.m
    d2 = d * d

    # with z = sqrt(2/snr) * t the exponent is -snr*d^2/2 - sqrt(2 snr) d t
    slope = math.sqrt(2.0 * gamma)
    cols = max(1, _BLOCK // (m * t.size))
    total = 0.0
    for j0 in range(0, m, cols):
        dj = d[:, j0:j0 + cols, None]
        expo = -0.5 * gamma * d2[:, j0:j0 + cols, None] - slope * dj * t
        lse = logsumexp(expo, axis=0)  # (columns, nodes), natural log
        total += float(np.sum(lse @ w))
    if not math.isfinite(total):
        raise NumericalError(f"non-finite quadrature sum for M={m}, snr={gamma}")

    mean_log = total / (m * _SQRT_PI * _LN2)
    entropy = math.log2(m)
    return RateResult(_clamp(entropy - mean_log, entropy), Method.EXACT_GH)


def mi_pam_montecarlo(c: Constellation, snr: Snr | float, mc: McSpec = McSpec()) -> RateResult:
    """Monte-Carlo estimate of the M-PAM mutual information with its standard error.

    Draws a uniform symbol ``a_j`` and a received sample ``y = a_j + noise``
    per trial and averages ``log2 M - log2 sum_i p(y|a_i) / p(y|a_j)``.
    """
    if c.kind is not Modulation.PAM:
        raise CardinalityError("mi_pam_montecarlo expects a PAM constellation")
    gamma = as_snr(snr).linear
    sigma = math.sqrt(1.0 / gamma)
    a = np.asarray(c.levels)
    m = c.m

    rng = np.random.Generator(np.random.Philox(int(mc.seed)))
    idx = rng.integers(0, m, size=mc.samples)
    noise = rng.standard_normal(mc.samples)

    aj = a[idx]
    y = aj + sigma * noise
    per_trial = np.empty(mc.samples)
    step = max(1, _BLOCK // m)
    for s0 in range(0, mc.samples, step):
        sl = slice(s0, s0 + step)
        # (y-a_i)^2 - (y-a_j)^2 factored to stay exact when the noise dominates
        diff = (aj[sl, None] - a[None, :]) * (2.0 * y[sl, None] - a[None, :] - aj[sl, None])
        per_trial[sl] = logsumexp(-0.5 * gamma * diff, axis=1)

    rates = math.log2(m) - per_trial / _LN2
    if not np.all(np.isfinite(rates)):
        raise NumericalError(f"non-finite Monte-Carlo samples for M={m}, snr={gamma}")
    estimate = float(rates.mean())
    std_error = float(rates.std(ddof=1) / math.sqrt(mc.samples))
    return RateResult(_clamp(estimate, math.log2(m)), Method.EXACT_MC, std_error=std_error)


def mi_qam(c: Constellation, snr: Snr | float, q: QuadratureSpec = QuadratureSpec()) -> RateResult:
    """Square M-QAM mutual information via its two independent sqrt(M)-PAM axes.

    The returned value is per dimension (equal to the sqrt(M)-PAM rate);
    ``result.per_symbol`` is twice that.
    """
    if c.kind is not Modulation.QAM:
        raise CardinalityError("mi_qam expects a QAM constellation")
    axis = mi_pam_quadrature(make_pam(len(c.levels)), snr, q)
    return RateResult(axis.value, Method.EXACT_GH, dimension=2)


def mutual_information(
    c: Constellation, snr: Snr | float, q: QuadratureSpec = QuadratureSpec()
) -> RateResult:
    """Quadrature MI in bits/symbol/dimension for either modulation."""
    if c.kind is Modulation.PAM:
        return mi_pam_quadrature(c, snr, q)
    return mi_qam(c, snr, q)
