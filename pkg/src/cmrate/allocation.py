"""Sum-rate power allocation over parallel streams using the sphere-packing rate.

Each stream k carries an M_k-PAM signal over a channel with power gain g_k, so
its rate at power p is ``approx_pam(M_k, p * g_k)``.  Because that rate is
strictly concave and increasing in p, the optimum under ``sum(p) = P`` is the
unique point where every active stream has the same marginal rate ``lam``.
For fixed ``lam`` each stream's power solves a quadratic, so the whole
problem reduces to a 1-D bisection on ``lam``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .closed_form import approx_pam
from .constellation import qam_side
from .errors import CardinalityError, ConvergenceError, DomainError

__all__ = [
    "AllocationProblem",
    "AllocationSolution",
    "marginal_rate",
    "stream_power_at_level",
    "allocate",
    "expand_qam_streams",
]

_HALF_LOG2E = 0.5 / math.log(2.0)
MAX_ITERATIONS = 200


@dataclass(frozen=True)
class AllocationProblem:
    gains: tuple[float, ...]
    constellations: tuple[int, ...]
    budget: float
    tolerance: float = 1e-10

    def __post_init__(self):
        gains = tuple(float(g) for g in self.gains)
        ms = tuple(self.constellations)
        if len(gains) == 0 or len(gains) != len(ms):
            raise ValueError(
                f"gains and constellations must be non-empty and equally long "
                f"({len(gains)} vs {len(ms)})"
            )
        if not all(math.isfinite(g) and g > 0 for g in gains):
            raise DomainError("all gains must be finite and > 0")
        for m in ms:
            if isinstance(m, bool) or not float(m).is_integer() or m < 2:
                raise CardinalityError(f"stream cardinalities must be integers >= 2, got {m!r}")
        if not (math.isfinite(self.budget) and self.budget > 0):
            raise DomainError(f"budget must be finite and > 0, got {self.budget!r}")
        if not self.tolerance > 0:
            raise DomainError(f"tolerance must be > 0, got {self.tolerance!r}")
        object.__setattr__(self, "gains", gains)
        object.__setattr__(self, "constellations", tuple(int(m) for m in ms))
        object.__setattr__(self, "budget", float(self.budget))


@dataclass(frozen=True)
class AllocationSolution:
    powers: np.ndarray
    rates: np.ndarray
    objective: float
    dual: float
    kkt_residual: float
    iterations: int = field(default=0, compare=False)


def marginal_rate(m: int, g: float, p: float) -> float:
    """d/dp of ``approx_pam(m, p*g)``, in bits per unit power."""
    if p < 0:
        raise DomainError(f"power must be >= 0, got {p!r}")
    m2 = float(m) * m
    x = p * g
    return g * _HALF_LOG2E * (m2 - 1.0) / ((1.0 + x) * (m2 + x))


def stream_power_at_level(m: int, g: float, lam: float) -> float:
    """Power at which the stream's marginal rate equals ``lam`` (0 if never).

    Solves ``(1 + x)(m**2 + x) = c`` with ``c = g*log2(e)/2*(m**2 - 1)/lam``
    for ``x = p*g`` using the cancellation-free root form.
    """
    if not lam > 0:
        raise DomainError(f"water level must be > 0, got {lam!r}")
    m2 = float(m) * m
    c = g * _HALF_LOG2E * (m2 - 1.0) / lam
    if c <= m2:
        return 0.0
    x = 2.0 * (c - m2) / ((m2 + 1.0) + math.sqrt((m2 - 1.0) ** 2 + 4.0 * c))
    return x / g


def _demand(prob: AllocationProblem, lam: float) -> np.ndarray:
    return np.array(
        [stream_power_at_level(m, g, lam) for g, m in zip(prob.gains, prob.constellations)]
    )


def allocate(prob: AllocationProblem) -> AllocationSolution:
    """Maximize ``sum_k approx_pam(m_k, p_k g_k)`` subject to ``sum p = P``, ``p >= 0``.

    Raises
    ------
    ConvergenceError
        If no bracket is found, or the power mismatch is still above
        ``prob.tolerance`` after 200 bisection steps.
    """
    budget = prob.budget
    # above the largest zero-power marginal nobody transmits
    hi = max(marginal_rate(m, g, 0.0) for g, m in zip(prob.gains, prob.constellations))
    lo = hi
    for _ in range(MAX_ITERATIONS):
        lo *= 0.5
        if _demand(prob, lo).sum() >= budget:
            break
    else:
        raise ConvergenceError("could not bracket the water level")

    lam = lo
    powers = _demand(prob, lam)
    iterations = 0
    while abs(powers.sum() - budget) > prob.tolerance * budget:
        if iterations >= MAX_ITERATIONS:
            raise ConvergenceError(
                f"power mismatch {abs(powers.sum() - budget):.3e} after {iterations} steps"
            )
        lam = math.sqrt(lo * hi)
        if not lo < lam < hi:
            lam = 0.5 * (lo + hi)
        powers = _demand(prob, lam)
        if powers.sum() >= budget:
            lo = lam
        else:
            hi = lam
        iterations += 1

    powers = powers * (budget / powers.sum())
    rates = np.array(
        [approx_pam(m, p * g).value if p > 0 else 0.0
         for p, g, m in zip(powers, prob.gains, prob.constellations)]
    )
    active = powers > 0
    marg = np.array(
        [marginal_rate(m, g, p) for p, g, m in zip(powers, prob.gains, prob.constellations)]
    )
    kkt = float(np.max(np.abs(marg[active] - lam))) if active.any() else 0.0
    return AllocationSolution(powers, rates, float(rates.sum()), lam, kkt, iterations)


def expand_qam_streams(gains, constellations) -> tuple[list[float], list[int]]:
    """Split each square M-QAM stream into two sqrt(M)-PAM streams of equal gain."""
    out_g, out_m = [], []
    for g, m in zip(gains, constellations):
        side = qam_side(m)
        out_g += [g, g]
        out_m += [side, side]
    return out_g, out_m
