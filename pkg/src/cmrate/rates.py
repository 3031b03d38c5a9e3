"""Value types shared by the exact and closed-form rate routines."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["Snr", "as_snr", "Method", "RateResult"]


@dataclass(frozen=True)
class Snr:
    """Signal-to-noise ratio, stored linearly; ``db`` is derived."""

    linear: float

    def __post_init__(self):
        lin = float(self.linear)
        if not math.isfinite(lin) or lin <= 0.0:
            raise DomainError(f"SNR must be finite and > 0, got {self.linear!r}")
        object.__setattr__(self, "linear", lin)

    @classmethod
    def from_db(cls, db: float) -> Snr:
        return cls(10.0 ** (float(db) / 10.0))

    @classmethod
    def from_linear(cls, linear: float) -> Snr:
        return cls(linear)

    @property
    def db(self) -> float:
        return 10.0 * math.log10(self.linear)

    @property
    def noise_variance(self) -> float:
        """Noise variance per dimension for a unit-power constellation."""
        return 1.0 / self.linear


def as_snr(snr: Snr | float) -> Snr:
    """Accept either an :class:`Snr` or a linear SNR value."""
    return snr if isinstance(snr, Snr) else Snr(snr)


class Method(str, enum.Enum):
    EXACT_GH = "exact-gh"
    EXACT_MC = "exact-mc"
    APPROX_SPHERE = "approx"
    APPROX_ASYMPTOTIC = "asymptotic"
    CAPACITY = "capacity"
    UPPER_BOUND = "bound"


@dataclass(frozen=True)
class RateResult:
    """A rate in bits/symbol/dimension and the method that produced it.

    ``dimension`` is 2 for QAM results so that :attr:`per_symbol` can undo
    the per-dimension normalization.  ``std_error`` is only set by the
    Monte-Carlo estimator.
    """

    value: float
    method: Method
    std_error: float | None = None
    dimension: int = 1

    @property
    def per_symbol(self) -> float:
        return self.value * self.dimension

    def __float__(self) -> float:
        return self.value
