"""Normalized equispaced PAM and square QAM constellations.

Every constellation has unit average symbol power per real dimension, so the
SNR is simply the inverse noise variance per dimension.  A square M-QAM is
stored through its per-axis sqrt(M)-PAM levels.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import CardinalityError

__all__ = [
    "MAX_CARDINALITY",
    "Modulation",
    "Constellation",
    "make_pam",
    "make_qam",
    "make_constellation",
    "entropy",
    "level_differences",
    "qam_side",
]

#: Upper limit on M; bounds the O(M^2) pairwise-distance work.
MAX_CARDINALITY = 2**20


class Modulation(str, enum.Enum):
    PAM = "pam"
    QAM = "qam"

    @property
    def dimension(self) -> int:
        return 1 if self is Modulation.PAM else 2


@dataclass(frozen=True)
class Constellation:
    """An equiprobable, equispaced signal set.

    Attributes
    ----------
    kind : Modulation
        ``PAM`` (1-D) or ``QAM`` (2-D, square).
    m : int
        Cardinality M.
    levels : np.ndarray
        Per-axis amplitude levels, read-only.  Length M for PAM and
        sqrt(M) for QAM.
    """

    kind: Modulation
    m: int
    levels: np.ndarray

    @property
    def dimension(self) -> int:
        return self.kind.dimension

    def __repr__(self) -> str:
        return f"Constellation(kind={self.kind.name}, m={self.m})"


def _check_int(m) -> int:
    if isinstance(m, bool) or not float(m).is_integer():
        raise CardinalityError(f"cardinality must be an integer, got {m!r}")
    return int(m)


def _pam_levels(m: int) -> np.ndarray:
    scale = math.sqrt(3.0 / (m * m - 1.0))
    levels = (2.0 * np.arange(1, m + 1) - 1.0 - m) * scale
    levels.setflags(write=False)
    return levels


def make_pam(m: int) -> Constellation:
    """Unit-power M-PAM with levels ``(2k - 1 - m) * sqrt(3 / (m**2 - 1))``."""
    m = _check_int(m)
    if m < 2:
        raise CardinalityError(f"PAM needs m >= 2, got {m}")
    if m > MAX_CARDINALITY:
        raise CardinalityError(f"m={m} exceeds the supported maximum {MAX_CARDINALITY}")
    return Constellation(Modulation.PAM, m, _pam_levels(m))


def qam_side(m: int) -> int:
    """Return sqrt(m) for a square QAM size, raising CardinalityError otherwise."""
    m = _check_int(m)
    side = math.isqrt(m) if m >= 0 else 0
    if m < 4 or side * side != m:
        raise CardinalityError(f"square QAM needs m = k**2 with k >= 2, got {m}")
    return side


def make_qam(m: int) -> Constellation:
    """Square M-QAM built as two orthogonal sqrt(M)-PAM axes."""
    side = qam_side(m)
    if m > MAX_CARDINALITY:
        raise CardinalityError(f"m={m} exceeds the supported maximum {MAX_CARDINALITY}")
    return Constellation(Modulation.QAM, int(m), _pam_levels(side))


def make_constellation(kind: Modulation | str, m: int) -> Constellation:
    kind = Modulation(kind.lower() if isinstance(kind, str) else kind)
    return make_pam(m) if kind is Modulation.PAM else make_qam(m)


def entropy(c: Constellation) -> float:
    """Entropy of equiprobable signalling in bits per symbol per dimension."""
    return math.log2(c.m) / c.dimension


def level_differences(c: Constellation) -> np.ndarray:
    """Signed matrix ``d[i, j] = a_i - a_j`` over the per-axis levels."""
    a = c.levels
    return a[:, None] - a[None, :]
