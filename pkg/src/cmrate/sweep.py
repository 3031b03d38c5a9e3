"""SNR sweeps and approximation-accuracy summaries (the data behind rate-vs-SNR plots)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import closed_form as cf
from .constellation import Modulation, entropy, make_constellation, make_pam
from .errors import CardinalityError
from .exact_mi import McSpec, QuadratureSpec, mi_pam_montecarlo, mutual_information
from .rates import Method, RateResult, Snr

__all__ = ["snr_grid_db", "compute_rate", "SweepRow", "sweep", "AccuracyReport", "accuracy"]


def snr_grid_db(start: float, stop: float, step: float) -> np.ndarray:
    """Inclusive dB grid ``start, start + step, ..., <= stop``."""
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step!r}")
    if stop < start:
        raise ValueError(f"empty range: {start} > {stop}")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(n)


def compute_rate(
    kind: Modulation | str,
    m: int,
    snr: Snr,
    method: Method | str,
    quad: QuadratureSpec = QuadratureSpec(),
    mc: McSpec = McSpec(),
) -> RateResult:
    """Evaluate one method for one (modulation, M, SNR) point, per dimension."""
    c = make_constellation(kind, m)
    method = Method(method)
    qam = c.kind is Modulation.QAM
    if method is Method.EXACT_GH:
        return mutual_information(c, snr, quad)
    if method is Method.EXACT_MC:
        if qam:
            axis = mi_pam_montecarlo(make_pam(len(c.levels)), snr, mc)
            return RateResult(axis.value, axis.method, axis.std_error, dimension=2)
        return mi_pam_montecarlo(c, snr, mc)
    if method is Method.APPROX_SPHERE:
        return cf.approx_qam(m, snr) if qam else cf.approx_pam(m, snr)
    if method is Method.APPROX_ASYMPTOTIC:
        if (qam and m != 4) or (not qam and m != 2):
            raise CardinalityError("the asymptotic approximation covers 2-PAM and 4-QAM only")
        return cf.approx_asymptotic_qpsk(snr) if qam else cf.approx_asymptotic_bpsk(snr)
    if method is Method.CAPACITY:
        return cf.capacity_awgn(snr)
    return cf.rate_upper_bound(m, c.dimension, snr)


@dataclass(frozen=True)
class SweepRow:
    snr_db: float
    snr_linear: float
    modulation: Modulation
    m: int
    method: Method
    rate: float
    std_error: float | None = None


def sweep(
    kind: Modulation | str,
    cardinalities,
    methods,
    snr_db,
    quad: QuadratureSpec = QuadratureSpec(),
    mc: McSpec = McSpec(),
) -> list[SweepRow]:
    """All (M, method, SNR) rows, sorted by ``(m, method name, snr_db)``."""
    kind = Modulation(kind.lower() if isinstance(kind, str) else kind)
    methods = [Method(x) for x in methods]
    for m in cardinalities:
        make_constellation(kind, m)  # fail fast on invalid M
    rows = []
    for m in cardinalities:
        for method in methods:
            for db in snr_db:
                snr = Snr.from_db(float(db))
                r = compute_rate(kind, m, snr, method, quad, mc)
                rows.append(SweepRow(float(db), snr.linear, kind, int(m), method, r.value, r.std_error))
    rows.sort(key=lambda r: (r.m, r.method.value, r.snr_db))
    return rows


@dataclass(frozen=True)
class AccuracyReport:
    """Worst-case deviation of an approximation from the quadrature MI.

    ``max_rel_entropy`` divides the absolute error by log2(M)/dimension;
    ``max_rel_exact`` divides by the exact MI at the same SNR.
    """

    modulation: Modulation
    m: int
    approx: str
    max_abs: float
    max_rel_entropy: float
    max_rel_exact: float
    argmax_abs_db: float
    argmax_rel_exact_db: float


def accuracy(
    kind: Modulation | str,
    m: int,
    snr_db,
    approx: str = "sphere",
    quad: QuadratureSpec = QuadratureSpec(),
) -> AccuracyReport:
    kind = Modulation(kind.lower() if isinstance(kind, str) else kind)
    if approx == "sphere":
        method = Method.APPROX_SPHERE
    elif approx == "asymptotic":
        method = Method.APPROX_ASYMPTOTIC
    else:
        raise ValueError(f"approx must be 'sphere' or 'asymptotic', got {approx!r}")
    c = make_constellation(kind, m)
    snr_db = np.asarray(snr_db, dtype=float)
    exact = np.empty(snr_db.size)
    approx_vals = np.empty(snr_db.size)
    for k, db in enumerate(snr_db):
        snr = Snr.from_db(float(db))
        exact[k] = mutual_information(c, snr, quad).value
        approx_vals[k] = compute_rate(kind, m, snr, method, quad).value
    err = np.abs(approx_vals - exact)
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.where(exact > 0, err / exact, np.inf)
    i_abs = int(np.argmax(err))
    i_rel = int(np.argmax(rel))
    return AccuracyReport(
        kind, int(m), approx,
        float(err[i_abs]), float(err[i_abs] / entropy(c)), float(rel[i_rel]),
        float(snr_db[i_abs]), float(snr_db[i_rel]),
    )
