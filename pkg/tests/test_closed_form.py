import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmrate import (
    CardinalityError,
    DomainError,
    Method,
    Modulation,
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

LOG2E = 1.0 / math.log(2.0)
TINY = 1e-30

cardinality = st.integers(min_value=2, max_value=4096)
snr = st.floats(min_value=1e-6, max_value=1e8, allow_nan=False)


@pytest.mark.parametrize("gamma, rate", [(1.0, 0.5), (3.0, 1.0), (15.0, 2.0)])
def test_capacity(gamma, rate):
    r = capacity_awgn(gamma)
    assert r.method is Method.CAPACITY
    assert r.value == pytest.approx(rate, rel=1e-15)


def test_capacity_domain():
    with pytest.raises(DomainError):
        capacity_awgn(0.0)


def test_approx_pam_zero_snr():
    assert approx_pam(16, TINY).value < 1e-25


def test_approx_pam_value():
    # 0.5 * log2(101 / 26)
    assert approx_pam(2, 100.0).value == pytest.approx(0.9788858823053512, rel=1e-14)


@pytest.mark.parametrize("gamma", [0.01, 1.0, 10.0, 100.0, 1e3])
def test_approx_pam_large_m_reaches_capacity(gamma):
    assert abs(approx_pam(2**16, gamma).value - capacity_awgn(gamma).value) < 1e-6


def test_approx_pam_bad_m():
    with pytest.raises(CardinalityError):
        approx_pam(1, 1.0)


@pytest.mark.parametrize("gamma", [1e-3, 0.3, 1.0, 7.0, 1e2, 1e5])
def test_approx_qam4_is_twice_pam2(gamma):
    q = approx_qam(4, gamma)
    assert q.per_symbol == 2 * approx_pam(2, gamma).value
    assert q.dimension == 2


def test_approx_qam16_value():
    # log2(11 / 1.625)
    assert approx_qam(16, 10.0).per_symbol == pytest.approx(2.758991900496205, rel=1e-14)


def test_approx_qam4_saturates():
    assert approx_qam(4, 1e15).per_symbol == pytest.approx(2.0, abs=1e-12)


def test_approx_qam_needs_square():
    with pytest.raises(CardinalityError):
        approx_qam(8, 1.0)


def test_asymptotic_limits_and_value():
    assert approx_asymptotic_bpsk(TINY).value == pytest.approx(0.0, abs=1e-15)
    assert approx_asymptotic_bpsk(800.0).value == 1.0
    assert approx_asymptotic_bpsk(1.0).value == pytest.approx(0.5480589169169519, rel=1e-14)
    assert approx_asymptotic_qpsk(1.0).per_symbol == 2 * approx_asymptotic_bpsk(1.0).value


def test_asymptotic_nondecreasing_and_concave():
    grid = np.linspace(0.01, 30.0, 600)
    v = np.array([approx_asymptotic_bpsk(g).value for g in grid])
    assert np.all(np.diff(v) >= 0)
    assert np.all(np.diff(v, 2) <= 1e-12)


@pytest.mark.parametrize(
    "m, dim, gamma, bound", [(4, 1, 255.0, 2.0), (4, 1, 1.0, 0.5), (64, 2, 3.0, 1.0)]
)
def test_rate_upper_bound(m, dim, gamma, bound):
    r = rate_upper_bound(m, dim, gamma)
    assert r.value == pytest.approx(bound, rel=1e-15)
    assert r.method is Method.UPPER_BOUND


def _central_diff(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)


def _second_diff(f, x, h):
    return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h)


@pytest.mark.parametrize("m", [2, 4, 8, 64])
@pytest.mark.parametrize("gamma", [0.05, 1.0, 10.0, 500.0])
def test_derivative_matches_finite_difference(m, gamma):
    f = lambda g: approx_pam(m, g).value
    fd = _central_diff(f, gamma, 1e-5 * (1 + gamma))
    exact = approx_pam_derivative(m, gamma)
    assert exact > 0
    assert abs(exact - fd) / exact < 1e-6


def test_derivative_at_origin():
    # (log2 e / 2) * (m^2 - 1) / m^2 at m = 2
    assert approx_pam_derivative(2, TINY) == pytest.approx(0.5410106403333612, rel=1e-12)
    assert approx_pam_derivative(2, TINY) == pytest.approx(0.5 * LOG2E * 3 / 4, rel=1e-12)


@pytest.mark.parametrize("m", [2, 4, 8, 64])
@pytest.mark.parametrize("gamma", [0.05, 1.0, 10.0, 500.0])
def test_second_derivative_matches_finite_difference(m, gamma):
    f = lambda g: approx_pam(m, g).value
    fd = _second_diff(f, gamma, 1e-3 * (1 + gamma))
    exact = approx_pam_second_derivative(m, gamma)
    assert exact < 0
    assert abs(exact - fd) / abs(exact) < 1e-4


def test_second_derivative_at_origin():
    assert approx_pam_second_derivative(2, TINY) == pytest.approx(-0.6762633004167016, rel=1e-12)


def test_low_snr_slope_loss():
    for m in (2, 4, 16):
        ratio = low_snr_approx_pam(m, 1e-9).value / capacity_awgn(1e-9).value
        assert ratio == pytest.approx(1 - 1 / m**2, rel=1e-8)
    # the worst case is a quarter of the slope, at m = 2
    assert low_snr_approx_pam(2, 1e-9).value / capacity_awgn(1e-9).value == pytest.approx(0.75)


@pytest.mark.parametrize("m", [2, 4, 64])
def test_low_snr_taylor_consistency(m):
    lo, ref = low_snr_approx_pam(m, 1e-3).value, approx_pam(m, 1e-3).value
    assert abs(lo - ref) / ref < 0.01


def test_mmin_pam():
    r = mmin(100.0, Modulation.PAM)
    assert r.exact_value == 20.0 and r.rounded_pow2 == 32
    assert r.upper_bound == pytest.approx(2 * math.sqrt(101))
    assert mmin(1.0, "pam").exact_value == 2.0
    assert mmin(0.01, "pam").exact_value == 2.0


def test_mmin_qam():
    r = mmin(100.0, "qam")
    assert r.exact_value == 400.0 and r.rounded_pow2 == 1024
    assert r.upper_bound is None
    assert mmin(1.0, "qam").exact_value == 4.0 and mmin(1.0, "qam").rounded_pow2 == 4


@pytest.mark.parametrize("gamma", [1.0, 3.0, 10.0, 1e2, 1e3, 1e4, 1e6])
def test_mmin_rounding_and_bound(gamma):
    r = mmin(gamma, "pam")
    assert r.rounded_pow2 >= r.exact_value
    assert r.exact_value <= r.upper_bound
    rq = mmin(gamma, "qam")
    assert rq.rounded_pow2 >= rq.exact_value
    assert math.isqrt(rq.rounded_pow2) ** 2 == rq.rounded_pow2


@pytest.mark.parametrize("gamma", np.logspace(0, 8, 41))
def test_mmin_adequacy(gamma):
    m = math.ceil(2 * math.sqrt(gamma))
    assert capacity_awgn(gamma).value - approx_pam(m, gamma).value <= 0.5 * math.log2(1.25) + 1e-12


@pytest.mark.parametrize("m", [2, 4, 8])
def test_high_snr_saturation(m):
    for gamma in (100.0 * m**2, 1e3 * m**2, 1e8):
        assert abs(approx_pam(m, gamma).value - math.log2(m)) < 0.01


@settings(max_examples=300, deadline=None)
@given(m=cardinality, gamma=snr)
def test_domination(m, gamma):
    v = approx_pam(m, gamma).value
    assert 0.0 <= v
    assert v <= capacity_awgn(gamma).value + 1e-12
    assert v <= math.log2(m) + 1e-12


@settings(max_examples=300, deadline=None)
@given(m1=cardinality, m2=cardinality, gamma=snr)
def test_monotone_in_m(m1, m2, gamma):
    lo, hi = sorted((m1, m2))
    assert approx_pam(lo, gamma).value <= approx_pam(hi, gamma).value + 1e-15


@settings(max_examples=300, deadline=None)
@given(m=cardinality, gamma=snr)
def test_derivative_signs(m, gamma):
    assert approx_pam_derivative(m, gamma) > 0
    assert approx_pam_second_derivative(m, gamma) < 0


@settings(max_examples=200, deadline=None)
@given(side=st.integers(min_value=2, max_value=256), gamma=snr)
def test_qam_pam_relation(side, gamma):
    assert approx_qam(side * side, gamma).per_symbol == 2 * approx_pam(side, gamma).value
