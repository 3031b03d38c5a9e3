"""
BPSK/QPSK: the Laplace-method closed form
=========================================

``1 - log2(1 + exp(-snr))`` tracks the exact BPSK rate much more closely
than the sphere-packing formula does at M = 2.
"""

# %%
import numpy as np

from cmrate import Snr, approx_asymptotic_bpsk, approx_pam, make_pam, mi_pam_quadrature

bpsk = make_pam(2)
print(f"{'SNR dB':>7} {'exact':>8} {'laplace':>8} {'sphere':>8}")
for db in np.arange(-13, 21, 3):
    snr = Snr.from_db(db)
    print(f"{db:7.1f} {mi_pam_quadrature(bpsk, snr).value:8.4f} "
          f"{approx_asymptotic_bpsk(snr).value:8.4f} {approx_pam(2, snr).value:8.4f}")

# %%
# The absolute error stays below a tenth of a bit.  Relative to the exact rate
# it peaks near 2 dB, where the exact rate is still only ~0.6 bit.
grid = np.arange(-13, 20.01, 0.05)
exact = np.array([mi_pam_quadrature(bpsk, Snr.from_db(d)).value for d in grid])
laplace = np.array([approx_asymptotic_bpsk(Snr.from_db(d)).value for d in grid])
abs_err = np.abs(laplace - exact)
rel_err = abs_err / exact
print(f"max abs error {abs_err.max():.4f} b at {grid[abs_err.argmax()]:.2f} dB")
print(f"max rel error {rel_err.max():.2%} at {grid[rel_err.argmax()]:.2f} dB")
