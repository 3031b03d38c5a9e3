"""
How large a constellation does an SNR need?
===========================================

``mmin`` returns the smallest M that gets close to capacity, rounded up to a
practical power of two (power of four for square QAM).
"""

# %%
import math

from cmrate import Snr, approx_pam, capacity_awgn, mmin

print(f"{'SNR dB':>7} {'PAM M':>7} {'rounded':>8} {'bound':>8} {'QAM M':>8} {'rounded':>8}")
for db in (0, 5, 10, 15, 20, 25, 30):
    snr = Snr.from_db(db)
    p, q = mmin(snr, "pam"), mmin(snr, "qam")
    print(f"{db:7d} {p.exact_value:7.1f} {p.rounded_pow2:8d} {p.upper_bound:8.1f} "
          f"{q.exact_value:8.1f} {q.rounded_pow2:8d}")

# %%
# At M = ceil(2 sqrt(snr)) the remaining gap to capacity is at most
# 0.5*log2(1.25) ~= 0.161 bit.
for db in (10, 20, 30):
    snr = Snr.from_db(db)
    m = math.ceil(2 * math.sqrt(snr.linear))
    gap = capacity_awgn(snr).value - approx_pam(m, snr).value
    print(f"{db} dB: M = {m:3d}, gap to capacity {gap:.3f} b")
