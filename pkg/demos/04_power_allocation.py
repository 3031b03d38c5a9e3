"""
Power allocation across parallel streams
========================================

The sphere-packing rate is concave in SNR, so maximizing the sum rate of
several streams under a total power budget is a convex problem.  ``allocate``
solves it by bisecting on the common marginal rate (the water level).
"""

# %%
import numpy as np

from cmrate import AllocationProblem, allocate, capacity_awgn, expand_qam_streams

gains = (4.0, 1.0, 0.25, 0.05)
ms = (8, 8, 4, 2)
for budget in (0.5, 2.0, 10.0, 50.0):
    sol = allocate(AllocationProblem(gains, ms, budget))
    print(f"P = {budget:5.1f}: powers {np.round(sol.powers, 4)}, "
          f"sum rate {sol.objective:.4f} b, water level {sol.dual:.4g}")

# %%
# Unlike Gaussian-input water-filling, a small constellation saturates: once a
# stream nears log2(M) extra power is better spent elsewhere.  Compare with the
# unconstrained capacity at the same powers.
sol = allocate(AllocationProblem(gains, ms, 50.0))
for k, (p, g, m) in enumerate(zip(sol.powers, gains, ms)):
    print(f"stream {k}: M={m}, power {p:7.3f}, rate {sol.rates[k]:.3f} b "
          f"(capacity {capacity_awgn(p * g).value if p > 0 else 0.0:.3f})")

# %%
# A square QAM stream is two PAM streams sharing a gain.
g2, m2 = expand_qam_streams([2.0, 0.5], [16, 64])
sol = allocate(AllocationProblem(tuple(g2), tuple(m2), 8.0))
print("QAM streams as PAM axes:", m2, np.round(sol.powers, 4))
