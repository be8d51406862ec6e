#!/usr/bin/env python3
"""Walk through the photon-number distributions of one-mode Gaussian states.

The same distribution has three independent polynomial representations in
this package (two-index Hermite, Laguerre products, and the direct
covariance sum).  This script builds a few textbook states, prints their
leading weights, and shows the three routes agreeing to near machine
precision.
"""

import math

import numpy as np

from photonstat import (
    OneModeGaussianState,
    XYTState,
    oracle_squeezed_vacuum,
    oracle_thermal,
    pn_centered_xyt,
    pn_hermite,
    pn_laguerre,
    uncertainty_check,
)

print("=" * 72)
print("1. Textbook states through the Hermite route")
print("=" * 72)

for label, state, oracle in [
    ("vacuum", OneModeGaussianState.vacuum(), lambda n: 1.0 if n == 0 else 0.0),
    ("thermal n̄=1", OneModeGaussianState.thermal(1.0), lambda n: oracle_thermal(1.0, n)),
    (
        "squeezed vacuum r=1",
        OneModeGaussianState.squeezed_vacuum(1.0),
        lambda n: oracle_squeezed_vacuum(1.0, n),
    ),
]:
    dist = pn_hermite(state, 8)
    print(f"\n{label}:  classification = {dist.classification.value}")
    print("   n :", "  ".join(f"{n:>9d}" for n in range(6)))
    print("  p_n:", "  ".join(f"{dist.value(n).real:9.6f}" for n in range(6)))
    worst = max(abs(dist.value(n).real - oracle(n)) for n in range(9))
    print(f"  max |p_n - closed form| = {worst:.2e}")

print()
print("=" * 72)
print("2. The three representations agree termwise")
print("=" * 72)

rng = np.random.default_rng(1)
worst = 0.0
for _ in range(20):
    x, y = rng.uniform(0.5, 3.0, 2)
    t = rng.uniform(0.0, 0.4)
    st = XYTState(float(x), float(y), float(t))
    if uncertainty_check(st.to_state()).slack < 0.01:
        continue
    a = pn_hermite(st.to_state(), 40).values
    b = pn_laguerre(st.to_state(), 40).values
    c = pn_centered_xyt(st, 40).values
    for va, vb, vc in zip(a, b, c):
        m = max(abs(va), abs(vb), abs(vc), 1e-300)
        worst = max(worst, abs(va - vb) / m, abs(va - vc) / m)
print(f"\nworst relative spread across 20 random valid states, n <= 40: {worst:.2e}")

print()
print("=" * 72)
print("3. Displaced states keep unit mass")
print("=" * 72)

for state in [
    OneModeGaussianState(1.2, 0.8, 0.2, mean_q=0.5, mean_p=-0.7),
    OneModeGaussianState.squeezed_correlated(0.6, 0.9, mean_q=0.8, mean_p=-0.3),
]:
    dist = pn_hermite(state)
    total = math.fsum(v.real for v in dist.values)
    print(
        f"  state ({state.sigma_pp:.3f}, {state.sigma_qq:.3f}, {state.sigma_pq:.3f}) "
        f"means ({state.mean_q}, {state.mean_p}):  sum p_n = {total:.15f} "
        f"over {len(dist)} terms"
    )
