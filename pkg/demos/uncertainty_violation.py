#!/usr/bin/env python3
"""What happens to the photon 'distribution' when the quadrature
uncertainty relation det Sigma >= 1/4 is violated.

The violation is parameterized by tau: det Sigma = 1/4 - tau.  Crossing
tau = 0 the weights first pick up negative entries (the odd terms flip at
first order in tau) and, deeper in, become purely imaginary because of the
half-integer power of a negative base.  Entropies are then formed with the
multi-branch complex logarithm.
"""

from photonstat import (
    PartitionScheme,
    complex_information,
    from_tau,
    mean_photon_xyt,
    pn_centered_xyt,
    pn_violation,
    uncertainty_check,
)

Y = 5.0

print("=" * 72)
print(f"1. Sweeping tau at y = {Y}, t = 0 (det Sigma = 1/4 - tau)")
print("=" * 72)
print("\n   tau      x        slack   classification   min Re p_n   max |Im p_n|")
for tau in (-0.5, -0.001, 0.0, 0.001, 0.5, 2.0, 3.5, 4.0):
    xyt = from_tau(tau, Y, 0.0)
    slack = uncertainty_check(xyt.to_state()).slack
    dist = pn_centered_xyt(xyt, 64)
    min_re = min(v.real for v in dist.values)
    max_im = max(abs(v.imag) for v in dist.values)
    print(
        f"  {tau:+6.3f}  {xyt.x:+7.4f}  {slack:+7.3f}   {dist.classification.value:12s}"
        f"   {min_re:+.3e}   {max_im:.3e}"
    )
print("\n  The Probability region ends exactly at tau = 0.")

print()
print("=" * 72)
print("2. The closed complex family at tau = 4")
print("=" * 72)
dist = pn_violation(4.0, Y, 0.0, 12)
print("\n   2l    p_2l")
for l in range(6):
    v = dist.values[2 * l]
    print(f"   {2 * l:2d}   {v.real:+.3e} {v.imag:+.3e}j")
print(f"\n  classification: {dist.classification.value} (purely imaginary weights)")
mean = mean_photon_xyt(-0.75, Y)
print(
    f"  rational mean value: {mean:+.9f}  (|mean| = 23/57;"
    " the companion text quotes the negative sign)"
)

print()
print("=" * 72)
print("3. Complex information under both subsystem readings")
print("=" * 72)
dist = pn_violation(4.0, Y, 0.0)
scheme = PartitionScheme(2)
for reading in ("blocked", "verbatim"):
    rep = complex_information(dist, scheme, branch=0, reading=reading)
    print(
        f"\n  reading = {reading:8s}: I_- = {rep.information.real:+.6f} "
        f"{rep.information.imag:+.6f}j   |I_-| = {abs(rep.information):.6f}"
    )
print(
    "\n  Both readings land well away from zero: the measured distance from\n"
    "  the quoted zero value is reported, not assumed."
)
print("\n  branch dependence (blocked reading):")
for b in (-1, 0, 1):
    rep = complex_information(dist, scheme, branch=b)
    print(f"    branch {b:+d}: I_- = {rep.information.real:+.6f} {rep.information.imag:+.6f}j")
