#!/usr/bin/env python3
"""The coupled integer recurrences behind the banded game family.

Both sequences obey s(n) = s(n-2) - s(n-3) + s(n-4).  Their pairwise
linear independence is what forces the equilibria of the banded games to be
fully mixed, and gcd(b_n, b_{n+1}) is the divisor that occasionally
collapses the equilibrium denominator.
"""

from nashrand import asymptotic_checks, recurrence_constants, recurrence_table

T = recurrence_table(44)
C = recurrence_constants()

print("n     a_n       b_n       det B_n   g_n   b_{n+1}/b_n")
for n in range(1, 31):
    ratio = "" if T.b(n) == 0 else f"{T.b(n + 1) / T.b(n):+.6f}"
    print(f"{n:<4} {T.a(n):<9} {T.b(n):<9} {T.det_b(n):<9} {T.g(n):<5} {ratio}")

print(f"\ncharacteristic root rho = {C.rho:.10f}  (|rho| drives the growth)")
print(f"growth rate in bits: log2|rho| = {C.growth_rate_bits:.6f}")
print(f"complex pair z = {C.z:.4f}, |z| = {abs(C.z):.4f} (transient only)")

report = asymptotic_checks(T, C)
print(f"\nratio b_{T.upto + 1}/b_{T.upto} = {report.top_ratio:.10f}")
print(f"  distance to rho: {report.ratio_error:.2e}")
print(f"  alternating sandwich verified up to n = {report.sandwich_checked_upto}:"
      f" {report.sandwich_ok}")
print(f"combination limits: {report.claim_one:.5f} -> {report.claim_one_target:.5f},"
      f" {report.claim_two:.5f} -> {report.claim_two_target:.5f}")

dips = [(n, T.g(n)) for n in range(8, T.upto + 1) if T.g(n) > 1]
print(f"\ngcd dips g_n > 1 (these shrink the equilibrium denominator): {dips}")
print(f"largest g up to {T.upto}: {max(T.g_values)}; "
      f"envelope violations reported: {report.gcd_envelope_violations}")
