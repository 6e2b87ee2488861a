#!/usr/bin/env python3
"""Minimal Mahler measures of integral generators, small worked cases.

Run:  python3 demos/minimal_measures.py
"""

from quartic_mahler import (
    REAL,
    basis_for,
    brute_force_min,
    canonicalize_biquadratic,
    classify_cyclic,
    enumerate_cyclic,
    m_prime,
    min_mahler,
    search_box,
    theoretical_bounds,
)
from quartic_mahler.exactfield import FieldElement, is_integral

# the measure of a field: two-phase search (heuristic window, then the
# coefficient box |x1| <= 4L, |x2| <= 4L/sqrt(D), |x3| <= 4L/rho, |x4| <= 4L/sigma)
field = canonicalize_biquadratic(2, 3)
result = min_mahler(field)
print(f"{field}: M(O_K) = {result.m_value:.6f} = 2 + sqrt3, "
      f"minimizer {result.quarters} (= (sqrt2 + sqrt6)/2)")

# the plain full-box oracle agrees with the engine
box = search_box(field, result.phase1_bound)
oracle = brute_force_min(field, box)
assert oracle.quarters == result.quarters
print(f"oracle over box {box.bounds} agrees ({oracle.scanned} lattice points)")

# a normalized measure can be smaller outside the ring of integers:
f = canonicalize_biquadratic(-7, -14)
index = {r: i for i, r in enumerate(f.radicands, start=1)}
alpha_q, beta_q = [2, 0, 0, 0], [0, 0, 0, 0]
for rad, coeff in ((-7, 2), (-14, 2), (2, 2)):
    alpha_q[index[rad]] = coeff
for rad, coeff in ((-7, 2), (-14, 2)):
    beta_q[index[rad]] = coeff
alpha = FieldElement.from_quarters(basis_for(f), alpha_q)
beta = FieldElement.from_quarters(basis_for(f), beta_q)
print(f"\n{f}: M'(alpha) = {m_prime(alpha):.2f} with alpha integral: {is_integral(alpha)}")
print(f"           M'(beta)  = {m_prime(beta):.2f} with beta integral:  {is_integral(beta)}")
print(f"           M(O_K)    = {min_mahler(f).m_value:.2f}  (alpha is the true minimizer)")

# cyclotomic fields bottom out at measure one
print(f"\nQ(zeta5) as (-1,2,1,5): M(O_K) = {min_mahler(classify_cyclic(-1, 2, 1, 5)).m_value}")

# a sweep with the theoretical envelope
print("\nreal cyclic fields with disc <= 20000:")
for f in enumerate_cyclic(20_000, REAL):
    r = min_mahler(f)
    b = theoretical_bounds(f)
    print(f"  (A,B,C,D)=({f.A},{f.B},{f.C},{f.D})  disc={f.disc:>6}  "
          f"M={r.m_value:9.4f}  envelope=[{b.lower:7.3f}, {b.upper:9.3f}]")
