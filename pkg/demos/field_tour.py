#!/usr/bin/env python3
"""A tour of exact arithmetic in Galois quartic fields.

Run:  python3 demos/field_tour.py
"""

from quartic_mahler import (
    FieldElement,
    basis_for,
    canonicalize_biquadratic,
    classify_cyclic,
    conjugates,
    is_integral,
    is_primitive,
    minimal_polynomial,
    mul,
)

# --- biquadratic fields ----------------------------------------------------
# Q(sqrt2, sqrt3) has three quadratic subfields; the canonical record keeps
# the ordered radicand triple and the congruence case of its integer ring.
field = canonicalize_biquadratic(2, 3)
print(f"{field}: triple (l,m,n) = {(field.l, field.m, field.n)}, "
      f"case {field.case}, disc = {field.disc}")

# any pair of subfield radicands canonicalizes to the same record
assert canonicalize_biquadratic(2, 6).key == field.key

basis = basis_for(field)
u = FieldElement.from_quarters(basis, (0, 4, 4, 0))     # sqrt2 + sqrt3
print("minimal polynomial of sqrt2 + sqrt3:", minimal_polynomial(u))
print("conjugates:", ", ".join(str(c) for c in conjugates(u)))

half = FieldElement.from_quarters(basis, (0, 2, 0, 2))  # (sqrt2 + sqrt6)/2
print("(sqrt2+sqrt6)/2 integral?", is_integral(half),
      "| minimal polynomial:", minimal_polynomial(half))

# --- cyclic quartic fields -------------------------------------------------
# Q(sqrt(5 + sqrt5)) in the (A, B, C, D) = (1, 1, 2, 5) parameterization.
cyc = classify_cyclic(1, 1, 2, 5)
print(f"\n{cyc}: case {cyc.case}, disc = {cyc.disc}")

cb = basis_for(cyc)
rho = FieldElement.from_coords(cb, (0, 0, 1, 0))
sigma = FieldElement.from_coords(cb, (0, 0, 0, 1))
print("rho * sigma =", mul(rho, sigma), " (equals A*C*sqrt(D) = 2 sqrt5)")

# the fifth root of unity lives in the cyclic field (-1, 2, 1, 5)
z5field = classify_cyclic(-1, 2, 1, 5)
zeta5 = FieldElement.from_quarters(basis_for(z5field), (-1, 1, 1, 1))
print(f"\nzeta5 in {z5field}: minimal polynomial {minimal_polynomial(zeta5)}, "
      f"integral={is_integral(zeta5)}, primitive={is_primitive(zeta5)}")
