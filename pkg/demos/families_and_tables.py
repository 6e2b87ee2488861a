#!/usr/bin/env python3
"""Explicit families and the exceptional-k tables.

Run:  python3 demos/families_and_tables.py
"""

from quartic_mahler import family_spec, verify_family_bounds
from quartic_mahler.families import build_family_instance, squarefree_sieve
from quartic_mahler.measure import mahler_measure
from quartic_mahler.rootsofunity import reproduce_tables, table_text

# square-free sieving of polynomial values drives every family
report = squarefree_sieve([(0, 1), (1, 1)], 20)   # k and k+1 both square-free
print("k <= 20 with k(k+1) square-free:", report.ks)

# the exponent-1/4 real family: fields Q(sqrt k, sqrt(k+1)) with candidate
# generator sqrt k + sqrt(k+1)
spec = family_spec("RB-1/4")
for k in spec.sieve(12):
    field, cand = build_family_instance(spec, k)
    target = field.disc ** float(spec.exponent)
    print(f"  k={k:>2}: disc={field.disc:>7}  M(candidate)={mahler_measure(cand):8.3f}"
          f"  sandwich targets [{spec.c1 * target:7.3f}, {spec.c2 * target:8.3f}]")

# full sandwich verification for one family, true minima where cheap
rep = verify_family_bounds(family_spec("IC-1"), 20)
print(f"\nIC-1 (exponent 1): threshold k={rep.threshold_k}, "
      f"observed M/disc in [{rep.observed_lower:.3e}, {rep.observed_upper:.3e}]")

# the twelve exceptional small-k fields with nontrivial roots of unity
print("\nexceptional-k table (fields containing sqrt(-3)):")
print(table_text(reproduce_tables()))
