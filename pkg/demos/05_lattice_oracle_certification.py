"""
The finite-field lattice oracle
===============================

Brute-force enumeration of lattices over F_q[[t]] in a bounded window,
relative positions by elementary divisors, and certification of the
symbolic Hecke algebra against raw counts.
"""

from satkit import make_root_datum
from satkit import hecke_satake as hs
from satkit import lattice_oracle as lo
from satkit.cli import run_certification

# Every lattice between t L0 and 1/t L0 for GL(2) over F_2, as a canonical
# Hermite form; the census groups them by relative position to L0.
census = lo.cell_census(2, 2, 1)
print("GL(2), q=2, window 1:")
for mu, count in sorted(census.items(), reverse=True):
    print(f"  cell {mu}: {count} lattice(s)")
print("  total:", sum(census.values()))

# Counting points of one cell at several primes and interpolating exposes
# the dimension: the polynomial is monic of degree <2rho, mu>.
poly = lo.interpolate_count(lambda q: lo.count_cell((1, -1), q, 1),
                            [2, 3, 5, 7])
print("\n|cell (1,-1)|(q) =", poly)

# Convolution fibers, counted directly...
for q in (2, 3, 4):
    c = lo.brute_convolution((1, 0), (1, 0), (1, 1), q)
    print(f"fiber count over t^(1,1) at q={q}: {c}")

# ...agree with the symbolic structure constants, here on the whole grid
# of GL(2) pairs with coordinates in [-1, 2].
report = run_certification(2, [2, 3], -1, 2)
print(f"\ncertification: {len(report['rows'])} rows,",
      "all match" if report["all_match"] else "MISMATCH")

# The same number through the Satake transform:
gl2 = make_root_datum("GL(2)")
sym = hs.evaluate_at(gl2, hs.convolve_basis(gl2, (1, 0), (1, 0)), 3)
print("symbolic values at q=3:", sym)
