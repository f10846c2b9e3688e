"""
Schubert cells in the affine Grassmannian
=========================================

Dimensions, closures, parity, minuscule cells, and the dimension data of
the cycles that furnish weight bases.
"""

from satkit import make_root_datum
from satkit import schubert as sch

gl2 = make_root_datum("GL(2)")

for mu in [(1, 0), (1, 1), (2, 0), (1, -1)]:
    print(f"mu = {mu}:")
    print("  cell dimension      ", sch.schubert_dim(gl2, mu))
    print("  parity              ", sch.parity(gl2, mu))
    print("  closure strata      ", sch.closure_cells(gl2, mu))
    print("  minuscule           ", sch.is_minuscule(gl2, mu))
    print("  quasi-minuscule     ", sch.is_quasi_minuscule(gl2, mu))
    print("  opposite codimension", sch.opposite_codim(gl2, mu))

# The quasi-minuscule closure is a cone: two strata, opposite cell of
# codimension one.  Minuscule closures are smooth single cells.

# Cycle dimension table for the 3-dimensional representation attached to
# (2,0): one cycle per weight, dimensions <rho, lam + mu>.
print("\ncycle table for mu = (2,0):")
for lam, dim, count in sch.mv_basis_table(gl2, (2, 0)):
    print(f"  weight {lam}: dimension {dim}, {count} component(s)")

# Convolution fibers obey the semismall bound <rho, |mu.| - lam>.
gl3 = make_root_datum("GL(3)")
bound = sch.satake_fiber_dim_bound(gl3, [(1, 0, 0), (1, 0, 0)], (1, 1, 0))
print("\nfiber bound for std * std over (1,1,0):", bound)
