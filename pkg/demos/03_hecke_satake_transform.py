"""
The spherical Hecke algebra and its Satake transform
====================================================

Convolution of double cosets computed exactly through the character ring
of the dual group, with coefficients in Z[v, 1/v], v = -q^(1/2).
"""

from satkit import make_root_datum
from satkit import hecke_satake as hs

gl2 = make_root_datum("GL(2)")

# The basis {c_mu} of indicator functions, and the {f_mu} basis whose
# coefficients are stalk polynomials; f and c differ first at mu = (2,0).
for mu in [(1, 0), (1, 1), (2, 0)]:
    print(f"f_{mu} =", hs.ic_function(gl2, mu))

# The transform is unitriangular over the dominance order.
for mu in [(1, 1), (1, 0), (2, 0)]:
    print(f"S(c_{mu}) =", hs.satake_transform(gl2, hs.c_basis(gl2, mu)))

# Convolution: the classical rank-2 identity and the quasi-minuscule square,
# whose middle coefficient q - 1 is a Hall polynomial with a negative
# coefficient but nonnegative values at every prime power.
print("\nc_(1,0) * c_(1,0) =", hs.convolve_basis(gl2, (1, 0), (1, 0)))
print("c_(1,-1) * c_(1,-1) =", hs.convolve_basis(gl2, (1, -1), (1, -1)))

# Specializing v^2 = q at an actual prime power gives lattice counts.
prod = hs.convolve_basis(gl2, (1, 0), (1, 0))
for q in (2, 3, 4):
    print(f"values at q = {q}:", hs.evaluate_at(gl2, prod, q))

# Round trip through the character ring is exact.
h = hs.c_basis(gl2, (2, -1))
assert hs.inverse_satake(gl2, hs.satake_transform(gl2, h)) == h
print("\ninverse transform round trip: exact")
