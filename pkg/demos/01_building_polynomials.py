"""
Building multiple Meixner polynomials
=====================================

The polynomials are grown from the constant 1 with the nearest-neighbor
recurrence, entirely in exact rational arithmetic.
"""

from fractions import Fraction

from mmeixner import Params, mm_poly, mm_eval
from mmeixner.meixner import indices, path_sweep

# one measure: these are ordinary Meixner polynomials
p1 = Params(1, Fraction(1), (Fraction(1, 2),))
for n in range(4):
    print(n, mm_poly(p1, (n,)))

# two measures, beta = 3/2
p2 = Params(2, Fraction(3, 2), (Fraction(1, 3), Fraction(1, 2)))
for n in indices(2, 2):
    print(n, mm_poly(p2, n))

print("M_(1,1)(1/2) =", mm_eval(p2, (1, 1), Fraction(1, 2)))

# the table can be built along many lattice paths; they all agree
reports = path_sweep(p2, 4)
print("paths agree:", all(reports), "over", len(reports), "indices")
