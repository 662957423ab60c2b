"""
Cross-checking against the generating function
==============================================

The closed-form generating function is expanded as a truncated multivariate
series whose coefficients are polynomials in x. It never touches the
recurrence, so agreement is a real check.
"""

from fractions import Fraction

from mmeixner import Params, genfun_coeffs, mm_poly
from mmeixner.testing import corrupt_recurrence

p3 = Params(3, Fraction(2), (Fraction(1, 5), Fraction(1, 3), Fraction(1, 2)))
coeffs = genfun_coeffs(p3, 3)
mismatches = [n for n, p in coeffs.items() if p != mm_poly(p3, n)]
print(len(coeffs), "coefficients compared,", len(mismatches), "mismatches")

# a wrong recurrence coefficient is caught at once
with corrupt_recurrence():
    bad = [n for n, p in coeffs.items() if p != mm_poly(p3, n)]
print("with a corrupted recurrence the first mismatch is at", bad[0])
