"""
Oscillator model on a truncated Fock space
==========================================

Monomials z^n stand for number states, so a_i = d/dz_i and a_i^+ = z_i have
rational matrices. Generating functions of the polynomials become
eigenvectors of the operators H_i.
"""

from fractions import Fraction

import numpy as np

from mmeixner.fock import (
    check_commutator,
    check_conjugation,
    check_eigen,
    check_weak_commute,
    op_matrix,
    spectrum_diag,
    su11_checks,
)
from mmeixner.meixner import Params

p2 = Params(2, Fraction(3, 2), (Fraction(1, 3), Fraction(1, 2)))
N = 6

print("H_1 has", len(op_matrix("H_1", p2, N).entries), "nonzero entries at N =", N)
print("eigen relation at x = 7/2:", check_eigen(p2, Fraction(7, 2), N, 0).passed)

# H_1 and H_2 do not commute, but the commutator kills every eigenvector
print("commutator closed form:", check_commutator(p2, N, 0, 1).passed)
print("short form as operator identity:", check_commutator(p2, N, 0, 1, form="on-shell").passed)
print("weak commutativity:", check_weak_commute(p2, 2, N, 0, 1).passed)

print("conjugation of H_0:", check_conjugation(p2, N, 0).passed)

p1 = Params(1, Fraction(1), (Fraction(1, 2),))
print("su(1,1):", su11_checks(p1, 8).passed)

# floating-point look at the spectrum, low end only
vals = spectrum_diag(Params(1, 1, (Fraction(1, 4),)), 14)
print(np.round(sorted(v.real for v in vals)[:4], 3))
