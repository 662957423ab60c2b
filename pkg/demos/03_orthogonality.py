"""
Orthogonality, exactly
======================

Sums against the weights (beta)_x c^x / x! reduce to rational moment
ratios, so every orthogonality condition is an exact zero.
"""

from fractions import Fraction

from mmeixner import Params, orthogonality_check, truncated_sum_check
from mmeixner.moments import contraction, moment_ratio

p2 = Params(2, Fraction(3, 2), (Fraction(1, 3), Fraction(1, 2)))

print([str(moment_ratio(p2.beta, Fraction(1, 3), j)) for j in range(4)])

rep = orthogonality_check(p2, (2, 1), 0)
print("M_(2,1) orthogonal to 1, x under measure 1:", rep.passed)

# the next power is not annihilated
print("j = n_1 contraction:", contraction(p2, (2, 1), 0, 2))

# the plain partial sum, with a rigorous bound on the omitted tail
value, tail = truncated_sum_check(p2, (2, 1), 0, 1, 80)
print(f"partial sum {float(value):.3e}, tail bound {float(tail):.3e}")
