"""
Relations between neighbors and difference equations
====================================================

Step relations connect the tables at beta and beta +- 1. The difference
equation in x has one factor per measure; each factor must use the beta
level of the polynomials it acts on, otherwise the identity breaks for
more than one measure.
"""

from fractions import Fraction

from mmeixner import Params, check_diffeq_beta, check_diffeq_x
from mmeixner.meixner import relation_sweep

p2 = Params(2, Fraction(3, 2), (Fraction(1, 3), Fraction(1, 2)))

reports = relation_sweep(p2, 4)
print("step relations:", all(reports), len(reports), "instances")

for ordering in [(0, 1), (1, 0)]:
    graded = check_diffeq_x(p2, (1, 1), ordering)
    frozen = check_diffeq_x(p2, (1, 1), ordering, graded=False)
    print("ordering", ordering, "graded:", graded.passed, "same beta everywhere:", frozen.passed)

samples = [1, Fraction(3, 2), 2, Fraction(5, 2), 3]
print("beta equation, graded:", check_diffeq_beta(p2, (2, 1), samples).passed)
