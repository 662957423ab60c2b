from fractions import Fraction

import mpmath
import pytest

from mmeixner.algebra import PolyX
from mmeixner.meixner import Params, mm_poly
from mmeixner.moments import (
    contraction,
    moment_ratio,
    orthogonality_check,
    orthogonality_sweep,
    truncated_sum_check,
    weighted_partial_sum,
)


def direct_moment(beta, c, j):
    # (1-c)^beta sum_x x^j (beta)_x c^x / x! by brute-force summation
    beta, c = mpmath.mpf(beta.numerator) / beta.denominator, mpmath.mpf(c.numerator) / c.denominator
    total = mpmath.nsum(lambda x: x ** j * mpmath.rf(beta, x) * c ** x / mpmath.factorial(x),
                        [0, mpmath.inf])
    return total * (1 - c) ** beta


def test_frozen_moment_ratios():
    assert moment_ratio(1, Fraction(1, 2), 0) == 1
    assert moment_ratio(1, Fraction(1, 2), 1) == 1
    assert moment_ratio(1, Fraction(1, 2), 2) == 3


@pytest.mark.parametrize("beta,c", [(Fraction(3, 2), Fraction(1, 3)), (Fraction(2), Fraction(1, 5)),
                                    (Fraction(1, 2), Fraction(3, 4))])
def test_moments_match_brute_force(beta, c):
    mpmath.mp.dps = 30
    for j in range(7):
        assert abs(direct_moment(beta, c, j) - mpmath.mpf(moment_ratio(beta, c, j).numerator)
                   / moment_ratio(beta, c, j).denominator) < mpmath.mpf(10) ** -20


def test_moment_validation():
    with pytest.raises(ValueError):
        moment_ratio(1, Fraction(1), 1)
    with pytest.raises(ValueError):
        moment_ratio(0, Fraction(1, 2), 1)


def test_orthogonality(p2):
    assert all(orthogonality_sweep(p2, 4))


def test_non_vacuous_contraction(p2):
    value = contraction(p2, (1, 1), 0, 1)
    assert value == Fraction(-45, 32)


def test_orthogonality_requires_positive_index(p2):
    with pytest.raises(ValueError):
        orthogonality_check(p2, (0, 2), 0)


def test_non_orthogonal_polynomial_is_caught():
    params = Params(1, Fraction(1), (Fraction(1, 2),))
    # x^2 - 5x + 2 is orthogonal to 1 and x; x^2 - 5x is not
    p = mm_poly(params, (2,)) - 2
    value = sum(a * moment_ratio(1, Fraction(1, 2), l) for l, a in enumerate(p))
    assert value != 0


def test_truncated_sum_diagnostic(p2):
    value, tail = truncated_sum_check(p2, (2, 1), 0, 1, 80)
    assert abs(value) <= tail
    assert tail < Fraction(1, 10 ** 10)


def test_truncated_sum_tail_bound_is_rigorous():
    beta, c = Fraction(3, 2), Fraction(1, 3)
    p = PolyX([3, -1, 1])
    total, tail = weighted_partial_sum(p, beta, c, 30)
    # the partial sum carries no (1-c)^beta factor; the full series is m/(1-c)^beta
    normalized = sum(a * moment_ratio(beta, c, l) for l, a in enumerate(p))
    full = float(normalized) / float(1 - c) ** float(beta)
    assert 0 <= full - float(total) <= float(tail)


def test_truncated_sum_rejects_small_cutoff(p2):
    with pytest.raises(ValueError):
        truncated_sum_check(p2, (2, 1), 0, 1, 1)
    with pytest.raises(ValueError):
        truncated_sum_check(p2, (2, 1), 0, 2, 80)
