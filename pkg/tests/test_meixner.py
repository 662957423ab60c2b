import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmeixner.algebra import PolyX, pochhammer
from mmeixner.meixner import (
    PATH_RULES,
    Params,
    check_diffeq_beta,
    check_diffeq_x,
    check_non_nearest,
    check_pairwise,
    check_relation,
    construction_path,
    indices,
    indices_of_degree,
    lattice_path_count,
    mm_eval,
    mm_poly,
    path_sweep,
    recurrence_coefficients,
    table,
)
from mmeixner.testing import corrupt_recurrence

X = PolyX.x()


def meixner_1d(n, beta, c):
    """Monic single-mode Meixner polynomial from its terminating 2F1 series."""
    # M_n(x) = (beta)_n (c/(c-1))^n sum_k (-n)_k (-x)_k / ((beta)_k k!) (1 - 1/c)^k
    out = PolyX()
    falling = PolyX.constant(1)  # (-x)_k
    for k in range(n + 1):
        term = pochhammer(-n, k) / (pochhammer(beta, k) * pochhammer(1, k)) * (1 - 1 / c) ** k
        out = out + falling * term
        falling = falling * (-X + k)
    return out * (pochhammer(beta, n) * (c / (c - 1)) ** n)


def test_frozen_small_polynomial(p1):
    assert mm_poly(p1, (2,)).to_json() == ["2", "-5", "1"]
    assert mm_poly(p1, (0,)) == PolyX.constant(1)


@pytest.mark.parametrize("beta,c", [(Fraction(1), Fraction(1, 2)), (Fraction(5, 2), Fraction(1, 3)),
                                    (Fraction(1, 3), Fraction(4, 5))])
def test_single_mode_matches_hypergeometric_form(beta, c):
    params = Params(1, beta, (c,))
    for n in range(8):
        assert mm_poly(params, (n,)) == meixner_1d(n, beta, c)


def test_frozen_r2_value(p2):
    # by hand: x^2 + a x + b orthogonal to 1 under both measures, whose first two
    # moments are (3/4, 27/16) for c = 1/3 and (3/2, 21/4) for c = 1/2
    p = mm_poly(p2, (1, 1))
    assert p.to_json() == ["15/8", "-19/4", "1"]
    assert mm_eval(p2, (1, 1), Fraction(1, 2)) == Fraction(-1, 4)


def test_params_validation():
    with pytest.raises(ValueError):
        Params(1, Fraction(0), (Fraction(1, 2),))
    with pytest.raises(ValueError):
        Params(1, Fraction(1), (Fraction(1),))
    with pytest.raises(ValueError):
        Params(2, Fraction(1), (Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(ValueError):
        Params(2, Fraction(1), (Fraction(1, 2),))
    with pytest.raises(ValueError):
        Params.parse(1, "0.5", ["1/2"])


def test_shift_beta_reaches_zero(p1):
    down = p1.shift_beta(-1)
    assert down.beta == 0
    assert table(down)((1,)) == X


def test_index_enumeration():
    assert list(indices_of_degree(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(indices(3, 4))) == 35


def test_recurrence_coefficients(p2):
    b, d = recurrence_coefficients(p2, (1, 0), 1)
    beta = Fraction(3, 2)
    assert b == Fraction(1) * (beta + 1) + Fraction(3, 2)
    assert d == [Fraction(3, 4) * 1 * beta, Fraction(0)]


def test_negative_index_is_zero(p2):
    assert table(p2)((-1, 2)).is_zero()


def test_wrong_length_index(p2):
    with pytest.raises(ValueError):
        mm_poly(p2, (1,))


def test_monic_and_degree(p3):
    for n in indices(3, 4):
        p = mm_poly(p3, n)
        assert p.is_monic() and p.degree == sum(n)


@pytest.mark.parametrize("rule", sorted(PATH_RULES))
def test_every_rule_builds_the_same_table(p2, rule):
    base, other = table(p2), table(p2, rule)
    for n in indices(2, 5):
        assert other(n) == base(n)


def test_construction_paths_are_lattice_paths():
    for rule in PATH_RULES.values():
        for n in [(2, 1), (1, 1, 1), (0, 3)]:
            steps = construction_path(n, rule)
            assert sorted(steps) == sorted(i for i, v in enumerate(n) for _ in range(v))


def test_path_sweep_sees_enough_distinct_paths(p3):
    for rep in path_sweep(p3, 4):
        assert rep.passed
        assert rep.notes["distinct_paths"] >= min(3, rep.notes["lattice_paths"])
    assert lattice_path_count((2, 1)) == 3


def test_pairwise_rejects_equal_indices(p2):
    with pytest.raises(ValueError):
        check_pairwise(p2, (1, 1), 0, 0)


@settings(max_examples=25, deadline=None)
@given(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.permutations([0, 1]))
def test_pairwise_property(p2_n, ij):
    params = Params(2, Fraction(3, 2), (Fraction(1, 3), Fraction(1, 2)))
    assert check_pairwise(params, p2_n, *ij).passed


def test_non_nearest_variants(p1, p2):
    assert check_non_nearest(p2, (2, 1), 0).passed
    assert not check_non_nearest(p2, (2, 1), 0, "k-equals-i").passed
    assert not check_non_nearest(p2, (2, 1), 0, "k-not-equal-i").passed
    # even r = 1 needs the k = i term
    assert not check_non_nearest(p1, (2,), 0, "k-not-equal-i").passed


@pytest.mark.parametrize("kind", ["backward1", "forward1", "backward2", "step2", "raising", "lowering"])
def test_relations_hold(p2, kind):
    for n in indices(2, 3):
        if kind in ("backward1", "backward2", "raising"):
            for i in range(2):
                assert check_relation(kind, p2, n, i).passed
        else:
            assert check_relation(kind, p2, n).passed


def test_relation_requires_index(p2):
    with pytest.raises(ValueError):
        check_relation("raising", p2, (1, 0))
    with pytest.raises(ValueError):
        check_relation("sideways", p2, (1, 0))


def test_relations_detect_corrupted_table(p2):
    with corrupt_recurrence():
        assert not all(check_relation("lowering", p2, n).passed for n in indices(2, 3))
        assert not check_pairwise(p2, (1, 1), 0, 1).passed or not check_pairwise(p2, (2, 0), 0, 1).passed
    assert check_relation("lowering", p2, (2, 1)).passed


def test_diffeq_x_single_mode_literal(p1):
    for n in range(5):
        assert check_diffeq_x(p1, (n,), graded=False).passed


def test_diffeq_x_graded_all_orderings(p3):
    for n in indices(3, 3):
        for o in itertools.permutations(range(3)):
            assert check_diffeq_x(p3, n, o).passed


def test_diffeq_x_literal_fails_for_two_modes(p2):
    for o in [(0, 1), (1, 0)]:
        assert not check_diffeq_x(p2, (1, 1), o, graded=False).passed


def test_diffeq_beta(p1, p2):
    samples = [1, Fraction(3, 2), 2, Fraction(5, 2), 3]
    for n in range(5):
        assert check_diffeq_beta(p1, (n,), samples, graded=False).passed
    for n in indices(2, 3):
        for o in [(0, 1), (1, 0)]:
            assert check_diffeq_beta(p2, n, samples, o).passed
    assert not check_diffeq_beta(p2, (1, 1), samples, graded=False).passed


def test_diffeq_validation(p2):
    with pytest.raises(ValueError):
        check_diffeq_x(p2, (1, 0), (0, 0))
    with pytest.raises(ValueError):
        check_diffeq_beta(p2, (1, 0), [1, 1])
