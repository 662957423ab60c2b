"""Orthogonality against the Meixner-type measures, checked exactly.

The measure for mode i has weights (beta)_x c_i^x / x! on x = 0, 1, ...
Its moments are m_j = (1-c)^(-beta) G_j(c), with G_0 = 1 and
G_{j+1} = c G_j' + beta c/(1-c) G_j (apply c d/dc to the total mass).
The factor (1-c)^(-beta) is common to every sum, so orthogonality reduces
to a finite rational identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import PolyX, RatFuncC, Scalar
from .meixner import MultiIndex, Params, indices, mm_poly
from .report import RelationReport, combine

_C = PolyX.x()


@dataclass
class MomentVector:
    """G_0..G_j as rational functions of c for a fixed beta."""

    beta: Fraction
    G: list = field(default_factory=list)

    @classmethod
    def build(cls, beta: Scalar, j_max: int) -> "MomentVector":
        beta = Fraction(beta)
        drift = RatFuncC(_C * beta, 1 - _C)
        theta = RatFuncC(_C)
        G = [RatFuncC.constant(1)]
        for _ in range(j_max):
            g = G[-1]
            G.append(theta * g.derivative() + drift * g)
        return cls(beta, G)

    def ratio(self, c: Scalar, j: int) -> Fraction:
        return self.G[j](c)


@lru_cache(maxsize=None)
def _moment_vector(beta: Fraction, j_max: int) -> MomentVector:
    return MomentVector.build(beta, j_max)


def moment_vector(beta: Scalar, j_max: int) -> MomentVector:
    # round up so that nearby requests share one cached vector
    return _moment_vector(Fraction(beta), max(8, 1 << (j_max - 1).bit_length()))


def moment_ratio(beta: Scalar, c: Scalar, j: int) -> Fraction:
    """m_j / m_0 for the weight (beta)_x c^x / x!."""
    c = Fraction(c)
    if not 0 < c < 1:
        raise ValueError("c must lie in (0, 1)")
    if Fraction(beta) <= 0:
        raise ValueError("beta must be positive")
    return moment_vector(beta, j).ratio(c, j)


def contraction(params: Params, n: MultiIndex, i: int, j: int) -> Fraction:
    """(1-c_i)^beta * sum_x M_n(x) x^j (beta)_x c_i^x / x!, exactly."""
    p = mm_poly(params, n) * PolyX.monomial(j)
    return sum((a * moment_ratio(params.beta, params.c[i], l) for l, a in enumerate(p)),
               Fraction(0))


def orthogonality_check(params: Params, n: MultiIndex, i: int) -> RelationReport:
    if n[i] < 1:
        raise ValueError(f"orthogonality for mode {i} needs n_i >= 1, got n = {n}")
    parts = []
    for j in range(n[i]):
        value = contraction(params, n, i, j)
        parts.append(RelationReport("orthogonality", {"n": tuple(n), "i": i, "j": j},
                                    value == 0, value, Fraction(0)))
    return combine("orthogonality", {"n": tuple(n), "i": i}, parts)


def orthogonality_sweep(params: Params, max_degree: int) -> list:
    return [orthogonality_check(params, n, i)
            for n in indices(params.r, max_degree)
            for i in range(params.r) if n[i] > 0]


def weighted_partial_sum(p: PolyX, beta: Scalar, c: Scalar, x_max: int):
    """Exact sum_{x<=x_max} p(x)(beta)_x c^x/x! and a bound on the omitted tail.

    For x >= x_max+1 > R (R a Cauchy bound on the roots of p) consecutive
    terms shrink at least by

        q = (1 + 1/(x_max+1-R))^deg(p) * c * max(1, (beta+x_max+1)/(x_max+2)),

    so the tail is at most |t_{x_max+1}| / (1 - q).
    """
    beta, c = Fraction(beta), Fraction(c)
    x0 = x_max + 1
    if p.is_zero():
        return Fraction(0), Fraction(0)
    lead = abs(p.leading)
    root_bound = 1 + max((abs(a) / lead for a in p.coeffs[:-1]), default=Fraction(0))
    if x0 <= root_bound:
        raise ValueError(f"x_max={x_max} is inside the root bound {root_bound}")
    q = (1 + 1 / (x0 - root_bound)) ** p.degree * c * max(Fraction(1), (beta + x0) / (x0 + 1))
    if q >= 1:
        raise ValueError(f"x_max={x_max} too small: term ratio bound {q} >= 1")
    total = Fraction(0)
    w = Fraction(1)  # (beta)_x c^x / x!
    for x in range(x0):
        total += p(x) * w
        w = w * (beta + x) * c / (x + 1)
    tail = abs(p(x0) * w) / (1 - q)
    return total, tail


def truncated_sum_check(params: Params, n: MultiIndex, i: int, j: int, x_max: int):
    """Partial sum of the orthogonality series and its tail bound.

    Diagnostic only: the caller compares ``abs(value) <= tail_bound``.
    """
    if not 0 <= j < n[i]:
        raise ValueError(f"need 0 <= j < n_i = {n[i]}, got j = {j}")
    p = mm_poly(params, n) * PolyX.monomial(j)
    return weighted_partial_sum(p, params.beta, params.c[i], x_max)
