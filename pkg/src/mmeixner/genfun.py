"""Generating-function oracle.

Expands

    (1 + sum_k z_k/(1-c_k))^x (1 + sum_k c_k z_k/(1-c_k))^(-x-beta)

as a power series in z_1..z_r truncated at total degree ``order``. The
coefficients are polynomials in x; multiplied by n_1!...n_r! they give the
monic M_n(x). No recurrence is involved, which is what makes this an
independent check on ``meixner``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import PolyX, binom_poly
from .meixner import MultiIndex, Params, indices, mm_poly, multi_factorial
from .report import RelationReport


@dataclass
class SeriesZ:
    r: int
    order: int
    coeffs: dict = field(default_factory=dict)

    @classmethod
    def one(cls, r: int, order: int) -> "SeriesZ":
        return cls(r, order, {(0,) * r: PolyX.constant(1)})

    @classmethod
    def linear(cls, weights: Sequence[Fraction], order: int) -> "SeriesZ":
        """sum_k w_k z_k"""
        r = len(weights)
        coeffs = {}
        if order >= 1:
            for k, w in enumerate(weights):
                if w:
                    coeffs[tuple(int(m == k) for m in range(r))] = PolyX.constant(w)
        return cls(r, order, coeffs)

    def __getitem__(self, n: MultiIndex) -> PolyX:
        return self.coeffs.get(tuple(n), PolyX())

    def __add__(self, other: "SeriesZ") -> "SeriesZ":
        _check_compatible(self, other)
        out = dict(self.coeffs)
        for n, p in other.coeffs.items():
            q = out.get(n, PolyX()) + p
            if q.is_zero():
                out.pop(n, None)
            else:
                out[n] = q
        return SeriesZ(self.r, self.order, out)

    def scale(self, p: PolyX) -> "SeriesZ":
        out = {n: q * p for n, q in self.coeffs.items()}
        return SeriesZ(self.r, self.order, {n: q for n, q in out.items() if not q.is_zero()})

    def __mul__(self, other: "SeriesZ") -> "SeriesZ":
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, SeriesZ):
            return NotImplemented
        return (self.r, self.order) == (other.r, other.order) and self.coeffs == other.coeffs


def _check_compatible(a: SeriesZ, b: SeriesZ) -> None:
    if a.order != b.order:
        raise ValueError(f"series order mismatch: {a.order} != {b.order}")
    if a.r != b.r:
        raise ValueError(f"series variable count mismatch: {a.r} != {b.r}")


def series_mul(a: SeriesZ, b: SeriesZ) -> SeriesZ:
    """Cauchy product truncated at total degree ``order``."""
    _check_compatible(a, b)
    out: dict = {}
    for n, p in a.coeffs.items():
        dn = sum(n)
        for m, q in b.coeffs.items():
            if dn + sum(m) > a.order:
                continue
            key = tuple(u + v for u, v in zip(n, m))
            out[key] = out.get(key, PolyX()) + p * q
    return SeriesZ(a.r, a.order, {n: p for n, p in out.items() if not p.is_zero()})


def binomial_series(exponent: PolyX, linear: SeriesZ) -> SeriesZ:
    """(1 + u)^e = sum_m binom(e, m) u^m for a series u without constant term."""
    total = SeriesZ.one(linear.r, linear.order)
    power = SeriesZ.one(linear.r, linear.order)
    for m in range(1, linear.order + 1):
        power = power * linear
        total = total + power.scale(binom_poly(exponent, m))
    return total


def genfun_series(params: Params, order: int) -> SeriesZ:
    x = PolyX.x()
    c = params.c
    u = SeriesZ.linear([1 / (1 - ck) for ck in c], order)
    v = SeriesZ.linear([ck / (1 - ck) for ck in c], order)
    return binomial_series(x, u) * binomial_series(-x - params.beta, v)


def genfun_coeffs(params: Params, order: int) -> dict:
    """Map n -> n! [z^n] of the generating function, for every |n| <= order."""
    series = genfun_series(params, order)
    return {n: series[n] * multi_factorial(n) for n in indices(params.r, order)}


def oracle_compare(params: Params, order: int) -> RelationReport:
    coeffs = genfun_coeffs(params, order)
    for n, p in coeffs.items():
        q = mm_poly(params, n)
        if p != q:
            return RelationReport("genfun", {"n": n, "order": order}, False, q, p)
    return RelationReport("genfun", {"order": order}, True, notes={"count": len(coeffs)})


def genfun_sweep(params: Params, order: int) -> list:
    """One report per multi-index, comparing recurrence and oracle."""
    coeffs = genfun_coeffs(params, order)
    return [RelationReport("genfun", {"n": n}, mm_poly(params, n) == p, mm_poly(params, n), p)
            for n, p in coeffs.items()]


def genfun_json(params: Params, order: int) -> dict:
    coeffs = genfun_coeffs(params, order)
    return {
        "order": order,
        "coefficients": [{"index": list(n), "poly": p.to_json()} for n, p in coeffs.items()],
    }
