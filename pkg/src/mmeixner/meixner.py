"""Multiple Meixner polynomials of the first kind, built from recurrences.

Polynomials are indexed by a multi-index ``n`` (a tuple of ``r``
non-negative ints) and constructed exactly with the nearest-neighbor
recurrence

    x M_n = M_{n+e_i} + b_{n,i} M_n + sum_k d_{n,k} M_{n-e_k},

    b_{n,i} = c_i/(1-c_i) (beta+|n|) + sum_k n_k/(1-c_k),
    d_{n,k} = c_k/(1-c_k)^2 n_k (beta+|n|-1).

Mode indices ``i``, ``j``, ``k`` are 0-based throughout the Python API.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .algebra import PolyX, Scalar, format_rational, parse_rational
from .report import RelationReport

MultiIndex = tuple

X = PolyX.x()

# test-only hook, see mmeixner.testing.corrupt_recurrence
_RECURRENCE_DEFECT = Fraction(0)


@dataclass(frozen=True)
class Params:
    """Family parameters (r, beta, c_1..c_r).

    Requires beta > 0, 0 < c_i < 1 and pairwise distinct c_i.
    """

    r: int
    beta: Fraction
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "c", tuple(Fraction(v) for v in self.c))
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"r must be a positive integer, got {self.r!r}")
        if len(self.c) != self.r:
            raise ValueError(f"expected {self.r} values of c, got {len(self.c)}")
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {format_rational(self.beta)}")
        for v in self.c:
            if not 0 < v < 1:
                raise ValueError(f"each c_i must satisfy 0 < c_i < 1, got {format_rational(v)}")
        if len(set(self.c)) != len(self.c):
            raise ValueError("the c_i must be pairwise distinct")

    @classmethod
    def parse(cls, r: int, beta: str, c: Sequence[str]) -> "Params":
        return cls(r, parse_rational(beta), tuple(parse_rational(v) for v in c))

    def shift_beta(self, k: Scalar) -> "Params":
        """Sibling parameters at beta + k.

        The recurrence is polynomial in beta, so siblings skip the beta > 0
        check; this is how the beta-1 tables in the contiguity relations are
        reached from beta <= 1.
        """
        new = object.__new__(Params)
        object.__setattr__(new, "r", self.r)
        object.__setattr__(new, "beta", self.beta + Fraction(k))
        object.__setattr__(new, "c", self.c)
        return new

    def permuted(self, sigma: Sequence[int]) -> "Params":
        return Params(self.r, self.beta, tuple(self.c[s] for s in sigma))

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "beta": format_rational(self.beta),
            "c": [format_rational(v) for v in self.c],
        }


def unit(r: int, i: int) -> MultiIndex:
    return tuple(1 if k == i else 0 for k in range(r))


def add(n: MultiIndex, m: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(n, m))


def sub(n: MultiIndex, m: MultiIndex) -> MultiIndex:
    return tuple(a - b for a, b in zip(n, m))


def multi_factorial(n: MultiIndex) -> int:
    return math.prod(math.factorial(v) for v in n)


def indices_of_degree(r: int, d: int) -> Iterator[MultiIndex]:
    """All multi-indices of total degree d, in descending lexicographic order."""
    if r == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in indices_of_degree(r - 1, d - first):
            yield (first,) + rest


def indices(r: int, max_degree: int) -> Iterator[MultiIndex]:
    for d in range(max_degree + 1):
        yield from indices_of_degree(r, d)


def recurrence_coefficients(params: Params, n: MultiIndex, i: int):
    """Return (b_{n,i}, [d_{n,k} for k]) of the nearest-neighbor recurrence."""
    beta, c = params.beta, params.c
    size = sum(n)
    b = c[i] / (1 - c[i]) * (beta + size) + sum(n[k] / (1 - c[k]) for k in range(params.r))
    if size == 1 and _RECURRENCE_DEFECT:
        b += _RECURRENCE_DEFECT
    d = [c[k] / (1 - c[k]) ** 2 * n[k] * (beta + size - 1) for k in range(params.r)]
    return b, d


# -- construction paths -----------------------------------------------------
# A rule picks the coordinate incremented in the last step towards n; the
# full path follows by applying the rule repeatedly.

def _rule_canonical(n):
    return max(k for k, v in enumerate(n) if v)


def _rule_reverse(n):
    return min(k for k, v in enumerate(n) if v)


def _rule_largest(n):
    return max(range(len(n)), key=lambda k: (n[k], -k))


def _rule_smallest(n):
    return min((k for k, v in enumerate(n) if v), key=lambda k: (n[k], -k))


def _rule_alternate(n):
    nz = [k for k, v in enumerate(n) if v]
    return nz[sum(n) % len(nz)]


def _rule_seeded(seed):
    def rule(n):
        nz = [k for k, v in enumerate(n) if v]
        return random.Random(f"{seed}:{n}").choice(nz)
    return rule


PATH_RULES: dict = {
    "canonical": _rule_canonical,
    "reverse": _rule_reverse,
    "largest": _rule_largest,
    "smallest": _rule_smallest,
    "alternate": _rule_alternate,
    **{f"seeded-{s}": _rule_seeded(s) for s in range(4)},
}


def construction_path(n: MultiIndex, rule: Callable = _rule_canonical) -> tuple:
    """Sequence of incremented coordinates leading from 0 to n."""
    steps = []
    m = tuple(n)
    while any(m):
        i = rule(m)
        steps.append(i)
        m = sub(m, unit(len(m), i))
    return tuple(reversed(steps))


class MeixnerTable:
    """Memoized family M_n for one parameter set.

    Each entry is produced from the recurrence solved for M_{m+e_i}, where
    ``m + e_i = n`` and ``i`` is chosen by ``rule``. The default rule
    increments coordinate 1 fully, then coordinate 2, and so on.
    """

    def __init__(self, params: Params, rule: Callable | str = "canonical"):
        self.params = params
        self.rule = PATH_RULES[rule] if isinstance(rule, str) else rule
        self._polys = {(0,) * params.r: PolyX.constant(1)}

    def __call__(self, n: MultiIndex) -> PolyX:
        return self.poly(n)

    def poly(self, n: MultiIndex) -> PolyX:
        n = tuple(n)
        if len(n) != self.params.r:
            raise ValueError(f"multi-index {n} has length {len(n)}, expected {self.params.r}")
        if any(v < 0 for v in n):
            return PolyX()
        hit = self._polys.get(n)
        if hit is not None:
            return hit
        # fill by increasing total degree to keep recursion shallow
        for d in range(1, sum(n) + 1):
            for m in indices_of_degree(self.params.r, d):
                if all(a <= b for a, b in zip(m, n)) and m not in self._polys:
                    self._polys[m] = self._step(m)
        return self._polys[n]

    def _step(self, n: MultiIndex) -> PolyX:
        i = self.rule(n)
        m = sub(n, unit(self.params.r, i))
        b, d = recurrence_coefficients(self.params, m, i)
        out = (X - b) * self._polys[m]
        for k, dk in enumerate(d):
            if dk:
                out = out - self._polys[sub(m, unit(self.params.r, k))] * dk
        return out

    def path(self, n: MultiIndex) -> tuple:
        return construction_path(n, self.rule)


_TABLES: dict = {}


def table(params: Params, rule: str = "canonical") -> MeixnerTable:
    key = (params.r, params.beta, params.c, rule, _RECURRENCE_DEFECT)
    t = _TABLES.get(key)
    if t is None:
        t = _TABLES[key] = MeixnerTable(params, rule)
    return t


def clear_tables() -> None:
    _TABLES.clear()


def mm_poly(params: Params, n: MultiIndex) -> PolyX:
    """Monic polynomial M_n^{beta,c}(x) of degree |n|."""
    return table(params).poly(n)


def mm_eval(params: Params, n: MultiIndex, x: Scalar) -> Fraction:
    return mm_poly(params, n)(x)


def closed_form_first(params: Params, i: int) -> PolyX:
    """M_{e_i} = x - c_i beta / (1 - c_i)."""
    c = params.c[i]
    return X - c * params.beta / (1 - c)


# -- identity checks ----------------------------------------------------------

def _report(relation, instance, lhs, rhs, **notes):
    return RelationReport(relation, instance, lhs == rhs, lhs, rhs, notes)


def check_pairwise(params: Params, n: MultiIndex, i: int, j: int) -> RelationReport:
    """M_{n+e_i} - M_{n+e_j} = (beta+|n|)(c_j-c_i)/((1-c_i)(1-c_j)) M_n."""
    if i == j:
        raise ValueError("pairwise relation needs i != j")
    M, c, r = table(params), params.c, params.r
    lhs = M(add(n, unit(r, i))) - M(add(n, unit(r, j)))
    coef = (params.beta + sum(n)) * (c[j] - c[i]) / ((1 - c[i]) * (1 - c[j]))
    rhs = M(n) * coef
    return _report("pairwise", {"n": tuple(n), "i": i, "j": j}, lhs, rhs)


NON_NEAREST_VARIANTS = ("all", "k-equals-i", "k-not-equal-i")


def check_non_nearest(params: Params, n: MultiIndex, i: int, variant: str = "all") -> RelationReport:
    """Non-nearest-neighbor recurrence for x M_n.

    ``variant`` selects the range of the sum over M_{n+e_i-e_k}: every k,
    only k == i, or every k != i. Only ``"all"`` is a true identity in
    general; the other two are kept to document that.
    """
    if variant not in NON_NEAREST_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    M, c, r, beta = table(params), params.c, params.r, params.beta
    size = sum(n)
    rhs = M(add(n, unit(r, i))) + M(n) * (c[i] * beta / (1 - c[i]) + Fraction(size) / (1 - c[i]))
    for k in range(r):
        if n[k] == 0:
            continue
        if variant == "all" or (variant == "k-equals-i") == (k == i):
            rhs = rhs + M(add(sub(n, unit(r, k)), unit(r, i))) * (c[k] / (1 - c[k]) * n[k])
        rhs = rhs + M(sub(n, unit(r, k))) * (
            c[k] / ((1 - c[i]) * (1 - c[k])) * n[k] * (beta + size - 1))
    lhs = X * M(n)
    return _report("non-nearest", {"n": tuple(n), "i": i, "variant": variant}, lhs, rhs)


RELATION_KINDS = ("backward1", "forward1", "backward2", "step2", "raising", "lowering")
_NEEDS_INDEX = {"backward1", "backward2", "raising"}


def check_relation(kind: str, params: Params, n: MultiIndex, i: int | None = None) -> RelationReport:
    """Step, contiguity, raising and lowering relations across beta and beta +- 1."""
    if kind not in RELATION_KINDS:
        raise ValueError(f"unknown relation kind {kind!r}")
    if kind in _NEEDS_INDEX and i is None:
        raise ValueError(f"relation {kind} needs an index i")
    r, c, beta = params.r, params.c, params.beta
    n = tuple(n)
    size = sum(n)
    M = table(params)
    Mup = table(params.shift_beta(1))
    Mdown = table(params.shift_beta(-1))
    downs = [(k, sub(n, unit(r, k))) for k in range(r) if n[k]]

    if kind == "backward1":
        lhs = X * Mup(n).shift(-1)
        rhs = M(add(n, unit(r, i))) + M(n) * (c[i] / (1 - c[i]) * (beta + size))
    elif kind == "forward1":
        lhs = Mdown(n).shift(1)
        rhs = M(n)
        for k, m in downs:
            rhs = rhs + M(m) * (Fraction(n[k]) / (1 - c[k]))
    elif kind == "backward2":
        lhs = (X + beta) * Mup(n)
        rhs = M(add(n, unit(r, i))) + M(n) * ((beta + size) / (1 - c[i]))
    elif kind == "step2":
        lhs = Mdown(n)
        rhs = M(n)
        for k, m in downs:
            rhs = rhs + M(m) * (c[k] / (1 - c[k]) * n[k])
    elif kind == "raising":
        lhs = X * Mup(n).shift(-1) - (X + beta) * Mup(n) * c[i]
        rhs = M(add(n, unit(r, i))) * (1 - c[i])
    else:  # lowering
        lhs = M(n).shift(1) - M(n)
        rhs = PolyX()
        for k, m in downs:
            rhs = rhs + Mup(m) * n[k]
    instance = {"n": n, "beta": beta}
    if i is not None:
        instance["i"] = i
    return _report(kind, instance, lhs, rhs)


def _x_factor(c_j: Fraction, b: Fraction, f: PolyX) -> PolyX:
    # [c_j (x + b) - x T_x^{-1}] f
    return (X + b) * f * c_j - X * f.shift(-1)


def check_diffeq_x(params: Params, n: MultiIndex, ordering: Sequence[int] | None = None,
                   graded: bool = True) -> RelationReport:
    """Difference equation in x of order r+1.

    The operator is a product of factors c_j(x+beta) - x T_x^{-1} applied
    to (T_x - I) M_n, leftmost factor of ``ordering`` applied last. With
    ``graded=False`` every factor uses the same beta, which is an identity
    only for r = 1. With ``graded=True`` the p-th factor applied (p = 0, 1,
    ...) uses beta - p on the left-hand side and beta - 1 - p on the
    right-hand side, tracking the parameter of the polynomials it acts on;
    that form holds for every ordering.
    """
    r, c, beta = params.r, params.c, params.beta
    ordering = tuple(range(r)) if ordering is None else tuple(ordering)
    if sorted(ordering) != list(range(r)):
        raise ValueError(f"ordering {ordering} is not a permutation of 0..{r - 1}")
    Mn = table(params)(n)

    lhs = Mn.shift(1) - Mn
    for p, j in enumerate(reversed(ordering)):
        lhs = _x_factor(c[j], beta - p if graded else beta, lhs)

    rhs = PolyX()
    for k in range(r):
        if n[k] == 0:
            continue
        g = Mn
        for p, j in enumerate(j for j in reversed(ordering) if j != k):
            g = _x_factor(c[j], beta - 1 - p if graded else beta, g)
        rhs = rhs + g * ((c[k] - 1) * n[k])
    return _report("diffeq-x", {"n": tuple(n), "ordering": ordering, "graded": graded}, lhs, rhs)


def _beta_factor(c_j: Fraction, size_term: int, f: Callable) -> Callable:
    # [(c_j - 1)(x + b + 1) T_b + (b + size_term)] applied to b -> f(b)
    def g(b):
        return (X + b + 1) * f(b + 1) * (c_j - 1) + f(b) * (b + size_term)
    return g


def check_diffeq_beta(params: Params, n: MultiIndex, beta_samples: Sequence[Scalar],
                      ordering: Sequence[int] | None = None, graded: bool = True) -> RelationReport:
    """Difference equation in beta, checked at each sampled beta with x symbolic.

    ``T_beta`` moves to the table at beta + 1. The beta inside each factor
    is the operator variable, so it is shifted by factors further left.
    With ``graded=True`` the p-th factor applied carries beta + |n| + p on
    the left-hand side and beta + |n| + 1 + p on the right-hand side.
    """
    r, c = params.r, params.c
    ordering = tuple(range(r)) if ordering is None else tuple(ordering)
    if sorted(ordering) != list(range(r)):
        raise ValueError(f"ordering {ordering} is not a permutation of 0..{r - 1}")
    samples = [Fraction(b) for b in beta_samples]
    if len(set(samples)) != len(samples):
        raise ValueError("beta samples must be distinct")
    if any(b <= 0 for b in samples):
        raise ValueError("beta samples must be positive")
    n = tuple(n)
    size = sum(n)

    def M_at(shift):
        return lambda b: table(params.shift_beta(b - params.beta + shift))(n)

    base = M_at(0)
    lhs_op = lambda b: base(b + 1) - base(b)
    for p, j in enumerate(reversed(ordering)):
        lhs_op = _beta_factor(c[j], size + (p if graded else 0), lhs_op)

    terms = []
    for k in range(r):
        if n[k] == 0:
            continue
        g = M_at(1)
        for p, j in enumerate(j for j in reversed(ordering) if j != k):
            g = _beta_factor(c[j], size + (1 + p if graded else 0), g)
        terms.append((c[k] * n[k], g))

    instance = {"n": n, "ordering": ordering, "graded": graded}
    for b in samples:
        lhs = lhs_op(b)
        rhs = PolyX()
        for coef, g in terms:
            rhs = rhs + g(b) * coef
        if lhs != rhs:
            return RelationReport("diffeq-beta", dict(instance, beta=b), False, lhs, rhs)
    return RelationReport("diffeq-beta", dict(instance, samples=samples), True, None, None)


# -- sweeps -------------------------------------------------------------------

def closed_form_sweep(params: Params) -> list:
    M = table(params)
    return [_report("closed-form", {"i": i}, M(unit(params.r, i)), closed_form_first(params, i))
            for i in range(params.r)]


def pairwise_sweep(params: Params, max_degree: int) -> list:
    out = []
    for n in indices(params.r, max_degree - 1):
        for i, j in itertools.permutations(range(params.r), 2):
            out.append(check_pairwise(params, n, i, j))
    return out


def non_nearest_sweep(params: Params, max_degree: int, variant: str = "all") -> list:
    return [check_non_nearest(params, n, i, variant)
            for n in indices(params.r, max_degree - 1) for i in range(params.r)]


def relation_sweep(params: Params, max_degree: int, kinds: Sequence[str] = RELATION_KINDS) -> list:
    """Every relation kind for all |n| <= max_degree (indexed kinds need n+e_i in range)."""
    out = []
    for kind in kinds:
        for n in indices(params.r, max_degree):
            if kind in _NEEDS_INDEX:
                if sum(n) < max_degree:
                    out.extend(check_relation(kind, params, n, i) for i in range(params.r))
            else:
                out.append(check_relation(kind, params, n))
    return out


def path_sweep(params: Params, max_degree: int, rules: Sequence[str] = tuple(PATH_RULES)) -> list:
    """Build the table under several construction rules and compare entries."""
    tables = [table(params, rule) for rule in rules]
    out = []
    for n in indices(params.r, max_degree):
        polys = [t(n) for t in tables]
        paths = {t.path(n) for t in tables}
        ok = all(p == polys[0] for p in polys)
        bad = next((k for k, p in enumerate(polys) if p != polys[0]), 0)
        out.append(RelationReport(
            "recurrence-path", {"n": n, "rule": rules[bad]}, ok, polys[bad], polys[0],
            {"distinct_paths": len(paths), "lattice_paths": lattice_path_count(n)}))
    return out


def lattice_path_count(n: MultiIndex) -> int:
    return math.factorial(sum(n)) // multi_factorial(n)


def monic_sweep(params: Params, max_degree: int) -> list:
    M = table(params)
    return [RelationReport("monic", {"n": n}, M(n).is_monic() and M(n).degree == sum(n),
                           M(n).leading, Fraction(1), {"degree": M(n).degree})
            for n in indices(params.r, max_degree)]


def diffeq_x_sweep(params: Params, max_degree: int, graded: bool = True) -> list:
    return [check_diffeq_x(params, n, o, graded)
            for n in indices(params.r, max_degree)
            for o in itertools.permutations(range(params.r))]


def diffeq_beta_sweep(params: Params, max_degree: int, beta_samples: Sequence[Scalar],
                      graded: bool = True) -> list:
    return [check_diffeq_beta(params, n, beta_samples, o, graded)
            for n in indices(params.r, max_degree)
            for o in itertools.permutations(range(params.r))]
