"""Exact scalar and polynomial arithmetic over the rationals.

Every quantity in the package lives in ``fractions.Fraction``. ``PolyX`` is a
dense univariate polynomial (the spectral variable ``x``); ``RatFuncC`` is a
quotient of two such polynomials, used for the moment recursion where the
variable is the measure parameter ``c``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Decimal and exponent forms are rejected so that every input is exact.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}; expected 'p/q' or 'p'")
    value = Fraction(text.replace(" ", ""))
    return value


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def pochhammer(b: Scalar, k: int) -> Fraction:
    """Rising factorial (b)_k = b (b+1) ... (b+k-1)."""
    if k < 0:
        raise ValueError("pochhammer order must be non-negative")
    out = Fraction(1)
    b = Fraction(b)
    for m in range(k):
        out *= b + m
    return out


class PolyX:
    """Dense polynomial with Fraction coefficients, lowest power first.

    Instances are immutable and canonical (no trailing zeros), so ``==`` is
    mathematical equality and instances can be used as dict keys.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: Scalar) -> "PolyX":
        return cls((value,))

    @classmethod
    def x(cls) -> "PolyX":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "PolyX":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, PolyX):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == PolyX.constant(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"PolyX({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                coeff = format_rational(c)
                terms.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(reversed(terms)).replace("+ -", "- ")

    @staticmethod
    def _coerce(other) -> "PolyX":
        if isinstance(other, PolyX):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyX.constant(other)
        raise TypeError(f"cannot combine PolyX with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self), len(other))
        return PolyX(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return PolyX(-c for c in self._coeffs)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self), len(other))
        return PolyX(self[k] - other[k] for k in range(n))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyX(c * other for c in self._coeffs)
        if not isinstance(other, PolyX):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return PolyX()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return PolyX(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return PolyX(c / other for c in self._coeffs)
        return NotImplemented

    def __pow__(self, k: int):
        out = PolyX.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, t: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def shift(self, s: Scalar) -> "PolyX":
        """Return q with q(x) = p(x + s)."""
        s = Fraction(s)
        if s == 0:
            return self
        out = [Fraction(0)] * len(self)
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            # c (x+s)^k = c sum_m C(k,m) s^(k-m) x^m
            for m in range(k + 1):
                out[m] += c * math.comb(k, m) * s ** (k - m)
        return PolyX(out)

    def derivative(self) -> "PolyX":
        return PolyX(k * c for k, c in enumerate(self._coeffs) if k > 0)

    def divmod(self, other: "PolyX"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other) + 1, 0)
        lead = other.leading
        for k in range(len(rem) - len(other), -1, -1):
            f = rem[k + other.degree] / lead
            q[k] = f
            if f:
                for m, b in enumerate(other._coeffs):
                    rem[k + m] -= f * b
        return PolyX(q), PolyX(rem)

    def monic(self) -> "PolyX":
        return self / self.leading if self._coeffs else self

    def to_json(self) -> list:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "PolyX":
        return cls(parse_rational(s) for s in data)


def poly_arith(a: PolyX, b: PolyX, kind: str) -> PolyX:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {kind!r}")


def poly_shift(p: PolyX, s: Scalar) -> PolyX:
    return p.shift(s)


def binom_poly(e: PolyX, m: int) -> PolyX:
    """Generalized binomial coefficient e(e-1)...(e-m+1)/m! as a polynomial."""
    if m < 0:
        raise ValueError("binomial order must be non-negative")
    out = PolyX.constant(1)
    for k in range(m):
        out = out * (e - k)
    return out / math.factorial(m)


def poly_gcd(a: PolyX, b: PolyX) -> PolyX:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RatFuncC:
    """Rational function num/den in one variable, kept in lowest terms.

    The denominator is normalized to be monic, which makes the
    representation canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: PolyX, den: PolyX | None = None):
        den = PolyX.constant(1) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = PolyX(), PolyX.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.divmod(g)[0], den.divmod(g)[0]
            lead = den.leading
            num, den = num / lead, den / lead
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, value: Scalar) -> "RatFuncC":
        return cls(PolyX.constant(value))

    def __add__(self, other: "RatFuncC") -> "RatFuncC":
        return RatFuncC(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFuncC") -> "RatFuncC":
        return RatFuncC(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFuncC(self.num * other, self.den)
        return RatFuncC(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def derivative(self) -> "RatFuncC":
        return RatFuncC(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFuncC):
            return NotImplemented
        # cross-multiplied comparison, independent of normalization
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, t: Scalar) -> Fraction:
        d = self.den(t)
        if d == 0:
            raise ZeroDivisionError(f"pole at {t}")
        return self.num(t) / d

    def __repr__(self):
        return f"RatFuncC(({self.num}) / ({self.den}))"
