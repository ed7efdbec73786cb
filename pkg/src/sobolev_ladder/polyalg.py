"""Exact univariate polynomial and rational-function arithmetic over Q.

Scalars are arbitrary-precision rationals (``fractions.Fraction``, which is
already canonical: reduced, positive denominator).  A polynomial is a dense
tuple of coefficients in ascending degree with no trailing zeros; the zero
polynomial is the empty tuple.  A rational function is a quotient num/den
kept fully reduced with a monic denominator.  Both representations are
canonical on construction, so equality is plain structural equality and an
identity check is "canonicalize both sides and compare".

Degrees stay small in this package (a few dozen at most), so multiplication
is schoolbook and gcd is the monic Euclidean algorithm.

Serialized forms: a rational is the string ``"p/q"`` (just ``"p"`` when the
denominator is 1); a polynomial is the ascending list of such strings; a
rational function is ``{"num": [...], "den": [...]}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import PoleAtEvaluationPoint, ZeroDenominator

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def rat_from_str(s: str) -> Fraction:
    """Parse the "p/q" wire form (strictly: integers, positive denominator)."""
    text = s.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not a p/q rational: {s!r}")
    return Fraction(text)


def rat_to_str(r: Fraction | int) -> str:
    return str(Fraction(r))


def _as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_from_str(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial; ``coeffs[k]`` is the degree-k coefficient."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def new(coeffs) -> Poly:
        cs = [_as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def const(value) -> Poly:
        return Poly.new([_as_rat(value)])

    @staticmethod
    def zero() -> Poly:
        return Poly(())

    @staticmethod
    def one() -> Poly:
        return Poly((Fraction(1),))

    @staticmethod
    def x() -> Poly:
        return Poly((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.new([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.new([self.coeff(k) - other.coeff(k) for k in range(n)])

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) - self

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> Poly:
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, s) -> Poly:
        s = _as_rat(s)
        return Poly.new([s * c for c in self.coeffs])

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlc = other.leading
        dd = other.degree
        while len(rem) - 1 >= dd and any(rem):
            k = len(rem) - 1
            if rem[k] == 0:
                rem.pop()
                continue
            factor = rem[k] / dlc
            q[k - dd] = factor
            for i, c in enumerate(other.coeffs):
                rem[k - dd + i] -= factor * c
            rem.pop()
        return Poly.new(q), Poly.new(rem)

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def eval(self, x0) -> Fraction:
        """Horner evaluation, exact."""
        x0 = _as_rat(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def compose_affine(self, a, b) -> Poly:
        """Return self(a*x + b)."""
        a, b = _as_rat(a), _as_rat(b)
        arg = Poly.new([b, a])
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * arg + Poly.const(c)
        return acc

    def derivative(self) -> Poly:
        return Poly.new([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def to_strings(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]

    @staticmethod
    def from_strings(items) -> Poly:
        return Poly.new([rat_from_str(s) for s in items])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{mag} {xs}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction, str)):
        return Poly.const(_as_rat(value))
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


def poly_eval(p: Poly, x0) -> Fraction:
    return p.eval(x0)


def poly_compose_affine(p: Poly, a, b) -> Poly:
    return p.compose_affine(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = _as_poly(a), _as_poly(b)
    while not b.is_zero:
        a, b = b, a % b
        # renormalize to keep coefficient growth in check
        b = b.monic() if not b.is_zero else b
    return a.monic()


@dataclass(frozen=True)
class RatFunc:
    """Reduced quotient of polynomials; den is monic and coprime to num."""

    num: Poly
    den: Poly

    @staticmethod
    def new(num, den=1) -> RatFunc:
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero:
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero:
            return RatFunc(Poly.zero(), Poly.one())
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.leading
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return RatFunc(num, den)

    @staticmethod
    def zero() -> RatFunc:
        return RatFunc(Poly.zero(), Poly.one())

    @staticmethod
    def one() -> RatFunc:
        return RatFunc(Poly.one(), Poly.one())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_poly(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        """The underlying polynomial; raises if a true denominator remains."""
        if not self.is_poly:
            raise ZeroDenominator(f"not a polynomial: denominator {self.den}")
        return self.num  # den is monic degree 0, hence exactly 1

    def __add__(self, other) -> RatFunc:
        other = as_ratfunc(other)
        return RatFunc.new(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RatFunc:
        other = as_ratfunc(other)
        return RatFunc.new(self.num * other.den - other.num * self.den,
                           self.den * other.den)

    def __rsub__(self, other) -> RatFunc:
        return as_ratfunc(other) - self

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __mul__(self, other) -> RatFunc:
        other = as_ratfunc(other)
        return RatFunc.new(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        other = as_ratfunc(other)
        if other.is_zero:
            raise ZeroDenominator("division by the zero rational function")
        return RatFunc.new(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RatFunc:
        return as_ratfunc(other) / self

    def eval(self, x0) -> Fraction:
        x0 = _as_rat(x0)
        d = self.den.eval(x0)
        if d == 0:
            raise PoleAtEvaluationPoint(f"pole at x = {x0}")
        return self.num.eval(x0) / d

    def compose_affine(self, a, b) -> RatFunc:
        """Return self(a*x + b); requires a != 0 or a constant denominator."""
        num = self.num.compose_affine(a, b)
        den = self.den.compose_affine(a, b)
        if den.is_zero:
            raise ZeroDenominator("affine substitution annihilated denominator")
        return RatFunc.new(num, den)

    def to_json(self) -> dict:
        return {"num": self.num.to_strings(), "den": self.den.to_strings()}

    @staticmethod
    def from_json(doc: dict) -> RatFunc:
        return RatFunc.new(Poly.from_strings(doc["num"]), Poly.from_strings(doc["den"]))

    def __str__(self) -> str:
        if self.is_poly:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def as_ratfunc(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc.new(value, Poly.one())
    if isinstance(value, (int, Fraction, str)):
        return RatFunc.new(Poly.const(_as_rat(value)), Poly.one())
    raise TypeError(f"cannot interpret {value!r} as a rational function")


def ratfunc_new(num: Poly, den: Poly) -> RatFunc:
    return RatFunc.new(num, den)
