"""Exact arithmetic in the golden field Q(sqrt(5)), basis {1, phi}.

A :class:`GoldenNumber` stores a value ``a + b*phi`` with rational ``a``, ``b``
where ``phi = (1+sqrt(5))/2`` satisfies ``phi**2 = phi + 1``.  Two values are
equal iff their ``(a, b)`` pairs are equal, so equality, sign, comparison and
floor are all decided exactly by integer arithmetic.  Floating point is used
only as a fast filter (and for display); every decision near zero falls back
to the exact integer path.

Instances are immutable; all operations are pure and thread-safe.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Fraction

_PHI_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0

# relative slack for the float fast path in sign(); anything closer to zero
# is re-decided with exact integer arithmetic
_SIGN_EPS = 1e-12

Scalar = Union["GoldenNumber", Fraction, int]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@total_ordering
class GoldenNumber:
    """An element a + b*phi of Q(sqrt(5)) with exact rational coordinates."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0) -> None:
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNumber is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> GoldenNumber:
        return cls(n, 0)

    @classmethod
    def parse(cls, text: str) -> GoldenNumber:
        """Parse the two-token serialization ``a_num/a_den b_num/b_den``.

        A bare integer token is accepted as shorthand for denominator 1.
        """
        tokens = text.split()
        if len(tokens) != 2:
            raise ValueError(f"expected two rational tokens, got {text!r}")
        return cls(_parse_fraction(tokens[0]), _parse_fraction(tokens[1]))

    def serialize(self) -> str:
        """Four-integer text form ``a_num/a_den b_num/b_den``."""
        return (f"{self.a.numerator}/{self.a.denominator}"
                f" {self.b.numerator}/{self.b.denominator}")

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: Scalar) -> GoldenNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> GoldenNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: Scalar) -> GoldenNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __mul__(self, other: Scalar) -> GoldenNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        # (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1
        return GoldenNumber(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> GoldenNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> GoldenNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self) -> GoldenNumber:
        """Field conjugate, sending phi to 1 - phi."""
        return GoldenNumber(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        """Rational field norm x * conjugate(x) = a^2 + a*b - b^2."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> GoldenNumber:
        """Exact multiplicative inverse, via the conjugate over the norm."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero golden number")
        return GoldenNumber((self.a + self.b) / n, -self.b / n)

    # -- exact order -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real value a + b*phi, in {-1, 0, +1}.

        Writes 2x = (2a+b) + b*sqrt(5) and decides on integers, comparing
        squares when the two terms disagree in sign.  A float evaluation
        short-circuits the common far-from-zero case.
        """
        a, b = self.a, self.b
        if b == 0:
            p = a.numerator
            return (p > 0) - (p < 0)
        fa, fb = _f(a), _f(b)
        val = fa + fb * _PHI_FLOAT
        mag = abs(fa) + abs(fb) * _PHI_FLOAT
        if abs(val) > mag * _SIGN_EPS:
            return 1 if val > 0.0 else -1
        # exact path on integers: sign of P + Q*sqrt(5)
        q, s = a.denominator, b.denominator
        p_int = 2 * a.numerator * s + b.numerator * q
        q_int = b.numerator * q
        sp = (p_int > 0) - (p_int < 0)
        sq = (q_int > 0) - (q_int < 0)
        if sp == sq:
            return sp
        if sp == 0:
            return sq
        if sq == 0:
            return sp
        # opposite signs: compare p^2 with 5*q^2 (never equal for q != 0)
        return sp if p_int * p_int > 5 * q_int * q_int else sq

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def compare(self, other: Scalar) -> int:
        """sign(self - other)."""
        other = _coerce(other)
        return (self - other).sign()

    def __floor__(self) -> int:
        return self.floor()

    def floor(self) -> int:
        """The unique integer n with n <= x < n+1, certified by exact signs.

        A floating (or, on overflow, high-precision rational) estimate seeds
        the search; the result is then adjusted until both inequalities hold
        exactly.
        """
        try:
            n = math.floor(self.to_float())
        except (OverflowError, ValueError):
            estimate = self.a + self.b * _phi_rational_estimate()
            n = estimate.numerator // estimate.denominator
        while (self - GoldenNumber(n)).sign() < 0:
            n -= 1
        while (self - GoldenNumber(n + 1)).sign() >= 0:
            n += 1
        return n

    # -- display -----------------------------------------------------------

    def to_float(self) -> float:
        """Double-precision approximation, for display only."""
        return _f(self.a) + _f(self.b) * _PHI_FLOAT

    __float__ = to_float

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return _fmt_fraction(self.a)
        if self.a == 0:
            return f"{_fmt_fraction(self.b)}*phi"
        op = "+" if self.b > 0 else "-"
        return f"{_fmt_fraction(self.a)} {op} {_fmt_fraction(abs(self.b))}*phi"

    def reciprocal_form(self) -> str:
        """Pretty form ``n/(c + d*phi)`` with integer n, c, d when x != 0.

        Scales the inverse by the least positive integer clearing its
        denominators, which reproduces the compact reciprocal style used
        for frequency tables.
        """
        inv = self.inverse()
        n = math.lcm(inv.a.denominator, inv.b.denominator)
        sign = (n * inv).sign()
        if sign < 0:
            n = -n
        d = n * inv
        return f"{n}/({int(d.a)} + {int(d.b)}*phi)"


def _coerce(x) -> GoldenNumber | None:
    if isinstance(x, GoldenNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return GoldenNumber(x, 0)
    return None


def _f(x: Fraction) -> float:
    return x.numerator / x.denominator


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_fraction(token: str) -> Fraction:
    if "/" in token:
        num, den = token.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(token))


_PHI_ESTIMATE: Fraction | None = None


def _phi_rational_estimate() -> Fraction:
    # (1 + sqrt(5))/2 to ~38 decimal digits, as an exact fraction; good
    # enough to seed floor() for any coordinate magnitude
    global _PHI_ESTIMATE
    if _PHI_ESTIMATE is None:
        k = 1 << 128
        _PHI_ESTIMATE = Fraction(k + math.isqrt(5 * k * k), 2 * k)
    return _PHI_ESTIMATE


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
PHI = GoldenNumber(0, 1)

golden = GoldenNumber


def gn(a=0, b=0) -> GoldenNumber:
    """Shorthand constructor: gn(a, b) = a + b*phi."""
    return GoldenNumber(a, b)
