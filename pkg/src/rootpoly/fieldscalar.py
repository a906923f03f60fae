"""Exact coefficient fields: big rationals and rational functions in s.

Rationals are ``fractions.Fraction``.  The field Q(s) is provided by
``RatFunc``, a reduced fraction of univariate polynomials over Q with a
monic denominator, so equal values always have identical representations.
Polynomials are little-endian tuples of Fractions with trailing zeros
trimmed; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import NonGenericParameterError

QPoly = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def poly(coeffs) -> QPoly:
    """Normalize a coefficient sequence (constant term first)."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_deg(p: QPoly) -> int:
    """Degree, with the zero polynomial mapped to -1."""
    return len(p) - 1


def poly_add(p: QPoly, q: QPoly) -> QPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return poly(out)


def poly_neg(p: QPoly) -> QPoly:
    return tuple(-c for c in p)


def poly_mul(p: QPoly, q: QPoly) -> QPoly:
    if not p or not q:
        return ()
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def poly_divmod(p: QPoly, q: QPoly) -> tuple[QPoly, QPoly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [_ZERO] * max(0, len(p) - len(q) + 1)
    dq, lq = len(q) - 1, q[-1]
    while len(rem) - 1 >= dq and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        shift = len(rem) - 1 - dq
        factor = rem[-1] / lq
        quo[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] -= factor * c
    return poly(quo), poly(rem)


def poly_gcd(p: QPoly, q: QPoly) -> QPoly:
    """Monic gcd via the Euclidean algorithm."""
    while q:
        p, q = q, poly_divmod(p, q)[1]
    if not p:
        return ()
    lead = p[-1]
    return tuple(c / lead for c in p)


def poly_eval(p: QPoly, x: Fraction) -> Fraction:
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_str(p: QPoly, var: str = "s") -> str:
    """Expanded integer-coefficient rendering, highest degree first."""
    if not p:
        return "0"
    denom = lcm(*(c.denominator for c in p))
    parts = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e] * denom
        if c == 0:
            continue
        mag = abs(c.numerator)
        if e == 0:
            body = str(mag)
        else:
            sym = var if e == 1 else f"{var}^{e}"
            body = sym if mag == 1 else f"{mag}*{sym}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    if denom != 1:
        text = f"({text})/{denom}"
    return text


class RatFunc:
    """An element of Q(s) in canonical reduced form.

    The numerator and denominator are coprime and the denominator is
    monic, so structural equality coincides with value equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(_ONE,), reduce: bool = True):
        num = poly(num)
        den = poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator in RatFunc")
        if reduce:
            g = poly_gcd(num, den)
            if g and poly_deg(g) > 0:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
            if den[-1] != 1:
                lead = den[-1]
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def symbol() -> RatFunc:
        return RatFunc((_ZERO, _ONE))

    @staticmethod
    def const(c) -> RatFunc:
        return RatFunc((Fraction(c),))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        return None

    def is_constant(self) -> bool:
        return poly_deg(self.num) <= 0 and poly_deg(self.den) == 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else _ZERO

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        num = poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den))
        return RatFunc(num, poly_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(poly_neg(self.num), self.den, reduce=False)

    def __sub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(poly_mul(self.num, o.num), poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero in Q(s)")
        return RatFunc(poly_mul(self.num, o.den), poly_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (RatFunc.const(1) / self) ** (-k)
        acc = RatFunc.const(1)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"


def format_scalar(x) -> str:
    """Canonical string form: "p/q" for rationals, "(num)/(den)" for Q(s)."""
    if isinstance(x, RatFunc):
        if x.is_constant():
            return str(x.as_fraction())
        text = f"({poly_str(x.num)})"
        if poly_deg(x.den) > 0 or x.den[0] != 1:
            text += f"/({poly_str(x.den)})"
        return text
    return str(Fraction(x))


def scalar_inverse(x, factor_name: str = "scalar"):
    """Exact multiplicative inverse, naming the factor on failure."""
    if isinstance(x, RatFunc):
        if not x:
            raise NonGenericParameterError(factor_name)
        return RatFunc.const(1) / x
    x = Fraction(x)
    if x == 0:
        raise NonGenericParameterError(factor_name)
    return 1 / x


def scalar_pow(x, k: int):
    """x**k with exact negative powers for Fractions and RatFuncs."""
    if isinstance(x, RatFunc):
        return x ** k
    x = Fraction(x)
    if k < 0:
        if x == 0:
            raise ZeroDivisionError("0 to a negative power")
        return (1 / x) ** (-k)
    return x ** k
