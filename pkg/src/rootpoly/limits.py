"""Exact limit extraction on elements of Q(s).

Every analytic limit in the library (q up to 1 with integer-exponent
parameter specializations, and scaled limits at infinity) reduces to one
of three operations on a reduced rational function: evaluation at s = 1,
leading-coefficient ratio, or a scaled leading-coefficient comparison.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RationalLimitError
from .fieldscalar import RatFunc, poly_deg, poly_eval


def _as_ratfunc(r) -> RatFunc:
    if isinstance(r, RatFunc):
        return r
    return RatFunc.const(Fraction(r))


def rational_limit(r, mode: str, degree: int = 0) -> Fraction:
    """Limit of ``r`` in Q(s).

    mode "at_one": value at s = 1 after full cancellation; a surviving
    pole raises RationalLimitError.  mode "leading": ratio of leading
    coefficients.  mode "at_infinity_scaled": limit of s^(-degree) * r(s)
    as s goes to infinity (0 when the degree difference is smaller than
    ``degree``, an error when it is larger).
    """
    r = _as_ratfunc(r)
    if mode == "at_one":
        den = poly_eval(r.den, Fraction(1))
        if den == 0:
            raise RationalLimitError("pole at s = 1 after cancellation")
        return poly_eval(r.num, Fraction(1)) / den
    if mode == "leading":
        if not r.num:
            return Fraction(0)
        return r.num[-1] / r.den[-1]
    if mode == "at_infinity_scaled":
        if not r.num:
            return Fraction(0)
        diff = poly_deg(r.num) - poly_deg(r.den)
        if diff > degree:
            raise RationalLimitError(
                f"degree difference {diff} exceeds the allowed scale {degree}"
            )
        if diff < degree:
            return Fraction(0)
        return r.num[-1] / r.den[-1]
    raise ValueError(f"unknown limit mode {mode!r}")
