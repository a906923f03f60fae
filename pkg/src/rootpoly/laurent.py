"""Sparse multivariate Laurent polynomials over an exact field.

Terms map integer exponent vectors to nonzero coefficients.  The
coefficients may be Fractions, ints or RatFuncs; mixed arithmetic is
promoted through the operators of those types, so a polynomial stays
exact whichever field its coefficients live in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .fieldscalar import RatFunc, format_scalar, scalar_inverse, scalar_pow

Exponents = tuple[int, ...]


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, RatFunc))


class LaurentPoly:
    """Laurent polynomial in ``nvars`` variables with exact coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, object] | None = None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} needs length {nvars}")
                if c:
                    clean[exps] = clean.get(exps, 0) + c if exps in clean else c
                    if not clean[exps]:
                        del clean[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(nvars: int) -> LaurentPoly:
        return LaurentPoly(nvars, {})

    @staticmethod
    def constant(nvars: int, c) -> LaurentPoly:
        return LaurentPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def one(nvars: int) -> LaurentPoly:
        return LaurentPoly.constant(nvars, Fraction(1))

    @staticmethod
    def monomial(nvars: int, exps: Sequence[int], coeff=Fraction(1)) -> LaurentPoly:
        return LaurentPoly(nvars, {tuple(exps): coeff})

    @staticmethod
    def variable(nvars: int, index: int, power: int = 1) -> LaurentPoly:
        """x_index**power with 1-based index."""
        exps = [0] * nvars
        exps[index - 1] = power
        return LaurentPoly.monomial(nvars, exps)

    # -- ring operations ----------------------------------------------
    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if _is_scalar(other):
            return LaurentPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in o.terms.items():
            acc = terms.get(exps, 0) + c
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict[Exponents, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exps, 0) + c1 * c2
                if acc:
                    terms[exps] = acc
                else:
                    terms.pop(exps, None)
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((exps, c),) = self.terms.items()
            inv = scalar_inverse(c, "leading coefficient")
            return LaurentPoly.monomial(self.nvars, tuple(-e for e in exps), inv) ** (-k)
        acc = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        o = self._coerce(other) if (_is_scalar(other) or isinstance(other, LaurentPoly)) else None
        if o is None:
            return NotImplemented
        if self.terms.keys() != o.terms.keys():
            return False
        return all(self.terms[e] == o.terms[e] for e in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset((e, format_scalar(c)) for e, c in self.terms.items())))

    # -- queries ------------------------------------------------------
    def degree(self) -> int | None:
        """Max exponent sum over terms; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_coefficient(self):
        return self.coefficient((0,) * self.nvars)

    def sorted_terms(self) -> list[tuple[Exponents, object]]:
        """Terms in graded lexicographic order (grade, then exponents)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def leading_homogeneous_part(self) -> LaurentPoly:
        d = self.degree()
        if d is None:
            return self
        return LaurentPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    # -- substitutions -------------------------------------------------
    def evaluate(self, point: Sequence[object]):
        """Value at a point of scalars; negative exponents invert exactly."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        acc = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * scalar_pow(x, e)
            acc = acc + term
        return acc

    def scale_variables(self, factors: Sequence[object]) -> LaurentPoly:
        """Substitute x_i -> factors[i] * x_i."""
        terms = {}
        for exps, c in self.terms.items():
            for f, e in zip(factors, exps):
                if e:
                    c = c * scalar_pow(f, e)
            if c:
                terms[exps] = terms.get(exps, 0) + c
        return LaurentPoly(self.nvars, terms)

    def invert_variables(self) -> LaurentPoly:
        """Substitute x_i -> 1/x_i (exponent negation)."""
        return LaurentPoly(self.nvars, {tuple(-e for e in exps): c for exps, c in self.terms.items()})

    def negate_variables(self) -> LaurentPoly:
        """Substitute x_i -> -x_i for every variable."""
        return LaurentPoly(
            self.nvars,
            {exps: c if sum(exps) % 2 == 0 else -c for exps, c in self.terms.items()},
        )

    def substitute(self, replacements: Mapping[int, LaurentPoly]) -> LaurentPoly:
        """Substitute whole polynomials for variables (1-based indices).

        Exponents of a substituted variable must be nonnegative unless the
        replacement is an invertible monomial.
        """
        out = LaurentPoly.zero(self.nvars)
        for exps, c in self.terms.items():
            term = LaurentPoly.constant(self.nvars, c)
            for i, e in enumerate(exps, start=1):
                if not e:
                    continue
                rep = replacements.get(i)
                if rep is None:
                    term = term * LaurentPoly.variable(self.nvars, i, e)
                else:
                    term = term * rep ** e
            out = out + term
        return out

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ValueError when the division has a remainder."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        key = lambda e: (sum(e), e)
        div_terms = sorted(divisor.terms.items(), key=lambda kv: key(kv[0]), reverse=True)
        lead_e, lead_c = div_terms[0]
        lead_inv = scalar_inverse(lead_c, "leading coefficient of divisor")
        rem = dict(self.terms)
        quo: dict[Exponents, object] = {}
        # graded-lex is not a well-order on Laurent exponents, so an inexact
        # division could otherwise descend forever
        max_steps = 4 * (len(self.terms) + 1) * (len(divisor.terms) + 1)
        while rem:
            max_steps -= 1
            if max_steps < 0:
                raise ValueError("division has a remainder")
            e = max(rem, key=key)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, lead_e))
            qc = c * lead_inv
            quo[qe] = quo.get(qe, 0) + qc
            for de, dc in div_terms:
                te = tuple(a + b for a, b in zip(qe, de))
                acc = rem.get(te, 0) - qc * dc
                if acc:
                    rem[te] = acc
                else:
                    rem.pop(te, None)
        return LaurentPoly(self.nvars, quo)

    def map_coefficients(self, fn) -> LaurentPoly:
        return LaurentPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(exps, start=1)
                if e
            )
            cs = format_scalar(c) if not isinstance(c, LaurentPoly) else repr(c)
            bits.append(f"{cs}*{mono}" if mono else cs)
        return "LaurentPoly(" + " + ".join(bits) + ")"


def symmetrized_monomial(lam: Sequence[int], n: int, signed_group: bool = False) -> LaurentPoly:
    """Orbit sum of x^lam under S_n, or under S_n with exponent negation."""
    from itertools import permutations, product as iproduct

    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) > n:
        raise ValueError(f"partition {lam} longer than n={n}")
    orbit = set()
    for perm in permutations(lam):
        if signed_group:
            choices = [(e, -e) if e else (0,) for e in perm]
            for signed in iproduct(*choices):
                orbit.add(signed)
        else:
            orbit.add(perm)
    return LaurentPoly(n, {exps: Fraction(1) for exps in orbit})
