"""
Fractions of Laurent polynomials, K(B).

Fractions are not gcd-reduced. `frac` folds monomial denominators into the
numerator and collapses to a `LaurentPoly` whenever the division is exact, so
polynomial values never carry a denominator. Equality is decided by
cross-multiplication.
"""

from __future__ import annotations

from numbers import Rational
from typing import Union

from .cyclotomic import CycScalar
from .laurent import LaurentPoly, exact_div

__all__ = ["BFrac", "Coeff", "frac", "frac_is_polynomial", "is_zero_coeff"]

_SCALARS = (int, Rational, CycScalar)


class BFrac:
    """num / den with den != 0; always genuinely non-polynomial when built by `frac`."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        if den.is_zero():
            raise ZeroDivisionError("fraction with zero denominator")
        rank = max(num.rank, den.rank)
        self.num = num.lift(rank) if num.rank != rank else num
        self.den = den.lift(rank) if den.rank != rank else den

    @property
    def rank(self) -> int:
        return self.num.rank

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _parts(self, other):
        if isinstance(other, BFrac):
            return other.num, other.den
        if isinstance(other, LaurentPoly):
            return other, LaurentPoly.one(other.rank)
        if isinstance(other, _SCALARS):
            return LaurentPoly.constant(other, self.rank), LaurentPoly.one(self.rank)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n, d = p
        if d.is_one():
            return frac(self.num + n * self.den, self.den)
        if d == self.den:
            return frac(self.num + n, d)
        return frac(self.num * d + n * self.den, self.den * d)

    __radd__ = __add__

    def __neg__(self):
        return BFrac(-self.num, self.den)

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self + BFrac(-p[0], p[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n, d = p
        return frac(self.num * n, self.den * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n, d = p
        return frac(self.num * d, self.den * n)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n, d = p
        return frac(n * self.den, d * self.num)

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n, d = p
        return self.num * d == n * self.den

    __hash__ = None  # no canonical form

    def map_lattice(self, fn) -> BFrac:
        return BFrac(self.num.map_lattice(fn), self.den.map_lattice(fn))

    def signed_permute(self, signed_map) -> BFrac:
        return BFrac(self.num.signed_permute(signed_map), self.den.signed_permute(signed_map))

    def twist(self, fn) -> BFrac:
        return BFrac(self.num.twist(fn), self.den.twist(fn))

    def specialize(self, v0=None, values=None):
        return frac(self.num.specialize(v0, values), self.den.specialize(v0, values))

    def render(self, labels=None) -> str:
        return f"({self.num.render(labels)})/({self.den.render(labels)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BFrac('{self.render()}')"


Coeff = Union[LaurentPoly, BFrac]


def frac(num: LaurentPoly, den: LaurentPoly) -> Coeff:
    """num / den, as a LaurentPoly when exact and as a BFrac otherwise."""
    if isinstance(den, _SCALARS):
        den = LaurentPoly.constant(den, num.rank)
    q = exact_div(num, den)
    if q is not None:
        return q
    return BFrac(num, den)


def frac_is_polynomial(f: Coeff) -> LaurentPoly | None:
    """The polynomial value of f, or None when f lies outside B."""
    if isinstance(f, LaurentPoly):
        return f
    return exact_div(f.num, f.den)


def is_zero_coeff(c) -> bool:
    return c.is_zero()
