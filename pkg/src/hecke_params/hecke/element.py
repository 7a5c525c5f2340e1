"""
Elements of the algebra in normal form: finite sums of c * phi_chi J_r T_w
with the coefficient c in B (or its fraction field) written on the left.

>>> from hecke_params.langlands import Case, ClassifiedBlock, Nature
>>> blk = ClassifiedBlock("rho", 2, 2, 1, Case.I, Nature.NONE)
>>> ctx = AlgebraCtx([blk])
>>> T = t_gen(ctx, SimpleGen(1, 1))
>>> q = scalar(ctx, q_power(1))
>>> ((T + 1) * (T - q)).is_zero()
True
>>> x = b_mono(ctx, (1, -1))
>>> print(x * T - T * b_mono(ctx, (-1, 1)))
q - 1
(q - 1) · b[1,-1]
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Sequence

from ..arith import BFrac, Coeff, CycScalar, LaurentPoly, q_power
from ..weyl import InvalidGenerator, RElem, SimpleGen, WeylElem
from .context import (
    AlgebraCtx,
    Char,
    CtxMismatch,
    ExactnessViolation,
    _add_into,
    _prune,
)

__all__ = [
    "HeckeElem",
    "Mode",
    "t_gen",
    "j_gen",
    "phi_gen",
    "b_mono",
    "scalar",
    "unit",
    "mul",
    "bernstein_correction",
    "block_projection",
    "basis_symbols",
    "coefficients_mode",
    "q_power",
]

Key = tuple[Char, RElem, WeylElem]


class Mode(enum.Enum):
    STRICT_BPSI = "StrictBpsi"
    STRICT_B = "StrictB"
    RATIONAL = "Rational"


_SCALARS = (int, Fraction, CycScalar)


class HeckeElem:
    """An immutable algebra element; `terms` maps (chi, r, w) to a nonzero coefficient."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraCtx, terms: dict[Key, Coeff] | None = None):
        self.ctx = ctx
        self.terms = _prune(terms or {})

    def _check(self, other: HeckeElem) -> None:
        if other.ctx is not self.ctx:
            raise CtxMismatch("elements belong to different algebra contexts")

    def _lift(self, other) -> HeckeElem | None:
        if isinstance(other, HeckeElem):
            self._check(other)
            return other
        if isinstance(other, (*_SCALARS, LaurentPoly, BFrac)):
            return HeckeElem(self.ctx, {(self.ctx.zero_char, frozenset(), self.ctx.identity): self.ctx.coeff(other)})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        acc = dict(self.terms)
        for k, c in o.terms.items():
            _add_into(acc, k, c)
        return HeckeElem(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElem(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return mul(self.ctx, self, o)

    def __rmul__(self, other):
        # other * self with other a coefficient: multiply on the left
        if isinstance(other, (*_SCALARS, LaurentPoly, BFrac)):
            return self.scale(self.ctx.coeff(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = unit(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> HeckeElem:
        """c * self with c a coefficient placed on the left."""
        c = self.ctx.coeff(c) if not isinstance(c, (LaurentPoly, BFrac)) else c
        return HeckeElem(self.ctx, {k: c * a for k, a in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, HeckeElem) else other
        if o is None:
            return NotImplemented
        if o.ctx is not self.ctx:
            return False
        return (self - o).is_zero()

    __hash__ = None

    @property
    def strict(self) -> bool:
        return all(isinstance(c, LaurentPoly) for c in self.terms.values())

    def mode(self) -> Mode:
        return coefficients_mode(self)

    def sorted_keys(self) -> list[Key]:
        ctx = self.ctx
        return sorted(
            self.terms,
            key=lambda k: (k[0], sorted(k[1]), ctx.length(k[2]), ctx.reduced_word(k[2])),
        )

    def coefficient(self, chi: Char | None = None, r: Iterable[int] = (), w: WeylElem | None = None) -> Coeff:
        ctx = self.ctx
        key = (chi or ctx.zero_char, frozenset(r), w or ctx.identity)
        return self.terms.get(key, LaurentPoly.zero(ctx.rank))

    def __str__(self):
        from .render import render_plain

        return render_plain(self)

    def __repr__(self):
        return f"HeckeElem({self})"


# -- generators --------------------------------------------------------------


def unit(ctx: AlgebraCtx) -> HeckeElem:
    return HeckeElem(ctx, {(ctx.zero_char, frozenset(), ctx.identity): LaurentPoly.one(ctx.rank)})


def scalar(ctx: AlgebraCtx, c) -> HeckeElem:
    """A coefficient (scalar, v-Laurent polynomial or element of B) as an algebra element."""
    return HeckeElem(ctx, {(ctx.zero_char, frozenset(), ctx.identity): ctx.coeff(c)})


def t_gen(ctx: AlgebraCtx, s: SimpleGen | tuple[int, int]) -> HeckeElem:
    s = SimpleGen(*s)
    g = ctx.gen_data(s)
    return HeckeElem(ctx, {(ctx.zero_char, frozenset(), g.elem): LaurentPoly.one(ctx.rank)})


def t_word(ctx: AlgebraCtx, w: WeylElem) -> HeckeElem:
    if not ctx.weyl.in_w0(w):
        raise InvalidGenerator(f"{w} is not in W°")
    return HeckeElem(ctx, {(ctx.zero_char, frozenset(), w): LaurentPoly.one(ctx.rank)})


def j_gen(ctx: AlgebraCtx, r: Iterable[int]) -> HeckeElem:
    r = frozenset(r)
    ctx.r_elem(r)  # validates
    return HeckeElem(ctx, {(ctx.zero_char, r, ctx.identity): LaurentPoly.one(ctx.rank)})


def phi_gen(ctx: AlgebraCtx, chi: Sequence[int]) -> HeckeElem:
    return HeckeElem(ctx, {(ctx.normalize_char(chi), frozenset(), ctx.identity): LaurentPoly.one(ctx.rank)})


def b_mono(ctx: AlgebraCtx, m: Sequence[int]) -> HeckeElem:
    if len(m) != ctx.rank:
        raise CtxMismatch(f"monomial needs {ctx.rank} exponents, got {len(m)}")
    return HeckeElem(ctx, {(ctx.zero_char, frozenset(), ctx.identity): LaurentPoly.monomial(tuple(m))})


# -- multiplication ------------------------------------------------------------


def mul(ctx: AlgebraCtx, x: HeckeElem, y: HeckeElem) -> HeckeElem:
    """
    The normal form of x * y.

    For a pair of terms a phi_chi J_r T_u and b phi_chi' J_r' T_w, the
    coefficient b is moved left across T_u by the Bernstein rule, across J_r
    by ^r and across phi_chi by the character twist; the phi's merge, J_r
    J_r' becomes a scalar multiple of J_{r xor r'} after conjugating the
    intervening T's, and the remaining T-product is reduced in the finite
    Hecke algebra.
    """
    if x.ctx is not ctx or y.ctx is not ctx:
        raise CtxMismatch("elements belong to different algebra contexts")
    acc: dict = {}
    for (chi, r, u), a in x.terms.items():
        for (chi2, r2, w), b in y.terms.items():
            chi3 = ctx.add_chars(chi, chi2)
            r3 = r ^ r2
            jscal = ctx.j_product(r, r2)
            for z, cz in ctx.t_times_coeff(u, b).items():
                c = a * ctx.twist_phi(chi, ctx.act_r(r, cz))
                if jscal != 1:
                    c = c * jscal
                z2 = ctx.conjugate(r2, z)
                for y_, k in ctx.finite_mul(z2, w).items():
                    _add_into(acc, (chi3, r3, y_), c if k.is_one() else c * k)
    return HeckeElem(ctx, acc)


def bernstein_correction(ctx: AlgebraCtx, s: SimpleGen, b: Coeff) -> Coeff:
    """
    f_s (b - ^s b), so that b T_s = T_s ^s b + f_s (b - ^s b).

    Raises ExactnessViolation if b has support in Lambda_psi but the result
    is not a Laurent polynomial.
    """
    s = SimpleGen(*s)
    b = ctx.coeff(b)
    out = ctx.correction(s, b)
    if isinstance(b, LaurentPoly) and b.in_sublattice(ctx.divisors) and not isinstance(out, LaurentPoly):
        raise ExactnessViolation(f"correction of {b} across T[{s.block},{s.pos}] is not polynomial")
    return out


# -- projections and modes -------------------------------------------------------


def block_projection(ctx: AlgebraCtx, j: Sequence[int]) -> HeckeElem:
    """p^j = |Stab|^-1 sum_chi chi(h^j)^-1 phi_chi."""
    j = tuple(j)
    if len(j) != ctx.rank or any(not 1 <= x <= t for x, t in zip(j, ctx.divisors)):
        raise CtxMismatch(f"block index {j} outside prod {{1..t}}")
    chars = ctx.characters()
    inv = Fraction(1, len(chars))
    terms = {}
    for chi in chars:
        val = ctx.char_value(chi, j).inverse() * inv
        terms[(chi, frozenset(), ctx.identity)] = LaurentPoly.constant(val, ctx.rank)
    return HeckeElem(ctx, terms)


def basis_symbols(ctx: AlgebraCtx) -> list[tuple[RElem, WeylElem]]:
    """The symbols J_r T_w, r in R_psi and w in W°, of the basis at a fixed phi."""
    return [(r, w) for r in ctx.weyl.r_elements() for w in ctx.weyl.elements()]


def coefficients_mode(x: HeckeElem) -> Mode:
    mode = Mode.STRICT_BPSI
    for c in x.terms.values():
        if not isinstance(c, LaurentPoly):
            return Mode.RATIONAL
        if mode is Mode.STRICT_BPSI and not c.in_sublattice(x.ctx.divisors):
            mode = Mode.STRICT_B
    return mode
