"""
An independent model of the algebra inside the smash product K(B) x| (W_psi x Stab).

T_s is sent to (1 + f_s) s + f_s, where f_s is the Bernstein function of s;
J_r goes to r (this needs J_r^2 = 1), phi_chi to chi and b to b. Products in
the smash product use only the group law and the action of W_psi and Stab on
K(B), never the rewriting rules, so agreement with `mul` is a genuine check.

The model is faithful on the part of the algebra where phi_chi only meets
coefficients in B_psi, which is where it is used.
"""

from __future__ import annotations

from ..arith import Coeff, LaurentPoly, frac
from ..weyl import WeylElem
from .context import AlgebraCtx, HeckeError, _add_into, _prune

__all__ = ["SmashElem", "embed"]


class SmashElem:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraCtx, terms: dict | None = None):
        self.ctx = ctx
        self.terms = _prune(terms or {})  # (g, chi) -> Coeff

    @classmethod
    def group(cls, ctx: AlgebraCtx, g: WeylElem, chi=None, c: Coeff | None = None) -> SmashElem:
        return cls(ctx, {(g, chi or ctx.zero_char): c if c is not None else LaurentPoly.one(ctx.rank)})

    def __add__(self, other: SmashElem) -> SmashElem:
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return SmashElem(self.ctx, acc)

    def __sub__(self, other: SmashElem) -> SmashElem:
        return self + SmashElem(self.ctx, {k: -c for k, c in other.terms.items()})

    def __mul__(self, other: SmashElem) -> SmashElem:
        ctx = self.ctx
        acc: dict = {}
        for (g, chi), a in self.terms.items():
            smap = None if g.is_identity() else g.signed_map()
            for (g2, chi2), b in other.terms.items():
                b = ctx.twist_phi(chi, b)
                if smap is not None:
                    b = b.signed_permute(smap)
                _add_into(acc, (g * g2, ctx.add_chars(chi, chi2)), a * b)
        return SmashElem(ctx, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SmashElem):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None


def _t_image(ctx: AlgebraCtx, s) -> SmashElem:
    g = ctx.gen_data(s)
    f = frac(g.fnum, g.fden)
    return SmashElem(ctx, {(g.elem, ctx.zero_char): f + 1, (ctx.identity, ctx.zero_char): f})


def embed(ctx: AlgebraCtx, x, cache: dict | None = None) -> SmashElem:
    """The image of a HeckeElem in the smash product."""
    if any(c != 1 for c in ctx.j_square.values()):
        raise HeckeError("the smash-product model needs J_r^2 = 1")
    cache = {} if cache is None else cache
    out = SmashElem(ctx)
    for (chi, r, w), c in x.terms.items():
        img = cache.get(w)
        if img is None:
            img = SmashElem.group(ctx, ctx.identity)
            for s in ctx.reduced_word(w):
                img = img * _t_image(ctx, s)
            cache[w] = img
        head = SmashElem.group(ctx, ctx.r_elem(r), chi, c)
        out = out + head * img
    return out
