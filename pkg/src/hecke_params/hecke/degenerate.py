"""
The q -> 1 degeneration: the group algebra of (Lambda x| W_psi) x Stab,
twisted by the Stab characters.

A basis element (m, chi, g) stands for b_m phi_chi g, and

    (m, chi, g)(m', chi', g') = chi(g m') (m + g m', chi + chi', g g').

This product is implemented here from scratch so that it can serve as an
oracle for the rewriting engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import BFrac, CycScalar
from ..weyl import WeylElem
from .context import AlgebraCtx, NotSpecializable

__all__ = ["GroupAlgebraElem", "specialize_q1", "group_basis_elem"]


def _char(conductor: int, divisors, chi, m) -> CycScalar:
    e = 0
    for c, x, t in zip(chi, m, divisors):
        e += (conductor // t) * c * x
    return CycScalar.zeta(conductor, e % conductor)


@dataclass
class GroupAlgebraElem:
    ctx: AlgebraCtx
    terms: dict = field(default_factory=dict)  # (m, chi, g) -> CycScalar

    def __post_init__(self):
        self.terms = {k: c for k, c in self.terms.items() if not c.is_zero()}

    def __add__(self, other: GroupAlgebraElem) -> GroupAlgebraElem:
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return GroupAlgebraElem(self.ctx, acc)

    def __mul__(self, other: GroupAlgebraElem) -> GroupAlgebraElem:
        ctx = self.ctx
        divisors = ctx.divisors
        acc: dict = {}
        for (m, chi, g), a in self.terms.items():
            for (m2, chi2, g2), b in other.terms.items():
                gm2 = g.act(m2)
                c = a * b * _char(ctx.conductor, divisors, chi, gm2)
                key = (
                    tuple(x + y for x, y in zip(m, gm2)),
                    tuple((x + y) % t for x, y, t in zip(chi, chi2, divisors)),
                    g * g2,
                )
                acc[key] = acc[key] + c if key in acc else c
        return GroupAlgebraElem(ctx, acc)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElem):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = CycScalar(0)
        return all(self.terms.get(k, zero) == other.terms.get(k, zero) for k in keys)

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{list(m)},{list(chi)},{g}]" for (m, chi, g), c in sorted(
            self.terms.items(), key=lambda t: (t[0][0], t[0][1], str(t[0][2]))))


def group_basis_elem(ctx: AlgebraCtx, m=None, chi=None, g: WeylElem | None = None, coeff=1) -> GroupAlgebraElem:
    key = (tuple(m or (0,) * ctx.rank), tuple(chi or ctx.zero_char), g or ctx.identity)
    return GroupAlgebraElem(ctx, {key: CycScalar(coeff) if not isinstance(coeff, CycScalar) else coeff})


def specialize_q1(ctx: AlgebraCtx, x) -> GroupAlgebraElem:
    """Image of x under v -> 1: T_w -> w, J_r -> r, b_m -> m, phi_chi -> chi."""
    if any(c != 1 for c in ctx.j_square.values()):
        raise NotSpecializable("the degeneration needs J_r^2 = 1")
    acc: dict = {}
    for (chi, r, w), c in x.terms.items():
        if isinstance(c, BFrac):
            raise NotSpecializable(f"coefficient {c} is not a Laurent polynomial")
        g = ctx.r_elem(r) * w
        for m, cm in c.by_monomial().items():
            val = cm.specialize(1).constant_value()
            key = (m, chi, g)
            acc[key] = acc[key] + val if key in acc else val
    return GroupAlgebraElem(ctx, acc)
