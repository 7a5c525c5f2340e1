"""
The algebra context: root datum, parameters, Stab characters and the caches
used by the rewriting engine.

A context is immutable from the outside; its caches only memoize pure
functions of the context data.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import lcm
from typing import Callable, Sequence

from ..arith import BFrac, Coeff, CycScalar, LaurentPoly, as_scalar, frac, frac_is_polynomial, v_power
from ..arith.laurent import poly_sum
from ..langlands import Case, ClassifiedBlock, LanglandsDescriptor, classify
from ..rootdatum import BasedRootDatum, build_root_datum
from ..weyl import InvalidGenerator, RElem, SimpleGen, WeylElem

__all__ = [
    "AlgebraCtx",
    "CtxMismatch",
    "ExactnessViolation",
    "NotSpecializable",
    "HeckeError",
]

Char = tuple[int, ...]


class HeckeError(ValueError):
    pass


class CtxMismatch(HeckeError):
    pass


class ExactnessViolation(HeckeError):
    """A Bernstein correction on a B_psi coefficient failed to be polynomial."""


class NotSpecializable(HeckeError):
    pass


def _add_into(acc: dict, key, c) -> None:
    s = acc.get(key)
    acc[key] = c if s is None else s + c


def _prune(acc: dict) -> dict:
    return {k: c for k, c in acc.items() if not c.is_zero()}


def coeff_sum(items: Sequence[Coeff], rank: int) -> Coeff:
    polys = [c for c in items if isinstance(c, LaurentPoly)]
    out = poly_sum(polys, rank)
    for c in items:
        if not isinstance(c, LaurentPoly):
            out = out + c
    return out


class _GenData:
    __slots__ = ("gen", "elem", "smap", "quad", "quad_minus_one", "fnum", "fden", "root", "q_exp")

    def __init__(self, gen, elem, smap, quad, fnum, fden, root, q_exp):
        self.gen = gen
        self.elem = elem
        self.smap = smap
        self.quad = quad
        self.quad_minus_one = quad - 1
        self.fnum = fnum
        self.fden = fden
        self.root = root
        self.q_exp = q_exp


class AlgebraCtx:
    """
    Everything the normal-form engine needs about one Bernstein block.

    `j_square` maps case-II block indices to the scalar J_{r_i}^2 (default 1).
    `involution` is the coset map j -> j' used for block indices under r;
    no relation of the algebra depends on it.
    """

    def __init__(
        self,
        blocks: Sequence[ClassifiedBlock],
        j_square: dict[int, object] | object | None = None,
        involution: Callable[[int, int], int] | None = None,
        descriptor: LanglandsDescriptor | None = None,
    ):
        self.blocks = tuple(blocks)
        self.descriptor = descriptor
        self.datum: BasedRootDatum = build_root_datum(self.blocks)
        self.weyl = self.datum.weyl
        self.rank = self.datum.rank
        self.divisors = self.datum.lattice.divisors
        self.conductor = lcm(*self.divisors) if self.divisors else 1
        if j_square is None:
            j_square = 1
        if not isinstance(j_square, dict):
            j_square = {i: j_square for i in self.weyl.r_blocks}
        self.j_square = {}
        for i in self.weyl.r_blocks:
            c = as_scalar(j_square.get(i, 1))
            if c.is_zero():
                raise HeckeError("J_r^2 must be a nonzero scalar")
            self.j_square[i] = c
        self.involution = involution or (lambda j, t: (-j) % t or t)
        self.zero_char: Char = (0,) * self.rank
        self.identity = self.weyl.identity
        self.labels = [f"y[{b.index},{j}]" for b in self.blocks for j in range(1, b.d + 1)]

        self._gens: dict[SimpleGen, _GenData] = {}
        for s in self.datum.simple_gens:
            p = self.datum.params[s]
            root = self.datum.root(s)
            n = self.rank
            quad = v_power(p.quad_v_exponent)
            x_inv = LaurentPoly.monomial(tuple(-a for a in root))
            if p.bern_twist is None:
                fnum = (v_power(p.bern_main_v_exponent) - 1).lift(n)
                fden = 1 - x_inv
            else:
                e1, e2 = p.bern_twist
                fnum = (v_power(p.bern_main_v_exponent) - 1).lift(n) + x_inv * (v_power(e1) - v_power(e2))
                fden = 1 - x_inv * x_inv
            elem = self.weyl.gen(s)
            self._gens[s] = _GenData(s, elem, elem.signed_map(), quad, fnum, fden, root, p.quad_q_exponent)

        self._length: dict[WeylElem, int] = {}
        self._rw: dict[WeylElem, tuple[SimpleGen, ...]] = {}
        self._ds_mono: dict = {}
        self._tw_mono: dict = {}
        self._fin: dict = {}
        self._conj: dict = {}
        self._relems: dict = {}

    # -- construction -------------------------------------------------------

    @classmethod
    def from_descriptor(cls, desc: LanglandsDescriptor, **kw) -> AlgebraCtx:
        return cls(classify(desc), descriptor=desc, **kw)

    def __repr__(self):
        shape = ", ".join(f"{b.case.value}(d={b.d},t={b.t})" for b in self.blocks)
        return f"AlgebraCtx[{shape}]"

    # -- Weyl helpers ---------------------------------------------------------

    @property
    def simple_gens(self) -> tuple[SimpleGen, ...]:
        return self.datum.simple_gens

    def gen_data(self, s: SimpleGen) -> _GenData:
        try:
            return self._gens[s]
        except KeyError:
            raise InvalidGenerator(f"T[{s.block},{s.pos}] is not a generator of this algebra") from None

    def length(self, w: WeylElem) -> int:
        n = self._length.get(w)
        if n is None:
            n = self._length[w] = self.weyl.length(w)
        return n

    def reduced_word(self, w: WeylElem) -> tuple[SimpleGen, ...]:
        rw = self._rw.get(w)
        if rw is None:
            rw = self._rw[w] = tuple(self.weyl.reduced_word(w))
        return rw

    def r_elem(self, r: RElem) -> WeylElem:
        e = self._relems.get(r)
        if e is None:
            e = self._relems[r] = self.weyl.r_elem(r)
        return e

    def conjugate(self, r: RElem, w: WeylElem) -> WeylElem:
        """r^-1 w r"""
        if not r:
            return w
        key = (r, w)
        out = self._conj.get(key)
        if out is None:
            out = self._conj[key] = self.weyl.conjugate(r, w)
        return out

    def act_r(self, r: RElem, c: Coeff) -> Coeff:
        if not r:
            return c
        return c.signed_permute(self.r_elem(r).signed_map())

    def j_product(self, r1: RElem, r2: RElem) -> CycScalar:
        out = CycScalar(1)
        for i in r1 & r2:
            out = out * self.j_square[i]
        return out

    def in_lambda_psi(self, m: Sequence[int]) -> bool:
        return self.datum.lattice.contains(m)

    # -- characters ----------------------------------------------------------

    def characters(self) -> list[Char]:
        """All of Stab, as residue vectors."""
        return [tuple(c) for c in product(*(range(t) for t in self.divisors))]

    def normalize_char(self, chi: Sequence[int]) -> Char:
        if len(chi) != self.rank:
            raise CtxMismatch(f"character needs {self.rank} residues, got {len(chi)}")
        return tuple(int(c) % t for c, t in zip(chi, self.divisors))

    def add_chars(self, a: Char, b: Char) -> Char:
        return tuple((x + y) % t for x, y, t in zip(a, b, self.divisors))

    def char_exponent(self, chi: Char, m: Sequence[int]) -> int:
        n = self.conductor
        return sum((n // t) * c * x for c, x, t in zip(chi, m, self.divisors)) % n

    def char_value(self, chi: Char, m: Sequence[int]) -> CycScalar:
        """chi(b_m) = zeta_N^(sum (N/t) c m)."""
        return CycScalar.zeta(self.conductor, self.char_exponent(chi, m))

    def twist_phi(self, chi: Char, c: Coeff) -> Coeff:
        """The coefficient c moved leftwards across phi_chi."""
        if chi == self.zero_char:
            return c
        return c.twist(lambda m: self.char_value(chi, m))

    # -- Bernstein rewriting ------------------------------------------------------

    def reflect(self, s: SimpleGen, c: Coeff) -> Coeff:
        return c.signed_permute(self.gen_data(s).smap)

    def _ds_monomial(self, s: SimpleGen, m: tuple[int, ...]) -> Coeff:
        key = (s, m)
        out = self._ds_mono.get(key)
        if out is None:
            g = self.gen_data(s)
            sm = g.elem.act(m)
            if sm == m:
                out = LaurentPoly.zero(self.rank)
            else:
                diff = LaurentPoly.monomial(m) - LaurentPoly.monomial(sm)
                out = frac(diff * g.fnum, g.fden)
                if not isinstance(out, LaurentPoly) and self.in_lambda_psi(m):
                    raise ExactnessViolation(f"correction for T[{s.block},{s.pos}] and b{list(m)} is not polynomial")
            self._ds_mono[key] = out
        return out

    def correction(self, s: SimpleGen, c: Coeff) -> Coeff:
        """f_s (c - ^s c): the defect in T_s c = (^s c) T_s + f_s (c - ^s c)."""
        if isinstance(c, LaurentPoly):
            parts = []
            for m, cm in c.by_monomial().items():
                d = self._ds_monomial(s, m)
                if not d.is_zero():
                    parts.append(d * cm)
            return coeff_sum(parts, self.rank)
        g = self.gen_data(s)
        sc = self.reflect(s, c)
        num = (c.num * sc.den - sc.num * c.den) * g.fnum
        return frac(num, c.den * sc.den * g.fden)

    def left_t_hecke(self, s: SimpleGen, u: WeylElem) -> list[tuple[WeylElem, LaurentPoly | None]]:
        """T_s T_u as [(w, scalar)], scalar None meaning 1."""
        g = self.gen_data(s)
        su = g.elem * u
        if self.length(su) > self.length(u):
            return [(su, None)]
        return [(su, g.quad), (u, g.quad_minus_one)]

    def _ts_apply(self, s: SimpleGen, terms: dict) -> dict:
        """T_s * sum c_u T_u, rewritten to sum c'_w T_w."""
        acc: dict = {}
        for u, cu in terms.items():
            sc = self.reflect(s, cu)
            for w, k in self.left_t_hecke(s, u):
                _add_into(acc, w, sc if k is None else sc * k)
            d = self.correction(s, cu)
            if not d.is_zero():
                _add_into(acc, u, d)
        return _prune(acc)

    def _tw_monomial(self, w: WeylElem, m: tuple[int, ...]) -> dict:
        key = (w, m)
        out = self._tw_mono.get(key)
        if out is None:
            if self.length(w) == 0:
                out = {w: LaurentPoly.monomial(m)}
            else:
                s = self.reduced_word(w)[0]
                rest = self.gen_data(s).elem * w
                out = self._ts_apply(s, self._tw_monomial(rest, m))
            self._tw_mono[key] = out
        return out

    def t_times_coeff(self, w: WeylElem, c: Coeff) -> dict:
        """T_w c = sum_z c_z T_z, as {z: c_z}."""
        if self.length(w) == 0:
            return {w: c}
        if isinstance(c, LaurentPoly):
            acc: dict = {}
            for m, cm in c.by_monomial().items():
                for z, cz in self._tw_monomial(w, m).items():
                    _add_into(acc, z, cz if cm.is_one() else cz * cm)
            return _prune(acc)
        terms = {self.identity: c}
        for s in reversed(self.reduced_word(w)):
            terms = self._ts_apply(s, terms)
        return terms

    def finite_mul(self, a: WeylElem, b: WeylElem) -> dict:
        """T_a T_b in the finite Hecke algebra, as {w: v-Laurent scalar}."""
        key = (a, b)
        out = self._fin.get(key)
        if out is None:
            if self.length(a) == 0:
                out = {b: LaurentPoly.one()}
            else:
                s = self.reduced_word(a)[0]
                rest = self.gen_data(s).elem * a
                acc: dict = {}
                for u, k in self.finite_mul(rest, b).items():
                    for w, k2 in self.left_t_hecke(s, u):
                        _add_into(acc, w, k if k2 is None else k * k2)
                out = _prune(acc)
            self._fin[key] = out
        return out

    # -- projections / block indices -------------------------------------------

    def block_indices(self) -> list[tuple[int, ...]]:
        """The index set J = prod {1..t_i}^{d_i}."""
        return [tuple(j) for j in product(*(range(1, t + 1) for t in self.divisors))]

    def shift_index(self, j: Sequence[int], m: Sequence[int]) -> tuple[int, ...]:
        """j - m, read in {1..t} per coordinate."""
        return tuple((x - y - 1) % t + 1 for x, y, t in zip(j, m, self.divisors))

    def contragredient_index(self, j: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.involution(x, t) for x, t in zip(j, self.divisors))

    # -- coefficient helpers ---------------------------------------------------

    def coeff(self, x) -> Coeff:
        """Coerce a scalar or rank-0 polynomial to a rank-n coefficient."""
        if isinstance(x, BFrac):
            return x
        if isinstance(x, LaurentPoly):
            return x.lift(self.rank) if x.rank != self.rank else x
        if isinstance(x, (int, Fraction, CycScalar)):
            return LaurentPoly.constant(x, self.rank)
        raise TypeError(f"cannot use {x!r} as a coefficient")

    def is_polynomial(self, c: Coeff) -> bool:
        return isinstance(c, LaurentPoly) or frac_is_polynomial(c) is not None

    def summary(self) -> dict:
        return {
            "blocks": [
                {"index": b.index, "label": b.label, "case": b.case.value, "d": b.d, "t": b.t, "a": b.a, "a_minus": b.a_minus}
                for b in self.blocks
            ],
            "rank": self.rank,
            "conductor": self.conductor,
            "j_square": {str(i): str(c) for i, c in self.j_square.items()},
        }

    def has_case(self, case: Case) -> bool:
        return any(b.case is case for b in self.blocks)
