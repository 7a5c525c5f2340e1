"""
Multivariate Laurent polynomials over Q(zeta_N).

One class covers both the ring of Laurent polynomials in v (with v^2 = q) and
the ring B of Laurent polynomials in v and the lattice variables y_1..y_n.
Exponent keys are tuples `(v_exp, e_1, ..., e_n)`; `rank` is n. A rank-0
polynomial is a "scalar" in v and broadcasts against any rank.

>>> u = LaurentPoly.monomial((1,))
>>> (1 - u) * (1 + u + u**2)
LaurentPoly('1 - y[1]^3')
>>> exact_div(1 - u**3, 1 - u)
LaurentPoly('1 + y[1] + y[1]^2')
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

from .cyclotomic import CycScalar, as_scalar

__all__ = [
    "LaurentPoly",
    "BPoly",
    "VLaurent",
    "exact_div",
    "v_power",
    "q_power",
    "grlex_key",
]

Exps = tuple[int, ...]
_SCALARS = (int, Rational, CycScalar)


def grlex_key(e: Exps) -> tuple:
    return (sum(e), e)


class LaurentPoly:
    __slots__ = ("rank", "terms")

    def __init__(self, terms: Mapping[Exps, object] | None = None, rank: int = 0):
        self.rank = rank
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != rank + 1:
                    raise ValueError(f"exponent {e} does not match rank {rank}")
                c = as_scalar(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms: dict[Exps, CycScalar] = clean

    @classmethod
    def _raw(cls, terms: dict, rank: int) -> LaurentPoly:
        obj = object.__new__(cls)
        obj.rank = rank
        obj.terms = terms
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, rank: int = 0) -> LaurentPoly:
        return cls._raw({}, rank)

    @classmethod
    def constant(cls, c, rank: int = 0) -> LaurentPoly:
        c = as_scalar(c)
        return cls._raw({} if c.is_zero() else {(0,) * (rank + 1): c}, rank)

    @classmethod
    def one(cls, rank: int = 0) -> LaurentPoly:
        return cls.constant(1, rank)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1, v: int = 0) -> LaurentPoly:
        """coeff * v^v * y^exps"""
        c = as_scalar(coeff)
        key = (v, *exps)
        return cls._raw({} if c.is_zero() else {key: c}, len(exps))

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        (e, c), = self.terms.items()
        return not any(e) and c == 1

    def constant_value(self) -> CycScalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values())) if self.terms else CycScalar(0)

    def monomials(self) -> set[Exps]:
        """Lattice exponents (v dropped) appearing in the support."""
        return {e[1:] for e in self.terms}

    def coefficient(self, mono: Sequence[int]) -> LaurentPoly:
        """The v-Laurent coefficient of y^mono."""
        mono = tuple(mono)
        return LaurentPoly._raw({(e[0],): c for e, c in self.terms.items() if e[1:] == mono}, 0)

    def by_monomial(self) -> dict[Exps, LaurentPoly]:
        """Split as sum over lattice monomials m of (v-Laurent) * y^m."""
        groups: dict[Exps, dict] = {}
        for e, c in self.terms.items():
            groups.setdefault(e[1:], {})[(e[0],)] = c
        return {m: LaurentPoly._raw(t, 0) for m, t in groups.items()}

    def min_exponents(self) -> Exps:
        keys = list(self.terms)
        return tuple(min(col) for col in zip(*keys))

    def is_q_integral(self) -> bool:
        """True when only even powers of v (integral powers of q) occur."""
        return all(e[0] % 2 == 0 for e in self.terms)

    def in_sublattice(self, divisors: Sequence[int]) -> bool:
        """True when every monomial exponent e_k is divisible by divisors[k]."""
        return all(x % t == 0 for e in self.terms for x, t in zip(e[1:], divisors))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.rank == self.rank:
                return other
            if other.rank == 0:
                return other.lift(self.rank)
            if self.rank == 0:
                return other
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        if isinstance(other, _SCALARS):
            return LaurentPoly.constant(other, self.rank)
        return None

    def lift(self, rank: int) -> LaurentPoly:
        """Embed a rank-0 polynomial into rank `rank`."""
        if self.rank == rank:
            return self
        if self.rank != 0:
            raise ValueError("only rank-0 polynomials can be lifted")
        pad = (0,) * rank
        return LaurentPoly._raw({e + pad: c for e, c in self.terms.items()}, rank)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a = self if self.rank >= o.rank else self.lift(o.rank)
        if not o.terms:
            return a
        if not a.terms:
            return o
        out = dict(a.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return LaurentPoly._raw(out, a.rank)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.rank)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            c = as_scalar(other)
            if c.is_zero():
                return LaurentPoly.zero(self.rank)
            return LaurentPoly._raw({e: x * c for e, x in self.terms.items()}, self.rank)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a = self if self.rank >= o.rank else self.lift(o.rank)
        out: dict[Exps, CycScalar] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if not c.is_zero()}, a.rank)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only exist for monomials")
            (e, c), = self.terms.items()
            return LaurentPoly._raw({tuple(x * k for x in e): c.inverse() ** (-k)}, self.rank)
        result = LaurentPoly.one(self.rank)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial with full exponent tuple `exps` (v first)."""
        return LaurentPoly._raw(
            {tuple(x + y for x, y in zip(e, exps)): c for e, c in self.terms.items()}, self.rank
        )

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            if other.rank == self.rank:
                return self.terms == other.terms
            if self.rank == 0:
                return self.lift(other.rank).terms == other.terms
            if other.rank == 0:
                return self.terms == other.lift(self.rank).terms
            return False
        if isinstance(other, _SCALARS):
            return self.terms == LaurentPoly.constant(other, self.rank).terms
        return NotImplemented

    def __hash__(self):
        # rank-independent so that a lifted scalar hashes like the scalar
        return hash(frozenset(
            ((e[0], tuple((i, x) for i, x in enumerate(e[1:]) if x)), c) for e, c in self.terms.items()
        ))

    def __bool__(self):
        return bool(self.terms)

    # -- maps -------------------------------------------------------------

    def map_lattice(self, fn: Callable[[Exps], Exps]) -> LaurentPoly:
        """Apply `fn` to the lattice part of every exponent; fn must be injective."""
        return LaurentPoly._raw({(e[0], *fn(e[1:])): c for e, c in self.terms.items()}, self.rank)

    def signed_permute(self, signed_map: Sequence[tuple[int, int]]) -> LaurentPoly:
        """
        Lattice action of a signed permutation. `signed_map[k] = (target, sign)`
        sends coordinate k to sign * coordinate target.
        """
        n = self.rank

        def act(m):
            out = [0] * n
            for x, (tgt, sgn) in zip(m, signed_map):
                out[tgt] = sgn * x
            return tuple(out)

        return self.map_lattice(act)

    def twist(self, fn: Callable[[Exps], CycScalar]) -> LaurentPoly:
        """Multiply the coefficient of each y^m by fn(m)."""
        out = {}
        for e, c in self.terms.items():
            c = c * fn(e[1:])
            if not c.is_zero():
                out[e] = c
        return LaurentPoly._raw(out, self.rank)

    def specialize(self, v0=None, values: Mapping[int, object] | None = None) -> LaurentPoly:
        """
        Ring homomorphism substituting v -> v0 and y_k -> values[k] for the
        given coordinates (0-based); other variables stay symbolic.
        """
        values = {k: as_scalar(x) for k, x in (values or {}).items()}
        subs = {}
        if v0 is not None:
            subs[0] = as_scalar(v0)
        for k, x in values.items():
            subs[k + 1] = x
        for x in subs.values():
            if x.is_zero():
                raise ZeroDivisionError("specialization at zero is not defined on Laurent polynomials")
        acc: dict[Exps, CycScalar] = {}
        for e, c in self.terms.items():
            key = list(e)
            for idx, x in subs.items():
                if key[idx]:
                    c = c * x ** key[idx]
                    key[idx] = 0
            key = tuple(key)
            acc[key] = acc[key] + c if key in acc else c
        return LaurentPoly._raw({e: c for e, c in acc.items() if not c.is_zero()}, self.rank)

    # -- rendering --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exps, CycScalar]]:
        """Terms ordered lexicographically on (lattice exponents, v exponent)."""
        return sorted(self.terms.items(), key=lambda t: (t[0][1:], t[0][0]))

    def render(self, labels: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if labels is None:
            labels = [f"y[{k + 1}]" for k in range(self.rank)]
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            if e[0]:
                factors.append("v" if e[0] == 1 else f"v^{e[0]}")
            for lab, x in zip(labels, e[1:]):
                if x:
                    factors.append(lab if x == 1 else f"{lab}^{x}")
            cs = str(c)
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            elif cs == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append(cs + "*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly('{self.render()}')"


BPoly = LaurentPoly
VLaurent = LaurentPoly


def v_power(k: int, rank: int = 0, coeff=1) -> LaurentPoly:
    """coeff * v^k"""
    return LaurentPoly._raw({(k,) + (0,) * rank: as_scalar(coeff)}, rank)


def q_power(k, rank: int = 0) -> LaurentPoly:
    """q^k = v^(2k); k may be a half-integer Fraction."""
    two_k = Fraction(k) * 2
    if two_k.denominator != 1:
        raise ValueError(f"q^{k} is not a power of v = q^(1/2)")
    return v_power(int(two_k), rank)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """
    The quotient a / b in the Laurent ring, or None when b does not divide a.

    Both operands are first shifted into the polynomial ring by their minimal
    monomials; since the shifted divisor then has no monomial factor, Laurent
    divisibility coincides with polynomial divisibility, which a single-divisor
    graded-lex division decides.

    >>> y1, y2 = LaurentPoly.monomial((1, 0)), LaurentPoly.monomial((0, 1))
    >>> exact_div(y1**2 - y2**2, y1 - y2)
    LaurentPoly('y[2] + y[1]')
    >>> exact_div(y1, y1 + y2) is None
    True
    """
    if isinstance(b, _SCALARS):
        b = LaurentPoly.constant(b, a.rank)
    if b.is_zero():
        raise ZeroDivisionError("exact_div by zero")
    rank = max(a.rank, b.rank)
    a, b = a.lift(rank) if a.rank != rank else a, b.lift(rank) if b.rank != rank else b
    if a.is_zero():
        return LaurentPoly.zero(rank)
    if b.is_monomial():
        (e, c), = b.terms.items()
        inv = c.inverse()
        return LaurentPoly._raw(
            {tuple(x - y for x, y in zip(ea, e)): ca * inv for ea, ca in a.terms.items()}, rank
        )
    mb = b.min_exponents()
    ma = a.min_exponents()
    bs = [(tuple(x - y for x, y in zip(e, mb)), c) for e, c in b.terms.items()]
    lead_e, lead_c = max(bs, key=lambda t: grlex_key(t[0]))
    lead_inv = lead_c.inverse()
    rem = {tuple(x - y for x, y in zip(e, ma)): c for e, c in a.terms.items()}
    quo = {}
    while rem:
        e = max(rem, key=grlex_key)
        diff = tuple(x - y for x, y in zip(e, lead_e))
        if min(diff) < 0:
            return None
        c = rem[e] * lead_inv
        quo[diff] = c
        for be, bc in bs:
            key = tuple(x + y for x, y in zip(diff, be))
            s = rem.get(key)
            s = -(c * bc) if s is None else s - c * bc
            if s.is_zero():
                rem.pop(key, None)
            else:
                rem[key] = s
    off = tuple(x - y for x, y in zip(ma, mb))
    return LaurentPoly._raw({tuple(x + y for x, y in zip(e, off)): c for e, c in quo.items()}, rank)


def _as_poly(x, rank: int) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x, rank)


def poly_sum(items: Iterable[LaurentPoly], rank: int) -> LaurentPoly:
    acc: dict[Exps, CycScalar] = {}
    for p in items:
        for e, c in _as_poly(p, rank).lift(rank).terms.items():
            acc[e] = acc[e] + c if e in acc else c
    return LaurentPoly._raw({e: c for e, c in acc.items() if not c.is_zero()}, rank)
