"""
The based root datum (Lambda, Sigma, Lambda^v, Sigma^v, Delta) and the Hecke
parameters attached to its simple roots.

Roots live in the exponent lattice Z^n of B; the sublattice Lambda_psi is
cut out by requiring coordinate (i, j) to be divisible by t_i.

>>> from hecke_params.langlands import Case, ClassifiedBlock, Nature
>>> blk = ClassifiedBlock("rho", 1, 2, 1, Case.III, Nature.ORTHOGONAL, a=3, a_minus=1)
>>> rd = build_root_datum([blk])
>>> rd.delta
((1, -1), (0, 1))
>>> sorted(rd.sigma_plus)
[(0, 1), (1, -1), (1, 0), (1, 1)]
>>> rd.params[rd.simple_gens[1]].quad_v_exponent
6
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .langlands import Case, ClassifiedBlock
from .weyl import NotSimple, SimpleGen, WeylGroup

__all__ = [
    "Lattice",
    "RootParams",
    "BasedRootDatum",
    "RootSystemViolation",
    "build_root_datum",
    "parameters",
    "verify_root_system",
]

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Lattice:
    """Z^n together with the sublattice Lambda_psi given by per-coordinate divisors."""

    divisors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @property
    def index(self) -> int:
        """[Z^n : Lambda_psi]"""
        return prod(self.divisors)

    @property
    def is_full(self) -> bool:
        return all(t == 1 for t in self.divisors)

    def contains(self, m: Sequence[int]) -> bool:
        return all(x % t == 0 for x, t in zip(m, self.divisors))


@dataclass(frozen=True)
class RootParams:
    """
    Parameters of one simple root, all as powers of v (v^2 = q).

    The quadratic relation is (T_s + 1)(T_s - v^quad_v_exponent) = 0. The
    Bernstein correction has numerator (v^bern_main_v_exponent - 1), plus
    X^-1 (v^e1 - v^e2) when `bern_twist = (e1, e2)`, over the denominator
    1 - X^-1 or 1 - X^-2 according to `denominator_kind`.
    """

    quad_v_exponent: int
    bern_main_v_exponent: int
    bern_twist: tuple[int, int] | None
    denominator_kind: str  # "OneMinusXInv" | "OneMinusXInvSquared"

    @property
    def quad_q_exponent(self) -> Fraction:
        return Fraction(self.quad_v_exponent, 2)

    def to_dict(self) -> dict:
        return {
            "quad_v_exponent": self.quad_v_exponent,
            "bern_main_v_exponent": self.bern_main_v_exponent,
            "bern_twist": list(self.bern_twist) if self.bern_twist else None,
            "denominator_kind": self.denominator_kind,
        }


@dataclass(frozen=True)
class RootSystemViolation:
    kind: str
    witness: tuple

    def __str__(self):
        return f"{self.kind}: {self.witness}"


def _is_positive(vec: Sequence[int]) -> bool:
    for c in vec:
        if c:
            return c > 0
    return False


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def coroot(alpha: Sequence[int]) -> tuple[Fraction, ...]:
    """2 alpha / (alpha, alpha) under the standard pairing."""
    n = _dot(alpha, alpha)
    return tuple(Fraction(2 * x, n) for x in alpha)


def _simple_root(block: ClassifiedBlock, j: int, offset: int, rank: int) -> Vector:
    v = [0] * rank
    t, d = block.t, block.d
    if j < d:
        v[offset + j - 1], v[offset + j] = t, -t
    elif block.case is Case.III:
        v[offset + d - 1] = t
    else:
        v[offset + d - 2], v[offset + d - 1] = t, t
    return tuple(v)


def parameters(block: ClassifiedBlock, j: int) -> RootParams:
    """Hecke parameters of the simple root X_{i,j} of `block`."""
    if not 1 <= j <= block.num_simple:
        raise NotSimple(f"X_{{{block.index},{j}}} is not a simple root of a case {block.case.value} block of rank {block.d}")
    t = block.t
    if j == block.d and block.case is Case.III:
        quad = t * (block.a + block.a_minus) + 2 * t
        return RootParams(quad, quad, (t * (block.a + 1), t * (block.a_minus + 1)), "OneMinusXInvSquared")
    return RootParams(2 * t, 2 * t, None, "OneMinusXInv")


@dataclass(frozen=True)
class BasedRootDatum:
    lattice: Lattice
    blocks: tuple[ClassifiedBlock, ...]
    weyl: WeylGroup
    simple_gens: tuple[SimpleGen, ...]
    delta: tuple[Vector, ...]
    sigma: frozenset
    sigma_plus: frozenset
    coroots: dict = field(hash=False, compare=False)
    params: dict = field(hash=False, compare=False)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def root(self, s: SimpleGen) -> Vector:
        return self.delta[self.simple_gens.index(s)]

    def pairing(self, m: Sequence[int], covector: Sequence) -> Fraction:
        return Fraction(_dot(m, covector))

    def block_offsets(self) -> list[int]:
        return list(self.weyl.offsets)

    def cartan_summary(self) -> list[str]:
        out = []
        for b in self.blocks:
            if b.case is Case.I:
                kind = f"A{b.d - 1}" if b.d > 1 else "trivial"
            elif b.case is Case.III:
                kind = f"B{b.d}"
            elif b.d == 1:
                kind = "trivial"
            elif b.d == 2:
                kind = "D2 = A1xA1"
            elif b.d == 3:
                kind = "D3 = A3"
            else:
                kind = f"D{b.d}"
            exps = [self.params[SimpleGen(b.index, j)].quad_q_exponent for j in range(1, b.num_simple + 1)]
            qs = ", ".join("q" if e == 1 else f"q^{e}" for e in exps) or "none"
            line = f"block {b.index} ({b.label}): case {b.case.value}, {kind}, t={b.t}, quadratic params [{qs}]"
            if b.case is Case.II:
                line += ", R_psi nontrivial"
            out.append(line)
        return out

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "lattice_divisors": list(self.lattice.divisors),
            "delta": [list(a) for a in self.delta],
            "sigma_plus": [list(a) for a in sorted(self.sigma_plus, reverse=True)],
            "coroots": [
                {"root": list(a), "coroot": [str(x) for x in self.coroots[a]]}
                for a in sorted(self.sigma_plus, reverse=True)
            ],
            "params": [
                {"gen": [s.block, s.pos], "root": list(self.root(s)), **self.params[s].to_dict()}
                for s in self.simple_gens
            ],
            "r_blocks": list(self.weyl.r_blocks),
            "cartan": self.cartan_summary(),
        }


def build_root_datum(blocks: Sequence[ClassifiedBlock]) -> BasedRootDatum:
    blocks = tuple(blocks)
    weyl = WeylGroup.from_blocks(blocks)
    rank = weyl.rank
    lattice = Lattice(tuple(b.t for b in blocks for _ in range(b.d)))
    gens, delta, params = [], [], {}
    for b, off in zip(blocks, weyl.offsets):
        for j in range(1, b.num_simple + 1):
            s = SimpleGen(b.index, j)
            gens.append(s)
            delta.append(_simple_root(b, j, off, rank))
            params[s] = parameters(b, j)
    sigma = set(delta)
    frontier = list(delta)
    gen_elems = [weyl.gen(s) for s in gens]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gen_elems:
                b = g.act(a)
                if b not in sigma:
                    sigma.add(b)
                    nxt.append(b)
        frontier = nxt
    sigma_plus = frozenset(a for a in sigma if _is_positive(a))
    return BasedRootDatum(
        lattice=lattice,
        blocks=blocks,
        weyl=weyl,
        simple_gens=tuple(gens),
        delta=tuple(delta),
        sigma=frozenset(sigma),
        sigma_plus=sigma_plus,
        coroots={a: coroot(a) for a in sigma},
        params=params,
    )


def _solve(basis: Sequence[Vector], target: Sequence[int]) -> list[Fraction] | None:
    """Coefficients c with sum c_k basis[k] = target, or None; basis must be independent."""
    rows = len(target)
    cols = len(basis)
    mat = [[Fraction(basis[c][r]) for c in range(cols)] + [Fraction(target[r])] for r in range(rows)]
    pivots, r = [], 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    if any(mat[i][cols] != 0 for i in range(r, rows)):
        return None
    out = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        out[c] = mat[i][cols]
    return out


def _rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    mat = [[Fraction(x) for x in v] for v in vectors]
    rank, cols = 0, len(mat[0])
    for c in range(cols):
        p = next((i for i in range(rank, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[rank], mat[p] = mat[p], mat[rank]
        for i in range(rank + 1, len(mat)):
            f = mat[i][c] / mat[rank][c]
            mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def verify_root_system(datum: BasedRootDatum) -> list[RootSystemViolation]:
    """All root-system axioms that fail; an empty list means the datum is sound."""
    out = []
    sigma = datum.sigma
    for a in sorted(sigma):
        neg = tuple(-x for x in a)
        if neg not in sigma:
            out.append(RootSystemViolation("not symmetric", (a, neg)))
    for a in sorted(sigma):
        av = coroot(a)
        for b in sorted(sigma):
            n = datum.pairing(b, av)
            if n.denominator != 1:
                out.append(RootSystemViolation("non-integral pairing", (b, a)))
                continue
            image = tuple(x - int(n) * y for x, y in zip(b, a))
            if image not in sigma:
                out.append(RootSystemViolation("not reflection-closed", (a, b)))
    if _rank(datum.delta) != len(datum.delta):
        out.append(RootSystemViolation("simple roots dependent", tuple(datum.delta)))
        return out
    for a in datum.delta:
        if a not in datum.sigma_plus:
            out.append(RootSystemViolation("simple root not positive", (a,)))
    for a in sorted(datum.sigma_plus):
        coeffs = _solve(datum.delta, a)
        if coeffs is None or any(c.denominator != 1 or c < 0 for c in coeffs):
            out.append(RootSystemViolation("positive root not a non-negative integral combination", (a,)))
    for a in sorted(sigma):
        if _is_positive(a) != (a in datum.sigma_plus):
            out.append(RootSystemViolation("positive system mismatch", (a,)))
    return out
