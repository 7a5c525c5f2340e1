"""
The Weyl group W_psi = W_psi° x| R_psi as block-wise signed permutations.

Each block i of rank d_i contributes a type A (case I), D (cases II, IIb) or
B (case III) group acting on the coordinates e_{i,1}..e_{i,d_i} of the
lattice. Elements are stored in one-line notation per block: `(2, -1, 3)`
means e_1 -> e_2, e_2 -> -e_1, e_3 -> e_3.

>>> from hecke_params.langlands import Case
>>> W = WeylGroup([(Case.III, 2)])
>>> w0 = W.gen(SimpleGen(1, 1)) * W.gen(SimpleGen(1, 2))
>>> str(w0 * w0)
'[-1,-2]'
>>> W.reduced_word(w0 * w0)
[SimpleGen(block=1, pos=1), SimpleGen(block=1, pos=2), SimpleGen(block=1, pos=1), SimpleGen(block=1, pos=2)]
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import NamedTuple, Sequence

from .langlands import Case, ClassifiedBlock

__all__ = [
    "SimpleGen",
    "RElem",
    "WeylElem",
    "WeylGroup",
    "WeylError",
    "InvalidGenerator",
    "NotInGroup",
    "NotSimple",
]

RElem = frozenset  # of 1-based block indices carrying the case-II flip r_i


class WeylError(ValueError):
    pass


class InvalidGenerator(WeylError):
    pass


class NotInGroup(WeylError):
    pass


class NotSimple(WeylError):
    pass


class SimpleGen(NamedTuple):
    block: int  # 1-based block index i
    pos: int  # 1-based position j, 1 <= j <= d'_i


BlockPerm = tuple[int, ...]


def _compose(p: BlockPerm, q: BlockPerm) -> BlockPerm:
    # (p o q)(j) = p(q(j))
    out = []
    for x in q:
        y = p[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def _invert(p: BlockPerm) -> BlockPerm:
    out = [0] * len(p)
    for j, x in enumerate(p, start=1):
        out[abs(x) - 1] = j if x > 0 else -j
    return tuple(out)


def _apply(p: BlockPerm, vec: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for x, c in zip(p, vec):
        out[abs(x) - 1] += c if x > 0 else -c
    return tuple(out)


def _is_negative(vec: Sequence[int]) -> bool:
    for c in vec:
        if c:
            return c < 0
    return False


@dataclass(frozen=True)
class WeylElem:
    blocks: tuple[BlockPerm, ...]

    def __mul__(self, other: WeylElem) -> WeylElem:
        if not isinstance(other, WeylElem):
            return NotImplemented
        if len(self.blocks) != len(other.blocks):
            raise WeylError("shape mismatch")
        return WeylElem(tuple(_compose(p, q) for p, q in zip(self.blocks, other.blocks)))

    def inverse(self) -> WeylElem:
        return WeylElem(tuple(_invert(p) for p in self.blocks))

    def is_identity(self) -> bool:
        return all(x == j for p in self.blocks for j, x in enumerate(p, start=1))

    def act(self, lam: Sequence[int]) -> tuple[int, ...]:
        """Signed permutation action on an exponent vector (blocks concatenated)."""
        out, off = [], 0
        for p in self.blocks:
            out.extend(_apply(p, lam[off:off + len(p)]))
            off += len(p)
        if off != len(lam):
            raise WeylError(f"rank mismatch: element of rank {off}, vector of length {len(lam)}")
        return tuple(out)

    def signed_map(self) -> tuple[tuple[int, int], ...]:
        """Global (target, sign) per coordinate, 0-based."""
        out, off = [], 0
        for p in self.blocks:
            out.extend((off + abs(x) - 1, 1 if x > 0 else -1) for x in p)
            off += len(p)
        return tuple(out)

    def __str__(self):
        return " ".join("[" + ",".join(map(str, p)) + "]" for p in self.blocks) or "[]"


# -- per-block combinatorics --------------------------------------------------


@lru_cache(maxsize=None)
def _positive_roots(case: Case, d: int) -> tuple[tuple[int, ...], ...]:
    roots = []

    def e(*pairs):
        v = [0] * d
        for k, c in pairs:
            v[k] += c
        return tuple(v)

    for j in range(d):
        for k in range(j + 1, d):
            roots.append(e((j, 1), (k, -1)))
            if case is not Case.I:
                roots.append(e((j, 1), (k, 1)))
        if case is Case.III:
            roots.append(e((j, 1)))
    return tuple(roots)


@lru_cache(maxsize=None)
def _block_gen(case: Case, d: int, j: int) -> BlockPerm:
    p = list(range(1, d + 1))
    if j < d:
        p[j - 1], p[j] = j + 1, j
    elif case is Case.III:
        p[d - 1] = -d
    else:
        p[d - 2], p[d - 1] = -d, -(d - 1)
    return tuple(p)


def _num_simple(case: Case, d: int) -> int:
    if case is Case.I:
        return d - 1
    if case is Case.III:
        return d
    return d if d > 1 else 0


@lru_cache(maxsize=None)
def _block_length(case: Case, d: int, p: BlockPerm) -> int:
    return sum(1 for a in _positive_roots(case, d) if _is_negative(_apply(p, a)))


@lru_cache(maxsize=None)
def _block_reduced_word(case: Case, d: int, p: BlockPerm) -> tuple[int, ...]:
    word = []
    length = _block_length(case, d, p)
    while length:
        for j in range(1, _num_simple(case, d) + 1):
            sp = _compose(_block_gen(case, d, j), p)
            ls = _block_length(case, d, sp)
            if ls < length:
                word.append(j)
                p, length = sp, ls
                break
        else:  # pragma: no cover - a non-identity element always has a descent
            raise AssertionError("no descent found")
    if any(x != j for j, x in enumerate(p, start=1)):
        raise NotInGroup(f"{p} is not in W° of type {case.value}")
    return tuple(word)


class WeylGroup:
    """W_psi for a list of (case, d) block shapes."""

    def __init__(self, shapes: Sequence[tuple[Case, int]]):
        self.shapes = tuple((Case(c), int(d)) for c, d in shapes)
        self.offsets = []
        off = 0
        for _, d in self.shapes:
            self.offsets.append(off)
            off += d
        self.rank = off
        self.identity = WeylElem(tuple(tuple(range(1, d + 1)) for _, d in self.shapes))
        self.simple_gens = tuple(
            SimpleGen(i + 1, j)
            for i, (c, d) in enumerate(self.shapes)
            for j in range(1, _num_simple(c, d) + 1)
        )
        self.r_blocks = tuple(i + 1 for i, (c, _) in enumerate(self.shapes) if c is Case.II)
        self._gen_lookup = {self.gen(s): s for s in self.simple_gens}

    @classmethod
    def from_blocks(cls, blocks: Sequence[ClassifiedBlock]) -> WeylGroup:
        return cls([(b.case, b.d) for b in blocks])

    def __eq__(self, other):
        return isinstance(other, WeylGroup) and self.shapes == other.shapes

    def __hash__(self):
        return hash(self.shapes)

    # -- generators ---------------------------------------------------------

    def _check(self, w: WeylElem) -> None:
        if len(w.blocks) != len(self.shapes) or any(len(p) != d for p, (_, d) in zip(w.blocks, self.shapes)):
            raise WeylError(f"element {w} does not match group shape {self.shapes}")

    def gen(self, s: SimpleGen) -> WeylElem:
        """The simple reflection s_{i,j}."""
        i, j = s
        if not 1 <= i <= len(self.shapes):
            raise InvalidGenerator(f"no block {i}")
        case, d = self.shapes[i - 1]
        if not 1 <= j <= _num_simple(case, d):
            raise InvalidGenerator(f"s_{{{i},{j}}} is not defined for a case {case.value} block of rank {d}")
        blocks = list(self.identity.blocks)
        blocks[i - 1] = _block_gen(case, d, j)
        return WeylElem(tuple(blocks))

    def r_elem(self, r: RElem) -> WeylElem:
        """The element of R_psi flipping the last coordinate of every block in r."""
        blocks = list(self.identity.blocks)
        for i in r:
            if i not in self.r_blocks:
                raise InvalidGenerator(f"block {i} carries no R-generator (case II only)")
            d = self.shapes[i - 1][1]
            blocks[i - 1] = tuple(range(1, d)) + (-d,)
        return WeylElem(tuple(blocks))

    def r_elements(self) -> list[RElem]:
        out = [frozenset()]
        for i in self.r_blocks:
            out += [r | {i} for r in out]
        return sorted(out, key=lambda r: (len(r), sorted(r)))

    def word_elem(self, word: Sequence[SimpleGen]) -> WeylElem:
        w = self.identity
        for s in word:
            w = w * self.gen(s)
        return w

    # -- actions ------------------------------------------------------------

    def act_on_lattice(self, w: WeylElem, lam: Sequence[int]) -> tuple[int, ...]:
        return w.act(lam)

    def act_on_poly(self, w: WeylElem, p):
        """^w p for a LaurentPoly or BFrac; a ring automorphism fixing v."""
        if w.is_identity():
            return p
        return p.signed_permute(w.signed_map())

    # -- Coxeter structure ----------------------------------------------------

    def in_w0(self, w: WeylElem) -> bool:
        self._check(w)
        for p, (case, _) in zip(w.blocks, self.shapes):
            neg = sum(1 for x in p if x < 0)
            if case is Case.I and neg:
                return False
            if case in (Case.II, Case.IIb) and neg % 2:
                return False
        return True

    def length(self, w: WeylElem, datum=None) -> int:
        """
        Number of positive roots sent to negative roots. With `datum`, the
        positive system is taken from the root datum; otherwise from the
        standard A/D/B positive roots of each block.
        """
        self._check(w)
        if not self.in_w0(w):
            raise NotInGroup(f"{w} is not in W°; strip its R-part with decompose() first")
        if datum is not None:
            pos = datum.sigma_plus
            return sum(1 for a in pos if w.act(a) not in pos)
        return sum(_block_length(c, d, p) for p, (c, d) in zip(w.blocks, self.shapes))

    def reduced_word(self, w: WeylElem) -> list[SimpleGen]:
        """A reduced word, choosing the smallest (block, position) left descent first."""
        self._check(w)
        if not self.in_w0(w):
            raise NotInGroup(f"{w} is not in W°")
        word = []
        for i, (p, (c, d)) in enumerate(zip(w.blocks, self.shapes), start=1):
            word.extend(SimpleGen(i, j) for j in _block_reduced_word(c, d, p))
        return word

    def decompose(self, w: WeylElem) -> tuple[WeylElem, RElem]:
        """The unique (w°, r) with w = w° r, w° in W°, r in R_psi."""
        self._check(w)
        blocks, r = [], set()
        for i, (p, (case, d)) in enumerate(zip(w.blocks, self.shapes), start=1):
            neg = sum(1 for x in p if x < 0)
            if case is Case.I and neg:
                raise NotInGroup(f"block {i} is of type A and cannot carry signs")
            if neg % 2 and case is Case.IIb:
                raise NotInGroup(f"block {i} is of type D without R-part; odd sign count")
            if neg % 2 and case is Case.II:
                r.add(i)
                p = _compose(p, tuple(range(1, d)) + (-d,))
            blocks.append(p)
        return WeylElem(tuple(blocks)), frozenset(r)

    def conjugate(self, r: RElem, w: WeylElem) -> WeylElem:
        """r^{-1} w r."""
        if not r:
            return w
        re = self.r_elem(r)
        return re * w * re

    def conjugate_gen(self, r: RElem, s: SimpleGen) -> SimpleGen:
        """The simple generator r^{-1} s r."""
        if not r:
            return s
        image = self.conjugate(r, self.gen(s))
        try:
            return self._gen_lookup[image]
        except KeyError:
            raise NotSimple(f"r^-1 s r for s={s}, r={sorted(r)} is not simple") from None

    def is_left_descent(self, s: SimpleGen, w: WeylElem) -> bool:
        i = s.block
        case, d = self.shapes[i - 1]
        p = w.blocks[i - 1]
        return _block_length(case, d, _compose(_block_gen(case, d, s.pos), p)) < _block_length(case, d, p)

    def is_right_descent(self, w: WeylElem, s: SimpleGen) -> bool:
        i = s.block
        case, d = self.shapes[i - 1]
        p = w.blocks[i - 1]
        return _block_length(case, d, _compose(p, _block_gen(case, d, s.pos))) < _block_length(case, d, p)

    # -- enumeration --------------------------------------------------------

    def elements(self) -> list[WeylElem]:
        """All of W°, by breadth-first search from the identity."""
        seen = {self.identity}
        queue = deque([self.identity])
        gens = [self.gen(s) for s in self.simple_gens]
        while queue:
            w = queue.popleft()
            for g in gens:
                x = w * g
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        return sorted(seen, key=lambda x: (self.length(x), self.reduced_word(x)))

    def full_elements(self) -> list[WeylElem]:
        """All of W_psi = W° x| R_psi."""
        return [w * self.r_elem(r) for r in self.r_elements() for w in self.elements()]

    def expected_order(self) -> int:
        """|W°| from the closed formulas d!, 2^(d-1) d!, 2^d d!."""
        out = 1
        for case, d in self.shapes:
            if case is Case.I:
                out *= factorial(d)
            elif case is Case.III:
                out *= 2**d * factorial(d)
            else:
                out *= 2 ** (d - 1) * factorial(d)
        return out
