"""
Exact verification of the defining relations on a context.

Every check is run on the rewriting engine; where the smash-product model
and the q -> 1 degeneration apply, the engine is also compared against them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from ..arith import LaurentPoly, v_power
from ..weyl import SimpleGen, WeylElem
from .context import AlgebraCtx
from .degenerate import specialize_q1
from .element import (
    HeckeElem,
    b_mono,
    bernstein_correction,
    j_gen,
    phi_gen,
    scalar,
    t_gen,
    t_word,
    unit,
)
from .smash import embed

__all__ = ["CheckResult", "Report", "RandomElements", "verify_relations", "all_reduced_words", "coxeter_order"]

MAX_WITNESSES = 5


@dataclass
class CheckResult:
    name: str
    count: int = 0
    failures: int = 0
    witnesses: list[str] = field(default_factory=list)
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, witness: Callable[[], str] | str) -> None:
        self.count += 1
        if not ok:
            self.failures += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness() if callable(witness) else witness)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "count": self.count,
            "failures": self.failures,
            "witnesses": self.witnesses,
            "skipped": self.skipped,
        }


@dataclass
class Report:
    context: dict
    seed: int
    samples: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "context": self.context,
            "seed": self.seed,
            "samples": self.samples,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }

    def render(self) -> str:
        lines = [f"seed: {self.seed}  samples: {self.samples}"]
        for c in self.checks:
            if c.skipped:
                lines.append(f"[SKIP] {c.name}: {c.skipped}")
                continue
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"[{tag}] {c.name} ({c.count} checks, {c.failures} failures)")
            lines.extend(f"    witness: {w}" for w in c.witnesses)
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)


def coxeter_order(ctx: AlgebraCtx, s: SimpleGen, s2: SimpleGen) -> int:
    e = ctx.weyl.gen(s) * ctx.weyl.gen(s2)
    m, x = 1, e
    while not x.is_identity():
        x, m = x * e, m + 1
    return m


def all_reduced_words(ctx: AlgebraCtx, w: WeylElem, limit: int | None = None, _memo=None) -> list[tuple]:
    """Every reduced word of w (at most `limit` of them)."""
    memo = {} if _memo is None else _memo
    if w in memo:
        return memo[w]
    if ctx.length(w) == 0:
        return [()]
    out = []
    for s in ctx.simple_gens:
        if ctx.weyl.is_left_descent(s, w):
            for tail in all_reduced_words(ctx, ctx.gen_data(s).elem * w, limit, memo):
                out.append((s,) + tail)
                if limit and len(out) >= limit:
                    break
        if limit and len(out) >= limit:
            break
    memo[w] = out
    return out


class RandomElements:
    """Seeded random generators, Lambda_psi monomials and short combinations."""

    def __init__(self, ctx: AlgebraCtx, rng: random.Random, psi_only: bool = True, with_phi: bool = True):
        self.ctx = ctx
        self.rng = rng
        self.psi_only = psi_only
        self.with_phi = with_phi
        self.r_sets = [r for r in ctx.weyl.r_elements() if r]

    def monomial(self, spread: int = 2) -> tuple[int, ...]:
        ctx, rng = self.ctx, self.rng
        if self.psi_only:
            return tuple(t * rng.randint(-spread, spread) for t in ctx.divisors)
        return tuple(rng.randint(-spread, spread) for _ in ctx.divisors)

    def char(self) -> tuple[int, ...]:
        return tuple(self.rng.randrange(t) for t in self.ctx.divisors)

    def generator(self) -> HeckeElem:
        ctx, rng = self.ctx, self.rng
        kinds = ["b"]
        if ctx.simple_gens:
            kinds += ["T", "T"]
        if self.r_sets:
            kinds.append("J")
        if self.with_phi and ctx.conductor > 1:
            kinds.append("phi")
        kind = rng.choice(kinds)
        if kind == "T":
            return t_gen(ctx, rng.choice(ctx.simple_gens))
        if kind == "J":
            return j_gen(ctx, rng.choice(self.r_sets))
        if kind == "phi":
            return phi_gen(ctx, self.char())
        return b_mono(ctx, self.monomial())

    def element(self) -> HeckeElem:
        """A sum of one or two short words with small v-scalar coefficients."""
        rng = self.rng
        out = HeckeElem(self.ctx)
        for _ in range(rng.randint(1, 2)):
            word = unit(self.ctx)
            for _ in range(rng.randint(1, 2)):
                word = word * self.generator()
            c = v_power(rng.randint(-2, 2), coeff=rng.choice([1, -1, 2]))
            out = out + c * word
        return out


def _guard(result: CheckResult, fn: Callable[[], None]) -> None:
    try:
        fn()
    except Exception as exc:  # report, do not abort the suite
        result.record(False, f"{type(exc).__name__}: {exc}")


def _gname(s: SimpleGen) -> str:
    return f"T[{s.block},{s.pos}]"


def verify_relations(ctx: AlgebraCtx, sample_count: int = 100, seed: int = 0) -> Report:
    rng = random.Random(seed)
    rand = RandomElements(ctx, rng)
    gens = ctx.simple_gens
    weyl = ctx.weyl
    oracle_ok = all(c == 1 for c in ctx.j_square.values())
    cache: dict = {}
    report = Report(context=ctx.summary(), seed=seed, samples=sample_count)

    def E(x):
        return embed(ctx, x, cache)

    # (i) quadratic
    quad = CheckResult("quadratic")

    def run_quad():
        for s in gens:
            T = t_gen(ctx, s)
            Q = scalar(ctx, ctx.gen_data(s).quad)
            quad.record(((T + 1) * (T - Q)).is_zero(), f"(T+1)(T-q_s) != 0 for {_gname(s)}")
            if oracle_ok:
                quad.record(E(T) * E(T) == E((Q - 1) * T + Q), f"smash model: quadratic fails for {_gname(s)}")

    _guard(quad, run_quad)
    report.checks.append(quad)

    # (ii) braid relations, with the order m(s, s') read off the Weyl group
    braid = CheckResult("braid")

    def run_braid():
        for i, s in enumerate(gens):
            for s2 in gens[i + 1:]:
                m = coxeter_order(ctx, s, s2)
                a, b = unit(ctx), unit(ctx)
                for k in range(m):
                    a = a * t_gen(ctx, (s, s2)[k % 2])
                    b = b * t_gen(ctx, (s2, s)[k % 2])
                braid.record(a == b, f"braid of order {m} fails for {_gname(s)}, {_gname(s2)}")
                if oracle_ok and m <= 4:
                    ea, eb = E(t_gen(ctx, s)), E(t_gen(ctx, s2))
                    pa, pb = _alternating(ea, eb, m)
                    braid.record(pa == pb, f"smash model: braid of order {m} fails for {_gname(s)}, {_gname(s2)}")

    _guard(braid, run_braid)
    report.checks.append(braid)

    # T_w does not depend on the reduced word
    words = CheckResult("reduced_words")

    def run_words():
        elems = weyl.elements()
        if len(elems) > 48:
            elems = rng.sample(elems, 24)
        memo: dict = {}
        for w in elems:
            target = t_word(ctx, w)
            for word in all_reduced_words(ctx, w, limit=24, _memo=memo):
                prod_ = unit(ctx)
                for s in word:
                    prod_ = prod_ * t_gen(ctx, s)
                words.record(prod_ == target, f"word {[tuple(s) for s in word]} does not give T_w for w={w}")

    _guard(words, run_words)
    report.checks.append(words)

    # (iii) Bernstein relation on random Lambda_psi monomials
    bern = CheckResult("bernstein")

    def run_bern():
        if not gens:
            bern.skipped = "no simple reflections"
            return
        for k in range(sample_count):
            s = gens[k % len(gens)]
            m = rand.monomial(3)
            sm = ctx.gen_data(s).elem.act(m)
            T = t_gen(ctx, s)
            corr = bernstein_correction(ctx, s, LaurentPoly.monomial(m))
            lhs = b_mono(ctx, m) * T - T * b_mono(ctx, sm)
            bern.record(
                isinstance(corr, LaurentPoly) and lhs == scalar(ctx, corr),
                lambda: f"b{list(m)} {_gname(s)} - {_gname(s)} b{list(sm)} != correction",
            )
            if oracle_ok and k < 10:
                bern.record(E(lhs) == E(scalar(ctx, corr)), f"smash model: Bernstein fails for b{list(m)}, {_gname(s)}")

    _guard(bern, run_bern)
    report.checks.append(bern)

    # (iv) J-relations
    jrel = CheckResult("j_relations")

    def run_j():
        r_sets = [r for r in weyl.r_elements() if r]
        if not r_sets:
            jrel.skipped = "R_psi is trivial"
            return
        for r in r_sets:
            J = j_gen(ctx, r)
            jrel.record(J * J == scalar(ctx, ctx.j_product(r, r)), f"J_{sorted(r)}^2 is not the configured scalar")
            for s in gens:
                s2 = weyl.conjugate_gen(r, s)
                jrel.record(
                    t_gen(ctx, s) * J == J * t_gen(ctx, s2),
                    f"T_s J_r != J_r T_(r^-1 s r) for s={_gname(s)}, r={sorted(r)}",
                )
            for _ in range(max(1, sample_count // 10) if sample_count else 1):
                m = rand.monomial()
                rm = ctx.r_elem(r).act(m)
                jrel.record(J * b_mono(ctx, m) == b_mono(ctx, rm) * J, f"J_r b_m != b_(rm) J_r for m={list(m)}")
            if oracle_ok:
                for s in gens:
                    s2 = weyl.conjugate_gen(r, s)
                    jrel.record(
                        E(t_gen(ctx, s)) * E(J) == E(J) * E(t_gen(ctx, s2)),
                        f"smash model: T_s J_r != J_r T_(r^-1 s r) for s={_gname(s)}",
                    )

    _guard(jrel, run_j)
    report.checks.append(jrel)

    # (v) phi-relations
    phirel = CheckResult("phi_relations")

    def run_phi():
        chars = ctx.characters()
        if len(chars) > 16:
            chars = [ctx.zero_char] + rng.sample(chars, 15)
        r_sets = [r for r in weyl.r_elements() if r]
        n_mono = max(1, min(sample_count, 10)) if sample_count else 1
        for chi in chars:
            P = phi_gen(ctx, chi)
            for _ in range(n_mono):
                m = tuple(rng.randint(-3, 3) for _ in ctx.divisors)
                val = ctx.char_value(chi, m)
                phirel.record(P * b_mono(ctx, m) == val * (b_mono(ctx, m) * P), f"phi_chi b_m != chi(m) b_m phi_chi, chi={chi}, m={m}")
            for s in gens:
                phirel.record(P * t_gen(ctx, s) == t_gen(ctx, s) * P, f"phi_{chi} does not commute with {_gname(s)}")
            for r in r_sets:
                phirel.record(P * j_gen(ctx, r) == j_gen(ctx, r) * P, f"phi_{chi} does not commute with J_{sorted(r)}")
            chi2 = rand.char()
            phirel.record(
                P * phi_gen(ctx, chi2) == phi_gen(ctx, ctx.add_chars(chi, chi2)),
                f"phi_{chi} phi_{chi2} != phi of the sum",
            )

    _guard(phirel, run_phi)
    report.checks.append(phirel)

    # cross-block commutation
    cross = CheckResult("cross_block")

    def run_cross():
        if len(ctx.blocks) < 2:
            cross.skipped = "single block"
            return
        offsets = weyl.offsets
        for s in gens:
            for s2 in gens:
                if s.block < s2.block:
                    cross.record(
                        t_gen(ctx, s) * t_gen(ctx, s2) == t_gen(ctx, s2) * t_gen(ctx, s),
                        f"{_gname(s)} and {_gname(s2)} do not commute",
                    )
            for i in weyl.r_blocks:
                if i != s.block:
                    J = j_gen(ctx, {i})
                    cross.record(t_gen(ctx, s) * J == J * t_gen(ctx, s), f"J_{i} and {_gname(s)} do not commute")
            for bi, b in enumerate(ctx.blocks):
                if b.index == s.block:
                    continue
                for _ in range(max(1, min(sample_count, 5))):
                    m = [0] * ctx.rank
                    for j in range(b.d):
                        m[offsets[bi] + j] = b.t * rng.randint(-3, 3)
                    B = b_mono(ctx, m)
                    cross.record(B * t_gen(ctx, s) == t_gen(ctx, s) * B, f"b{m} and {_gname(s)} do not commute")

    _guard(cross, run_cross)
    report.checks.append(cross)

    # associativity on random triples
    assoc = CheckResult("associativity")

    def run_assoc():
        for _ in range(sample_count):
            x, y, z = rand.element(), rand.element(), rand.element()
            assoc.record((x * y) * z == x * (y * z), lambda: f"(xy)z != x(yz) for x={x!r}, y={y!r}, z={z!r}")

    _guard(assoc, run_assoc)
    report.checks.append(assoc)

    # comparison with the smash-product model
    homo = CheckResult("smash_model")

    def run_homo():
        if not oracle_ok:
            homo.skipped = "J_r^2 != 1"
            return
        for _ in range(min(sample_count, 25)):
            x, y = rand.element(), rand.element()
            homo.record(E(x * y) == E(x) * E(y), lambda: f"embedding not multiplicative on x={x!r}, y={y!r}")

    _guard(homo, run_homo)
    report.checks.append(homo)

    # q -> 1 degeneration
    degen = CheckResult("degeneration")

    def run_degen():
        if not oracle_ok:
            degen.skipped = "J_r^2 != 1"
            return
        for _ in range(min(sample_count, 25)):
            x, y = rand.element(), rand.element()
            degen.record(
                specialize_q1(ctx, x * y) == specialize_q1(ctx, x) * specialize_q1(ctx, y),
                lambda: f"specialization not multiplicative on x={x!r}, y={y!r}",
            )

    _guard(degen, run_degen)
    report.checks.append(degen)
    return report


def _alternating(ea, eb, m):
    """The two alternating products of length m."""
    pa = pb = None
    for k in range(m):
        fa, fb = (ea, eb)[k % 2], (eb, ea)[k % 2]
        pa = fa if pa is None else pa * fa
        pb = fb if pb is None else pb * fb
    return pa, pb
