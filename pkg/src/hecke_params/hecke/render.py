"""Text rendering of normal forms, one basis term per line."""

from __future__ import annotations

from ..arith import BFrac, CycScalar, LaurentPoly

__all__ = ["render_scalar", "render_lines", "render_plain", "term_records"]


def _cyc(c: CycScalar, conductor: int) -> CycScalar:
    if conductor % c.conductor == 0 and c.conductor != conductor:
        return c.embed(conductor)
    return c


def render_scalar(p: LaurentPoly, conductor: int = 1) -> str:
    """A rank-0 v-Laurent polynomial, written in q = v^2 when possible."""
    if p.is_zero():
        return "0"
    use_q = p.is_q_integral()
    parts = []
    for e, c in sorted(p.terms.items(), key=lambda t: -t[0][0]):
        k = e[0] // 2 if use_q else e[0]
        var = "q" if use_q else "v"
        cs = str(_cyc(c, conductor))
        if k == 0:
            parts.append(cs)
            continue
        power = var if k == 1 else f"{var}^{k}"
        if cs == "1":
            parts.append(power)
        elif cs == "-1":
            parts.append("-" + power)
        else:
            parts.append(f"{cs}*{power}")
    return " + ".join(parts).replace("+ -", "- ")


def _line(coeff: str, sym: str, multi: bool) -> str:
    if not sym:
        return coeff
    if coeff == "1":
        return sym
    if multi:
        coeff = f"({coeff})"
    return f"{coeff} · {sym}"


def term_records(x) -> list[dict]:
    """Structured normal form: one record per (basis term, lattice monomial)."""
    ctx = x.ctx
    out = []
    for key in x.sorted_keys():
        chi, r, w = key
        c = x.terms[key]
        base = {
            "phi": list(chi),
            "J": sorted(r),
            "T": [[s.block, s.pos] for s in ctx.reduced_word(w)],
        }
        if isinstance(c, BFrac):
            out.append({**base, "b": None, "coeff": f"({c.num.render(ctx.labels)})/({c.den.render(ctx.labels)})"})
            continue
        for m, cm in sorted(c.by_monomial().items()):
            out.append({**base, "b": list(m), "coeff": render_scalar(cm, ctx.conductor), "_multi": len(cm.terms) > 1})
    return out


def render_lines(x) -> list[str]:
    if x.is_zero():
        return ["0"]
    lines = []
    for rec in term_records(x):
        sym_parts = []
        if rec["b"] is not None and any(rec["b"]):
            sym_parts.append("b[" + ",".join(map(str, rec["b"])) + "]")
        if any(rec["phi"]):
            sym_parts.append("phi[" + ",".join(map(str, rec["phi"])) + "]")
        sym_parts.extend(f"J[{i}]" for i in rec["J"])
        sym_parts.extend(f"T[{i},{j}]" for i, j in rec["T"])
        lines.append(_line(rec["coeff"], "*".join(sym_parts), rec.get("_multi", False)))
    return lines


def render_plain(x) -> str:
    return "\n".join(render_lines(x))
