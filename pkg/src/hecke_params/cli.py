"""
Command-line front end.

    hecke-params classify DESCRIPTOR [--json]
    hecke-params rootdatum DESCRIPTOR [--json]
    hecke-params verify DESCRIPTOR [--samples N] [--seed S] [--j-square VALUE] [--json]
    hecke-params eval DESCRIPTOR EXPRESSIONS [--j-square VALUE] [--json]
    hecke-params selftest [--samples N] [--seed S] [--json]

Exit status: 0 on success, 1 when a mathematical check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .arith import LaurentPoly
from .hecke import AlgebraCtx, CtxMismatch, HeckeError, coefficients_mode
from .hecke.expr import ExprError, evaluate
from .hecke.render import render_lines, term_records
from .hecke.verify import verify_relations
from .langlands import (
    DescriptorError,
    Irreducibility,
    LanglandsDescriptor,
    LanglandsError,
    classify,
    descriptor_from_dict,
    load_descriptor,
    reducibility_point,
)
from .rootdatum import verify_root_system
from .weyl import WeylError

SCHEMA_VERSION = 1
EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2

BUNDLED = ["case_I.json", "case_II.json", "case_IIb.json", "case_III.json", "mixture.json"]


class InputError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2, ensure_ascii=False))
    else:
        print(text)


def _j_square(value: str | None, desc: LanglandsDescriptor):
    if value is None:
        return None
    probe = AlgebraCtx.from_descriptor(desc)
    try:
        x = evaluate(probe, value)
    except (ExprError, CtxMismatch) as exc:
        raise InputError(f"--j-square: {exc}") from None
    c = x.coefficient()
    if len(x.terms) > 1 or not isinstance(c, LaurentPoly) or not c.is_constant() or c.is_zero():
        raise InputError("--j-square must be a nonzero constant such as 2, -1/3 or zeta^2")
    return c.constant_value()


# -- subcommands -------------------------------------------------------------------


def classify_report(desc: LanglandsDescriptor) -> tuple[dict, str]:
    blocks = classify(desc)
    rows, lines = [], ["jord: gap-free"]
    for b in blocks:
        point = reducibility_point(b, desc.group, desc.h)
        point_s = point.value if isinstance(point, Irreducibility) else str(point)
        row = {
            "index": b.index,
            "label": b.label,
            "case": b.case.value,
            "d": b.d,
            "d_prime": b.d_prime,
            "t": b.t,
            "a": b.a,
            "a_minus": b.a_minus,
            "swapped": b.swapped,
            "reducibility_point": point_s,
            "parity": "ok" if b.a is not None else "n/a",
        }
        rows.append(row)
        lines.append(
            f"block {b.index} ({b.label}): case {b.case.value}, d={b.d}, d'={b.d_prime}, t={b.t}, "
            f"a={b.a}, a_minus={b.a_minus}, reducibility point {point_s}, parity {row['parity']}"
        )
    return {"command": "classify", "group": desc.group.value, "jord": "gap-free", "blocks": rows}, "\n".join(lines)


def cmd_classify(args) -> int:
    desc = load_descriptor(args.descriptor)
    payload, text = classify_report(desc)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_rootdatum(args) -> int:
    desc = load_descriptor(args.descriptor)
    ctx = AlgebraCtx.from_descriptor(desc)
    datum = ctx.datum
    violations = verify_root_system(datum)
    payload = {"command": "rootdatum", **datum.to_dict(), "violations": [str(v) for v in violations]}
    lines = list(datum.cartan_summary())
    lines.append("delta: " + ", ".join(str(list(a)) for a in datum.delta))
    lines.append(f"positive roots: {len(datum.sigma_plus)}")
    for s in datum.simple_gens:
        p = datum.params[s]
        twist = f", twist v-exponents {p.bern_twist}" if p.bern_twist else ""
        lines.append(f"  s[{s.block},{s.pos}] root {list(datum.root(s))}: quadratic v^{p.quad_v_exponent}{twist}")
    lines.append("root system: " + ("ok" if not violations else "; ".join(map(str, violations))))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if not violations else EXIT_MATH


def cmd_verify(args) -> int:
    desc = load_descriptor(args.descriptor)
    classify(desc)  # parity and gap checks come first
    ctx = AlgebraCtx.from_descriptor(desc, j_square=_j_square(args.j_square, desc))
    report = verify_relations(ctx, args.samples, args.seed)
    _emit(args, {"command": "verify", **report.to_dict()}, report.render())
    return EXIT_OK if report.ok else EXIT_MATH


def cmd_eval(args) -> int:
    desc = load_descriptor(args.descriptor)
    ctx = AlgebraCtx.from_descriptor(desc, j_square=_j_square(args.j_square, desc))
    try:
        text = Path(args.expressions).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(str(exc)) from None
    results, out_lines = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        src = line.strip()
        if not src or src.startswith("#"):
            continue
        try:
            x = evaluate(ctx, src)
        except (ExprError, CtxMismatch) as exc:
            raise InputError(f"{args.expressions}:{lineno}: {exc}") from None
        mode = coefficients_mode(x).value
        records = [{k: v for k, v in r.items() if not k.startswith("_")} for r in term_records(x)]
        results.append({"expr": src, "terms": records, "mode": mode})
        out_lines.append(f">>> {src}")
        out_lines.extend(render_lines(x))
        note = " (NotClosed: coefficients outside B)" if mode == "Rational" else ""
        out_lines.append(f"mode: {mode}{note}")
    _emit(args, {"command": "eval", "results": results}, "\n".join(out_lines))
    return EXIT_OK


def _bundled(name: str) -> dict:
    return json.loads(resources.files("hecke_params.data").joinpath(name).read_text(encoding="utf-8"))


def cmd_selftest(args) -> int:
    entries, lines, ok = [], [], True
    for name in BUNDLED:
        desc = descriptor_from_dict(_bundled(name))
        ctx = AlgebraCtx.from_descriptor(desc)
        report = verify_relations(ctx, args.samples, args.seed)
        datum_ok = not verify_root_system(ctx.datum)
        passed = report.ok and datum_ok
        ok &= passed
        cases = ",".join(b.case.value for b in ctx.blocks)
        entries.append({"descriptor": name, "cases": cases, "ok": passed, "report": report.to_dict()})
        lines.append(f"{'PASS' if passed else 'FAIL'} {name} (cases {cases})")
        if not passed:
            lines.append(report.render())
    lines.append(f"seed: {args.seed}  samples: {args.samples}")
    lines.append("result: " + ("PASS" if ok else "FAIL"))
    _emit(args, {"command": "selftest", "seed": args.seed, "samples": args.samples, "ok": ok, "results": entries}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MATH


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--samples", type=int, default=100, metavar="N", help="random samples per sampled check")
    common.add_argument("--seed", type=int, default=0, metavar="S", help="seed for sampled checks")
    common.add_argument("--j-square", default=None, metavar="VALUE", help="scalar value of J_r^2 (default 1)")

    parser = argparse.ArgumentParser(prog="hecke-params", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", parents=[common], help="case labels, a-values and reducibility points")
    p.add_argument("descriptor")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("rootdatum", parents=[common], help="based root datum and Hecke parameters")
    p.add_argument("descriptor")
    p.set_defaults(func=cmd_rootdatum)
    p = sub.add_parser("verify", parents=[common], help="exact check of the defining relations")
    p.add_argument("descriptor")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("eval", parents=[common], help="normal forms of expressions, one per line")
    p.add_argument("descriptor")
    p.add_argument("expressions")
    p.set_defaults(func=cmd_eval)
    p = sub.add_parser("selftest", parents=[common], help="verify the bundled example descriptors")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.samples < 0:
        parser.error("--samples must be non-negative")
    try:
        return args.func(args)
    except (DescriptorError, InputError, CtxMismatch, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (LanglandsError, WeylError, HeckeError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
