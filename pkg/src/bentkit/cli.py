"""Command-line front end: ``bentkit eval | synth | construct | paper-examples``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import constructions as cx
from . import regressions
from .core import (
    BooleanFunction,
    Tag,
    VectorialFunction,
    algebraic_degree,
    bitstring,
    classify,
    dual,
    wht,
)
from .errors import (
    BentkitError,
    DualNotAtBentDistance,
    InvariantBreach,
    ParseError,
)
from .synth import (
    OrderedSupport,
    SynthesisSpec,
    first_profile_violation,
    order_support,
    parse_support_text,
    synthesize_plateaued,
)

EXIT_OK, EXIT_PARSE, EXIT_FAILED, EXIT_BREACH = 0, 1, 2, 3


@dataclass
class FunctionReport:
    n: int
    anf: str
    hex: str
    tag: str
    s: int | None
    spectrum: dict[str, int]
    degree: int
    dual_v: str | None = None
    dual_hex: str | None = None
    verdict: str | None = None

    def lines(self) -> list[str]:
        cls = f"Plateaued{{{self.s}}}" if self.tag == Tag.PLATEAUED.value else self.tag.capitalize()
        out = [
            f"n        {self.n}",
            f"anf      {self.anf}",
            f"hex      {self.hex}",
            f"class    {cls}",
            f"degree   {self.degree}",
            "spectrum " + ", ".join(f"{k}: {v}" for k, v in self.spectrum.items()),
        ]
        if self.dual_hex is not None:
            out.append(f"dual     {self.dual_hex} (v = {self.dual_v})")
        if self.verdict is not None:
            out.append(f"verdict  {self.verdict}")
        return out


def _table_text(f: BooleanFunction) -> str:
    return f.to_hex() if f.n >= 2 else "".join(str(b) for b in f.table)


def report(f: BooleanFunction, formula_dual: BooleanFunction | None = None,
           verdict: str | None = None) -> FunctionReport:
    spec = wht(f)
    cls = classify(f, spec)
    r = FunctionReport(
        n=f.n,
        anf=str(f),
        hex=_table_text(f),
        tag=cls.tag.value,
        s=cls.s if cls.tag is Tag.PLATEAUED else None,
        spectrum={str(k): v for k, v in sorted(cls.distribution.items())},
        degree=algebraic_degree(f),
        verdict=verdict,
    )
    if cls.tag in (Tag.BENT, Tag.PLATEAUED):
        v, fstar = dual(f)
        r.dual_v = bitstring(v, f.n)
        r.dual_hex = _table_text(fstar)
        if formula_dual is not None and formula_dual != fstar:
            raise InvariantBreach("formula dual disagrees with the dual read from the spectrum")
    return r


def parse_function(text: str, n: int | None = None) -> BooleanFunction:
    """ANF if the text mentions a variable, else a hex truth table; ``anf:``/``hex:`` force."""
    text = text.strip()
    if text.startswith("anf:"):
        return BooleanFunction.from_anf(text[4:], n)
    if text.startswith("hex:"):
        return BooleanFunction.from_hex(text[4:])
    if "x" in text.replace("0x", "", 1) or text in ("0", "1") or "+" in text:
        return BooleanFunction.from_anf(text, n)
    return BooleanFunction.from_hex(text)


def _bits(text: str) -> int:
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise ParseError(f"{text!r} is not a bit string", 0)
    return int(text, 2)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"{text!r} is not a comma-separated integer list", 0) from None


# --------------------------------------------------------------------------
# subcommands


def cmd_eval(args) -> FunctionReport:
    return report(parse_function(args.function, args.n))


def cmd_synth(args) -> FunctionReport:
    rows, fdual = parse_support_text(Path(args.support).read_text())
    if args.dual is not None:
        # ANF duals live on log2(#support) variables unless --n says otherwise
        size = len(rows.values)
        n = args.n if args.n is not None else (size.bit_length() - 1 if size & (size - 1) == 0 else None)
        fdual = parse_function(args.dual, n)
    if fdual is None:
        raise ParseError("no dual given (file block or --dual)", 0)
    v = None if args.v is None else _bits(args.v)
    if args.row_order:
        if v is not None and v != rows.values[0]:
            raise ParseError("--v conflicts with --row-order (the anchor is the first row)", 0)
        sup = OrderedSupport.from_rows(rows.values, rows.width)
    else:
        sup = order_support(rows.values, rows.width, v)
    spec = SynthesisSpec(sup, fdual)
    if args.diagnose:
        u = first_profile_violation(spec)
        if u is not None:
            raise DualNotAtBentDistance(
                f"dual is not at bent distance to the profile entry u={bitstring(u, sup.k)}", index=u)
    return report(synthesize_plateaued(spec))


def _common_n(texts: list[str]) -> int | None:
    """Largest variable count among the inputs, so ANF like ``x1`` is read on a shared space."""
    ns = [parse_function(t).n for t in texts]
    return max(ns) if ns else None


def _funcs(args, count: int | None = None, at_least: int = 1) -> list[BooleanFunction]:
    n = args.n if args.n is not None else _common_n(args.functions)
    fs = [parse_function(t, n) for t in args.functions]
    if count is not None and len(fs) != count:
        raise ParseError(f"{args.method} takes {count} functions, got {len(fs)}", 0)
    if len(fs) < at_least:
        raise ParseError(f"{args.method} needs at least {at_least} functions", 0)
    return fs


def _basis(args) -> tuple[int, ...]:
    if not args.basis:
        return ()
    return tuple(_bits(b) for b in args.basis.split(","))


def _form(args) -> BooleanFunction:
    if args.form is None:
        raise ParseError(f"{args.method} needs --form", 0)
    return parse_function(args.form)


def cmd_construct(args) -> FunctionReport:
    m, ver, via = args.method, args.verify, args.via_form
    fdual = None
    if m == "rothaus":
        out = cx.rothaus(*_funcs(args, 3), verify=ver, via_form=via)
    elif m == "gen-rothaus-a":
        out = cx.generalized_rothaus_a(*_funcs(args, 3), verify=ver, via_form=via)
    elif m == "gen-rothaus-b":
        out = cx.generalized_rothaus_b(*_funcs(args, 2), verify=ver, via_form=via)
    elif m == "bent-concat":
        out = cx.bent_concatenation(*_funcs(args, 3), verify=ver, via_form=via)
    elif m == "indirect-sum":
        out, fdual = cx.indirect_sum(*_funcs(args, 4), verify=ver, via_form=via)
    elif m == "gis-a":
        fs = _funcs(args, 8)
        out, fdual = cx.gen_indirect_sum_a([fs[i:i + 2] for i in range(0, 8, 2)], verify=ver, via_form=via)
    elif m == "gis-b":
        out = cx.gen_indirect_sum_b(*_funcs(args, 4), verify=ver, via_form=via)
    elif m == "gis-c":
        out = cx.gen_indirect_sum_c(*_funcs(args, 4), verify=ver, via_form=via)
    elif m == "gis-k":
        fs = _funcs(args, at_least=4)
        if len(fs) % 2:
            raise ParseError("gis-k takes pairs of functions", 0)
        ells = None if args.ells is None else [parse_function(t) for t in args.ells.split(",")]
        xi_dual = None if args.xi_dual is None else parse_function(args.xi_dual)
        out, fdual = cx.gen_indirect_sum_k([fs[i:i + 2] for i in range(0, len(fs), 2)],
                                           ells, xi_dual, verify=ver)
    elif m == "generic-a":
        fs = _funcs(args, 3)
        out = cx.generic_method_a(*fs, m=0 if args.m is None else _bits(args.m), verify=ver, via_form=via)
    elif m == "mesnager-g":
        out, fdual = cx.mesnager_g(*_funcs(args, 3), verify=ver, via_form=via)
    elif m == "dualcor":
        g1, g2 = _funcs(args, 2)
        if args.pi is None or args.phi is None:
            raise ParseError("dualcor needs --pi and --phi", 0)
        out = cx.dualcor_family(_int_list(args.pi), _int_list(args.phi), g1, g2, verify=ver, via_form=via)
    elif m == "p1":
        res = cx.theorem_p1_construct(_form(args), VectorialFunction(_funcs(args)), mode=args.mode, verify=ver)
        out, fdual = res.function, res.dual
    elif m == "p2":
        fs = _funcs(args)
        h = VectorialFunction(fs[1:]) if len(fs) > 1 else None
        out = cx.theorem_p2_construct(_form(args), fs[0], h, verify=ver)
    elif m == "indicator":
        fs = _funcs(args, at_least=2)
        out = cx.indicator_construct(cx.IndicatorSpec(fs[0], VectorialFunction(fs[1:]), _basis(args)))
    elif m == "disjoint-spectra":
        fs = _funcs(args, at_least=2)
        out = cx.disjoint_spectra_construct(fs[0], VectorialFunction(fs[1:]), _basis(args), args.z, verify=ver)
    elif m == "direct-sum-supports":
        out = cx.direct_sum_supports(_funcs(args), verify=ver)
    else:  # argparse restricts the choices
        raise ParseError(f"unknown method {m!r}", 0)
    return report(out, fdual, verdict=str(classify(out)))


METHODS = [
    "rothaus", "gen-rothaus-a", "gen-rothaus-b", "p1", "p2", "bent-concat", "indirect-sum",
    "gis-a", "gis-b", "gis-c", "gis-k", "indicator", "generic-a", "mesnager-g", "dualcor",
    "disjoint-spectra", "direct-sum-supports",
]


def cmd_paper_examples(args) -> tuple[list, bool]:
    unknown = [i for i in (args.only or []) if i not in regressions.BY_ID]
    if unknown:
        raise ParseError(f"unknown example id {unknown[0]!r}; known: {', '.join(regressions.BY_ID)}", 0)
    results = regressions.run(args.only)
    return results, all(r.passed for r in results)


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verify", action=argparse.BooleanOptionalAction, default=None,
                        help="check preconditions (default: on up to 16 variables)")
    common.add_argument("--n", type=int, default=None, help="variable count for ANF inputs")

    p = argparse.ArgumentParser(prog="bentkit", description="Bent and plateaued function toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="report on one function (ANF or hex)")
    e.add_argument("function")

    s = sub.add_parser("synth", parents=[common], help="synthesize from a Walsh support and a dual")
    s.add_argument("support", help="file: one bit string per line, optional blank line + dual hex")
    s.add_argument("--dual", help="dual truth table (hex or ANF); overrides the file")
    s.add_argument("--v", help="anchor of the support as a bit string")
    s.add_argument("--row-order", action="store_true", help="keep the file's row order (anchor = first row)")
    s.add_argument("--diagnose", action="store_true", help="report the first profile entry that fails")

    c = sub.add_parser("construct", parents=[common], help="run a secondary construction")
    c.add_argument("method", choices=METHODS)
    c.add_argument("functions", nargs="*", help="initial functions (ANF or hex)")
    c.add_argument("--form", help="outer form for p1 / p2")
    c.add_argument("--mode", choices=["i", "ii", "iii"], default="i")
    c.add_argument("--m", help="bit string m for generic-a")
    c.add_argument("--pi", help="permutation as comma-separated integers")
    c.add_argument("--phi", help="permutation as comma-separated integers")
    c.add_argument("--basis", help="comma-separated bit strings spanning U")
    c.add_argument("--z", type=int, default=None, help="amplitude parameter for disjoint-spectra")
    c.add_argument("--ells", help="comma-separated column functions for gis-k")
    c.add_argument("--xi-dual", help="dual of the gis-k form")
    c.add_argument("--via-form", action="store_true", help="compose the synthesized form instead")

    x = sub.add_parser("paper-examples", parents=[common], help="rerun the reference regressions")
    x.add_argument("--only", action="append", help="restrict to an example id (repeatable)")
    return p


def _emit_report(r: FunctionReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(asdict(r)))
    else:
        print("\n".join(r.lines()))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "paper-examples":
            results, ok = cmd_paper_examples(args)
            if args.json:
                print(json.dumps([dict(asdict(r), passed=r.passed) for r in results]))
            else:
                for r in results:
                    print(f"{'PASS' if r.passed else 'FAIL'}  {r.id}")
                    print(f"      expected: {r.expected}")
                    print(f"      got:      {r.got}")
                print(f"{sum(r.passed for r in results)}/{len(results)} passed")
            return EXIT_OK if ok else EXIT_FAILED
        handler = {"eval": cmd_eval, "synth": cmd_synth, "construct": cmd_construct}[args.command]
        _emit_report(handler(args), args.json)
        return EXIT_OK
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantBreach as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except (BentkitError, OSError) as exc:
        witness = getattr(exc, "witness", None)
        if witness is None:
            witness = getattr(exc, "index", None)
        extra = "" if witness is None else f" [witness: {witness}]"
        print(f"{type(exc).__name__}: {exc}{extra}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
