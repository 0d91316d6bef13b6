"""Command-line front end.

All colors on the command line and in files are doubled integers: a color
``a`` is written ``2a``, so the spin-1/2 color is ``1``.

Exit status: 0 on success, 1 when a check or an engine comparison fails,
2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from . import repcore as rc
from . import verify as vf
from .qarith import NotIntegral, QRatio, canonicalize, render_bracket, render_ratio
from .shadow import (
    ShadowFormatError,
    ShadowPresentation,
    crossed_tet_sym,
    shadow_eval,
    shadow_from_json,
    sliced_to_shadow,
    tet_admissible,
    tet_sym,
    theta_sym,
    unknot_sym,
)
from .sliced import (
    DiagramFormatError,
    InvalidDiagram,
    SlicedDiagram,
    diagram_from_json,
    evaluate,
    evaluate_matrix,
    framing_factor,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# value output
# ---------------------------------------------------------------------------


def value_record(v) -> dict:
    """Structured form of a value: the canonical fields, or the reduced ratio."""
    v = QRatio.of(v)
    try:
        b = canonicalize(v)
    except NotIntegral as exc:
        return {"integral": False, "ratio": render_ratio(v), "reason": str(exc)}
    return {
        "integral": True,
        "m": b.phase_m,
        "n": b.quarter_shift_n,
        "body": [list(t) for t in b.body],
        "text": render_bracket(b),
    }


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------


def load_input(path: str):
    """A sliced diagram or a shadow presentation, told apart by their keys."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    try:
        if "slices" in data:
            return diagram_from_json(data)
        if "regions" in data:
            return shadow_from_json(data)
    except (DiagramFormatError, ShadowFormatError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    except InvalidDiagram as exc:
        raise InputError(f"{path}: invalid diagram: {exc}") from exc
    raise InputError(f"{path}: expected a 'slices' (diagram) or 'regions' (shadow) object")


def _shadow_combinatorics(p: ShadowPresentation) -> vf.GraphCombinatorics:
    return vf.GraphCombinatorics(
        tuple((f.color, f.euler) for f in p.faces), tuple(tuple(v.colors) for v in p.vertices)
    )


def _parse_states(text: str):
    try:
        bot, top = text.split("/")
        conv = lambda s: tuple(int(x) for x in s.split(",") if x.strip())
        return conv(bot), conv(top)
    except ValueError as exc:
        raise InputError(f"--states expects 'b1,b2,.../t1,t2,...', got {text!r}") from exc


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_eval(args) -> int:
    obj = load_input(args.file)
    engine = args.engine or ("shadow" if isinstance(obj, ShadowPresentation) else "sliced")
    out: dict = {"name": getattr(obj, "name", ""), "renormalized": args.renormalize, "engine": engine}

    if isinstance(obj, ShadowPresentation):
        if engine != "shadow":
            raise InputError("a shadow presentation can only be evaluated with --engine shadow")
        v = shadow_eval(obj, obj.framing_factor())
        if not args.renormalize:
            v = v / _shadow_combinatorics(obj).factor()
        out["value"] = value_record(v)
        return _emit_eval(args, out, EXIT_OK)

    d: SlicedDiagram = obj
    if not d.is_closed:
        if engine != "sliced":
            raise InputError("the shadow engine needs a closed diagram")
        fac = vf.boundary_factor(d) if args.renormalize else QRatio.of(1)
        if args.states:
            bot, top = _parse_states(args.states)
            try:
                entries = {(bot, top): evaluate(d, (bot, top))}
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        else:
            entries = evaluate_matrix(d)
        out["entries"] = [
            {"bottom": list(b), "top": list(t), "value": value_record(v * fac)}
            for (b, t), v in sorted(entries.items())
        ]
        return _emit_eval(args, out, EXIT_OK)

    g = vf.GraphCombinatorics.from_diagram(d)
    values = {}
    if engine in ("sliced", "both"):
        raw = evaluate(d)
        values["sliced"] = vf.renormalize(raw, g) if args.renormalize else raw
    if engine in ("shadow", "both"):
        sh = shadow_eval(sliced_to_shadow(d), framing_factor(d))
        values["shadow"] = sh if args.renormalize else sh / g.factor()
    status = EXIT_OK
    if engine == "both":
        equal = values["sliced"] == values["shadow"]
        out["sliced"] = value_record(values["sliced"])
        out["shadow"] = value_record(values["shadow"])
        out["verdict"] = "EQUAL" if equal else "DIFFER"
        status = EXIT_OK if equal else EXIT_FAIL
    else:
        out["value"] = value_record(values[engine])
    return _emit_eval(args, out, status)


def _record_text(rec: dict) -> str:
    if rec["integral"]:
        return rec["text"]
    return f"{rec['ratio']}\n  NotIntegral: {rec['reason']}"


def _emit_eval(args, out: dict, status: int) -> int:
    if args.format == "json":
        print(json.dumps(out, indent=1))
        return status
    if "entries" in out:
        for e in out["entries"]:
            print(f"{e['bottom']} -> {e['top']}: {_record_text(e['value'])}")
        if not out["entries"]:
            print("0")
    elif "verdict" in out:
        print(f"sliced: {_record_text(out['sliced'])}")
        print(f"shadow: {_record_text(out['shadow'])}")
        print(out["verdict"])
    else:
        print(_record_text(out["value"]))
    return status


SYMBOL_ARITY = {"unknot": 1, "theta": 3, "tet": 6, "tetx": 6}


def cmd_symbol(args) -> int:
    cols = args.colors
    want = SYMBOL_ARITY[args.kind]
    if len(cols) != want:
        raise InputError(f"{args.kind} takes {want} doubled colors, got {len(cols)}")
    if any(c < 0 for c in cols):
        raise InputError("colors must be non-negative")
    note = None
    if args.kind == "unknot":
        v = unknot_sym(cols[0])
    elif args.kind == "theta":
        v = theta_sym(*cols)
        if not rc.is_admissible(*cols):
            note = f"triple {tuple(cols)} is not admissible"
    else:
        a, b, c, d, e, f = cols
        if args.kind == "tet":
            ok = tet_admissible(*cols)
            v = tet_sym(*cols)
            triples = ((a, b, c), (a, e, f), (d, b, f), (d, e, c))
        else:
            ok = tet_admissible(e, f, a, b, c, d)
            v = crossed_tet_sym(*cols, sign=args.sign)
            triples = ((e, f, a), (e, c, d), (b, f, d), (b, c, a))
        if not ok:
            bad = [t for t in triples if not rc.is_admissible(*t)]
            note = "inadmissible triples " + ", ".join(str(t) for t in bad)
    rec = value_record(v)
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "colors": cols, "value": rec, "note": note}, indent=1))
    else:
        print(_record_text(rec))
        if note:
            print(f"ADMISSIBILITY: {note}")
    return EXIT_OK


def _corpus(max_color: int):
    return list(corpus.closed_corpus(max_color))


SUITES = {
    "integrality": (3, lambda m: vf.check_corpus_integrality(_corpus(m), m)),
    "divisibility": (3, lambda m: vf.check_corpus_divisibility(_corpus(m), m)),
    "engine-equivalence": (3, lambda m: vf.check_engine_equivalence(_corpus(m), m)),
    "orthogonality": (4, vf.verify_orthogonality),
    "racah": (4, vf.verify_racah),
    "biedenharn-elliot": (4, vf.verify_biedenharn_elliot),
    "normalizations": (4, vf.verify_normalizations),
    "fusion": (3, vf.verify_fusion),
    "whitehead": (3, vf.verify_whitehead),
    "r-vs-6j": (3, vf.verify_r_vs_6j),
    "half-twist": (3, vf.verify_half_twist),
    "crossed-tet": (3, vf.verify_crossed_tet),
    "boundary": (2, lambda m: vf.verify_boundary_integrality(corpus.open_corpus(m))),
}


def cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        default, fn = SUITES[name]
        m = default if args.max is None else args.max
        if m < 0:
            raise InputError("--max must be non-negative")
        rep = fn(m)
        if rep.max_color is None:
            rep.max_color = m
        reports.append(rep)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=1))
    else:
        for r in reports:
            print(r.render(verbose=args.verbose))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_convert(args) -> int:
    obj = load_input(args.file)
    if not isinstance(obj, SlicedDiagram):
        raise InputError("convert expects a sliced diagram")
    if not obj.is_closed:
        raise InputError("only closed diagrams have a shadow presentation")
    text = sliced_to_shadow(obj).dumps()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spinnet",
        description="Exact Kauffman brackets of colored framed trivalent graphs. "
        "Colors are doubled integers (enter 2a for color a).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="evaluate a diagram or shadow file")
    p.add_argument("file")
    p.add_argument("--engine", choices=("sliced", "shadow", "both"))
    p.add_argument("--renormalize", action="store_true", help="apply the vertex/edge factorial factor")
    p.add_argument("--states", help="one boundary entry of an open diagram, as 'b1,b2/t1,t2'")
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("symbol", help="closed-form renormalized symbols")
    p.add_argument("kind", choices=sorted(SYMBOL_ARITY))
    p.add_argument("colors", nargs="+", type=int)
    p.add_argument("--sign", type=int, choices=(1, -1), default=1, help="crossing sign for tetx")
    fmt(p)
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max", type=int, help="largest doubled color")
    p.add_argument("--verbose", action="store_true", help="list every instance")
    fmt(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", help="write the shadow presentation of a closed diagram")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvalidDiagram as exc:
        print(f"error: invalid diagram: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
