"""Command-line interface. Structured output is JSON carrying "schema": 1.

Exit codes: 0 success, 1 invalid input (a JSON diagnostic is printed),
2 an internal consistency failure.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from itertools import combinations
from typing import Any, Sequence, TextIO

from . import bijections as bj
from . import hive as hv
from . import staircase as sc
from . import tableaux as tb
from .errors import InvariantError, ValidationError

SCHEMA = 1
METHODS = ("paths", "diagrams", "hives", "kostka")


def _doc(**fields: Any) -> dict:
    return {"schema": SCHEMA, **fields}


def _load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{what} is not valid JSON: {exc.msg}") from exc


def _input_json(args, stdin: TextIO, what: str) -> Any:
    if getattr(args, "input", None):
        try:
            with open(args.input, encoding="utf-8") as fh:
                return _load_json(fh.read(), what)
        except OSError as exc:
            raise ValidationError(f"cannot read {args.input}: {exc.strerror}") from exc
    return _load_json(stdin.read(), what)


def _perm(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if "," in text or " " in text:
            return tuple(int(x) for x in text.replace(",", " ").split())
        return tuple(int(c) for c in text)
    except ValueError as exc:
        raise ValidationError(f"cannot read a permutation from {text!r}") from exc


def _type(args) -> sc.DiagramType:
    return sc.DiagramType.parse(args.type, args.m)


def _diagram(args, stdin: TextIO) -> sc.AffineGrowthDiagram:
    obj = _input_json(args, stdin, "diagram")
    if not isinstance(obj, dict):
        raise ValidationError("a diagram must be a JSON object")
    return sc.AffineGrowthDiagram.from_json(obj)


def _rows(t) -> list[list[int]]:
    return [list(r) for r in t]


def _path(args, stdin: TextIO):
    raw = _load_json(args.path, "path") if args.path else _input_json(args, stdin, "path")
    if not isinstance(raw, list):
        raise ValidationError("a path must be a JSON list of weights")
    try:
        return [tuple(int(x) for x in w) for w in raw]
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed path: {exc}") from exc


def _render(d: sc.AffineGrowthDiagram, fmt: str) -> str | dict:
    if fmt == "ascii":
        return sc.render_ascii(d)
    if fmt == "svg":
        return sc.render_svg(d)
    return d.to_json()


# ------------------------------------------------------------------ verbs


def cmd_fill(args, stdin):
    d = sc.fill_from_path(_path(args, stdin), _type(args))
    return _render(d, args.format)


def cmd_verify(args, stdin):
    d = _diagram(args, stdin)
    problems = sc.violations(d)
    return _doc(valid=not problems, violations=problems), (1 if problems else 0)


def cmd_enumerate(args, stdin):
    t = _type(args)
    ds = sc.enumerate_diagrams(t)
    return _doc(type=t.to_json(), count=len(ds), diagrams=[d.to_json() for d in ds])


def count_all(t: sc.DiagramType, methods: Sequence[str]) -> dict[str, int]:
    out = {}
    for method in methods:
        if method == "paths":
            out[method] = len(sc.enumerate_paths(t))
        elif method == "diagrams":
            out[method] = sum(1 for d in sc.enumerate_diagrams(t) if sc.verify(d))
        elif method == "hives":
            out[method] = hv.count_fan_hives(t.labels, t.m)
        elif method == "kostka":
            out[method] = tb.lr_via_kostka(t.labels, t.m)
    return out


def cmd_count(args, stdin):
    t = _type(args)
    methods = METHODS if args.method == "all" else (args.method,)
    counts = count_all(t, methods)
    agree = len(set(counts.values())) == 1
    doc = _doc(type=t.to_json(), counts=counts, agreement=agree)
    return doc, (0 if agree else 2)


def cmd_hive(args, stdin):
    t = _type(args)
    h = hv.build_hive_n(_path(args, stdin), t.labels)
    if args.format == "ascii":
        blocks = []
        for u, v, w in combinations(range(h.n), 3):
            blocks.append(f"face ({u},{v},{w})\n" + hv.render_hive3(h.face(u, v, w)))
        return "\n\n".join(blocks)
    return h.to_json()


def cmd_marks(args, stdin):
    d = _diagram(args, stdin)
    if not sc.marks_defined(d.dtype):
        raise ValidationError("marks need the rank to be at least the total fundamental size")
    doc = _doc(marks=[list(x) for x in sc.mark_squares(d)])
    if all(lab.j == 1 for lab in d.dtype.labels) and 2 * d.m >= d.n:
        f = sc.marks(d)
        doc.update(window=list(f.window), reduced=list(f.reduced()))
    return doc


def cmd_rs(args, stdin):
    given = _perm(args.permutation)
    sigma = bj.unembed_rs(given) if args.embedded else given
    P, Q = bj.schensted(sigma)
    pi = bj.embed_rs(sigma)
    d = bj.psi(pi)
    return _doc(
        sigma=list(sigma),
        P=_rows(P),
        Q=_rows(Q),
        fpf=list(pi),
        window=list(bj.fpf_window(pi)),
        diagram=d.to_json(),
    )


def cmd_osc(args, stdin):
    if args.fpf:
        pi = _perm(args.fpf)
        return _doc(fpf=list(pi), osc=[list(p) for p in bj.fpf_to_osc(pi)])
    seq = _load_json(args.osc, "oscillating tableau") if args.osc else _input_json(args, stdin, "oscillating tableau")
    return _doc(osc=seq, fpf=list(bj.osc_to_fpf(seq)))


def cmd_knuth(args, stdin):
    if args.matrix:
        M = _load_json(args.matrix, "matrix")
        return _doc(matrix=M, osc=[list(p) for p in bj.knuth_to_osc(M)])
    seq = _load_json(args.osc, "oscillating tableau") if args.osc else _input_json(args, stdin, "oscillating tableau")
    return _doc(osc=seq, matrix=[list(r) for r in bj.osc_to_knuth(seq)])


OPS = {
    "promotion": tb.promotion,
    "dual-promotion": tb.dual_promotion,
    "evacuation": tb.evacuation,
    "dual-evacuation": tb.dual_evacuation,
}


def cmd_promote(args, stdin):
    raw = _load_json(args.tableau, "tableau") if args.tableau else _input_json(args, stdin, "tableau")
    try:
        t = tb.tableau(raw)
    except TypeError as exc:
        raise ValidationError(f"malformed tableau: {exc}") from exc
    op = OPS[args.op]
    for _ in range(args.times):
        t = op(t, args.n)
    return _doc(op=args.op, n=args.n, times=args.times, tableau=_rows(t))


def cmd_render(args, stdin):
    d = _diagram(args, stdin)
    return _render(d, args.format)


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affgrowth", description="Affine growth diagrams and hives.")
    sub = p.add_subparsers(dest="verb", required=True)

    def typed(sp):
        sp.add_argument("--type", required=True, help="comma list of labels, e.g. f1,f1,d1,d1")
        sp.add_argument("--m", type=int, required=True, help="rank")

    def infile(sp):
        sp.add_argument("--input", help="read JSON from this file instead of stdin")

    s = sub.add_parser("fill", help="fill a diagram from a minuscule path")
    typed(s)
    infile(s)
    s.add_argument("--path", help="JSON list of weights; stdin if omitted")
    s.add_argument("--format", choices=("json", "ascii", "svg"), default="json")
    s.set_defaults(func=cmd_fill)

    s = sub.add_parser("verify", help="check every square, boundary and mark of a diagram")
    infile(s)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", help="all diagrams of a type")
    typed(s)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("count", help="invariant count by independent methods")
    typed(s)
    s.add_argument("--method", choices=METHODS + ("all",), default="all")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("hive", help="n-hive of a minuscule path")
    typed(s)
    infile(s)
    s.add_argument("--path", help="JSON list of weights; stdin if omitted")
    s.add_argument("--format", choices=("json", "ascii"), default="json")
    s.set_defaults(func=cmd_hive)

    s = sub.add_parser("marks", help="marked squares and the mark window of a diagram")
    infile(s)
    s.set_defaults(func=cmd_marks)

    s = sub.add_parser("rs", help="Schensted tableaux and the involution embedding")
    s.add_argument("permutation", help="one-line notation: 312 or 3,1,2")
    s.add_argument("--embedded", action="store_true", help="the input is already the embedded involution")
    s.set_defaults(func=cmd_rs)

    s = sub.add_parser("osc", help="oscillating tableau <-> fixed-point-free involution")
    infile(s)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--fpf", help="involution in one-line notation")
    g.add_argument("--osc", help="JSON list of partitions")
    s.set_defaults(func=cmd_osc)

    s = sub.add_parser("knuth", help="symmetric matrix <-> vertical-strip oscillating tableau")
    infile(s)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--matrix", help="JSON list of rows")
    g.add_argument("--osc", help="JSON list of partitions")
    s.set_defaults(func=cmd_knuth)

    s = sub.add_parser("promote", help="promotion and evacuation of a tableau")
    infile(s)
    s.add_argument("--tableau", help="JSON list of rows; stdin if omitted")
    s.add_argument("--n", type=int, required=True, help="largest allowed entry")
    s.add_argument("--op", choices=tuple(OPS), default="promotion")
    s.add_argument("--times", type=int, default=1)
    s.set_defaults(func=cmd_promote)

    s = sub.add_parser("render", help="draw a diagram")
    infile(s)
    s.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    s.set_defaults(func=cmd_render)
    return p


def run(argv: Sequence[str], stdin: TextIO | None = None) -> tuple[int, str]:
    """Run one command and return (exit code, output text)."""
    stdin = stdin if stdin is not None else io.StringIO("")
    args = build_parser().parse_args(list(argv))
    try:
        result = args.func(args, stdin)
        code = 0
        if isinstance(result, tuple):
            result, code = result
    except ValidationError as exc:
        return 1, json.dumps(_doc(error="validation", message=str(exc)))
    except InvariantError as exc:
        return 2, json.dumps(_doc(error="invariant", message=str(exc)))
    if isinstance(result, str):
        return code, result
    return code, json.dumps(result)


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv, sys.stdin)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
