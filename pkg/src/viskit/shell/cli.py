"""Command-line entry point.

Exit codes: 0 success, 1 validation failure, 2 search exhausted or bound
violated, 3 I/O or parse error.  Machine output goes to stdout only.
"""
from __future__ import annotations

import argparse
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from .. import bounds, ensembles, graphtools
from ..atlas import (
    extract_witness, gen_arc_max, gen_complete_semiarc, gen_named, gen_polygonal,
    gen_semiarc_max, search_representation, thickness_decomposition,
)
from ..errors import VisError
from ..graph import Graph
from ..sightlines import center_split, classify_edges, visibility_graph
from .formats import (
    dumps, emit_graph, emit_representation, fmt_rational, graph_obj, parse_graph,
    parse_representation,
)
from .render import render_svg

OK, INVALID, EXHAUSTED, IO = 0, 1, 2, 3
IO_CODES = {"parse_error", "io_error", "usage"}
KINDS = {"bar": "bar", "semi_bar": "semi_bar", "semi-bar": "semi_bar", "semibar": "semi_bar",
         "arc": "arc", "semi_arc": "semi_arc", "semi-arc": "semi_arc", "semiarc": "semi_arc"}
TARGETS = {"k5": lambda: Graph.complete(5), "c4": lambda: Graph.cycle(4),
           "k6": lambda: Graph.complete(6)}


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise VisError("usage", message)


def decimal12(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal("1e-12")))


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise VisError("io_error", f"{path}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise VisError("parse_error", f"{path}: not UTF-8 ({exc.reason})") from None


def _write(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise VisError("io_error", f"{path}: {exc.strerror}") from None


def _kind(name: str) -> str:
    if name not in KINDS:
        raise VisError("usage", f"unknown class {name!r}")
    return KINDS[name]


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise VisError("usage", f"bad rational {text!r}") from None


# -- subcommands ---------------------------------------------------------------


def cmd_compute(args) -> int:
    rep = parse_representation(_read(args.input))
    g = visibility_graph(rep, args.k)
    if not (args.classify or args.center_split):
        _write(None, emit_graph(g, args.format))
        return OK
    if args.format != "json":
        raise VisError("usage", "--classify and --center-split need --format json")
    out = graph_obj(g)
    if args.classify:
        c = classify_edges(rep, args.k)
        out["classification"] = {
            "assignments": [{"edge": list(e), "family": f, "region": ri, "arc": w, "sign": s}
                            for e, f, ri, w, s in c.assignments],
            "per_arc": [{"arc": a, "positive": c.counts(a)[0], "negative": c.counts(a)[1]}
                        for a in rep.ids()],
        }
    if args.center_split:
        s = center_split(rep, args.k)
        out["center_split"] = {"center_only": [list(e) for e in sorted(s.center_only)],
                               "other": [list(e) for e in sorted(s.other)]}
    _write(None, dumps(out))
    return OK


def cmd_generate(args) -> int:
    eps = _fraction(args.epsilon) if args.epsilon else None
    which = args.family
    if which == "semiarc-max":
        rep = gen_semiarc_max(_need(args.n, "--n"), args.k, eps)
    elif which == "complete-semiarc":
        rep = gen_complete_semiarc(args.k, eps)
    elif which == "polygonal":
        rep = gen_polygonal(_need(args.n, "--n"))
    elif which == "arc-max":
        rep = gen_arc_max(_need(args.n, "--n"))
    else:
        if not args.name:
            raise VisError("usage", "generate named needs a NAME")
        rep = gen_named(args.name)
    _write(None, emit_representation(rep))
    return OK


def _need(value, flag):
    if value is None:
        raise VisError("usage", f"{flag} is required here")
    return value


def cmd_random(args) -> int:
    model = args.model
    cols = ensembles.ROW_COLUMNS[model]
    rows = ensembles.trial_rows(model, args.n, args.k, args.trials, args.seed)
    summaries = []
    for c, col in enumerate(cols):
        ref = ensembles.reference(model, args.n, args.k, col)
        summaries.append((col, ensembles.summarize(col, [r[c] for r in rows], args.seed, ref)))
    if args.csv:
        lines = ["trial," + ",".join(cols)]
        lines += [f"{i}," + ",".join(str(v) for v in r) for i, r in enumerate(rows)]
        for col, st in summaries:
            mean = decimal12(Fraction(sum(st.values), st.trials))
            if st.exact_reference is None:
                lines.append(f"mean_{col},{mean},none,,")
            else:
                ref = st.exact_reference
                lines.append(f"mean_{col},{mean},{st.reference_kind},{fmt_rational(ref)},{decimal12(ref)}")
        _write(None, "\n".join(lines) + "\n")
        return OK
    out = {"model": model, "n": args.n, "k": args.k, "trials": args.trials, "seed": args.seed,
           "statistics": {}}
    for col, st in summaries:
        out["statistics"][col] = {
            "mean": st.mean, "sample_stddev": st.sample_stddev,
            "confidence_radius": st.confidence_radius,
            "reference": None if st.exact_reference is None else fmt_rational(st.exact_reference),
            "reference_kind": st.reference_kind,
        }
    _write(None, dumps(out))
    return OK


def cmd_analyze(args) -> int:
    rep = parse_representation(_read(args.input))
    if args.graph:
        g = parse_graph(_read(args.graph))
        if g.n != rep.n:
            raise VisError("parse_error", f"graph has {g.n} vertices, representation has {rep.n}")
    else:
        g = visibility_graph(rep, args.k)
    out = {"kind": rep.kind, "n": g.n, "k": args.k, "edges": g.m}
    violated = False
    try:
        b = bounds.max_edges(rep.kind, g.n, args.k)
        violated = g.m > b.value
        out["bound"] = {"value": b.value, "tight": b.tight, "source": b.source,
                        "within": not violated}
    except VisError as exc:
        out["bound"] = {"unavailable": exc.detail}
    arb, _ = graphtools.arboricity(g)
    out.update({
        "planar": graphtools.is_planar(g),
        "chordal": graphtools.is_chordal(g),
        "interval": graphtools.is_interval(g),
        "caterpillar_forest": graphtools.is_caterpillar_forest(g),
        "cutpoints": sorted(graphtools.cutpoints(g)),
        "arboricity": arb,
        "thickness_bound": graphtools.thickness_bound(g, (rep.kind, args.k)),
    })
    if rep.kind == "semi_arc" and args.k == 0 and not args.graph:
        w = extract_witness(rep, 0)
        out["witness"] = {"b_sequence": list(w.diagonal.b_sequence), "j": w.diagonal.j,
                          "diagonal_edges": [list(e) for e in sorted(w.diagonal.edges)]}
    _write(None, dumps(out))
    if violated:
        raise _Exit(EXHAUSTED, f"{g.m} edges exceed the bound {out['bound']['value']}")
    return OK


def cmd_search(args) -> int:
    if args.target in TARGETS:
        target = TARGETS[args.target]()
    else:
        target = parse_graph(_read(args.target))
    rep = search_representation(target, _kind(args.kind), args.k, args.budget, args.seed)
    if rep is None:
        raise _Exit(EXHAUSTED, f"no representation found within budget {args.budget}")
    _write(None, emit_representation(rep))
    return OK


def cmd_decompose(args) -> int:
    rep = parse_representation(_read(args.input))
    parts = thickness_decomposition(rep, args.k)
    _write(None, dumps({"bound": 2 * args.k + 1, "parts": [graph_obj(p) for p in parts]}))
    return OK


def cmd_render(args) -> int:
    rep = parse_representation(_read(args.input))
    pair = tuple(args.pair) if args.pair else None
    if pair is not None:
        rep.element(pair[0]), rep.element(pair[1])
    _write(args.output, render_svg(rep, pair, args.k))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="viskit", description="Exact k-visibility graphs of bars and arcs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="visibility graph of a representation")
    c.add_argument("--input", default="-")
    c.add_argument("--k", type=int, default=0)
    c.add_argument("--format", choices=("json", "dot"), default="json")
    c.add_argument("--classify", action="store_true")
    c.add_argument("--center-split", action="store_true")
    c.set_defaults(func=cmd_compute)

    g = sub.add_parser("generate", help="emit a built-in construction")
    g.add_argument("family", choices=("semiarc-max", "complete-semiarc", "polygonal", "arc-max", "named"))
    g.add_argument("name", nargs="?")
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int, default=0)
    g.add_argument("--epsilon")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("random", help="Monte Carlo over random semi-bars or semi-arcs")
    r.add_argument("model", choices=("semibar", "semiarc"))
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--k", type=int, default=0)
    r.add_argument("--trials", type=int, default=1000)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--csv", action="store_true")
    r.set_defaults(func=cmd_random)

    a = sub.add_parser("analyze", help="structural report and edge-bound check")
    a.add_argument("--input", default="-")
    a.add_argument("--k", type=int, default=0)
    a.add_argument("--graph", help="check this graph file instead of recomputing")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("search", help="find a representation of a small graph")
    s.add_argument("--target", required=True, help="k5, c4, k6 or a graph JSON file")
    s.add_argument("--class", dest="kind", required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--budget", type=int, default=20000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_search)

    d = sub.add_parser("decompose", help="split a semi-arc graph into planar parts")
    d.add_argument("--input", default="-")
    d.add_argument("--k", type=int, default=0)
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("render", help="draw a representation as SVG")
    v.add_argument("--input", default="-")
    v.add_argument("-o", "--output", default="-")
    v.add_argument("--pair", type=int, nargs=2, metavar=("U", "V"))
    v.add_argument("--k", type=int, default=0)
    v.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _Exit as exc:
        print(f"viskit: {exc}", file=sys.stderr)
        return exc.code
    except VisError as exc:
        print(f"viskit: {exc}", file=sys.stderr)
        return IO if exc.code in IO_CODES else INVALID


if __name__ == "__main__":
    sys.exit(main())
