"""Canonical JSON for representations and JSON/DOT for graphs.

Angles are strings ``"p/q"`` meaning (p/q)*pi; bar coordinates are plain
rational strings.  Canonical text is compact JSON with a fixed key order,
elements sorted by rank, and a trailing newline.
"""
from __future__ import annotations

import json
from fractions import Fraction

from ..errors import VisError
from ..geometry import Arc, Bar, Representation, validate
from ..graph import Graph

ARC_FIELDS = ("id", "r", "start", "extent")
BAR_FIELDS = ("id", "depth", "left", "right")
VIOLATION_FIELDS = {
    "extent_out_of_range": "extent", "semi_arc_start_nonzero": "start",
    "empty_bar": "right", "semi_bar_left_nonzero": "left",
    "rank_not_positive": "rank", "duplicate_rank": "rank",
}


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise VisError("parse_error", f"{where}: expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise VisError("parse_error", f"{where}: expected a rational string, got {value!r}")
    text = value.strip()
    num, sep, den = text.partition("/")
    try:
        if "." in text or "e" in text.lower():
            raise ValueError
        out = Fraction(int(num), int(den)) if sep else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise VisError("parse_error", f"{where}: bad rational {value!r}") from None
    return out


def _integer(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise VisError("parse_error", f"{where}: expected an integer, got {value!r}")
    return value


def parse_representation(text: str) -> Representation:
    """Parse canonical JSON; raises VisError with a parse or validation code."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise VisError("parse_error", f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict) or "kind" not in data or "elements" not in data:
        raise VisError("parse_error", 'expected an object with "kind" and "elements"')
    kind = data["kind"]
    if kind not in ("bar", "semi_bar", "arc", "semi_arc"):
        raise VisError("parse_error", f"kind: unknown kind {kind!r}")
    items = data["elements"]
    if not isinstance(items, list):
        raise VisError("parse_error", "elements: expected a list")
    arc_kind = kind in ("arc", "semi_arc")
    fields = ARC_FIELDS if arc_kind else BAR_FIELDS
    elems = []
    for i, item in enumerate(items):
        where = f"elements[{i}]"
        if not isinstance(item, dict):
            raise VisError("parse_error", f"{where}: expected an object")
        missing = [f for f in fields if f not in item]
        extra = sorted(set(item) - set(fields))
        if missing or extra:
            raise VisError("parse_error", f"{where}: missing {missing}, unexpected {extra}")
        ident = _integer(item["id"], f"{where}.id")
        rank = _integer(item[fields[1]], f"{where}.{fields[1]}")
        a = _rational(item[fields[2]], f"{where}.{fields[2]}")
        b = _rational(item[fields[3]], f"{where}.{fields[3]}")
        elems.append(Arc(ident, rank, a, b) if arc_kind else Bar(ident, rank, a, b))
    rep = Representation(kind, tuple(elems))
    report = validate(rep)
    if report.violations:
        index = {item_id: i for i, item_id in enumerate(e.id for e in elems)}
        parts = []
        for x in report.violations:
            field = VIOLATION_FIELDS.get(x.code, "id").replace("rank", fields[1])
            where = ", ".join(f"elements[{index[i]}].{field}" for i in x.ids if i in index)
            parts.append(f"{where}: {x.detail}" if len(x.ids) <= 2 else f"{x.code}: {x.detail}")
        raise VisError(report.violations[0].code, "; ".join(parts))
    return rep


def representation_obj(rep: Representation) -> dict:
    if rep.is_arc_kind:
        elems = [{"id": e.id, "r": e.rank, "start": fmt_rational(e.start),
                  "extent": fmt_rational(e.extent)} for e in rep.elements]
    else:
        elems = [{"id": e.id, "depth": e.rank, "left": fmt_rational(e.left),
                  "right": fmt_rational(e.right)} for e in rep.elements]
    return {"kind": rep.kind, "elements": elems}


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def emit_representation(rep: Representation) -> str:
    return dumps(representation_obj(rep))


def graph_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def emit_graph(g: Graph, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(graph_obj(g))
    if fmt == "dot":
        lines = ["graph G {"]
        lines += [f"  {v};" for v in range(g.n)]
        lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise VisError("bad_format", fmt)


def parse_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise VisError("parse_error", f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise VisError("parse_error", 'expected an object with "n" and "edges"')
    n = _integer(data["n"], "n")
    edges = []
    for i, e in enumerate(data["edges"]):
        if not (isinstance(e, list) and len(e) == 2):
            raise VisError("parse_error", f"edges[{i}]: expected a pair")
        edges.append((_integer(e[0], f"edges[{i}][0]"), _integer(e[1], f"edges[{i}][1]")))
    try:
        return Graph(n, edges)
    except VisError as exc:
        raise VisError("parse_error", str(exc)) from None
