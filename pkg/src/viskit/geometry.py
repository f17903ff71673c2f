"""Exact domain types for bar and arc visibility representations.

Angles are stored as :class:`fractions.Fraction` values ``q`` meaning
``q * pi`` radians, canonicalized into ``[0, 2)``.  Nothing in this module
(or in the visibility engine) ever touches floating point.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import VisError

Angle = Fraction
Number = Union[int, Fraction, str]

KINDS = ("bar", "semi_bar", "arc", "semi_arc")
ARC_KINDS = ("arc", "semi_arc")
BAR_KINDS = ("bar", "semi_bar")

ZERO = Fraction(0)
ONE = Fraction(1)
TWO = Fraction(2)


def angle(value: Number) -> Angle:
    """Canonical angle (in units of pi) reduced into ``[0, 2)``."""
    return Fraction(value) % 2


def antipode(a: Number) -> Angle:
    return (Fraction(a) + 1) % 2


def ccw_offset(theta: Angle, base: Angle) -> Fraction:
    """Counterclockwise distance from ``base`` to ``theta``, in ``[0, 2)``."""
    return (theta - base) % 2


@dataclass(frozen=True)
class Arc:
    id: int
    radius_rank: int
    start: Angle
    extent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", angle(self.start))
        object.__setattr__(self, "extent", Fraction(self.extent))

    @property
    def rank(self) -> int:
        return self.radius_rank

    @property
    def end(self) -> Angle:
        """Argument of the positive endpoint."""
        return (self.start + self.extent) % 2

    def contains(self, theta: Angle) -> bool:
        return ccw_offset(theta, self.start) <= self.extent


@dataclass(frozen=True)
class Bar:
    id: int
    depth_rank: int
    left: Fraction
    right: Fraction

    def __post_init__(self):
        object.__setattr__(self, "left", Fraction(self.left))
        object.__setattr__(self, "right", Fraction(self.right))

    @property
    def rank(self) -> int:
        return self.depth_rank

    def contains(self, x: Fraction) -> bool:
        return self.left <= x <= self.right


Element = Union[Arc, Bar]


@dataclass(frozen=True)
class Representation:
    """An arrangement of bars or arcs; elements are kept sorted by rank."""

    kind: str
    elements: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise VisError("unknown_kind", repr(self.kind))
        elems = tuple(sorted(self.elements, key=lambda e: (e.rank, e.id)))
        object.__setattr__(self, "elements", elems)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def is_arc_kind(self) -> bool:
        return self.kind in ARC_KINDS

    def element(self, ident: int) -> Element:
        for e in self.elements:
            if e.id == ident:
                return e
        raise VisError("bad_vertex", f"no element with id {ident}")

    def ids(self) -> list[int]:
        return [e.id for e in self.elements]

    def with_elements(self, elements: Iterable[Element]) -> "Representation":
        return Representation(self.kind, tuple(elements))

    def with_ids(self, ids: Sequence[int], ranks: Optional[Sequence[int]] = None) -> "Representation":
        """Same geometry with the i-th element (by rank) renamed ``ids[i]``, optionally re-ranked."""
        ranks = [e.rank for e in self.elements] if ranks is None else list(ranks)
        field_name = "radius_rank" if self.is_arc_kind else "depth_rank"
        return self.with_elements(
            replace(e, id=i, **{field_name: r}) for e, i, r in zip(self.elements, ids, ranks)
        )


def semi_arc(extents: Sequence[Number]) -> Representation:
    """Semi-arc representation; ``extents[i]`` belongs to the arc of radius rank i+1."""
    return Representation(
        "semi_arc",
        tuple(Arc(i, i + 1, 0, Fraction(e)) for i, e in enumerate(extents)),
    )


def arcs(spec: Sequence[tuple[Number, Number]]) -> Representation:
    """Arc representation from ``(start, extent)`` pairs, innermost first."""
    return Representation(
        "arc",
        tuple(Arc(i, i + 1, s, Fraction(e)) for i, (s, e) in enumerate(spec)),
    )


def semi_bar(lengths: Sequence[Number]) -> Representation:
    """Semi-bar representation; ``lengths[i]`` belongs to the bar of depth rank i+1."""
    return Representation(
        "semi_bar",
        tuple(Bar(i, i + 1, 0, Fraction(x)) for i, x in enumerate(lengths)),
    )


def bars(spec: Sequence[tuple[Number, Number]]) -> Representation:
    """Bar representation from ``(left, right)`` pairs, lowest first."""
    return Representation(
        "bar",
        tuple(Bar(i, i + 1, Fraction(a), Fraction(b)) for i, (a, b) in enumerate(spec)),
    )


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    code: str
    ids: tuple
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple
    general_position: bool
    # endpoint coincidences behind a false general_position flag
    degeneracies: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(rep: Representation) -> ValidationReport:
    out: list[Violation] = []
    want_type = Arc if rep.is_arc_kind else Bar
    for e in rep.elements:
        if not isinstance(e, want_type):
            out.append(Violation("element_type", (e.id,), f"{type(e).__name__} in {rep.kind}"))
    if out:
        return ValidationReport(tuple(out), False)

    ids = sorted(rep.ids())
    if ids != list(range(rep.n)):
        out.append(Violation("ids_not_contiguous", tuple(ids), "ids must be exactly 0..n-1"))
    seen: dict[int, int] = {}
    for e in rep.elements:
        if e.rank < 1:
            out.append(Violation("rank_not_positive", (e.id,), f"rank {e.rank}"))
        if e.rank in seen:
            out.append(Violation("duplicate_rank", (seen[e.rank], e.id), f"rank {e.rank}"))
        seen.setdefault(e.rank, e.id)
        if rep.is_arc_kind:
            if not 0 < e.extent < 2:
                out.append(Violation("extent_out_of_range", (e.id,), f"extent {e.extent} not in (0, 2)"))
            if rep.kind == "semi_arc" and e.start != 0:
                out.append(Violation("semi_arc_start_nonzero", (e.id,), f"start {e.start}"))
        else:
            if not e.left < e.right:
                out.append(Violation("empty_bar", (e.id,), f"left {e.left} >= right {e.right}"))
            if rep.kind == "semi_bar" and e.left != 0:
                out.append(Violation("semi_bar_left_nonzero", (e.id,), f"left {e.left}"))

    degen = tuple(_degeneracies(rep)) if not out else ()
    return ValidationReport(tuple(out), not out and not degen, degen)


def _free_endpoints(rep: Representation) -> list[tuple[int, str, Fraction]]:
    """Endpoints a perturbation may move: (element id, which, value)."""
    pts = []
    for e in rep.elements:
        if rep.kind == "arc":
            pts.append((e.id, "start", e.start))
            pts.append((e.id, "end", e.end))
        elif rep.kind == "semi_arc":
            pts.append((e.id, "end", e.end))
        elif rep.kind == "bar":
            pts.append((e.id, "left", e.left))
            pts.append((e.id, "right", e.right))
        else:
            pts.append((e.id, "right", e.right))
    return pts


def _fixed_lines(rep: Representation) -> list[Fraction]:
    # shared start ray of a semi-arc arrangement (and with it its antipode)
    if rep.kind == "semi_arc":
        return [ZERO]
    if rep.kind == "semi_bar":
        return [ZERO]
    return []


def _colliders(rep: Representation):
    """Pairs of endpoint records that coincide (arc kinds: also up to antipode)."""
    pts = _free_endpoints(rep)
    fixed = _fixed_lines(rep)
    arc_kind = rep.is_arc_kind
    key = (lambda v: v % 1) if arc_kind else (lambda v: v)
    buckets: dict[Fraction, list] = {}
    for p in pts:
        buckets.setdefault(key(p[2]), []).append(p)
    hits = []
    for v, group in sorted(buckets.items()):
        fixed_hit = any(key(f) == v for f in fixed)
        if len(group) > 1 or fixed_hit:
            hits.append((v, group, fixed_hit))
    return hits


def _degeneracies(rep: Representation):
    for v, group, fixed_hit in _colliders(rep):
        ids = tuple(sorted({g[0] for g in group}))
        parts = ", ".join(f"{g[0]}.{g[1]}={g[2]}" for g in group)
        if fixed_hit:
            parts += " on the shared start line"
        code = "endpoint_collision" if not rep.is_arc_kind else "radial_collision"
        yield Violation(code, ids, parts)


def in_general_position(rep: Representation, strict: bool = False) -> bool:
    """``strict`` additionally treats the shared start of semi kinds as a collision."""
    report = validate(rep)
    if not report.general_position:
        return False
    if strict and rep.kind in ("semi_arc", "semi_bar") and rep.n > 1:
        return False
    return True


# -- general position ----------------------------------------------------------


def critical_values(rep: Representation) -> list[Fraction]:
    if rep.is_arc_kind:
        vals = set()
        for e in rep.elements:
            for p in (e.start, e.end):
                vals.add(p)
                vals.add(antipode(p))
        return sorted(vals)
    vals = set()
    for e in rep.elements:
        vals.add(e.left)
        vals.add(e.right)
    return sorted(vals)


def _min_gap(values: list[Fraction], cyclic: bool) -> Fraction:
    gaps = [b - a for a, b in zip(values, values[1:])]
    if cyclic and values:
        gaps.append(values[0] + 2 - values[-1])
    gaps = [g for g in gaps if g > 0]
    return min(gaps) if gaps else ONE


def _shifted(rep: Representation, shifts: dict[tuple[int, str], Fraction]) -> Representation:
    out = []
    for e in rep.elements:
        if rep.is_arc_kind:
            ds = shifts.get((e.id, "start"), ZERO)
            de = shifts.get((e.id, "end"), ZERO)
            out.append(replace(e, start=e.start + ds, extent=e.extent + de - ds))
        else:
            dl = shifts.get((e.id, "left"), ZERO)
            dr = shifts.get((e.id, "right"), ZERO)
            out.append(replace(e, left=e.left + dl, right=e.right + dr))
    return rep.with_elements(out)


def _sign_patterns(count: int, tries: int = 32):
    yield [1] * count
    yield [-1] * count
    yield [1 if i % 2 == 0 else -1 for i in range(count)]
    yield [-1 if i % 2 == 0 else 1 for i in range(count)]
    rng = random.Random(0)
    for _ in range(tries):
        yield [rng.choice((-1, 1)) for _ in range(count)]


def general_position(rep: Representation, k: int = 0) -> Representation:
    """Perturb colliding endpoints apart while keeping the k-visibility graph.

    Every endpoint involved in a collision moves by a distinct multiple of
    ``delta / (T + 1)``, where ``delta`` is half the smallest positive gap
    between critical parameters and ``T`` the number of moved endpoints.
    A handful of deterministic sign patterns are tried; the first one whose
    graph matches is returned.  Raises ``cannot_preserve`` otherwise.
    """
    from .sightlines import visibility_graph

    report = validate(rep)
    if report.violations:
        raise VisError("invalid_representation", "; ".join(v.code for v in report.violations))
    if report.general_position:
        return rep

    movers = []
    for _, group, _ in _colliders(rep):
        movers.extend((g[0], g[1]) for g in group)
    movers = sorted(set(movers))
    crit = sorted(set(critical_values(rep)) | set(_fixed_lines(rep)) |
                  ({ONE} if rep.kind == "semi_arc" else set()))
    delta = _min_gap(crit, rep.is_arc_kind) / 2
    step = delta / (len(movers) + 1)
    target = visibility_graph(rep, k)
    for signs in _sign_patterns(len(movers)):
        shifts = {m: s * (i + 1) * step for i, (m, s) in enumerate(zip(movers, signs))}
        cand = _shifted(rep, shifts)
        if validate(cand).general_position and visibility_graph(cand, k) == target:
            return cand
    raise VisError("cannot_preserve", "no perturbation within the computed magnitude keeps the graph")
