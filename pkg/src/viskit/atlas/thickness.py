"""Partition a semi-arc k-visibility graph into at most 2k+1 planar graphs."""
from __future__ import annotations

from ..errors import VisError
from ..geometry import Representation
from ..graph import Graph, _norm
from ..graphtools import is_planar
from ..sightlines import _integer_extents, _prefix_sorted, _at_least, visibility_graph


def _orient(ext: list[int], one: int, prefix, u: int, v: int, k: int) -> tuple[int, int]:
    """(tail, head) positions for the pair u < v (by radius).

    The tail owns the endpoint on the pair's sightline of largest argument.
    Same-side sightlines end at the shorter arc's endpoint; a pair seen only
    through the center has its last sightline at min(e_u, e_v - pi).
    """
    lo = min(ext[u], ext[v])
    between = _at_least(prefix, v, lo) - _at_least(prefix, u + 1, lo)
    if between <= k:
        return (u, v) if ext[u] <= ext[v] else (v, u)
    if ext[u] <= ext[v] - one:
        return (u, v)
    return (v, u)


def thickness_decomposition(rep: Representation, k: int) -> list[Graph]:
    """SA_0 followed by colour classes of outdegree at most one."""
    if rep.kind != "semi_arc":
        raise VisError("not_semi_arc", rep.kind)
    full = visibility_graph(rep, k)
    base = visibility_graph(rep, 0)
    ext, one = _integer_extents(rep)
    prefix = _prefix_sorted(ext)
    pos = {e.id: p for p, e in enumerate(rep.elements)}
    out: dict[int, list[tuple[int, int]]] = {p: [] for p in range(rep.n)}
    for a, b in sorted(set(full.edges) - set(base.edges)):
        u, v = sorted((pos[a], pos[b]))
        tail, _ = _orient(ext, one, prefix, u, v, k)
        out[tail].append(_norm(a, b))
    worst = max((len(es) for es in out.values()), default=0)
    if worst > 2 * k:
        raise VisError("outdegree_violation", f"an arc leads {worst} edges, more than 2k = {2 * k}")
    colours: list[list] = [[] for _ in range(worst)]
    for p in range(rep.n):
        for c, e in enumerate(out[p]):
            colours[c].append(e)
    parts = [base] + [Graph(rep.n, es) for es in colours if es]
    assert all(is_planar(g) for g in parts)
    return parts
