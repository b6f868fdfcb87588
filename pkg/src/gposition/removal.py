"""Vertex and edge deletion experiments.

Each scan deletes one element at a time, recomputes the gp number exactly and
evaluates the deletion bounds as flags.  A flag is ``"holds"`` or
``"violated"`` when its hypotheses are met and ``"n/a"`` otherwise, so a
report never counts a vacuous check as coverage.

Vertex flags
    vertex_double          gp(G-x) <= 2 gp(G)
    gp_set_vertex_lower    x in some gp-set  =>  gp(G-x) >= gp(G) - 1
    diam2_vertex_upper     diam(G) = 2  =>  gp(G-x) <= gp(G)
    diam2_vertex_lower     diam(G) = diam(G-x) = 2  =>  gp(G)-1 <= gp(G-x) <= gp(G)
    diam2_vertex_combined  diam(G) = 2 and (diam(G-x) = 2 or x in some gp-set)
                           =>  gp(G)-1 <= gp(G-x) <= gp(G)
Edge flags
    edge_half_double       gp(G)/2 <= gp(G-e) <= 2 gp(G)
    diam2_edge_unit        diam(G) = 2  =>  gp(G)-1 <= gp(G-e) <= gp(G)+1
    edge_side_geodesics    same-side pairs keep their geodesics after deleting e
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import GraphError
from .graph import (
    INFINITY,
    DistanceMatrix,
    Edge,
    Graph,
    all_pairs_distances,
    bits,
    delete_edge,
    delete_vertex,
    diameter,
    edge_ref,
    interval,
    is_connected,
    to_mask,
)
from .gp import GpSolver, gp_number, is_general_position

HOLDS, VIOLATED, NA = "holds", "violated", "n/a"

VERTEX_FLAGS = (
    "vertex_double",
    "gp_set_vertex_lower",
    "diam2_vertex_upper",
    "diam2_vertex_lower",
    "diam2_vertex_combined",
)
EDGE_FLAGS = ("edge_half_double", "diam2_edge_unit", "edge_side_geodesics")
RECORD_FIELDS = (
    "element",
    "gp_before",
    "gp_after",
    "diam_before",
    "diam_after",
    "connected_after",
    "in_some_gp_set",
)


@dataclass(frozen=True)
class EdgeSides:
    """Vertices strictly closer to u, strictly closer to v, and equidistant."""

    w_uv: int
    w_vu: int
    tie: int


@dataclass
class RemovalRecord:
    element: int | Edge
    gp_before: int
    gp_after: int
    diam_before: float
    diam_after: float
    connected_after: bool
    in_some_gp_set: bool | None
    flags: dict[str, str] = field(default_factory=dict)

    @property
    def element_label(self) -> str:
        if isinstance(self.element, tuple):
            return f"{self.element[0]}-{self.element[1]}"
        return str(self.element)

    def as_row(self) -> dict:
        """Flat mapping in the fixed column order; ``diam`` INF becomes ``None``."""
        row = {
            "element": self.element_label,
            "gp_before": self.gp_before,
            "gp_after": self.gp_after,
            "diam_before": None if self.diam_before == INFINITY else self.diam_before,
            "diam_after": None if self.diam_after == INFINITY else self.diam_after,
            "connected_after": self.connected_after,
            "in_some_gp_set": self.in_some_gp_set,
        }
        row.update(self.flags)
        return row


def _flag(applies: bool, ok: bool) -> str:
    if not applies:
        return NA
    return HOLDS if ok else VIOLATED


def _checked_edge(g: Graph, e) -> Edge:
    u, v = edge_ref(*e)
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not in graph")
    return Edge(u, v)


def sidedness(g: Graph, e, d: DistanceMatrix | None = None) -> EdgeSides:
    """Orientation follows ``e`` as given: ``w_uv`` is the side of its first end."""
    _checked_edge(g, e)
    u, v = e
    d = d if d is not None else all_pairs_distances(g)
    du, dv = d.rows[u], d.rows[v]
    w_uv = w_vu = tie = 0
    for w in range(g.n):
        if du[w] < dv[w]:
            w_uv |= 1 << w
        elif dv[w] < du[w]:
            w_vu |= 1 << w
        else:
            tie |= 1 << w
    return EdgeSides(w_uv, w_vu, tie)


def check_geodesic_preservation(g: Graph, e, d: DistanceMatrix | None = None) -> bool:
    """Pairs on one side of ``e`` (ties included) keep distance and geodesics in ``G - e``."""
    u, v = _checked_edge(g, e)
    d = d if d is not None else all_pairs_distances(g)
    de = all_pairs_distances(delete_edge(g, (u, v)))
    sides = sidedness(g, (u, v), d)
    n = g.n
    for side in (sides.w_uv | sides.tie, sides.w_vu | sides.tie):
        members = list(bits(side))
        for i, x in enumerate(members):
            dx = d.rows[x]
            for y in members[i + 1:]:
                dxy = dx[y]
                if de.rows[x][y] != dxy:
                    return False
                if dxy >= n:
                    continue
                if dx[u] + 1 + d.rows[v][y] == dxy or dx[v] + 1 + d.rows[u][y] == dxy:
                    return False
    return True


def split_gp_set_on_vertex_removal(g: Graph, x: int, r) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a general position set of ``G - x`` into two general position sets of ``G``.

    ``r`` uses the labels of ``G``.  A member ``w`` goes to the second part when
    it lies on a geodesic from another member ``u`` to ``x``.
    """
    rmask = to_mask(r)
    if rmask >> x & 1:
        raise GraphError(f"deleted vertex {x} cannot belong to the set")
    h, relabel = delete_vertex(g, x)
    if not is_general_position(all_pairs_distances(h), [relabel[w] for w in bits(rmask)]):
        raise GraphError("set is not in general position in G - x")
    d = all_pairs_distances(g)
    second = 0
    for u in bits(rmask):
        second |= interval(d, u, x) & rmask & ~(1 << u)
    first = rmask & ~second
    for part in (first, second):
        if not is_general_position(d, part):
            raise AssertionError(f"split part {sorted(bits(part))} is not in general position in G")
    return tuple(bits(first)), tuple(bits(second))


def split_gp_set_on_edge_removal(g: Graph, e, x_set) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a general position set of ``G`` by the sides of ``e``; both parts survive in ``G - e``."""
    _checked_edge(g, e)
    u, v = e
    xmask = to_mask(x_set)
    d = all_pairs_distances(g)
    if not is_general_position(d, xmask):
        raise GraphError("set is not in general position in G")
    sides = sidedness(g, (u, v), d)
    xu = xmask & (sides.w_uv | sides.tie)
    xv = xmask & (sides.w_vu | sides.tie)
    de = all_pairs_distances(delete_edge(g, (u, v)))
    for part in (xu, xv):
        if not is_general_position(de, part):
            raise AssertionError(f"split part {sorted(bits(part))} is not in general position in G - e")
    return tuple(bits(xu)), tuple(bits(xv))


def _vertex_record(g: Graph, x: int, gp_g: int, diam_g: float, in_gp: bool, connected: bool) -> RemovalRecord:
    h, _ = delete_vertex(g, x)
    gp_h = gp_number(h).value
    diam_h = diameter(h)
    d2 = connected and diam_g == 2
    two_sided = gp_g - 1 <= gp_h <= gp_g
    flags = {
        "vertex_double": _flag(connected, gp_h <= 2 * gp_g),
        "gp_set_vertex_lower": _flag(connected and in_gp, gp_h >= gp_g - 1),
        "diam2_vertex_upper": _flag(d2, gp_h <= gp_g),
        "diam2_vertex_lower": _flag(d2 and diam_h == 2, two_sided),
        "diam2_vertex_combined": _flag(d2 and (diam_h == 2 or in_gp), two_sided),
    }
    return RemovalRecord(x, gp_g, gp_h, diam_g, diam_h, diam_h != INFINITY, in_gp, flags)


def _edge_record(g: Graph, e: Edge, gp_g: int, diam_g: float, connected: bool) -> RemovalRecord:
    h = delete_edge(g, e)
    gp_h = gp_number(h).value
    diam_h = diameter(h)
    flags = {
        "edge_half_double": _flag(connected, gp_g <= 2 * gp_h and gp_h <= 2 * gp_g),
        "diam2_edge_unit": _flag(connected and diam_g == 2, gp_g - 1 <= gp_h <= gp_g + 1),
        "edge_side_geodesics": HOLDS if check_geodesic_preservation(g, e) else VIOLATED,
    }
    return RemovalRecord(e, gp_g, gp_h, diam_g, diam_h, diam_h != INFINITY, None, flags)


def _run(fn: Callable, jobs: list[tuple], workers: int) -> list:
    if workers <= 1 or len(jobs) < 2:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def vertex_scan(g: Graph, workers: int = 1, solver: GpSolver | None = None) -> list[RemovalRecord]:
    if g.n < 2:
        raise GraphError("vertex scan needs at least two vertices")
    solver = solver or GpSolver(g)
    gp_g = solver.solve().value
    diam_g = diameter(g, solver.d)
    connected = is_connected(g)
    jobs = [(g, x, gp_g, diam_g, solver.in_some_gp_set(x), connected) for x in range(g.n)]
    return _run(_vertex_record, jobs, workers)


def edge_scan(g: Graph, workers: int = 1, solver: GpSolver | None = None) -> list[RemovalRecord]:
    if g.m < 1:
        raise GraphError("edge scan needs at least one edge")
    solver = solver or GpSolver(g)
    gp_g = solver.solve().value
    diam_g = diameter(g, solver.d)
    connected = is_connected(g)
    jobs = [(g, e, gp_g, diam_g, connected) for e in g.edges()]
    return _run(_edge_record, jobs, workers)


def flag_names(records: Iterable[RemovalRecord]) -> list[str]:
    names: list[str] = []
    for rec in records:
        for key in rec.flags:
            if key not in names:
                names.append(key)
    return names
