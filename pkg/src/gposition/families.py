"""Deterministic generators for the graph families used in the experiments.

Every generator fixes its labelling so that special vertices and edges can be
referred to by name through the returned landmark map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .errors import ParameterError
from .graph import Edge, Graph, build_graph, edge_ref
from .gp import independence_number

Landmarks = dict[str, "int | Edge"]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()
    base: Graph | None = field(default=None, compare=False)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def _arity(name: str, params: tuple[int, ...], k: int) -> None:
    _require(len(params) == k, f"{name} takes {k} parameter(s), got {len(params)}")


def _clique(labels) -> list[tuple[int, int]]:
    return list(combinations(labels, 2))


def path(n: int) -> tuple[Graph, Landmarks]:
    _require(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)]), {"start": 0, "end": n - 1}


def cycle(n: int) -> tuple[Graph, Landmarks]:
    _require(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)]), {}


def complete(n: int) -> tuple[Graph, Landmarks]:
    _require(n >= 1, "complete needs n >= 1")
    return build_graph(n, _clique(range(n))), {}


def complete_multipartite(*sizes: int) -> tuple[Graph, Landmarks]:
    _require(len(sizes) >= 2, "complete_multipartite needs at least two parts")
    _require(all(s >= 1 for s in sizes), "part sizes must be positive")
    starts, total = [], 0
    for s in sizes:
        starts.append(total)
        total += s
    edges = []
    for i, j in combinations(range(len(sizes)), 2):
        for u in range(starts[i], starts[i] + sizes[i]):
            for v in range(starts[j], starts[j] + sizes[j]):
                edges.append((u, v))
    marks: Landmarks = {f"part{i}": st for i, st in enumerate(starts)}
    return build_graph(total, edges), marks


def complete_bipartite(n: int, m: int) -> tuple[Graph, Landmarks]:
    return complete_multipartite(n, m)


def star_subdivision(n: int) -> tuple[Graph, Landmarks]:
    """Center 0, subdivision vertex i, leaf n+i hanging off i."""
    _require(n >= 2, "star_subdivision needs n >= 2")
    edges = [(0, i) for i in range(1, n + 1)] + [(i, n + i) for i in range(1, n + 1)]
    return build_graph(2 * n + 1, edges), {"x": 0, "center": 0}


def fan(n: int) -> tuple[Graph, Landmarks]:
    """Path 0..n-1 joined to hub n; ``e`` joins the hub to the last path vertex."""
    _require(n >= 3, "fan needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, n) for i in range(n)]
    return build_graph(n + 1, edges), {"x": n, "hub": n, "u": n, "v": n - 1, "e": Edge(n - 1, n)}


def petersen() -> tuple[Graph, Landmarks]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner), {}


def grid(n: int, m: int) -> tuple[Graph, Landmarks]:
    """Cartesian product of paths; (i, j) is labelled i*m + j."""
    _require(n >= 1 and m >= 1, "grid needs n, m >= 1")
    edges = []
    for i in range(n):
        for j in range(m):
            if j + 1 < m:
                edges.append((i * m + j, i * m + j + 1))
            if i + 1 < n:
                edges.append((i * m + j, (i + 1) * m + j))
    return build_graph(n * m, edges), {}


def strong_kn_cm(n: int, m: int) -> tuple[Graph, Landmarks]:
    """Strong product of K_n and C_m; (i, j) is labelled i*m + j."""
    _require(n >= 1 and m >= 3, "strong_kn_cm needs n >= 1, m >= 3")
    edges = []
    for a, b in combinations(range(n * m), 2):
        j, l = a % m, b % m
        if j == l or (j - l) % m in (1, m - 1):
            edges.append((a, b))
    return build_graph(n * m, edges), {}


def clique_amalgam(*sizes: int) -> tuple[Graph, Landmarks]:
    """Cliques of the given orders glued at the shared cut vertex 0."""
    _require(len(sizes) >= 3, "clique_amalgam needs at least three cliques")
    _require(all(s >= 2 for s in sizes), "clique orders must be at least 2")
    edges, nxt = [], 1
    for s in sizes:
        edges.extend(_clique([0, *range(nxt, nxt + s - 1)]))
        nxt += s - 1
    return build_graph(nxt, edges), {"cut": 0}


def Hn(n: int) -> tuple[Graph, Landmarks]:
    """y_1..y_2n = 0..2n-1, x = 2n, x' = 2n+1, z_1..z_n = 2n+2..3n+1."""
    _require(n >= 3, "Hn needs n >= 3")
    x, xp = 2 * n, 2 * n + 1
    zs = range(2 * n + 2, 3 * n + 2)
    edges = _clique(range(2 * n))
    edges += [(x, z) for z in zs] + [(xp, z) for z in zs]
    edges += [(x, y) for y in range(n)]
    edges.append((xp, n))
    return build_graph(3 * n + 2, edges), {"x": x, "x'": xp, "y_n+1": n}


def Gk(k: int) -> tuple[Graph, Landmarks]:
    """x_i = i-1, y_i = k+i-1, w = 2k, z_i = 2k+i."""
    _require(k >= 2, "Gk needs k >= 2")
    w = 2 * k
    z = [None] + [2 * k + i for i in range(1, k + 2)]
    y = [None] + [k + i - 1 for i in range(1, k + 1)]
    edges = [(w, v) for v in range(2 * k)]
    edges += _clique(z[1:])
    edges += [(z[2], y[i]) for i in range(2, k + 1)]
    edges.append((z[1], y[1]))
    return build_graph(3 * k + 2, edges), {"w": w, "z1": z[1], "z2": z[2], "y1": y[1]}


def _bipartite_ring(k: int, hub_edges: tuple[int, ...]) -> tuple[Graph, Landmarks]:
    # gadget g: a_g = g(k+2), b_g = a_g + 1, middles a_g+2 .. a_g+k+1
    # ring order: gadget0 - gadget1 - gadget2 - gadget3 - 7-vertex path - gadget0
    _require(k >= 3, "gadget ring needs k >= 3")
    a = [g * (k + 2) for g in range(4)]
    b = [ag + 1 for ag in a]
    edges = []
    for g in range(4):
        for mid in range(a[g] + 2, a[g] + k + 2):
            edges += [(a[g], mid), (b[g], mid)]
    for g in hub_edges:
        edges.append((a[g], b[g]))
    edges += [(b[0], a[1]), (b[1], a[2]), (b[2], a[3])]
    p = list(range(4 * (k + 2), 4 * (k + 2) + 7))
    chain = [b[3], *p, a[0]]
    edges += list(zip(chain, chain[1:]))
    marks: Landmarks = {"e": edge_ref(b[1], a[2])}
    for g in range(4):
        marks[f"a{g}"], marks[f"b{g}"] = a[g], b[g]
    return build_graph(4 * k + 15, edges), marks


def Gk_prime(k: int) -> tuple[Graph, Landmarks]:
    g, marks = _bipartite_ring(k, (1, 2))
    marks["f"], marks["f'"] = edge_ref(marks["a1"], marks["b1"]), edge_ref(marks["a2"], marks["b2"])
    return g, marks


def Gk_dprime(k: int) -> tuple[Graph, Landmarks]:
    return _bipartite_ring(k, (0, 3))


def Gm_gadget(m: int) -> tuple[Graph, Landmarks]:
    """K_m on 0..m-1 with x = 0, y = 1; x' = m, y' = m+1; ``e`` = x x'."""
    _require(m >= 3, "Gm_gadget needs m >= 3")
    xp, yp = m, m + 1
    edges = _clique(range(m)) + [(xp, yp), (xp, 0), (yp, 1), (xp, 1)]
    return build_graph(m + 2, edges), {"x": 0, "y": 1, "x'": xp, "y'": yp, "e": Edge(0, xp)}


def cone_over_mis(h: Graph) -> tuple[Graph, Landmarks]:
    """Apex joined exactly to the lexicographically first maximum independent set of ``h``."""
    _, mis = independence_number(h)
    apex = h.n
    return build_graph(h.n + 1, [*h.edges(), *((apex, s) for s in mis)]), {"x": apex, "apex": apex}


GENERATORS: dict[str, tuple[Callable[..., tuple[Graph, Landmarks]], int | None]] = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_multipartite": (complete_multipartite, None),
    "star_subdivision": (star_subdivision, 1),
    "fan": (fan, 1),
    "petersen": (petersen, 0),
    "grid": (grid, 2),
    "strong_kn_cm": (strong_kn_cm, 2),
    "clique_amalgam": (clique_amalgam, None),
    "Hn": (Hn, 1),
    "Gk": (Gk, 1),
    "Gk_prime": (Gk_prime, 1),
    "Gk_dprime": (Gk_dprime, 1),
    "Gm_gadget": (Gm_gadget, 1),
}
FAMILY_NAMES = (*GENERATORS, "cone_over_mis")


def generate(spec: FamilySpec) -> tuple[Graph, Landmarks]:
    if spec.name == "cone_over_mis":
        _require(spec.base is not None, "cone_over_mis needs a base graph")
        return cone_over_mis(spec.base)
    if spec.name not in GENERATORS:
        raise ParameterError(f"unknown family {spec.name!r}")
    fn, arity = GENERATORS[spec.name]
    if arity is not None:
        _arity(spec.name, spec.params, arity)
    return fn(*spec.params)


def family(name: str, *params: int, base: Graph | None = None) -> Graph:
    """Shorthand returning only the graph."""
    return generate(FamilySpec(name, tuple(params), base))[0]
