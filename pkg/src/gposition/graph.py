"""Graph representation, BFS metric engine and deletion operators.

Vertices are the contiguous labels ``0..n-1`` and every adjacency row is an
``int`` bit mask, so vertex sets are plain integers throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import GraphError

INFINITY = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the labels set in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: int | Iterable[int]) -> int:
    """Accept either a ready bit mask or an iterable of labels."""
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Edge(NamedTuple):
    u: int
    v: int


def edge_ref(u: int, v: int) -> Edge:
    """Normalised edge reference with ``u < v``."""
    if u == v:
        raise GraphError(f"self-loop at {u} is not an edge")
    return Edge(u, v) if u < v else Edge(v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on ``0..n-1``."""

    n: int
    rows: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        full = (1 << self.n) - 1
        degree_sum = 0
        for u, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise GraphError(f"row {u} references labels outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at {u}")
            for v in bits(row):
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
            degree_sum += popcount(row)
        object.__setattr__(self, "m", degree_sum // 2)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return popcount(self.rows[u])

    def edges(self) -> list[Edge]:
        """All edges as ``Edge(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Canonical graph from an edge list; repeated pairs collapse to one edge."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a label outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold the sentinel ``n``."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[Sequence[int]]):
        self.n = n
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)

    @property
    def inf(self) -> int:
        return self.n

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    def __call__(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def finite(self, u: int, v: int) -> bool:
        return self.rows[u][v] < self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DistanceMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Distance layers from ``source`` as bit masks (layer ``d`` at index ``d``)."""
    rows = g.rows
    seen = frontier = 1 << source
    layers = []
    while frontier:
        layers.append(frontier)
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return layers


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    n = g.n
    out = []
    for s in range(n):
        row = [n] * n
        for d, layer in enumerate(bfs_layers(g, s)):
            for v in bits(layer):
                row[v] = d
        out.append(row)
    return DistanceMatrix(n, out)


def is_connected(g: Graph) -> bool:
    seen = 0
    for layer in bfs_layers(g, 0):
        seen |= layer
    return seen == g.full_mask


def diameter(g: Graph, d: DistanceMatrix | None = None) -> float:
    """Largest distance, or ``INFINITY`` when ``g`` is disconnected."""
    if d is None:
        d = all_pairs_distances(g)
    worst = max(max(row) for row in d.rows)
    return INFINITY if worst >= g.n else worst


def is_on_geodesic(d: DistanceMatrix, u: int, w: int, v: int) -> bool:
    """True iff ``w`` lies on some shortest ``u,v``-path (betweenness with INF is false)."""
    duw, dwv, duv = d.rows[u][w], d.rows[w][v], d.rows[u][v]
    n = d.n
    if duw >= n or dwv >= n or duv >= n:
        return False
    return duw + dwv == duv


def interval(d: DistanceMatrix, u: int, v: int) -> int:
    """The closed interval between ``u`` and ``v`` as a mask (0 when unreachable)."""
    ru, rv, duv = d.rows[u], d.rows[v], d.rows[u][v]
    if duv >= d.n:
        return 0
    mask = 0
    for w in range(d.n):
        if ru[w] + rv[w] == duv:
            mask |= 1 << w
    return mask


def heaviest_geodesic(g: Graph, d: DistanceMatrix, weight: int) -> list[int]:
    """A shortest path containing as many vertices of ``weight`` as possible.

    Dynamic programming over the BFS layers of every source; ties go to the
    first path found (smallest source, then BFS order).
    """
    n, rows = g.n, g.rows
    best_cnt, best_path = -1, [0]
    for a in range(n):
        da = d.rows[a]
        order = sorted((v for v in range(n) if da[v] < n), key=da.__getitem__)
        score = [0] * n
        pred = [-1] * n
        for v in order:
            own = weight >> v & 1
            if v == a:
                score[v] = own
            else:
                top = -1
                for p in bits(rows[v]):
                    if da[p] == da[v] - 1 and score[p] > top:
                        top, pred[v] = score[p], p
                score[v] = top + own
            if score[v] > best_cnt:
                best_cnt, end = score[v], v
                seq = [end]
                while pred[seq[-1]] != -1:
                    seq.append(pred[seq[-1]])
                best_path = seq[::-1]
    return best_path


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the components, ordered by smallest member."""
    remaining = g.full_mask
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = 0
        for layer in bfs_layers(g, start):
            comp |= layer
        comps.append(comp)
        remaining &= ~comp
    return comps


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """``G[mask]`` relabelled contiguously, plus new-to-old label list."""
    labels = list(bits(mask))
    if not labels:
        raise GraphError("induced subgraph on an empty vertex set")
    index = {old: new for new, old in enumerate(labels)}
    rows = []
    for old in labels:
        row = 0
        for nb in bits(g.rows[old] & mask):
            row |= 1 << index[nb]
        rows.append(row)
    return Graph(len(labels), tuple(rows)), labels


def delete_vertex(g: Graph, x: int) -> tuple[Graph, dict[int, int]]:
    """``G - x`` with contiguous labels, plus the old-to-new relabel map."""
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} not in graph")
    if g.n < 2:
        raise GraphError("cannot delete the last vertex")
    h, labels = induced_subgraph(g, g.full_mask & ~(1 << x))
    return h, {old: new for new, old in enumerate(labels)}


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = edge_ref(*e)
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not in graph")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))
