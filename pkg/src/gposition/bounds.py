"""Isometric subgraphs, isometric covers and isometric path covers.

Every routine here produces an upper bound on the gp number, either as a sum
over an isometric cover or as twice the size of an isometric path cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded, GraphError
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bits,
    heaviest_geodesic,
    induced_subgraph,
    to_mask,
)
from .gp import gp_number, oracle_cap

IP_EXACT_CAP = 10
GEODESIC_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class CoverSpec:
    parts: tuple[int, ...]

    @classmethod
    def of(cls, *parts) -> CoverSpec:
        return cls(tuple(to_mask(p) for p in parts))


@dataclass(frozen=True)
class PathCover:
    paths: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, *paths: Sequence[int]) -> PathCover:
        return cls(tuple(tuple(p) for p in paths))


def _isometry_violation(g: Graph, d: DistanceMatrix, mask: int) -> tuple[int, int, int, int] | None:
    """First pair whose induced distance differs from the host distance."""
    sub, labels = induced_subgraph(g, mask)
    ds = all_pairs_distances(sub)
    for i, u in enumerate(labels):
        for j in range(i + 1, len(labels)):
            v = labels[j]
            inner = ds.rows[i][j]
            inner = d.n if inner >= sub.n else inner
            if inner != d.rows[u][v]:
                return u, v, inner, d.rows[u][v]
    return None


def is_isometric_subgraph(g: Graph, part, d: DistanceMatrix | None = None) -> bool:
    mask = to_mask(part)
    if not mask:
        raise GraphError("isometric check needs a nonempty vertex set")
    d = d if d is not None else all_pairs_distances(g)
    return _isometry_violation(g, d, mask) is None


def isometric_cover_bound(g: Graph, cover: CoverSpec) -> int:
    """Sum of exact gp numbers of the cover parts, after validating the cover."""
    d = all_pairs_distances(g)
    union = 0
    for p in cover.parts:
        union |= p
    if union != g.full_mask:
        missing = list(bits(g.full_mask & ~union))
        raise GraphError(f"cover misses vertices {missing}")
    total = 0
    for idx, part in enumerate(cover.parts):
        if not part or part & ~g.full_mask:
            raise GraphError(f"cover part {idx} is empty or out of range")
        bad = _isometry_violation(g, d, part)
        if bad:
            u, v, inner, host = bad
            raise GraphError(
                f"cover part {idx} is not isometric: d({u},{v}) is {inner} inside, {host} in host"
            )
        total += gp_number(induced_subgraph(g, part)[0]).value
    return total


def verify_isometric_path_cover(g: Graph, pc: PathCover) -> int:
    """Validate that every sequence is a geodesic and the sequences cover V; return their count.

    The count bounds the isometric-path number from above, so gp(G) <= 2 * count.
    """
    d = all_pairs_distances(g)
    covered = 0
    for idx, seq in enumerate(pc.paths):
        if not seq:
            raise GraphError(f"path {idx} is empty")
        if any(not 0 <= v < g.n for v in seq) or len(set(seq)) != len(seq):
            raise GraphError(f"path {idx} is not a path: {list(seq)}")
        for a, b in zip(seq, seq[1:]):
            if not g.has_edge(a, b):
                raise GraphError(f"path {idx} is not a path: {a}-{b} is not an edge")
        if d.rows[seq[0]][seq[-1]] != len(seq) - 1:
            raise GraphError(
                f"path {idx} is not a geodesic: length {len(seq) - 1}, "
                f"distance {d.rows[seq[0]][seq[-1]]}"
            )
        covered |= to_mask(seq)
    if covered != g.full_mask:
        raise GraphError(f"paths leave vertices {list(bits(g.full_mask & ~covered))} uncovered")
    return len(pc.paths)


def geodesic_vertex_sets(g: Graph, d: DistanceMatrix | None = None) -> set[int]:
    """Vertex sets of all geodesics (single vertices included), deduplicated."""
    d = d if d is not None else all_pairs_distances(g)
    n, rows = g.n, g.rows
    found: set[int] = set()
    enumerated = 0
    for a in range(n):
        da = d.rows[a]
        for b in range(a, n):
            if da[b] >= n:
                continue
            # walk back from b through predecessors one layer closer to a
            stack = [(b, 1 << b)]
            while stack:
                v, mask = stack.pop()
                if v == a:
                    found.add(mask)
                    enumerated += 1
                    if enumerated > GEODESIC_ENUMERATION_CAP:
                        raise CapExceeded(
                            f"more than {GEODESIC_ENUMERATION_CAP} geodesics enumerated"
                        )
                    continue
                for p in bits(rows[v]):
                    if da[p] == da[v] - 1:
                        stack.append((p, mask | (1 << p)))
    return found


def _maximal(sets: set[int]) -> list[int]:
    ordered = sorted(sets, key=lambda s: -s.bit_count())
    keep: list[int] = []
    for s in ordered:
        if not any(s & k == s for k in keep):
            keep.append(s)
    return keep


def isometric_path_number_exact(g: Graph) -> int:
    """Minimum number of geodesics covering V, by exact set cover."""
    cap = oracle_cap(IP_EXACT_CAP)
    if g.n > cap:
        raise CapExceeded(f"exact isometric-path number limited to n <= {cap}, got {g.n}")
    candidates = _maximal(geodesic_vertex_sets(g))
    by_vertex = [[s for s in candidates if s >> v & 1] for v in range(g.n)]
    largest = max(s.bit_count() for s in candidates)
    best = [g.n]

    def cover(uncovered: int, used: int) -> None:
        if not uncovered:
            best[0] = min(best[0], used)
            return
        if used + -(-uncovered.bit_count() // largest) >= best[0]:
            return
        low = uncovered & -uncovered
        for s in by_vertex[low.bit_length() - 1]:
            cover(uncovered & ~s, used + 1)

    cover(g.full_mask, 0)
    return best[0]


def greedy_isometric_path_cover(g: Graph, d: DistanceMatrix | None = None) -> PathCover:
    """Cover V by geodesics, each time taking the one with most uncovered vertices."""
    d = d if d is not None else all_pairs_distances(g)
    remaining = g.full_mask
    paths = []
    while remaining:
        seq = heaviest_geodesic(g, d, remaining)
        paths.append(tuple(seq))
        remaining &= ~to_mask(seq)
    return PathCover(tuple(paths))


def block_cover(g: Graph) -> CoverSpec:
    """Blocks (biconnected components and bridges) plus isolated vertices.

    Blocks are always isometric, so they form an isometric cover.
    """
    n, rows = g.n, g.rows
    disc = [-1] * n
    low = [0] * n
    blocks: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not rows[root]:
            blocks.append(1 << root)
            disc[root] = timer
            timer += 1
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, list(bits(rows[root])))]
        while stack:
            v, parent, todo = stack[-1]
            if todo:
                w = todo.pop()
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, list(bits(rows[w]))))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block = 0
                while True:
                    a, b = edge_stack.pop()
                    block |= (1 << a) | (1 << b)
                    if (a, b) == (parent, v):
                        break
                blocks.append(block)
    return CoverSpec(tuple(blocks))
