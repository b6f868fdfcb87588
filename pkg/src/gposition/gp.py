"""General position sets: verification, exact gp number, and auxiliary invariants."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceeded, GraphError
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bits,
    connected_components,
    heaviest_geodesic,
    induced_subgraph,
    is_connected,
    to_mask,
)

BRUTE_FORCE_CAP = 20
INDEPENDENCE_CAP = 40


def oracle_cap(default: int) -> int:
    """Hard cap for an exact oracle; ``GP_MAX_N`` may lower it, never raise it."""
    raw = os.environ.get("GP_MAX_N")
    if raw:
        try:
            return min(default, int(raw))
        except ValueError:
            pass
    return default


@dataclass(frozen=True)
class GpCertificate:
    value: int
    witness: tuple[int, ...]

    @property
    def mask(self) -> int:
        return to_mask(self.witness)


@dataclass(frozen=True)
class PartitionReport:
    """Blocks of ``G[S]`` and the block-to-block distance table.

    ``pairwise`` is ``None`` when some pair of blocks is not at constant distance.
    """

    blocks: tuple[tuple[int, ...], ...]
    pairwise: tuple[tuple[int, ...], ...] | None
    in_transitive: bool
    blocks_complete: bool


def is_general_position(d: DistanceMatrix, s) -> bool:
    """No member of ``s`` lies strictly inside a geodesic between two others."""
    members = list(bits(to_mask(s)))
    rows = d.rows
    inf = d.n
    for i, u in enumerate(members):
        ru = rows[u]
        for v in members[i + 1:]:
            duv = ru[v]
            if duv >= inf:
                continue
            rv = rows[v]
            for w in members:
                if w != u and w != v and ru[w] + rv[w] == duv:
                    return False
    return True


def check_characterization(g: Graph, d: DistanceMatrix, s) -> tuple[bool, PartitionReport]:
    """Test ``s`` against the clique-block, distance-constant, in-transitive description."""
    if not is_connected(g):
        raise GraphError("characterisation check requires a connected host graph")
    mask = to_mask(s)
    blocks: list[int] = []
    if mask:
        sub, labels = induced_subgraph(g, mask)
        for comp in connected_components(sub):
            blocks.append(to_mask(labels[i] for i in bits(comp)))
    members = [tuple(bits(b)) for b in blocks]

    complete = all(
        (g.rows[u] | (1 << u)) & b == b for b, mem in zip(blocks, members) for u in mem
    )
    t = len(blocks)
    table: list[list[int]] | None = [[0] * t for _ in range(t)]
    for i in range(t):
        for j in range(i + 1, t):
            values = {d.rows[u][v] for u in members[i] for v in members[j]}
            if len(values) != 1:
                table = None
                break
            table[i][j] = table[j][i] = values.pop()
        if table is None:
            break

    in_transitive = table is not None and all(
        table[i][k] != table[i][j] + table[j][k]
        for i in range(t) for j in range(t) for k in range(t)
        if len({i, j, k}) == 3
    )
    report = PartitionReport(
        blocks=tuple(members),
        pairwise=None if table is None else tuple(tuple(r) for r in table),
        in_transitive=in_transitive,
        blocks_complete=complete,
    )
    return complete and in_transitive, report


def conflict_masks(d: DistanceMatrix) -> list[list[int]]:
    """``F[a][b]``: every ``w`` for which ``{a, b, w}`` is not in general position."""
    n = d.n
    rows = d.rows
    F = [[0] * n for _ in range(n)]
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            dab = ra[b]
            if dab >= n:
                continue
            rb = rows[b]
            mask = 0
            for w in range(n):
                if w == a or w == b:
                    continue
                daw, dbw = ra[w], rb[w]
                if daw >= n:
                    continue
                # w between a,b  |  a between w,b  |  b between a,w
                if daw + dbw == dab or daw + dab == dbw or dab + dbw == daw:
                    mask |= 1 << w
            F[a][b] = F[b][a] = mask
    return F


def geodesic_partition(g: Graph, d: DistanceMatrix) -> list[int]:
    """Greedy partition of V into sets each lying on one geodesic.

    A general position set meets every such set at most twice, which is the
    solver's pruning bound.
    """
    remaining = g.full_mask
    parts = []
    while remaining:
        part = to_mask(heaviest_geodesic(g, d, remaining)) & remaining
        parts.append(part)
        remaining &= ~part
    return parts


class GpSolver:
    """Exact maximum general position search on one fixed graph.

    Depth-first over vertices in label order, include-branch first, so the
    first maximum set reached is the lexicographically smallest one.
    """

    def __init__(self, g: Graph, d: DistanceMatrix | None = None):
        self.g = g
        self.d = d if d is not None else all_pairs_distances(g)
        self.F = conflict_masks(self.d)
        self.parts = geodesic_partition(g, self.d)
        self.components = connected_components(g)
        self._component_gp: dict[int, GpCertificate] = {}

    def _bound(self, pool: int) -> int:
        total = 0
        for part in self.parts:
            c = (part & pool).bit_count()
            total += 2 if c > 2 else c
        return total

    def _search(self, start: int, candidates: int, floor: int, stop_at: int | None = None):
        """Best set ``S ⊇ start`` with ``S \\ start ⊆ candidates`` and ``|S| > floor``.

        Returns ``(size, mask)`` or ``(floor, None)`` if nothing beats ``floor``.
        ``stop_at`` aborts as soon as a set of that size is found.
        """
        F = self.F
        best = [floor, None]
        bound = self._bound

        def expand(S: int, size: int, C: int) -> bool:
            if size > best[0]:
                best[0], best[1] = size, S
                if stop_at is not None and size >= stop_at:
                    return True
            while C:
                if size + C.bit_count() <= best[0]:
                    return False
                if bound(S | C) <= best[0]:
                    return False
                low = C & -C
                v = low.bit_length() - 1
                C ^= low
                nc = C
                for s in bits(S):
                    nc &= ~F[s][v]
                if expand(S | low, size + 1, nc):
                    return True
            return False

        expand(start, start.bit_count(), candidates)
        return best[0], best[1]

    def _seed(self, comp: int) -> int:
        """Size of a cheap general position set inside ``comp``."""
        rows, F = self.g.rows, self.F
        order = sorted(bits(comp), key=lambda v: -(rows[v] & comp).bit_count())
        best = min(comp.bit_count(), 2)
        clique = 0
        for v in order:
            if rows[v] & clique == clique:
                clique |= 1 << v
        best = max(best, clique.bit_count())
        S, C = 0, comp
        for v in order:
            if C >> v & 1:
                for s in bits(S):
                    C &= ~F[s][v]
                S |= 1 << v
                C &= ~(1 << v)
        return max(best, S.bit_count())

    def component_gp(self, comp: int) -> GpCertificate:
        if comp not in self._component_gp:
            seed = self._seed(comp)
            size, mask = self._search(0, comp, seed - 1)
            self._component_gp[comp] = GpCertificate(size, tuple(bits(mask)))
        return self._component_gp[comp]

    def solve(self) -> GpCertificate:
        witness = 0
        for comp in self.components:
            witness |= self.component_gp(comp).mask
        return GpCertificate(witness.bit_count(), tuple(bits(witness)))

    def solve_forcing(self, required) -> GpCertificate | None:
        req = to_mask(required)
        if req & ~self.g.full_mask:
            raise GraphError("required set references labels outside the graph")
        if not is_general_position(self.d, req):
            return None
        witness = 0
        for comp in self.components:
            r = req & comp
            if not r:
                witness |= self.component_gp(comp).mask
                continue
            C = comp & ~r
            members = list(bits(r))
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    C &= ~self.F[a][b]
            _, mask = self._search(r, C, r.bit_count() - 1)
            witness |= mask
        return GpCertificate(witness.bit_count(), tuple(bits(witness)))

    def in_some_gp_set(self, x: int) -> bool:
        comp = next(c for c in self.components if c >> x & 1)
        target = self.component_gp(comp)
        if target.mask >> x & 1:
            return True
        bit = 1 << x
        C = comp & ~bit
        size, _ = self._search(bit, C, 0, stop_at=target.value)
        return size >= target.value


def gp_number(g: Graph) -> GpCertificate:
    return GpSolver(g).solve()


def gp_number_forcing(g: Graph, required) -> GpCertificate | None:
    """Largest general position set containing ``required``; ``None`` if infeasible."""
    return GpSolver(g).solve_forcing(required)


def in_some_gp_set(g: Graph, x: int) -> bool:
    return GpSolver(g).in_some_gp_set(x)


def brute_force_gp(g: Graph) -> GpCertificate:
    """Exhaustive descending-size scan; the independent check on ``gp_number``."""
    cap = oracle_cap(BRUTE_FORCE_CAP)
    if g.n > cap:
        raise CapExceeded(f"brute-force gp limited to n <= {cap}, got {g.n}")
    d = all_pairs_distances(g)
    for k in range(g.n, 0, -1):
        for combo in combinations(range(g.n), k):
            if is_general_position(d, combo):
                return GpCertificate(k, combo)
    raise AssertionError("unreachable: a single vertex is always in general position")


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact alpha(G) with the lexicographically first maximum independent set."""
    cap = oracle_cap(INDEPENDENCE_CAP)
    if g.n > cap:
        raise CapExceeded(f"independence number limited to n <= {cap}, got {g.n}")
    rows = g.rows
    best = [0, 0]

    def clique_cover_bound(C: int) -> int:
        count = 0
        while C:
            low = C & -C
            v = low.bit_length() - 1
            clique = low
            cand = C & rows[v]
            while cand:
                w = cand & -cand
                clique |= w
                cand &= rows[w.bit_length() - 1]
            C &= ~clique
            count += 1
        return count

    def expand(S: int, size: int, C: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, S
        while C:
            if size + C.bit_count() <= best[0]:
                return
            if size + clique_cover_bound(C) <= best[0]:
                return
            low = C & -C
            C ^= low
            expand(S | low, size + 1, C & ~rows[low.bit_length() - 1])

    expand(0, 0, g.full_mask)
    return best[0], tuple(bits(best[1]))


def leaves_count(g: Graph) -> int:
    return sum(1 for r in g.rows if r.bit_count() == 1)
