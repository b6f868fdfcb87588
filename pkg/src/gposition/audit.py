"""Corpus-wide checks of the deletion bounds and the supporting structural facts."""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .bounds import (
    CoverSpec,
    block_cover,
    greedy_isometric_path_cover,
    isometric_cover_bound,
    isometric_path_number_exact,
)
from .codecs import g6_encode
from .errors import GraphError
from .families import FamilySpec, family, generate
from .gp import GpSolver, check_characterization, gp_number, independence_number, is_general_position, leaves_count
from .graph import Graph, bits, delete_edge, delete_vertex, diameter, is_connected, to_mask
from .removal import HOLDS, NA, edge_scan, split_gp_set_on_edge_removal, split_gp_set_on_vertex_removal, vertex_scan
from .sampling import SplitMix64, derive_seed, random_connected_graph, random_tree

# Theorem-level checks outside the per-element scan flags.
STRUCTURE_CHECKS = (
    "vertex_split",
    "edge_split",
    "characterization",
    "tree_leaves",
    "order_diameter",
    "cover_bound",
    "path_cover_bound",
)
PATH_COVER_MAX_N = 9
CHARACTERIZATION_EXHAUSTIVE_N = 6
CHARACTERIZATION_SAMPLES = 48


@dataclass
class Tally:
    checked: int = 0
    held: int = 0
    na: int = 0

    @property
    def violated(self) -> int:
        return self.checked - self.held


@dataclass
class Violation:
    graph: str
    element: str
    check: str
    detail: str = ""

    def __str__(self) -> str:
        return f"graph {self.graph}: element {self.element}: {self.check} violated {self.detail}".rstrip()


@dataclass
class AuditReport:
    tallies: dict[str, Tally] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    parse_errors: list[tuple[str, str]] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    negative_witnesses: list[tuple[str, int, int, int]] = field(default_factory=list)
    graphs: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, check: str, outcome: str, graph: str = "", element: str = "", detail: str = "") -> None:
        t = self.tallies.setdefault(check, Tally())
        if outcome == NA:
            t.na += 1
            return
        t.checked += 1
        if outcome == HOLDS:
            t.held += 1
        else:
            self.violations.append(Violation(graph, element, check, detail))

    def check(self, name: str, ok: bool, graph: str, element: str = "", detail: str = "") -> None:
        self.record(name, HOLDS if ok else "violated", graph, element, detail)

    def summary_lines(self) -> list[str]:
        lines = [f"graphs audited: {self.graphs}"]
        for name in sorted(self.tallies):
            t = self.tallies[name]
            lines.append(f"{name}: checked {t.checked}, held {t.held}, n/a {t.na}")
        lines.append(f"negative-result witnesses (gp(G-x) < gp(G)-1): {len(self.negative_witnesses)}")
        lines.extend(f"skipped disconnected graph {gid}" for gid in self.skipped)
        for where, msg in self.parse_errors:
            lines.append(f"parse error at {where}: {msg}")
        lines.extend(str(v) for v in self.violations)
        lines.append("violations: " + str(len(self.violations)))
        return lines


def _subset_samples(g: Graph, extra: Iterable[int]) -> Iterator[int]:
    if g.n <= CHARACTERIZATION_EXHAUSTIVE_N:
        yield from range(1 << g.n)
        return
    rng = SplitMix64(zlib.crc32(g6_encode(g).encode()))
    for _ in range(CHARACTERIZATION_SAMPLES):
        yield rng.next() & g.full_mask
    for mask in extra:
        yield mask
        # every subset of a general position set is again one
        yield mask & rng.next()


def audit_graph(g: Graph, gid: str, report: AuditReport, workers: int = 1) -> None:
    """Run every check on one connected graph, accumulating into ``report``."""
    report.graphs += 1
    solver = GpSolver(g)
    cert = solver.solve()
    gp_g = cert.value
    d = solver.d

    if g.n >= 2:
        for rec in vertex_scan(g, workers=workers, solver=solver):
            x = rec.element
            for name, outcome in rec.flags.items():
                report.record(name, outcome, gid, str(x), f"(gp {rec.gp_before} -> {rec.gp_after})")
            if rec.gp_after < gp_g - 1:
                report.negative_witnesses.append((gid, x, gp_g, rec.gp_after))
            h, relabel = delete_vertex(g, x)
            back = {new: old for old, new in relabel.items()}
            r = [back[w] for w in gp_number(h).witness]
            try:
                r1, r2 = split_gp_set_on_vertex_removal(g, x, r)
                ok = max(len(r1), len(r2)) >= math.ceil(len(r) / 2)
                report.check("vertex_split", ok, gid, str(x))
            except AssertionError as exc:
                report.check("vertex_split", False, gid, str(x), str(exc))

    if g.m >= 1:
        for rec in edge_scan(g, workers=workers, solver=solver):
            label = rec.element_label
            for name, outcome in rec.flags.items():
                report.record(name, outcome, gid, label, f"(gp {rec.gp_before} -> {rec.gp_after})")
            try:
                xu, xv = split_gp_set_on_edge_removal(g, rec.element, cert.witness)
                ok = max(len(xu), len(xv)) >= math.ceil(gp_g / 2)
                report.check("edge_split", ok, gid, label)
            except AssertionError as exc:
                report.check("edge_split", False, gid, label, str(exc))

    for mask in _subset_samples(g, [cert.mask]):
        same = is_general_position(d, mask) == check_characterization(g, d, mask)[0]
        report.check("characterization", same, gid, str(sorted(bits(mask))))

    if g.m == g.n - 1 and g.n >= 2:
        report.check("tree_leaves", gp_g == leaves_count(g), gid, detail=f"(gp {gp_g}, leaves {leaves_count(g)})")
    else:
        report.record("tree_leaves", NA)

    diam = diameter(g, d)
    report.check("order_diameter", gp_g <= g.n - diam + 1, gid, detail=f"(gp {gp_g}, n {g.n}, diam {diam})")

    path_cover = greedy_isometric_path_cover(g, d)
    for name, cover in (
        ("blocks", block_cover(g)),
        ("geodesics", CoverSpec(tuple(to_mask(p) for p in path_cover.paths))),
    ):
        bound = isometric_cover_bound(g, cover)
        report.check("cover_bound", gp_g <= bound, gid, name, f"(gp {gp_g}, bound {bound})")

    if g.n <= PATH_COVER_MAX_N:
        ip = isometric_path_number_exact(g)
        report.check("path_cover_bound", gp_g <= 2 * ip, gid, detail=f"(gp {gp_g}, ip {ip})")
    else:
        report.record("path_cover_bound", NA)


def theorem_audit(corpus: Iterable, workers: int = 1, progress: Callable[[str], None] | None = None) -> AuditReport:
    """Audit a stream of graphs.

    Items may be bare graphs or ``(label, graph_or_error)`` pairs; errors are
    recorded as parse failures and the run continues.
    """
    report = AuditReport()
    for idx, item in enumerate(corpus):
        gid, g = item if isinstance(item, tuple) else (str(idx), item)
        if isinstance(g, Exception):
            report.parse_errors.append((gid, str(g)))
            continue
        if not is_connected(g):
            report.skipped.append(gid)
            continue
        audit_graph(g, gid, report, workers=workers)
        if progress:
            progress(gid)
    return report


def random_corpus(samples: int, seed: int, max_n: int, p: float | None = None, min_n: int = 3):
    """Seeded connected graphs; ``n`` uniform on ``[min_n, max_n]`` and ``p`` uniform on [0.2, 0.8) unless fixed."""
    if max_n < min_n:
        raise GraphError(f"max-n must be at least {min_n}")
    for i in range(samples):
        rng = SplitMix64(derive_seed(seed, i))
        n = min_n + rng.below(max_n - min_n + 1)
        prob = p if p is not None else 0.2 + 0.6 * rng.random()
        yield f"sample{i}", random_connected_graph(n, prob, rng.next())


def tree_corpus(count: int, seed: int, min_n: int = 2, max_n: int = 20):
    for i in range(count):
        rng = SplitMix64(derive_seed(seed, i))
        n = min_n + rng.below(max_n - min_n + 1)
        yield f"tree{i}", random_tree(n, rng.next())


@dataclass
class Claim:
    name: str
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def __str__(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} {self.name}: expected {self.expected}, observed {self.observed}"


def _gp(g: Graph) -> int:
    return gp_number(g).value


def _gp_minus_vertex(g: Graph, x: int) -> int:
    return _gp(delete_vertex(g, x)[0])


def family_claims() -> Iterator[Claim]:
    """Every exact value reproduced from the constructions, as expected/observed pairs."""
    g = family("petersen")
    yield Claim("petersen gp", 6, _gp(g))
    yield Claim("petersen gp(P-x) for all x", [5] * 10, [_gp_minus_vertex(g, x) for x in range(10)])
    yield Claim("petersen diam(P-x) for all x", [3] * 10, [diameter(delete_vertex(g, x)[0]) for x in range(10)])

    for n in (3, 4, 5):
        g, lm = generate(FamilySpec("Hn", (n,)))
        yield Claim(f"Hn({n}) gp", 2 * n + 1, _gp(g))
        yield Claim(f"Hn({n}) gp(-x)", 3 * n - 1, _gp_minus_vertex(g, lm["x"]))

    for k in (2, 3, 4):
        g, lm = generate(FamilySpec("Gk", (k,)))
        yield Claim(f"Gk({k}) gp", 2 * k, _gp(g))
        yield Claim(f"Gk({k}) gp(-z2)", 3 * k - 2, _gp_minus_vertex(g, lm["z2"]))

    for n in range(4, 14):
        g, lm = generate(FamilySpec("fan", (n,)))
        yield Claim(f"fan({n}) gp", math.ceil(2 * (n + 1) / 3), _gp(g))
        yield Claim(f"fan({n}) gp(-hub)", 2, _gp_minus_vertex(g, lm["hub"]))
    for n in (8, 11):
        g, lm = generate(FamilySpec("fan", (n,)))
        yield Claim(f"fan({n}) gp(-e)", _gp(g) - 1, _gp(delete_edge(g, lm["e"])))

    for n in range(2, 7):
        g = family("star_subdivision", n)
        yield Claim(f"star_subdivision({n}) gp", n, _gp(g))
        yield Claim(f"star_subdivision({n}) gp(-center)", 2 * n, _gp_minus_vertex(g, 0))

    g = family("clique_amalgam", 3, 3, 2)
    yield Claim("clique_amalgam(3,3,2) gp", 5, _gp(g))
    yield Claim("clique_amalgam(3,3,2) gp(-x), x non-cut", [4] * (g.n - 1), [_gp_minus_vertex(g, x) for x in range(1, g.n)])

    g = family("complete_multipartite", 4, 2, 2)
    yield Claim("K_{4,2,2} gp", 4, _gp(g))
    yield Claim("K_{4,2,2} gp(-x), x outside 4-part", [4] * 4, [_gp_minus_vertex(g, x) for x in range(4, 8)])
    for n in range(2, 6):
        for m in range(n, 6):
            g = family("complete_bipartite", n, m)
            yield Claim(f"K_{{{n},{m}}} gp", m, _gp(g))
            yield Claim(f"K_{{{n},{m}}} gp(-x), x smaller side", [m] * n, [_gp_minus_vertex(g, x) for x in range(n)])

    for n in (2, 3):
        for m, value in ((4, 2 * n), (5, 3 * n)):
            g = family("strong_kn_cm", n, m)
            yield Claim(f"K_{n} x C_{m} gp", value, _gp(g))
            yield Claim(f"K_{n} x C_{m} gp(-x) for all x", [value] * g.n, [_gp_minus_vertex(g, x) for x in range(g.n)])

    for n in range(3, 6):
        for m in range(3, 6):
            yield Claim(f"grid({n},{m}) gp", 4, _gp(family("grid", n, m)))

    k = 3
    for name, before, after in (("Gk_prime", 4 * k, 2 * k), ("Gk_dprime", 2 * k, 4 * k)):
        g, lm = generate(FamilySpec(name, (k,)))
        yield Claim(f"{name}({k}) gp", before, _gp(g))
        yield Claim(f"{name}({k}) gp(-e)", after, _gp(delete_edge(g, lm["e"])))

    for m in range(3, 7):
        g, lm = generate(FamilySpec("Gm_gadget", (m,)))
        yield Claim(f"Gm_gadget({m}) gp", m, _gp(g))
        yield Claim(f"Gm_gadget({m}) gp(-e)", m + 1, _gp(delete_edge(g, lm["e"])))

    h = family("grid", 3, 3)
    alpha, _ = independence_number(h)
    cone, lm = generate(FamilySpec("cone_over_mis", base=h))
    yield Claim("grid(3,3) independence number", 5, alpha)
    yield Claim("cone over grid(3,3): gp >= alpha", True, _gp(cone) >= alpha)
    yield Claim("cone over grid(3,3): gp(-apex)", 4, _gp_minus_vertex(cone, lm["apex"]))


def suite_graphs() -> Iterator[tuple[str, Graph]]:
    """The connected family instances behind ``family_claims``, for the theorem audit."""
    specs = [("petersen", ())]
    specs += [("Hn", (n,)) for n in (3, 4, 5)]
    specs += [("Gk", (k,)) for k in (2, 3, 4)]
    specs += [("fan", (n,)) for n in range(4, 14)]
    specs += [("star_subdivision", (n,)) for n in range(2, 7)]
    specs += [("clique_amalgam", (3, 3, 2)), ("complete_multipartite", (4, 2, 2))]
    specs += [("complete_bipartite", (n, m)) for n in range(2, 6) for m in range(n, 6)]
    specs += [("strong_kn_cm", (n, m)) for n in (2, 3) for m in (4, 5)]
    specs += [("grid", (n, m)) for n in range(3, 6) for m in range(3, 6)]
    specs += [("Gk_prime", (3,)), ("Gk_dprime", (3,))]
    specs += [("Gm_gadget", (m,)) for m in range(3, 7)]
    for name, params in specs:
        label = name + ("(" + ",".join(map(str, params)) + ")" if params else "")
        yield label, family(name, *params)
    yield "cone_over_mis(grid(3,3))", family("cone_over_mis", base=family("grid", 3, 3))
