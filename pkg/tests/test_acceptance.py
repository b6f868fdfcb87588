"""Acceptance gate: one test per criterion, each with its own time limit.

Run with ``pytest tests/test_acceptance.py -v`` (the PASS/FAIL lines appear in
the terminal summary) or directly as ``python3 tests/test_acceptance.py``.
Values are asserted exactly as stated; nothing is relaxed to make a line green.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gposition.audit import suite_graphs, random_corpus, theorem_audit, tree_corpus  # noqa: E402
from gposition.codecs import read_g6_stream  # noqa: E402
from gposition.families import FamilySpec, family, generate  # noqa: E402
from gposition.gp import brute_force_gp, gp_number, independence_number  # noqa: E402
from gposition.graph import delete_edge, delete_vertex, diameter  # noqa: E402

CONNECTED_UPTO6 = Path(__file__).parent / "data" / "connected_upto6.g6"
RANDOM_SAMPLES, RANDOM_SEED, RANDOM_MAX_N = 500, 2024, 10
TREES, TREE_SEED = 200, 7


@dataclass
class Outcome:
    number: int
    title: str
    limit: float
    parts: list[tuple[str, object, object]] = field(default_factory=list)
    elapsed: float = 0.0

    def expect(self, name: str, expected, observed) -> None:
        self.parts.append((name, expected, observed))

    @property
    def failed_parts(self) -> list[tuple[str, object, object]]:
        return [p for p in self.parts if p[1] != p[2]]

    @property
    def passed(self) -> bool:
        return not self.failed_parts and self.elapsed < self.limit

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        text = f"{mark} criterion {self.number:2d} ({self.title}): {len(self.parts)} checks in {self.elapsed:.2f}s (limit {self.limit:g}s)"
        if self.elapsed >= self.limit:
            text += " -- too slow"
        for name, expected, observed in self.failed_parts:
            text += f" -- {name}: expected {expected}, observed {observed}"
        return text


RESULTS: dict[int, Outcome] = {}
CRITERIA = {}


def criterion(number: int, title: str, limit: float):
    def register(fn):
        CRITERIA[number] = (title, limit, fn)
        return fn

    return register


def gp(g) -> int:
    return gp_number(g).value


def gp_minus(g, x) -> int:
    return gp(delete_vertex(g, x)[0])


def gen(name, *params):
    return generate(FamilySpec(name, params))


@criterion(1, "Petersen", 1)
def petersen(o: Outcome) -> None:
    g = family("petersen")
    o.expect("gp(P)", 6, gp(g))
    for x in range(10):
        h = delete_vertex(g, x)[0]
        o.expect(f"gp(P-{x})", 5, gp(h))
        o.expect(f"diam(P-{x})", 3, diameter(h))


@criterion(2, "H_n", 10)
def hn(o: Outcome) -> None:
    for n in (3, 4, 5):
        g, lm = gen("Hn", n)
        o.expect(f"gp(H_{n})", 2 * n + 1, gp(g))
        o.expect(f"gp(H_{n}-x)", 3 * n - 1, gp_minus(g, lm["x"]))


@criterion(3, "G_k", 10)
def gk(o: Outcome) -> None:
    for k in (2, 3, 4):
        g, lm = gen("Gk", k)
        o.expect(f"gp(G_{k})", 2 * k, gp(g))
        o.expect(f"gp(G_{k}-z2)", 3 * k - 2, gp_minus(g, lm["z2"]))


@criterion(4, "fans", 5)
def fans(o: Outcome) -> None:
    for n in range(4, 14):
        g, lm = gen("fan", n)
        o.expect(f"gp(F_{n}) = ceil(2(n+1)/3)", math.ceil(2 * (n + 1) / 3), gp(g))
        o.expect(f"gp(F_{n}-hub)", 2, gp_minus(g, lm["hub"]))
    for n in (8, 11):
        g, lm = gen("fan", n)
        o.expect(f"gp(F_{n}) - gp(F_{n}-e)", 1, gp(g) - gp(delete_edge(g, lm["e"])))


@criterion(5, "subdivided stars", 2)
def stars(o: Outcome) -> None:
    for n in range(2, 7):
        g, lm = gen("star_subdivision", n)
        o.expect(f"gp(S(K_1,{n}))", n, gp(g))
        o.expect(f"gp(S(K_1,{n})-center)", 2 * n, gp_minus(g, lm["center"]))


@criterion(6, "clique amalgam", 2)
def amalgam(o: Outcome) -> None:
    g, lm = gen("clique_amalgam", 3, 3, 2)
    o.expect("gp", 5, gp(g))
    for x in range(g.n):
        if x != lm["cut"]:
            o.expect(f"gp(G-{x})", 4, gp_minus(g, x))


@criterion(7, "complete multipartite", 2)
def multipartite(o: Outcome) -> None:
    g = family("complete_multipartite", 4, 2, 2)
    o.expect("gp(K_4,2,2)", 4, gp(g))
    for x in range(4, 8):
        o.expect(f"gp(K_4,2,2-{x})", 4, gp_minus(g, x))
    for n in range(2, 6):
        for m in range(n, 6):
            g = family("complete_bipartite", n, m)
            o.expect(f"gp(K_{n},{m})", m, gp(g))
            for x in range(n):
                o.expect(f"gp(K_{n},{m}-{x})", m, gp_minus(g, x))


@criterion(8, "strong products", 30)
def strong(o: Outcome) -> None:
    for n in (2, 3):
        for m, value in ((4, 2 * n), (5, 3 * n)):
            g = family("strong_kn_cm", n, m)
            o.expect(f"gp(K_{n} x C_{m})", value, gp(g))
            for x in range(g.n):
                o.expect(f"gp(K_{n} x C_{m} - {x})", value, gp_minus(g, x))


@criterion(9, "grids", 30)
def grids(o: Outcome) -> None:
    for n in range(3, 6):
        for m in range(3, 6):
            o.expect(f"gp(P_{n} x P_{m})", 4, gp(family("grid", n, m)))


@criterion(10, "edge gadgets k=3", 120)
def edge_gadgets(o: Outcome) -> None:
    k = 3
    g, lm = gen("Gk_prime", k)
    o.expect("gp(G_k')", 4 * k, gp(g))
    o.expect("gp(G_k'-e)", 2 * k, gp(delete_edge(g, lm["e"])))
    g, lm = gen("Gk_dprime", k)
    o.expect("gp(G_k'')", 2 * k, gp(g))
    o.expect("gp(G_k''-e)", 4 * k, gp(delete_edge(g, lm["e"])))


@criterion(11, "G_m gadget", 2)
def gm(o: Outcome) -> None:
    for m in range(3, 7):
        g, lm = gen("Gm_gadget", m)
        o.expect(f"gp(G_{m})", m, gp(g))
        o.expect(f"gp(G_{m}-e)", m + 1, gp(delete_edge(g, lm["e"])))


def connected_stream():
    with open(CONNECTED_UPTO6) as fh:
        return [(f"conn6:{ln}", g) for ln, g in read_g6_stream(fh)]


@criterion(12, "property audit", 300)
def property_audit(o: Outcome) -> None:
    small = theorem_audit(connected_stream())
    o.expect("n<=6 corpus: graphs audited", 143, small.graphs)
    o.expect("n<=6 corpus: violations", [], [str(v) for v in small.violations])
    sampled = theorem_audit(random_corpus(RANDOM_SAMPLES, RANDOM_SEED, RANDOM_MAX_N))
    o.expect("random corpus: graphs audited", RANDOM_SAMPLES, sampled.graphs)
    o.expect("random corpus: violations", [], [str(v) for v in sampled.violations])
    trees = theorem_audit(tree_corpus(TREES, TREE_SEED))
    o.expect("random trees: graphs audited", TREES, trees.graphs)
    o.expect("random trees: violations", [], [str(v) for v in trees.violations])
    o.expect("random trees: tree law checked", TREES, trees.tallies["tree_leaves"].checked)
    # every named check must have actually fired somewhere
    idle = sorted(
        name
        for name in small.tallies
        if small.tallies[name].checked + sampled.tallies[name].checked + trees.tallies[name].checked == 0
    )
    o.expect("checks never exercised", [], idle)


@criterion(13, "oracle equivalence", 120)
def oracle(o: Outcome) -> None:
    corpus = [g for _, g in connected_stream()]
    corpus += [g for _, g in random_corpus(RANDOM_SAMPLES, RANDOM_SEED, RANDOM_MAX_N)]
    corpus += [g for _, g in tree_corpus(TREES, TREE_SEED)]
    corpus += [g for _, g in suite_graphs()]
    corpus = [g for g in corpus if g.n <= 12]
    mismatches = [g for g in corpus if gp_number(g).value != brute_force_gp(g).value]
    o.expect("graphs compared > 800", True, len(corpus) > 800)
    o.expect("mismatches", 0, len(mismatches))


@criterion(14, "negative-result witness", 10)
def negative(o: Outcome) -> None:
    report = theorem_audit(suite_graphs())
    fan_hubs = [w for w in report.negative_witnesses if w[0].startswith("fan(") and w[1] == int(w[0][4:-1])]
    o.expect("fan hub witnesses gp(G-x) < gp(G)-1 found", True, bool(fan_hubs))
    h = family("grid", 3, 3)
    alpha, _ = independence_number(h)
    cone, lm = generate(FamilySpec("cone_over_mis", base=h))
    gp_cone = gp(cone)
    o.expect("alpha(grid(3,3))", 5, alpha)
    o.expect("gp(grid(3,3))", 4, gp(h))
    o.expect("gp(cone) >= alpha", True, gp_cone >= alpha)
    o.expect("gp(cone - apex)", 4, gp_minus(cone, lm["apex"]))
    o.expect("gp(cone - apex) < gp(cone)", True, gp_minus(cone, lm["apex"]) < gp_cone)


def evaluate(number: int) -> Outcome:
    title, limit, fn = CRITERIA[number]
    outcome = Outcome(number, title, limit)
    start = time.perf_counter()
    fn(outcome)
    outcome.elapsed = time.perf_counter() - start
    RESULTS[number] = outcome
    return outcome


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"criterion{n:02d}")
def test_criterion(number):
    outcome = evaluate(number)
    assert outcome.passed, outcome.line()


if __name__ == "__main__":
    outcomes = [evaluate(n) for n in sorted(CRITERIA)]
    for outcome in outcomes:
        print(outcome.line())
    sys.exit(0 if all(o.passed for o in outcomes) else 1)
