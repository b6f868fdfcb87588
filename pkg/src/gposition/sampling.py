"""Seeded graph samplers.

All randomness comes from SplitMix64 (Steele, Lea, Flood 2014) so that a
corpus is reproducible from ``(n, p, seed)`` in any language:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic modulo 2**64.  Derived quantities:

* ``random()``   = ``next() >> 11`` scaled by ``2**-53`` (uniform on [0, 1)).
* ``below(k)``   = ``(next() * k) >> 64`` (multiply-high range reduction).

``random_connected_graph`` visits the pairs ``(u, v)``, ``u < v`` in
lexicographic order and keeps each one when ``random() < p``; disconnected
draws are rejected and the same generator keeps running.  ``random_tree``
draws a Pruefer sequence of ``n - 2`` labels with ``below(n)`` and decodes it
with the usual smallest-leaf rule, which gives uniformly random labelled trees.
"""

from __future__ import annotations

import heapq

from .errors import GraphError
from .graph import Graph, build_graph, is_connected

MASK64 = (1 << 64) - 1
MAX_REJECTIONS = 10_000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        return (self.next() * k) >> 64


def derive_seed(seed: int, index: int) -> int:
    """Independent child seed for the ``index``-th item of a seeded batch."""
    rng = SplitMix64(seed ^ ((index * 0xD1B54A32D192ED03) & MASK64))
    return rng.next()


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    if n < 1:
        raise GraphError("n must be at least 1")
    if not 0 < p <= 1:
        raise GraphError("edge probability must lie in (0, 1]")
    rng = SplitMix64(seed)
    for _ in range(MAX_REJECTIONS):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        if is_connected(g):
            return g
    raise GraphError(f"no connected G({n}, {p}) after {MAX_REJECTIONS} draws; raise p")


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise GraphError("n must be at least 1")
    if n == 1:
        return build_graph(1, [])
    rng = SplitMix64(seed)
    seq = [rng.below(n) for _ in range(n - 2)]
    return build_graph(n, prufer_decode(seq, n))
