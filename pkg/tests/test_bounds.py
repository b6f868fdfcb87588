import networkx as nx
import pytest

from gposition.bounds import (
    CoverSpec,
    PathCover,
    block_cover,
    geodesic_vertex_sets,
    greedy_isometric_path_cover,
    is_isometric_subgraph,
    isometric_cover_bound,
    isometric_path_number_exact,
    verify_isometric_path_cover,
)
from gposition.errors import CapExceeded, GraphError
from gposition.families import FamilySpec, family, generate
from gposition.gp import gp_number
from gposition.graph import bits, build_graph

from conftest import to_nx


def gk3():
    return generate(FamilySpec("Gk", (3,)))[0]


class TestIsometric:
    def test_cycle_paths(self):
        c6 = family("cycle", 6)
        assert is_isometric_subgraph(c6, {0, 1, 2, 3})
        assert not is_isometric_subgraph(c6, {0, 1, 2, 3, 4})

    def test_gk_core(self):
        # x's, y's and w
        assert is_isometric_subgraph(gk3(), set(range(7)))

    def test_disconnected_part(self):
        assert not is_isometric_subgraph(family("path", 3), {0, 2})

    def test_empty_part(self):
        with pytest.raises(GraphError):
            is_isometric_subgraph(family("path", 3), set())

    def test_geodesic_subpaths_are_isometric(self):
        g = family("petersen")
        for s in geodesic_vertex_sets(g):
            assert is_isometric_subgraph(g, s)


class TestCoverBound:
    def test_path_by_itself(self):
        assert isometric_cover_bound(family("path", 6), CoverSpec.of(range(6))) == 2

    def test_c6_two_paths(self):
        bound = isometric_cover_bound(family("cycle", 6), CoverSpec.of({0, 1, 2, 3}, {3, 4, 5, 0}))
        assert bound == 4 >= gp_number(family("cycle", 6)).value == 3

    def test_hn(self):
        g, lm = generate(FamilySpec("Hn", (3,)))
        y = set(range(6))
        part1 = y | {lm["x"]}
        part2 = {lm["x'"], *range(8, 11), lm["y_n+1"]}
        assert is_isometric_subgraph(g, part1) and is_isometric_subgraph(g, part2)
        assert isometric_cover_bound(g, CoverSpec.of(part1, part2)) == 10
        assert gp_number(g).value == 7

    def test_missing_vertices_named(self):
        with pytest.raises(GraphError, match=r"\[4, 5\]"):
            isometric_cover_bound(family("cycle", 6), CoverSpec.of({0, 1, 2, 3}))

    def test_non_isometric_part_named(self):
        with pytest.raises(GraphError, match=r"part 0 .*d\(0,4\)"):
            isometric_cover_bound(family("cycle", 6), CoverSpec.of({0, 1, 2, 3, 4}, {5}))

    def test_block_cover_is_valid(self, connected6, random_small):
        for g in [*connected6, *random_small]:
            cover = block_cover(g)
            assert isometric_cover_bound(g, cover) >= gp_number(g).value

    def test_blocks_match_networkx(self, random_small):
        for g in random_small:
            ours = sorted(sorted(bits(b)) for b in block_cover(g).parts)
            theirs = sorted(sorted(c) for c in nx.biconnected_components(to_nx(g)))
            assert ours == theirs

    def test_block_cover_isolated(self):
        g = build_graph(4, [(0, 1), (1, 2)])
        assert sorted(block_cover(g).parts) == [0b0011, 0b0110, 0b1000]


class TestPathCover:
    def test_gk_psi(self):
        g = gk3()
        psi = PathCover.of((0, 6, 3, 7), (1, 6, 4, 8, 9), (2, 6, 5, 8, 10))
        assert verify_isometric_path_cover(g, psi) == 3
        assert gp_number(g).value <= 6

    def test_single_path(self):
        assert verify_isometric_path_cover(family("path", 9), PathCover.of(range(9))) == 1

    def test_cycle(self):
        c6 = family("cycle", 6)
        assert verify_isometric_path_cover(c6, PathCover.of((0, 1, 2, 3), (3, 4, 5, 0))) == 2

    @pytest.mark.parametrize(
        "paths, message",
        [
            ([(0, 2, 3)], "not a path"),
            ([(0, 1, 1)], "not a path"),
            ([(0, 1, 2, 3, 4)], "not a geodesic"),
            ([(0, 1, 2, 3)], r"uncovered"),
            ([()], "empty"),
        ],
    )
    def test_rejections(self, paths, message):
        with pytest.raises(GraphError, match=message):
            verify_isometric_path_cover(family("cycle", 6), PathCover.of(*paths))

    def test_greedy_cover_validates(self, connected6, random_small):
        for g in [*connected6, *random_small]:
            pc = greedy_isometric_path_cover(g)
            assert gp_number(g).value <= 2 * verify_isometric_path_cover(g, pc)


class TestIsometricPathNumber:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_paths(self, n):
        assert isometric_path_number_exact(family("path", n)) == 1

    def test_examples(self):
        assert isometric_path_number_exact(family("complete_bipartite", 1, 4)) == 2
        assert isometric_path_number_exact(family("cycle", 6)) == 2
        assert isometric_path_number_exact(family("petersen")) == 4

    def test_gp_at_most_twice_ip(self, connected6, random_small):
        for g in [*connected6, *random_small]:
            if g.n <= 9:
                assert gp_number(g).value <= 2 * isometric_path_number_exact(g)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            isometric_path_number_exact(family("path", 11))

    def test_geodesic_sets_match_networkx(self):
        g = family("grid", 3, 3)
        G = to_nx(g)
        expected = {1 << v for v in range(9)}
        for a in range(9):
            for b in range(a + 1, 9):
                for p in nx.all_shortest_paths(G, a, b):
                    expected.add(sum(1 << v for v in p))
        assert geodesic_vertex_sets(g) == expected
