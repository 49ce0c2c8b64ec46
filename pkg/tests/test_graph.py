import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_shortest
from truemper.graph import (
    Graph,
    components,
    independence_exceeds,
    is_chordless_path,
    is_hole,
    shortest_path_avoiding,
)
from truemper.patterns import co_domino, complete, cycle


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, c in zip(pairs, chosen) if c])


class TestConstruction:
    def test_adjacency_symmetric(self):
        g = Graph(4, [(0, 1), (2, 1)])
        assert g.has_edge(1, 0) and g.has_edge(1, 2) and not g.has_edge(0, 2)
        assert g.m == 2

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            Graph(3, edges)

    def test_from_adjacency_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph.from_adjacency([0b10, 0b00])

    def test_induced_keeps_old_labels(self):
        sub, old = cycle(6).induced([5, 0, 1, 3])
        assert old == (0, 1, 3, 5)
        assert sorted(sub.edges()) == [(0, 1), (0, 3)]

    @given(graphs())
    def test_complement_involution(self, g):
        assert g.complement().complement() == g
        assert g.m + g.complement().m == g.n * (g.n - 1) // 2


class TestComponents:
    def test_two_edges(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert components(g, range(4)) == [{0, 1}, {2, 3}]

    def test_cycle_split(self):
        assert components(cycle(5), {0, 2, 3}) == [{0}, {2, 3}]

    def test_co_domino_leaves_nothing(self):
        g = co_domino()
        removed = set().union(*(g.neighbors(v) for v in (2, 3, 4, 5)))
        assert components(g, set(range(6)) - removed) == []

    def test_empty(self):
        assert components(cycle(4), []) == []

    @given(graphs(), st.data())
    def test_partition(self, g, data):
        s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
        blocks = components(g, s)
        assert set().union(*blocks) == set(s) if blocks else not s
        assert sum(len(b) for b in blocks) == len(s)
        for i, b in enumerate(blocks):
            for c in blocks[i + 1:]:
                assert not any(g.has_edge(u, v) for u in b for v in c)
        assert [min(b) for b in blocks] == sorted(min(b) for b in blocks)


class TestShortestPath:
    def test_one_side(self):
        assert shortest_path_avoiding(cycle(6), 0, 3, {1}) == (0, 5, 4, 3)

    def test_same_vertex(self):
        assert shortest_path_avoiding(Graph(8), 7, 7, set()) == (7,)

    def test_blocked(self):
        assert shortest_path_avoiding(cycle(6), 0, 3, {1, 5}) is None

    def test_tie_prefers_small_index(self):
        assert shortest_path_avoiding(cycle(6), 0, 3, set()) == (0, 1, 2, 3)

    def test_forbidden_endpoint(self):
        with pytest.raises(ValueError):
            shortest_path_avoiding(cycle(6), 0, 3, {0})

    @settings(max_examples=200)
    @given(graphs(), st.data())
    def test_matches_exhaustive_search(self, g, data):
        if g.n == 0:
            return
        s = data.draw(st.integers(0, g.n - 1))
        t = data.draw(st.integers(0, g.n - 1))
        forbidden = data.draw(st.sets(st.integers(0, g.n - 1))) - {s, t}
        p = shortest_path_avoiding(g, s, t, forbidden)
        expect = brute_shortest(g, s, t, forbidden)
        if expect is None:
            assert p is None
        else:
            assert p is not None and len(p) - 1 == expect
            assert p[0] == s and p[-1] == t
            assert all(g.has_edge(u, v) for u, v in zip(p, p[1:]))
            assert not set(p[1:-1]) & forbidden


class TestPredicates:
    def test_hole(self):
        assert is_hole(cycle(4), [0, 1, 2, 3])
        assert not is_hole(complete(3), [0, 1, 2])
        assert not is_hole(complete(4), [0, 1, 2, 3])
        assert not is_hole(cycle(6), [0, 1, 2, 3])

    def test_chordless_path(self):
        assert is_chordless_path(Graph(2, [(0, 1)]), [0, 1])
        assert not is_chordless_path(complete(3), [0, 1, 2])
        assert is_chordless_path(cycle(6), [0, 1, 2, 3])
        assert not is_chordless_path(cycle(6), [0, 2])
        assert not is_chordless_path(cycle(6), [0, 1, 0])

    def test_independence(self):
        assert not independence_exceeds(complete(5), range(5), 1)
        assert independence_exceeds(Graph(3), {0, 1, 2}, 2)
        assert not independence_exceeds(Graph(4, [(0, 1), (2, 3)]), range(4), 2)

    @given(graphs(max_n=7), st.integers(0, 4))
    def test_independence_brute(self, g, k):
        from itertools import combinations

        expect = any(not any(g.has_edge(u, v) for u, v in combinations(c, 2))
                     for c in combinations(range(g.n), k + 1))
        assert independence_exceeds(g, range(g.n), k) == expect
