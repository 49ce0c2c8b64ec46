from itertools import combinations, product

import networkx as nx
import pytest

from truemper.oracle import find_k23_model, has_clique_cutset, k23_free_by_separators
from truemper.patterns import (
    ConfigSpec,
    co_domino,
    cube,
    make_config,
    make_gk,
    make_named,
    net,
    plant,
    random_chordal,
    random_graph,
)
from truemper.witness import is_broken_wheel, validate_witness


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def symmetric(g):
    return all((g.adj[u] >> v & 1) == (g.adj[v] >> u & 1) for u in range(g.n) for v in range(g.n)) \
        and all(not g.adj[v] >> v & 1 for v in range(g.n))


def config_grid():
    for kind in ("theta", "pyramid", "prism"):
        for ls in product(range(1, 5), repeat=3):
            spec = ConfigSpec(kind, ls)
            try:
                spec.check()
            except ValueError:
                continue
            yield spec
    for k in range(3, 7):
        for ls in product(range(1, 4), repeat=k):
            if sum(l >= 2 for l in ls) >= 2 and sum(ls) <= 12:
                yield ConfigSpec("broken-wheel", ls)


GRID = list(config_grid())


class TestNamed:
    def test_co_domino_edges(self):
        a1, a2, v1, v2, v3, v4 = range(6)
        expect = {(v1, v2), (v2, v3), (v3, v4), (v4, v1), (a1, v1), (a1, v2), (a2, v3), (a2, v4)}
        g = co_domino()
        assert g.n == 6 and edge_set(g) == {frozenset(e) for e in expect}

    def test_net_edges(self):
        a1, a2, a3, v1, v2, v3 = range(6)
        expect = {(v1, v2), (v2, v3), (v3, v1), (a1, v1), (a2, v2), (a3, v3)}
        g = net()
        assert g.n == 6 and edge_set(g) == {frozenset(e) for e in expect}

    def test_cube(self):
        g = cube()
        assert (g.n, g.m) == (8, 12)
        assert all(g.degree(v) == 3 for v in range(8))
        assert nx.is_bipartite(to_nx(g))
        assert g.neighbors(6) == {0, 2, 4} and g.neighbors(7) == {1, 3, 5}

    def test_families(self):
        assert make_named("c7").m == 7
        assert make_named("k5").m == 10
        assert make_named("p4").m == 3
        assert make_named("k23").m == 6

    def test_unknown(self):
        with pytest.raises(ValueError):
            make_named("dodecahedron")


class TestConfigs:
    def test_theta_222_is_k23(self):
        g, _ = make_config(ConfigSpec("theta", (2, 2, 2)))
        assert nx.is_isomorphic(to_nx(g), nx.complete_bipartite_graph(2, 3))

    def test_prism_111(self):
        g, w = make_config(ConfigSpec("prism", (1, 1, 1)))
        assert g.n == 6 and g.m == 9 and not w.is_long
        assert not validate_witness(g, w)  # only long prisms are witnesses

    def test_broken_wheel_122(self):
        g, w = make_config(ConfigSpec("broken-wheel", (1, 2, 2)))
        assert g.n == 6
        assert edge_set(g.induced(range(1, 6))[0]) == edge_set(make_named("c5"))
        assert g.neighbors(0) == {1, 2, 4}
        assert is_broken_wheel(g, range(6))[0]

    @pytest.mark.parametrize("spec", [ConfigSpec("theta", (1, 2, 2)), ConfigSpec("pyramid", (1, 1, 2)),
                                      ConfigSpec("broken-wheel", (1, 1, 2)), ConfigSpec("prism", (1, 1)),
                                      ConfigSpec("square", (1, 1, 1))])
    def test_invalid_specs(self, spec):
        with pytest.raises(ValueError):
            make_config(spec)

    @pytest.mark.parametrize("spec", GRID, ids=lambda s: f"{s.kind}{s.lengths}")
    def test_grid_valid(self, spec):
        g, w = make_config(spec)
        assert symmetric(g)
        assert set(range(g.n)) == set(w.vertices())
        if spec.kind == "prism" and max(spec.lengths) < 2:
            return
        assert validate_witness(g, w)

    @pytest.mark.parametrize("spec", [s for s in GRID if s.kind != "broken-wheel" or len(s.lengths) <= 4][::4],
                             ids=lambda s: f"{s.kind}{s.lengths}")
    def test_grid_contains_k23(self, spec):
        g, _ = make_config(spec)
        long = spec.kind != "prism" or max(spec.lengths) >= 2
        assert (find_k23_model(g) is not None) == long
        assert k23_free_by_separators(g) == (not long)


class TestGk:
    def test_g1_is_c4(self):
        assert edge_set(make_gk(1)) == {frozenset(e) for e in [(0, 1), (1, 3), (3, 2), (2, 0)]}

    def test_g2_edges(self):
        g = make_gk(2)
        assert (g.n, g.m) == (8, 17)

    def test_g3_independent_set(self):
        g = make_gk(3)
        s = [0, 1, 2, 9]  # A together with d_1
        assert g.n == 12
        assert not any(g.has_edge(u, v) for u, v in combinations(s, 2))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_edge_rules(self, k):
        g = make_gk(k)
        for u, v in combinations(range(4 * k), 2):
            su, sv = u // k, v // k
            iu, iv = u % k, v % k
            if su == sv:
                expect = su != 0
            elif (su, sv) == (0, 2) or (su, sv) == (1, 3):
                expect = True
            elif (su, sv) in ((0, 1), (2, 3)):
                expect = iu == iv
            elif (su, sv) == (1, 2):
                expect = iu != iv
            else:
                expect = False
            assert g.has_edge(u, v) == expect, (u, v)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_no_clique_cutset_no_k23(self, k):
        g = make_gk(k)
        assert not has_clique_cutset(g)
        assert k23_free_by_separators(g)
        assert find_k23_model(g) is None

    def test_bad_k(self):
        with pytest.raises(ValueError):
            make_gk(0)


class TestRandom:
    def test_empty(self):
        assert random_graph(0, 0.5, 1).n == 0

    def test_complete(self):
        assert random_graph(10, 1.0, 3).m == 45

    def test_deterministic(self):
        assert random_graph(12, 0.4, 9) == random_graph(12, 0.4, 9)
        assert random_chordal(20, 9) == random_chordal(20, 9)

    @pytest.mark.parametrize("n", [0, 1, 5, 12, 30])
    def test_chordal(self, n):
        for seed in range(10):
            g = random_chordal(n, seed)
            assert symmetric(g)
            assert nx.is_chordal(to_nx(g))


class TestPlant:
    def test_empty_background(self):
        g, _ = make_config(ConfigSpec("theta", (2, 2, 2)))
        assert plant(ConfigSpec("theta", (2, 2, 2)), 0, 0.0, 5) == g

    def test_isolated_background(self):
        base, _ = make_config(ConfigSpec("prism", (2, 1, 1)))
        g = plant(ConfigSpec("prism", (2, 1, 1)), 5, 0.0, 5)
        assert g.n == base.n + 5 and g.m == base.m
        assert g.induced(range(base.n))[0] == base

    def test_broken_wheel_example(self):
        g = plant(ConfigSpec("broken-wheel", (1, 2, 2)), 6, 0.3, 42)
        assert g.n == 12
        assert find_k23_model(g) is not None

    @pytest.mark.parametrize("spec", GRID[::7], ids=lambda s: f"{s.kind}{s.lengths}")
    def test_stays_induced(self, spec):
        base, w = make_config(spec)
        for seed in range(5):
            g = plant(spec, 6, 0.5, seed)
            assert symmetric(g)
            assert g.induced(range(base.n))[0] == base
            if validate_witness(base, w):
                assert validate_witness(g, w)
