"""Named gadgets, parametric Truemper configurations, G_k, and random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits
from .witness import BrokenWheel, Prism, Pyramid, Theta, Witness

KINDS = ("prism", "pyramid", "theta", "broken-wheel")


@dataclass(frozen=True)
class ConfigSpec:
    """``lengths`` are path lengths, or clockwise sector lengths for a broken wheel."""

    kind: str
    lengths: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))

    def check(self) -> None:
        k, ls = self.kind, self.lengths
        if k not in KINDS:
            raise ValueError(f"unknown configuration kind {k!r}")
        if k == "broken-wheel":
            if len(ls) < 3 or min(ls) < 1:
                raise ValueError("broken wheel needs >= 3 sectors of positive length")
            if sum(l >= 2 for l in ls) < 2:
                raise ValueError("broken wheel needs two sectors of length >= 2")
            return
        if len(ls) != 3 or min(ls) < 1:
            raise ValueError(f"{k} needs three positive path lengths")
        if k == "theta" and min(ls) < 2:
            raise ValueError("theta paths must have length >= 2")
        if k == "pyramid" and sum(l >= 2 for l in ls) < 2:
            raise ValueError("pyramid needs two paths of length >= 2")


def _graph(n: int, edges) -> Graph:
    return Graph(n, edges)


def _cycle_edges(vs):
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


# Co-domino: a1=0, a2=1, v1..v4 = 2..5.  Net: a1..a3 = 0..2, v1..v3 = 3..5.
CO_DOMINO_LABELS = ("a1", "a2", "v1", "v2", "v3", "v4")
NET_LABELS = ("a1", "a2", "a3", "v1", "v2", "v3")
CUBE_LABELS = ("v1", "v2", "v3", "v4", "v5", "v6", "x", "y")


def co_domino() -> Graph:
    a1, a2, v1, v2, v3, v4 = range(6)
    return _graph(6, [(v1, v2), (v2, v3), (v3, v4), (v4, v1), (a1, v1), (a1, v2), (a2, v3), (a2, v4)])


def net() -> Graph:
    a1, a2, a3, v1, v2, v3 = range(6)
    return _graph(6, [(v1, v2), (v2, v3), (v3, v1), (a1, v1), (a2, v2), (a3, v3)])


def cube() -> Graph:
    v = list(range(6))
    x, y = 6, 7
    edges = _cycle_edges(v) + [(x, v[0]), (x, v[2]), (x, v[4]), (y, v[1]), (y, v[3]), (y, v[5])]
    return _graph(8, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return _graph(n, _cycle_edges(list(range(n))))


def complete(n: int) -> Graph:
    return _graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return _graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return _graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def make_named(name: str) -> Graph:
    """Named graphs: co-domino, net, cube, k23, k4, and families like c7, k5, p4."""
    key = name.lower().replace("_", "-")
    fixed = {"co-domino": co_domino, "codomino": co_domino, "net": net, "cube": cube,
             "k23": lambda: complete_bipartite(2, 3), "k4": lambda: complete(4)}
    if key in fixed:
        return fixed[key]()
    for prefix, build in (("c", cycle), ("k", complete), ("p", path_graph)):
        if key.startswith(prefix) and key[1:].isdigit():
            return build(int(key[1:]))
    raise ValueError(f"unknown named graph {name!r}")


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def path(self, s: int, t: int, length: int) -> tuple[int, ...]:
        inner = [self.vertex() for _ in range(length - 1)]
        p = (s, *inner, t)
        self.edges += [(p[i], p[i + 1]) for i in range(len(p) - 1)]
        return p

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def make_config(spec: ConfigSpec) -> tuple[Graph, Witness]:
    """Exact configuration graph plus its canonical witness.

    Hubs, apex, triangles or wheel centre get the lowest labels; path interiors
    follow in declaration order.
    """
    spec.check()
    b = _Builder()
    ls = spec.lengths
    if spec.kind == "theta":
        h1, h2 = b.vertex(), b.vertex()
        paths = tuple(b.path(h1, h2, l) for l in ls)
        return b.graph(), Theta(h1, h2, paths)
    if spec.kind == "pyramid":
        apex = b.vertex()
        tri = (b.vertex(), b.vertex(), b.vertex())
        b.edges += list(combinations(tri, 2))
        paths = tuple(b.path(apex, t, l) for t, l in zip(tri, ls))
        return b.graph(), Pyramid(apex, tri, paths)
    if spec.kind == "prism":
        top = (b.vertex(), b.vertex(), b.vertex())
        bottom = (b.vertex(), b.vertex(), b.vertex())
        b.edges += list(combinations(top, 2)) + list(combinations(bottom, 2))
        paths = tuple(b.path(s, t, l) for s, t, l in zip(top, bottom, ls))
        return b.graph(), Prism(top, bottom, paths)
    g, rim, x = make_wheel(ls)
    return g, BrokenWheel(rim, x)


def make_wheel(sectors) -> tuple[Graph, tuple[int, ...], int]:
    """Wheel with centre 0 and rim 1..L; sectors listed clockwise from rim vertex 1.

    No brokenness check, so plain wheels like (1, 1, 2) can be built too.
    """
    sectors = tuple(sectors)
    if len(sectors) < 3 or min(sectors) < 1 or sum(sectors) < 4:
        raise ValueError("wheel needs >= 3 positive sectors and a rim of length >= 4")
    total = sum(sectors)
    rim = tuple(range(1, total + 1))
    edges = _cycle_edges(list(rim))
    pos = 0
    for l in sectors:
        edges.append((0, rim[pos]))
        pos += l
    return Graph(total + 1, edges), rim, 0


def make_gk(k: int) -> Graph:
    """G_k on A, B, C, D = 0..k-1, k..2k-1, 2k..3k-1, 3k..4k-1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    A = range(0, k)
    B = range(k, 2 * k)
    C = range(2 * k, 3 * k)
    D = range(3 * k, 4 * k)
    edges = []
    for X in (B, C, D):
        edges += combinations(X, 2)
    edges += [(a, c) for a in A for c in C]
    edges += [(b, d) for b in B for d in D]
    for i in range(k):
        for j in range(k):
            if i == j:
                edges += [(A[i], B[j]), (C[i], D[j])]
            else:
                edges.append((B[i], C[j]))
    return Graph(4 * k, edges)


def random_graph(n: int, p: float, seed) -> Graph:
    """Erdős–Rényi G(n, p)."""
    if n < 0 or not 0 <= p <= 1:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_chordal(n: int, seed) -> Graph:
    """Random chordal graph: each new vertex attaches to a clique of the current graph."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = random.Random(seed)
    adj = [0] * n
    edges = []
    for v in range(1, n):
        if rng.random() < 0.1:
            continue  # start a new component now and then
        u = rng.randrange(v)
        clique = [u]
        cand = list(bits(adj[u]))
        rng.shuffle(cand)
        for w in cand:
            if rng.random() < 0.6 and all(adj[w] >> c & 1 for c in clique):
                clique.append(w)
        for c in clique:
            adj[v] |= 1 << c
            adj[c] |= 1 << v
            edges.append((c, v))
    return Graph(n, edges)


def plant(spec: ConfigSpec, background_n: int, edge_prob: float, seed, relabel: bool = False) -> Graph:
    """Embed ``make_config(spec)`` into a random background as an induced subgraph.

    The configuration keeps labels 0..m-1 unless ``relabel`` shuffles all labels.
    Each background vertex touches the configuration with probability
    ``edge_prob``, and then only inside the closed neighbourhood of one
    configuration vertex.
    """
    if background_n < 0 or not 0 <= edge_prob <= 1:
        raise ValueError("need background_n >= 0 and 0 <= edge_prob <= 1")
    base, _ = make_config(spec)
    rng = random.Random(seed)
    m = base.n
    n = m + background_n
    edges = list(base.edges())
    for u, v in combinations(range(m, n), 2):
        if rng.random() < edge_prob:
            edges.append((u, v))
    for y in range(m, n):
        if rng.random() < edge_prob:
            t = rng.randrange(m)
            targets = [w for w in bits(base.adj[t] | 1 << t) if w == t or rng.random() < 0.5]
            edges += [(w, y) for w in targets]
    g = Graph(n, edges)
    if relabel:
        perm = list(range(n))
        rng.shuffle(perm)
        g = g.relabel(perm)
    return g
