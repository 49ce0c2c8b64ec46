"""Shared generators and brute-force references for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from truemper.graph import Graph, bits, components_mask, to_mask
from truemper.oracle.configs import find_long_prism, find_pyramid, find_theta
from truemper.patterns import make_wheel

# wheel profiles whose plain wheel has no pyramid, theta or long prism
THREE_PC_FREE_WHEELS = [
    (1, 2, 1, 2), (1, 3, 1, 3), (1, 4, 1, 2), (1, 4, 1, 4), (2, 2, 2), (1, 1, 2, 1, 2),
    (2, 3, 2), (1, 1, 3, 1, 1, 3), (2, 2, 2, 2), (1, 2, 1, 2, 1, 2), (2, 2, 3), (1, 3, 1, 2),
]


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def padded_wheel(profile, extra: int, rng: random.Random) -> Graph:
    """A wheel plus ``extra`` vertices, each attached inside N[t] of one wheel vertex t."""
    g0, _, _ = make_wheel(profile)
    n = g0.n + extra
    edges = list(g0.edges())
    for y in range(g0.n, n):
        t = rng.randrange(g0.n)
        edges += [(w, y) for w in [t] + [w for w in g0.neighbors(t) if rng.random() < 0.6]]
        edges += [(z, y) for z in range(g0.n, y) if rng.random() < 0.4]
    return Graph(n, edges)


def three_pc_free(g: Graph) -> bool:
    return find_pyramid(g) is None and find_theta(g) is None and find_long_prism(g) is None


def stm_instances(count: int, seed: int, max_n: int = 14):
    """Random valid (g, I, C) triples for extract_stm."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, max_n)
        p = rng.choice([0.15, 0.25, 0.35, 0.5])
        g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])
        triples = [t for t in combinations(range(n), 3)
                   if not any(g.has_edge(a, b) for a, b in combinations(t, 2))]
        rng.shuffle(triples)
        for t in triples[:5]:
            imask = to_mask(t)
            comps = [c for c in components_mask(g, g.all_mask & ~imask)
                     if all(g.adj[a] & c for a in t)]
            if comps:
                out.append((g, t, tuple(bits(rng.choice(comps)))))
                break
    return out


def brute_shortest(g: Graph, s: int, t: int, forbidden) -> int | None:
    """Length of a shortest s-t path avoiding ``forbidden`` by trying every simple path."""
    forbidden = set(forbidden)
    best = None

    def walk(v, seen):
        nonlocal best
        if v == t:
            d = len(seen) - 1
            best = d if best is None else min(best, d)
            return
        for w in g.neighbors(v):
            if w not in seen and w not in forbidden:
                walk(w, seen | {w})

    walk(s, {s})
    return best
