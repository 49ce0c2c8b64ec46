"""Exhaustive search for pyramids, thetas, long prisms and broken wheels.

The three-path configurations share one engine: fix the anchor vertices
(hubs, apex and triangle, or two triangles), then grow three induced paths
between prescribed anchor pairs by depth-first search, rejecting any vertex
that would create an edge the configuration does not have.
"""

from __future__ import annotations

from itertools import combinations, permutations

from ..graph import Graph, bits, reach_mask
from ..witness import BrokenWheel, Prism, Pyramid, Theta, Witness, broken_wheel_at, validate_witness

CONFIG_KINDS = ("pyramid", "theta", "long-prism", "broken-wheel")


def find_config_exhaustive(g: Graph, kind: str = "any") -> Witness | None:
    """First witness of ``kind`` (or of any kind, in the order above), else None."""
    if kind == "any":
        for k in CONFIG_KINDS:
            w = find_config_exhaustive(g, k)
            if w is not None:
                return w
        return None
    search = {
        "pyramid": find_pyramid,
        "theta": find_theta,
        "long-prism": find_long_prism,
        "broken-wheel": find_broken_wheel,
    }.get(kind)
    if search is None:
        raise ValueError(f"unknown configuration kind {kind!r}")
    w = search(g)
    if w is not None and not validate_witness(g, w):
        raise AssertionError(f"exhaustive {kind} search produced an invalid witness {w}")
    return w


class _ThreePaths:
    """DFS for three paths ends[i][0] -> ends[i][1] whose union with the anchors
    induces exactly the anchor edges plus the path edges.

    Anchor-anchor adjacency is the caller's business. A pair of adjacent ends
    is joined by the bare edge; any longer path would have it as a chord.
    """

    def __init__(self, g: Graph, anchors: int, ends, ordered_firsts: bool = False):
        self.g = g
        self.adj = g.adj
        self.anchors = anchors
        self.ends = ends
        self.ordered_firsts = ordered_firsts  # symmetry breaking when paths are interchangeable

    def run(self) -> list[tuple[int, ...]] | None:
        return self._path(0, [], 0, 0)

    def _path(self, i, done, interior, nb_interior):
        if i == 3:
            return list(done)
        s, t = self.ends[i]
        if self.adj[s] >> t & 1:
            return self._path(i + 1, done + [(s, t)], interior, nb_interior)
        return self._extend(i, done, [s], interior, nb_interior, nb_interior)

    def _allowed(self, i):
        s, t = self.ends[i]
        other = self.anchors & ~(1 << s) & ~(1 << t)
        nb_other = 0
        for v in bits(other):
            nb_other |= self.adj[v]
        return self.g.all_mask & ~self.anchors & ~nb_other

    def _extend(self, i, done, cur, interior, nb_interior, nb_before_last):
        # nb_before_last: N(all interiors except cur[-1]); nb_interior includes cur[-1]
        adj = self.adj
        s, t = self.ends[i]
        last = cur[-1]
        base = self._allowed(i) & ~interior & ~nb_before_last
        if len(cur) > 1:
            base &= ~adj[s]
        cand = adj[last] & base
        if len(cur) == 1 and self.ordered_firsts and done:
            prev_first = done[-1][1]
            cand &= ~((1 << (prev_first + 1)) - 1)
        if not cand:
            return None
        # prune: t must stay reachable through vertices a later step could use
        if len(cur) > 1:
            region = base & ~adj[s]
            if not reach_mask(self.g, cand, region) & adj[t]:
                return None
        for v in bits(cand):
            vb = 1 << v
            nb_v = adj[v]
            new_interior = interior | vb
            if nb_v >> t & 1:
                path = tuple(cur) + (v, t)
                res = self._path(i + 1, done + [path], new_interior, nb_interior | nb_v)
                if res is not None:
                    return res
                continue
            res = self._extend(i, done, cur + [v], new_interior, nb_interior | nb_v, nb_interior)
            if res is not None:
                return res
        return None


def find_theta(g: Graph) -> Theta | None:
    adj = g.adj
    for a in range(g.n):
        for b in bits(g.all_mask & ~adj[a] & ~((1 << (a + 1)) - 1)):
            if adj[a].bit_count() < 3 or adj[b].bit_count() < 3:
                continue
            anchors = (1 << a) | (1 << b)
            res = _ThreePaths(g, anchors, [(a, b)] * 3, ordered_firsts=True).run()
            if res is not None:
                return Theta(a, b, tuple(res))
    return None


def _triangles(g: Graph):
    adj = g.adj
    for u in range(g.n):
        hi = adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(hi):
            for w in bits(hi & adj[v] & ~((1 << (v + 1)) - 1)):
                yield (u, v, w)


def find_pyramid(g: Graph) -> Pyramid | None:
    adj = g.adj
    for tri in _triangles(g):
        tmask = (1 << tri[0]) | (1 << tri[1]) | (1 << tri[2])
        for apex in range(g.n):
            if tmask >> apex & 1:
                continue
            if (adj[apex] & tmask).bit_count() > 1:
                continue
            anchors = tmask | 1 << apex
            res = _ThreePaths(g, anchors, [(apex, b) for b in tri]).run()
            if res is not None:
                return Pyramid(apex, tri, tuple(res))
    return None


def find_long_prism(g: Graph) -> Prism | None:
    adj = g.adj
    tris = list(_triangles(g))
    for t1, t2 in combinations(tris, 2):
        m1 = (1 << t1[0]) | (1 << t1[1]) | (1 << t1[2])
        m2 = (1 << t2[0]) | (1 << t2[1]) | (1 << t2[2])
        if m1 & m2:
            continue
        for perm in permutations(t2):
            # the only edges between the triangles join matched vertices, and not all three
            matched = [bool(adj[s] >> t & 1) for s, t in zip(t1, perm)]
            if all(matched):
                continue
            cross = sum((adj[s] & m2).bit_count() for s in t1)
            if cross != sum(matched):
                continue
            res = _ThreePaths(g, m1 | m2, list(zip(t1, perm))).run()
            if res is not None:
                return Prism(t1, perm, tuple(res))
    return None


def find_broken_wheel(g: Graph) -> BrokenWheel | None:
    """Centre first, then every hole of G - x by backtracking from its minimum vertex."""
    adj = g.adj
    for x in range(g.n):
        nx = adj[x]
        if nx.bit_count() < 3:
            continue
        avail = g.all_mask & ~(1 << x)
        for start in bits(avail):
            pool = avail & ~((1 << (start + 1)) - 1)
            w = _holes_through(g, x, start, pool)
            if w is not None:
                return w
    return None


def _holes_through(g: Graph, x: int, start: int, pool: int) -> BrokenWheel | None:
    adj = g.adj

    def rec(path: list[int], pmask: int, forbid: int):
        # forbid: N of all path vertices except the last one and start
        last = path[-1]
        cand = adj[last] & pool & ~pmask & ~forbid
        for v in bits(cand):
            if len(path) > 1 and adj[v] >> start & 1:
                if len(path) >= 3 and path[1] < v:
                    s = pmask | 1 << v | 1 << x
                    w = broken_wheel_at(g, s, x)
                    if w is not None:
                        return w
                continue
            res = rec(path + [v], pmask | 1 << v, forbid | (adj[last] if len(path) > 1 else 0))
            if res is not None:
                return res
        return None

    return rec([start], 1 << start, 0)


def count_holes(g: Graph) -> int:
    """Number of holes, each counted once; used by tests as a sanity check."""
    adj = g.adj
    total = 0
    for start in range(g.n):
        pool = g.all_mask & ~((1 << (start + 1)) - 1)

        def rec(path, pmask, forbid):
            nonlocal total
            last = path[-1]
            for v in bits(adj[last] & pool & ~pmask & ~forbid):
                if len(path) > 1 and adj[v] >> start & 1:
                    if len(path) >= 3 and path[1] < v:
                        total += 1
                    continue
                rec(path + [v], pmask | 1 << v, forbid | (adj[last] if len(path) > 1 else 0))

        rec([start], 1 << start, 0)
    return total
