"""Broken-wheel detection in (long prism, pyramid, theta)-free graphs.

Two phases. First every broken wheel on six or seven vertices is looked for
directly. Then frames are enumerated: for each choice of centre x, long-sector
ends a, b, c, d and their rim neighbours, the four rim arcs are rebuilt as
shortest paths in the graph with the appropriate neighbourhoods removed, and
the union is tested for being a broken wheel centred at x.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from ..graph import Graph, bits, shortest_path_mask
from ..witness import BrokenWheel, Frame, broken_wheel_at, frame_ok, is_broken_wheel


def small_broken_wheel(g: Graph, sizes=(6, 7)) -> BrokenWheel | None:
    """Broken wheel on exactly 6 or 7 vertices.

    Same answer as trying every 6- and 7-subset, but generated as a centre plus
    a hole of length 5 or 6 through its neighbourhood.
    """
    adj = g.adj
    lengths = {s - 1 for s in sizes}
    for x in range(g.n):
        nx = adj[x]
        if nx.bit_count() < 3:
            continue
        avail = g.all_mask & ~(1 << x)
        for start in bits(avail):
            pool = avail & ~((1 << (start + 1)) - 1)
            w = _short_holes(g, x, start, pool, max(lengths), lengths)
            if w is not None:
                return w
    return None


def _short_holes(g, x, start, pool, max_len, lengths):
    adj = g.adj

    def rec(path, pmask, forbid):
        last = path[-1]
        for v in bits(adj[last] & pool & ~pmask & ~forbid):
            if len(path) > 1 and adj[v] >> start & 1:
                if len(path) + 1 in lengths and path[1] < v:
                    w = broken_wheel_at(g, pmask | 1 << v | 1 << x, x)
                    if w is not None:
                        return w
                continue
            if len(path) + 1 >= max_len:
                continue
            res = rec(path + [v], pmask | 1 << v, forbid | (adj[last] if len(path) > 1 else 0))
            if res is not None:
                return res
        return None

    return rec([start], 1 << start, 0)


def small_broken_wheel_by_subsets(g: Graph, sizes=(6, 7)) -> BrokenWheel | None:
    """Literal subset scan; the reference the faster scan is tested against."""
    for k in sizes:
        for combo in combinations(range(g.n), k):
            ok, w = is_broken_wheel(g, combo)
            if ok:
                return w
    return None


def _closed(adj, v):
    return adj[v] | 1 << v


def _quintuples(g: Graph) -> Iterator[tuple[int, int, int, int, int]]:
    adj = g.adj
    for x in range(g.n):
        nx = adj[x]
        if nx.bit_count() < 3:
            continue
        for a in bits(nx):
            for b in bits(nx & ~adj[a] & ~(1 << a)):
                for c in bits(nx & ~adj[a] & ~(1 << a)):
                    for d in bits(nx & ~adj[c] & ~(1 << c) & ~adj[b]):
                        if d == b or (b == c and d == a):
                            continue
                        yield x, a, b, c, d


def _arc_candidates(g: Graph, start_from: int, end_at: int, start_ok: int, end_ok: int, avoid: int):
    """Shortest paths s -> t for s in start_ok ∩ N(start_from), t in end_ok ∩ N(end_at),
    avoiding ``avoid`` except at the two ends. Yields (s, t, path, mask)."""
    adj = g.adj
    for s in bits(adj[start_from] & start_ok):
        for t in bits(adj[end_at] & end_ok):
            allowed = g.all_mask & ~avoid
            if s == t:
                path = [s]
            else:
                path = shortest_path_mask(g, s, t, allowed & ~(1 << s))
                if path is None:
                    continue
            mask = 0
            for v in path:
                mask |= 1 << v
            yield s, t, path, mask


def enumerate_frames(g: Graph) -> Iterator[tuple[Frame, int]]:
    """Every frame passing :func:`frame_ok` whose four arcs exist, with the
    vertex set (frame plus arcs) it produces."""
    adj = g.adj
    for x, a, b, c, d in _quintuples(g):
        closed_x = _closed(adj, x)
        f4 = _closed(adj, a) | _closed(adj, b) | _closed(adj, c) | _closed(adj, d)
        f5 = f4 | closed_x
        hubs = 1 << x | 1 << a | 1 << b | 1 << c | 1 << d
        not_x = ~closed_x
        p_arcs = list(_arc_candidates(g, a, b, not_x, not_x, f5))
        if not p_arcs:
            continue
        r_arcs = list(_arc_candidates(g, c, d, not_x, not_x, f5))
        if not r_arcs:
            continue
        full = g.all_mask & ~(1 << x)
        q_arcs = [None] if b == c else list(_arc_candidates(g, b, c, full, full, f4))
        if not q_arcs:
            continue
        s_arcs = [None] if d == a else list(_arc_candidates(g, d, a, full, full, f4))
        if not s_arcs:
            continue
        for ap, bm, _, pm in p_arcs:
            if pm & hubs:
                continue
            for cp, dm, _, rm in r_arcs:
                if rm & (pm | hubs) or g.closed_nbhd(rm) & pm:
                    continue
                for q in q_arcs:
                    if q is None:
                        bp, cm, qm = cp, bm, 0
                    else:
                        bp, cm, _, qm = q
                        inner = qm & ~hubs
                        if inner & (pm | rm) or g.closed_nbhd(inner) & (pm | rm):
                            continue
                    for s in s_arcs:
                        if s is None:
                            dp, am, sm = ap, dm, 0
                        else:
                            dp, am, _, sm = s
                            inner = sm & ~hubs
                            if inner & (pm | rm | qm) or g.closed_nbhd(inner) & (pm | rm | (qm & ~hubs)):
                                continue
                        f = Frame(x, a, b, c, d, ap, bp, cp, dp, am, bm, cm, dm)
                        if not frame_ok(g, f):
                            continue
                        yield f, hubs | pm | qm | rm | sm


def detect_broken_wheel(g: Graph, scan_small: bool = True) -> BrokenWheel | None:
    """Broken wheel, or None.

    Any wheel returned is genuine. A None answer is only guaranteed when g has
    no long prism, pyramid or theta.
    """
    if scan_small:
        w = small_broken_wheel(g)
        if w is not None:
            return w
    for f, mask in enumerate_frames(g):
        w = broken_wheel_at(g, mask, f.x)
        if w is not None:
            return w
    return None
