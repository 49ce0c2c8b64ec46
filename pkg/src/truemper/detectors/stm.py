"""Find an S, T or M graph whose extremities are a given independent triple.

The search keeps a chordless path P from a1 to a2 through C and a chordless
path P' from a3 to the first vertex u that sees P's interior, then applies
local replacements that strictly shrink |V(P) ∪ V(P')| until one of the
terminal shapes appears.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Graph, bits, components_mask, shortest_path_mask, to_mask


class STMPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class STMGraph:
    """``kind`` is "S", "T" or "M"; ``special`` is the apex (S), centre (M) or the
    triangle as a tuple (T)."""

    kind: str
    vertices: frozenset[int]
    extremities: frozenset[int]
    special: object
    steps: int = field(default=0, compare=False)


def stm_problems(g: Graph, h: STMGraph) -> list[str]:
    """Check ``h`` against the S/T/M definitions inside the host graph."""
    sub, old = g.induced(h.vertices)
    back = {v: i for i, v in enumerate(old)}
    deg = {v: sub.degree(back[v]) for v in old}
    leaves = {v for v in old if deg[v] == 1}
    problems = []
    if len(h.extremities) != 3:
        problems.append("need exactly three extremities")
    if not h.extremities <= h.vertices:
        return problems + ["extremities outside the vertex set"]
    m = sub.m
    nv = sub.n
    connected = len(components_mask(sub, sub.all_mask)) == 1
    if not connected:
        problems.append("not connected")
    if h.kind == "S":
        apex = h.special
        if m != nv - 1:
            problems.append("S graph must be a tree")
        if deg.get(apex) != 3 or any(deg[v] > 2 for v in old if v != apex):
            problems.append("S graph must have a single branch vertex of degree 3")
        if leaves != set(h.extremities):
            problems.append("S extremities must be the leaves")
    elif h.kind == "T":
        tri = tuple(h.special)
        if len(set(tri)) != 3 or any(not g.has_edge(p, q) for p, q in ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2]))):
            problems.append("T special vertices must form a triangle")
        if m != nv:
            problems.append("T graph must have exactly one cycle")
        if any(deg.get(t) != 3 for t in tri) or any(deg[v] > 2 for v in old if v not in tri):
            problems.append("T graph degrees wrong")
        if leaves != set(h.extremities):
            problems.append("T extremities must be the leaves")
    elif h.kind == "M":
        centre = h.special
        ends = set(h.extremities) - {centre}
        if centre not in h.extremities or len(ends) != 2:
            return problems + ["M centre must be an extremity"]
        rest = h.vertices - {centre}
        rsub, rold = g.induced(rest)
        rdeg = [rsub.degree(i) for i in range(rsub.n)]
        is_path = (rsub.m == rsub.n - 1 and len(components_mask(rsub, rsub.all_mask)) == 1
                   and max(rdeg, default=0) <= 2)
        path_ends = {rold[i] for i in range(rsub.n) if rdeg[i] <= 1}
        if not is_path or path_ends != ends:
            problems.append("M graph minus centre must be a path between the other extremities")
        if any(g.has_edge(centre, e) for e in ends):
            problems.append("M centre adjacent to a path end")
        if sum(g.has_edge(centre, v) for v in rest) < 2:
            problems.append("M centre needs two neighbours on the path")
    else:
        problems.append(f"unknown kind {h.kind}")
    return problems


def _interior(p):
    return to_mask(p[1:-1])


def _prefix_to(g: Graph, a3: int, target_nb: int, allowed: int) -> list[int]:
    """Shortest path from a3 inside ``allowed`` to a vertex of ``target_nb``."""
    if target_nb >> a3 & 1:
        return [a3]
    adj = g.adj
    parent = {}
    seen = 1 << a3
    layer = [a3]
    while layer:
        nxt = []
        for u in layer:
            new = adj[u] & allowed & ~seen
            seen |= new
            for w in bits(new):
                parent[w] = u
                nxt.append(w)
        nxt.sort()
        for w in nxt:
            if target_nb >> w & 1:
                path = [w]
                while path[-1] != a3:
                    path.append(parent[path[-1]])
                return path[::-1]
        layer = nxt
    raise AssertionError("a3 cannot reach the path interior inside C")


def extract_stm(g: Graph, I, C) -> STMGraph:
    """Induced S/T/M subgraph of g[C ∪ I] with extremities exactly ``I``.

    ``I`` must be an independent triple, ``C`` a component of g - I, and every
    vertex of ``I`` must have a neighbour in ``C``.
    """
    I = tuple(sorted(I))
    cmask = to_mask(C)
    imask = to_mask(I)
    adj = g.adj
    if len(I) != 3 or len(set(I)) != 3:
        raise STMPreconditionError("I must contain three distinct vertices")
    if any(adj[u] & imask for u in I):
        raise STMPreconditionError("I is not independent")
    if not cmask or cmask & imask or cmask not in components_mask(g, g.all_mask & ~imask):
        raise STMPreconditionError("C is not a component of g - I")
    if any(not adj[u] & cmask for u in I):
        raise STMPreconditionError("some vertex of I has no neighbour in C")

    a1, a2, a3 = I
    P = shortest_path_mask(g, a1, a2, cmask)
    Pp = _prefix_to(g, a3, g.open_nbhd(_interior(P)) & (cmask | 1 << a3), cmask)
    steps = 0
    limit = g.n
    while True:
        steps += 1
        if steps > limit:
            raise AssertionError("rewrite loop exceeded n steps")
        u = Pp[-1]
        ppm = to_mask(Pp)
        if u != a3 and adj[P[0]] & ppm and not adj[P[-1]] & ppm:
            P = P[::-1]  # mirror so that only the far end can see P'
        on_p = [i for i, v in enumerate(P) if adj[u] >> v & 1]
        i1, i2 = on_p[0], on_p[-1]
        v1, v2 = P[i1], P[i2]
        if u == a3:
            verts = frozenset(P) | {a3}
            if v1 == v2:
                return STMGraph("S", verts, frozenset(I), v1, steps)
            return STMGraph("M", verts, frozenset(I), a3, steps)
        end1 = P[0]
        end2 = P[-1]
        sees1 = bool(adj[end1] & ppm)
        sees2 = bool(adj[end2] & ppm)
        if sees1 and sees2:
            body = to_mask(Pp[1:])
            P = shortest_path_mask(g, end1, end2, body)
            Pp = _prefix_to(g, a3, g.open_nbhd(_interior(P)) & (cmask | 1 << a3), cmask & ~_interior(P))
            continue
        if sees2:
            j = max(k for k, v in enumerate(Pp) if adj[end2] >> v & 1)
            if adj[v1] >> end2 & 1:
                path = P[: i1 + 1] + Pp[::-1]
                verts = frozenset(path) | {end2}
                return STMGraph("M", verts, frozenset(I), end2, steps)
            P = P[: i1 + 1] + Pp[j:][::-1] + [end2]
            Pp = _prefix_to(g, a3, g.open_nbhd(_interior(P)) & (cmask | 1 << a3), cmask & ~_interior(P))
            continue
        if v1 == v2:
            return STMGraph("S", frozenset(P) | frozenset(Pp), frozenset(I), v1, steps)
        if adj[v1] >> v2 & 1:
            return STMGraph("T", frozenset(P) | frozenset(Pp), frozenset(I), (u, v1, v2), steps)
        P = P[: i1 + 1] + [u] + P[i2:]
        Pp = _prefix_to(g, a3, g.open_nbhd(_interior(P)) & (cmask | 1 << a3), cmask & ~_interior(P))
