"""Long-prism detection in pyramid-free graphs via co-domino and net anchors."""

from __future__ import annotations

from ..graph import Graph, bits, components_mask, shortest_path_mask, to_mask
from ..witness import Prism, Pyramid, Witness, validate_witness
from .stm import extract_stm


class PreconditionViolation(Exception):
    """The detector's input assumption failed; ``evidence`` certifies why."""

    def __init__(self, message: str, evidence: Witness | None = None):
        super().__init__(message)
        self.evidence = evidence


def _checked(g: Graph, w: Witness) -> Witness:
    if not validate_witness(g, w):
        raise AssertionError(f"assembled an invalid witness {w}")
    return w


def induced_co_dominos(g: Graph):
    """Yield (a1, a2, v1, v2, v3, v4) for every labelled induced co-domino."""
    adj = g.adj
    for v1 in range(g.n):
        for v2 in bits(adj[v1]):
            for v3 in bits(adj[v2] & ~adj[v1] & ~(1 << v1)):
                for v4 in bits(adj[v3] & adj[v1] & ~adj[v2] & ~(1 << v2)):
                    a1s = adj[v1] & adj[v2] & ~adj[v3] & ~adj[v4]
                    a2s = adj[v3] & adj[v4] & ~adj[v1] & ~adj[v2]
                    for a1 in bits(a1s):
                        for a2 in bits(a2s & ~adj[a1]):
                            yield a1, a2, v1, v2, v3, v4


def _co_domino_step(g: Graph) -> Prism | None:
    adj = g.adj
    cache: dict[tuple[int, ...], list[int]] = {}
    for a1, a2, v1, v2, v3, v4 in induced_co_dominos(g):
        key = (v1, v2, v3, v4)
        comps = cache.get(key)
        if comps is None:
            removed = adj[v1] | adj[v2] | adj[v3] | adj[v4]
            comps = cache[key] = components_mask(g, g.all_mask & ~removed)
        for x in comps:
            if adj[a1] & x and adj[a2] & x:
                p = shortest_path_mask(g, a1, a2, x)
                return _checked(g, Prism((a1, v1, v2), (a2, v4, v3), (tuple(p), (v1, v4), (v2, v3))))
    return None


def _path_in(g: Graph, s: int, t: int, within: int) -> tuple[int, ...]:
    p = shortest_path_mask(g, s, t, within)
    if p is None:
        raise AssertionError(f"no path {s}-{t} inside the extracted subgraph")
    return tuple(p)


def _net_case(g: Graph, tri, pend, x: int) -> Prism:
    """Assemble a long prism from a net (triangle ``tri``, pendants ``pend``) and a
    component ``x`` seeing all three pendants, or raise if a pyramid shows up."""
    sub, old = g.induced(list(bits(x)) + list(pend))
    back = {v: i for i, v in enumerate(old)}
    h = extract_stm(sub, [back[a] for a in pend], [back[v] for v in bits(x)])
    hv = to_mask(old[i] for i in h.vertices)
    idx = {a: i for i, a in enumerate(pend)}
    if h.kind == "S":
        apex = old[h.special]
        paths = tuple(_path_in(g, apex, a, hv) + (v,) for a, v in zip(pend, tri))
        raise PreconditionViolation("precondition violated: pyramid present",
                                    _checked(g, Pyramid(apex, tuple(tri), paths)))
    if h.kind == "T":
        t_vertices = [old[i] for i in h.special]
        tmask = to_mask(t_vertices)
        bottom = []
        paths = []
        for a, v in zip(pend, tri):
            # the triangle vertex on a's leg is the one reachable without crossing the others
            for t in t_vertices:
                p = shortest_path_mask(g, a, t, hv & ~tmask)
                if p is not None:
                    bottom.append(t)
                    paths.append((v,) + tuple(p))
                    break
        return _checked(g, Prism(tuple(tri), tuple(bottom), tuple(paths)))
    centre = old[h.special]
    j = idx[centre]
    i, k = [t for t in range(3) if t != j]
    q = _path_in(g, pend[i], pend[k], hv & ~(1 << centre))
    on_q = [p for p, v in enumerate(q) if g.has_edge(centre, v)]
    c1, c2 = q[on_q[0]], q[on_q[-1]]
    if len(on_q) > 2 or not g.has_edge(c1, c2):
        # the two extreme neighbours are nonadjacent whenever the centre has 3+ neighbours
        p_i = (centre,) + q[: on_q[0] + 1][::-1] + (tri[i],)
        p_k = (centre,) + q[on_q[-1]:] + (tri[k],)
        p_j = (centre, tri[j])
        paths = [None, None, None]
        paths[i], paths[j], paths[k] = p_i, p_j, p_k
        raise PreconditionViolation("precondition violated: pyramid present",
                                    _checked(g, Pyramid(centre, tuple(tri), tuple(paths))))
    bottom = [None, None, None]
    paths = [None, None, None]
    bottom[i], bottom[j], bottom[k] = c1, centre, c2
    paths[i] = (tri[i],) + q[: on_q[0] + 1]
    paths[j] = (tri[j], centre)
    paths[k] = (tri[k],) + q[on_q[-1]:][::-1]
    return _checked(g, Prism(tuple(tri), tuple(bottom), tuple(paths)))


def induced_nets(g: Graph):
    """Yield (triangle, pendants) for every induced net, triangle sorted."""
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] & ~((1 << (u + 1)) - 1)):
            for w in bits(adj[u] & adj[v] & ~((1 << (v + 1)) - 1)):
                tri = (u, v, w)
                own = [adj[u] & ~adj[v] & ~adj[w] & ~(1 << v) & ~(1 << w),
                       adj[v] & ~adj[u] & ~adj[w] & ~(1 << u) & ~(1 << w),
                       adj[w] & ~adj[u] & ~adj[v] & ~(1 << u) & ~(1 << v)]
                for p1 in bits(own[0]):
                    for p2 in bits(own[1] & ~adj[p1]):
                        for p3 in bits(own[2] & ~adj[p1] & ~adj[p2]):
                            yield tri, (p1, p2, p3)


def _net_step(g: Graph) -> Prism | None:
    adj = g.adj
    cache: dict[tuple[int, ...], list[int]] = {}
    for tri, pend in induced_nets(g):
        comps = cache.get(tri)
        if comps is None:
            removed = adj[tri[0]] | adj[tri[1]] | adj[tri[2]]
            comps = cache[tri] = components_mask(g, g.all_mask & ~removed)
        for x in comps:
            if all(adj[a] & x for a in pend):
                return _net_case(g, tri, pend, x)
    return None


def detect_long_prism(g: Graph) -> Prism | None:
    """Long prism in a pyramid-free graph, or None.

    Raises :class:`PreconditionViolation` carrying a pyramid when the net step
    runs into one.
    """
    w = _co_domino_step(g)
    if w is not None:
        return w
    return _net_step(g)
