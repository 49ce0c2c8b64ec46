"""Certificates for Truemper configurations and their structural validators.

A witness names every vertex of an induced subgraph together with the role it
plays; :func:`validate_witness` re-derives the exact edge set the roles imply
and compares it against the host graph, pair by pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .graph import Graph, bits, hole_order_mask, to_mask


@dataclass(frozen=True)
class Theta:
    hub1: int
    hub2: int
    paths: tuple[tuple[int, ...], ...]  # each runs hub1 -> hub2

    kind = "theta"

    def vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    def roles(self) -> dict:
        return {"hubs": [self.hub1, self.hub2], "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class Pyramid:
    apex: int
    triangle: tuple[int, int, int]
    paths: tuple[tuple[int, ...], ...]  # paths[i] runs apex -> triangle[i]

    kind = "pyramid"

    def vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    def roles(self) -> dict:
        return {"apex": self.apex, "triangle": list(self.triangle), "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class Prism:
    """Two triangles joined by three paths; ``paths[i]`` runs top[i] -> bottom[i]."""

    top: tuple[int, int, int]
    bottom: tuple[int, int, int]
    paths: tuple[tuple[int, ...], ...]

    kind = "long-prism"

    @property
    def is_long(self) -> bool:
        return any(len(p) >= 3 for p in self.paths)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    def roles(self) -> dict:
        return {"triangles": [list(self.top), list(self.bottom)], "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class BrokenWheel:
    rim: tuple[int, ...]  # cyclic order of the hole
    center: int

    kind = "broken-wheel"

    def vertices(self) -> frozenset[int]:
        return frozenset(self.rim) | {self.center}

    def roles(self) -> dict:
        return {"center": self.center, "rim": list(self.rim)}

    def sectors(self, g: Graph) -> list[tuple[int, ...]]:
        return wheel_sectors(g, self.rim, self.center)


Witness = Union[Theta, Pyramid, Prism, BrokenWheel]


def wheel_sectors(g: Graph, rim: tuple[int, ...], center: int) -> list[tuple[int, ...]]:
    """Sectors of the wheel (rim, center) in rim order, starting at the first spoke."""
    k = len(rim)
    spokes = [i for i, v in enumerate(rim) if g.has_edge(center, v)]
    out = []
    for j, i in enumerate(spokes):
        nxt = spokes[(j + 1) % len(spokes)]
        span = (nxt - i) % k or k
        out.append(tuple(rim[(i + t) % k] for t in range(span + 1)))
    return out


def _edges_of_path(p: tuple[int, ...]) -> set[frozenset[int]]:
    return {frozenset(p[i : i + 2]) for i in range(len(p) - 1)}


def _induces_exactly(g: Graph, verts: frozenset[int], edges: set[frozenset[int]]) -> bool:
    if any(not 0 <= v < g.n for v in verts):
        return False
    for u, v in combinations(sorted(verts), 2):
        if g.has_edge(u, v) != (frozenset((u, v)) in edges):
            return False
    return True


def _distinct(p: tuple[int, ...]) -> bool:
    return len(set(p)) == len(p)


def _interiors_disjoint(paths) -> bool:
    seen: set[int] = set()
    for p in paths:
        inner = set(p[1:-1])
        if inner & seen:
            return False
        seen |= inner
    return True


def validate_witness(g: Graph, w: Witness) -> bool:
    """True iff ``w``'s vertex set induces in ``g`` exactly the claimed configuration."""
    if isinstance(w, Theta):
        return _valid_theta(g, w)
    if isinstance(w, Pyramid):
        return _valid_pyramid(g, w)
    if isinstance(w, Prism):
        return _valid_prism(g, w)
    if isinstance(w, BrokenWheel):
        return _valid_broken_wheel(g, w)
    return False


def _valid_theta(g: Graph, w: Theta) -> bool:
    if len(w.paths) != 3 or w.hub1 == w.hub2:
        return False
    for p in w.paths:
        if len(p) < 3 or p[0] != w.hub1 or p[-1] != w.hub2 or not _distinct(p):
            return False
    if not _interiors_disjoint(w.paths) or any({w.hub1, w.hub2} & set(p[1:-1]) for p in w.paths):
        return False
    edges = set().union(*(_edges_of_path(p) for p in w.paths))
    return _induces_exactly(g, w.vertices(), edges)


def _valid_pyramid(g: Graph, w: Pyramid) -> bool:
    if len(w.paths) != 3 or len(set(w.triangle)) != 3 or w.apex in w.triangle:
        return False
    for p, b in zip(w.paths, w.triangle):
        if len(p) < 2 or p[0] != w.apex or p[-1] != b or not _distinct(p):
            return False
    if sum(len(p) >= 3 for p in w.paths) < 2:
        return False
    tails = [set(p[1:]) for p in w.paths]
    if tails[0] & tails[1] or tails[0] & tails[2] or tails[1] & tails[2]:
        return False
    edges = set().union(*(_edges_of_path(p) for p in w.paths))
    edges |= {frozenset(e) for e in combinations(w.triangle, 2)}
    return _induces_exactly(g, w.vertices(), edges)


def _valid_prism(g: Graph, w: Prism) -> bool:
    if len(w.paths) != 3 or len(set(w.top) | set(w.bottom)) != 6:
        return False
    for p, a, b in zip(w.paths, w.top, w.bottom):
        if len(p) < 2 or p[0] != a or p[-1] != b or not _distinct(p):
            return False
    sets = [set(p) for p in w.paths]
    if sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]:
        return False
    if not w.is_long:
        return False
    edges = set().union(*(_edges_of_path(p) for p in w.paths))
    edges |= {frozenset(e) for e in combinations(w.top, 2)}
    edges |= {frozenset(e) for e in combinations(w.bottom, 2)}
    return _induces_exactly(g, w.vertices(), edges)


def _valid_broken_wheel(g: Graph, w: BrokenWheel) -> bool:
    rim = w.rim
    if w.center in rim or not 0 <= w.center < g.n or any(not 0 <= v < g.n for v in rim):
        return False
    if not _distinct(rim) or len(rim) < 4:
        return False
    rim_edges = {frozenset((rim[i], rim[(i + 1) % len(rim)])) for i in range(len(rim))}
    spokes = {frozenset((w.center, v)) for v in rim if g.has_edge(w.center, v)}
    if len(spokes) < 3:
        return False
    if not _induces_exactly(g, w.vertices(), rim_edges | spokes):
        return False
    return sum(len(s) >= 3 for s in w.sectors(g)) >= 2


def broken_wheel_at(g: Graph, s: int, x: int) -> BrokenWheel | None:
    """Broken wheel on bitset ``s`` centred at ``x``, if g[s] is one."""
    if not s >> x & 1:
        return None
    order = hole_order_mask(g, s & ~(1 << x))
    if order is None:
        return None
    if (g.adj[x] & s).bit_count() < 3:
        return None
    w = BrokenWheel(tuple(order), x)
    if sum(len(sec) >= 3 for sec in w.sectors(g)) < 2:
        return None
    return w


def is_broken_wheel(g: Graph, s) -> tuple[bool, BrokenWheel | None]:
    """Does g[s] induce a broken wheel? Centres are tried in increasing order."""
    mask = s if isinstance(s, int) else to_mask(s)
    for x in bits(mask):
        w = broken_wheel_at(g, mask, x)
        if w is not None:
            return True, w
    return False, None


@dataclass(frozen=True)
class Frame:
    """Centre, long-sector endpoints and their rim neighbours of a broken wheel.

    ``a..b`` and ``c..d`` are the two long sectors, met in clockwise order
    a, b, c, d; ``ap`` is a's clockwise rim neighbour and ``am`` its
    counter-clockwise one (likewise for b, c, d).
    """

    x: int
    a: int
    b: int
    c: int
    d: int
    ap: int
    bp: int
    cp: int
    dp: int
    am: int
    bm: int
    cm: int
    dm: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.x, self.a, self.b, self.c, self.d, self.ap, self.bp, self.cp, self.dp,
                self.am, self.bm, self.cm, self.dm)


def frame_ok(g: Graph, f: Frame) -> bool:
    """Necessary conditions every frame of a broken wheel satisfies."""
    adj = g.adj
    x, a, b, c, d = f.x, f.a, f.b, f.c, f.d
    nx = adj[x]
    if x in f.as_tuple()[1:]:
        return False
    if not all(nx >> v & 1 for v in (a, b, c, d)):
        return False
    if a == b or c == d or adj[a] >> b & 1 or adj[c] >> d & 1:
        return False
    if b == c and d == a:
        return False
    closed_x = nx | 1 << x
    for end, nb in ((a, f.ap), (b, f.bm), (c, f.cp), (d, f.dm)):
        if not adj[end] >> nb & 1 or closed_x >> nb & 1:
            return False
    for end, nb in ((a, f.am), (b, f.bp), (c, f.cm), (d, f.dp)):
        if not adj[end] >> nb & 1:
            return False
    if b == c and (f.bp != f.cp or f.bm != f.cm):
        return False
    if d == a and (f.dp != f.ap or f.dm != f.am):
        return False
    return True


def frames_of(g: Graph, w: BrokenWheel) -> list[Frame]:
    """Every frame of ``w`` read off its rim, in both orientations."""
    out = []
    for rim in (w.rim, tuple(reversed(w.rim))):
        k = len(rim)
        pos = {v: i for i, v in enumerate(rim)}
        secs = wheel_sectors(g, rim, w.center)
        long_secs = [s for s in secs if len(s) >= 3]
        for p, r in combinations(long_secs, 2):
            for first, second in ((p, r), (r, p)):
                a, b = first[0], first[-1]
                c, d = second[0], second[-1]
                plus = {v: rim[(pos[v] + 1) % k] for v in (a, b, c, d)}
                minus = {v: rim[(pos[v] - 1) % k] for v in (a, b, c, d)}
                out.append(Frame(w.center, a, b, c, d, plus[a], plus[b], plus[c], plus[d],
                                 minus[a], minus[b], minus[c], minus[d]))
    return out
