"""Immutable simple graphs with bitset adjacency, plus path and hole primitives.

Vertex sets are passed around internally as Python ints used as bitsets
(bit ``v`` set means vertex ``v`` is a member). Public helpers accept any
iterable of vertices and return frozensets or tuples.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; ``adj[v]`` is the neighbourhood of ``v`` as a bitset.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        """Build from bitset rows; rows must already be symmetric and loop-free."""
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(adj)
        g._hash = None
        for v, row in enumerate(g._adj):
            if row >> v & 1 or row >> g._n:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for w in bits(row):
                if not g._adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def open_nbhd(self, mask: int) -> int:
        """N(S): vertices outside S with a neighbour in S."""
        out = 0
        for v in bits(mask):
            out |= self._adj[v]
        return out & ~mask

    def closed_nbhd(self, mask: int) -> int:
        """N[S] = S together with N(S)."""
        out = mask
        for v in bits(mask):
            out |= self._adj[v]
        return out

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on ``vertices``; also returns new-index -> old-index map."""
        old = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[w]) for u in old for w in bits(self._adj[u]) if w in index and u < w]
        return Graph(len(old), edges), old

    def complement(self) -> Graph:
        full = self.all_mask
        return Graph.from_adjacency([full & ~row & ~(1 << v) for v, row in enumerate(self._adj)])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def components_mask(g: Graph, s: int) -> list[int]:
    """Connected components of g[s] as bitsets, ordered by minimum vertex."""
    adj = g.adj
    out = []
    rest = s
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph, s: Iterable[int]) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in components_mask(g, to_mask(s))]


def reach_mask(g: Graph, start: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from bitset ``start`` inside g[allowed | start]."""
    adj = g.adj
    seen = frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected_mask(g: Graph, s: int) -> bool:
    if not s:
        return True
    return reach_mask(g, s & -s, s) == s


def shortest_path_mask(g: Graph, s: int, t: int, allowed: int) -> list[int] | None:
    """BFS shortest s-t path whose vertices other than s lie in ``allowed | {t}``.

    Among shortest paths, each vertex prefers the smallest-index predecessor.
    """
    if s == t:
        return [s]
    adj = g.adj
    allowed |= 1 << t
    allowed &= ~(1 << s)
    parent: dict[int, int] = {}
    layer = [s]
    seen = 1 << s
    tbit = 1 << t
    while layer:
        nxt_layer = []
        for u in layer:  # layer is sorted, so smaller parents claim first
            new = adj[u] & allowed & ~seen
            if not new:
                continue
            seen |= new
            for w in bits(new):
                parent[w] = u
                nxt_layer.append(w)
            if new & tbit:
                path = [t]
                while path[-1] != s:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
        nxt_layer.sort()
        layer = nxt_layer
    return None


def shortest_path_avoiding(
    g: Graph, s: int, t: int, forbidden: Iterable[int] = ()
) -> tuple[int, ...] | None:
    """Shortest s-t path in g minus ``forbidden``; None when t is unreachable."""
    fb = to_mask(forbidden)
    if fb >> s & 1 or fb >> t & 1:
        raise ValueError("endpoints must not be forbidden")
    path = shortest_path_mask(g, s, t, g.all_mask & ~fb)
    return None if path is None else tuple(path)


def is_path(g: Graph, p: Sequence[int]) -> bool:
    if len(set(p)) != len(p) or any(not 0 <= v < g.n for v in p):
        return False
    return all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


def is_chordless_path(g: Graph, p: Sequence[int]) -> bool:
    if not is_path(g, p):
        return False
    for i, j in combinations(range(len(p)), 2):
        if j > i + 1 and g.has_edge(p[i], p[j]):
            return False
    return True


def is_hole(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists >= 4 distinct vertices forming a chordless cycle."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k or any(not 0 <= v < g.n for v in cycle):
        return False
    for i, j in combinations(range(k), 2):
        consecutive = j == i + 1 or (i == 0 and j == k - 1)
        if g.has_edge(cycle[i], cycle[j]) != consecutive:
            return False
    return True


def hole_order_mask(g: Graph, s: int) -> list[int] | None:
    """If g[s] is a hole, return its cyclic order (from the minimum vertex, towards
    the smaller neighbour); otherwise None."""
    k = s.bit_count()
    if k < 4:
        return None
    adj = g.adj
    for v in bits(s):
        if (adj[v] & s).bit_count() != 2:
            return None
    start = lowest(s)
    first = lowest(adj[start] & s)
    order = [start, first]
    while len(order) < k:
        prev, cur = order[-2], order[-1]
        nxt = adj[cur] & s & ~(1 << prev)
        v = lowest(nxt)
        if v == start:
            return None  # closed early: g[s] is a disjoint union of cycles
        order.append(v)
    if not adj[order[-1]] >> start & 1:
        return None
    return order


def is_clique_mask(g: Graph, s: int) -> bool:
    adj = g.adj
    return all((adj[v] | 1 << v) & s == s for v in bits(s))


def independence_exceeds(g: Graph, s: Iterable[int], k: int) -> bool:
    """True iff g[s] has an independent set of size k + 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    verts = sorted(set(s))
    if k == 2:
        return _has_independent_triple(g, to_mask(verts))
    return _max_independent_at_least(g, to_mask(verts), k + 1)


def _has_independent_triple(g: Graph, s: int) -> bool:
    adj = g.adj
    for u in bits(s):
        rest = s & ~adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(rest):
            if rest & ~adj[v] & ~((1 << (v + 1)) - 1):
                return True
    return False


def _max_independent_at_least(g: Graph, s: int, target: int) -> bool:
    if target <= 0:
        return True
    if s.bit_count() < target:
        return False
    v = lowest(s)
    rest = s & ~(1 << v)
    return _max_independent_at_least(g, rest & ~g.adj[v], target - 1) or _max_independent_at_least(
        g, rest, target
    )
