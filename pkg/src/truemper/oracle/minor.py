"""K_{2,3} induced-minor models: the invariant checker and a complete search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..graph import Graph, bits, components_mask, is_connected_mask, to_mask


@dataclass(frozen=True)
class InducedMinorModel:
    """Branch sets for K_{2,3} with sides {u, v} and {a, b, c}."""

    xu: frozenset[int]
    xv: frozenset[int]
    xa: frozenset[int]
    xb: frozenset[int]
    xc: frozenset[int]

    def branch_sets(self) -> dict[str, frozenset[int]]:
        return {"u": self.xu, "v": self.xv, "a": self.xa, "b": self.xb, "c": self.xc}

    def as_lists(self) -> dict[str, list[int]]:
        return {k: sorted(s) for k, s in self.branch_sets().items()}


_K23_EDGES = {frozenset(p) for p in (("u", "a"), ("u", "b"), ("u", "c"), ("v", "a"), ("v", "b"), ("v", "c"))}


def model_problems(g: Graph, model: InducedMinorModel) -> list[str]:
    """Every way in which ``model`` fails to be a K_{2,3} induced-minor model."""
    problems = []
    sets = model.branch_sets()
    masks = {k: to_mask(s) for k, s in sets.items()}
    for k, s in sets.items():
        if not s:
            problems.append(f"X_{k} is empty")
        elif any(not 0 <= v < g.n for v in s):
            problems.append(f"X_{k} has out-of-range vertices")
            return problems
        elif not is_connected_mask(g, masks[k]):
            problems.append(f"X_{k} is not connected")
    for k1, k2 in combinations(sets, 2):
        if masks[k1] & masks[k2]:
            problems.append(f"X_{k1} and X_{k2} overlap")
        touching = bool(g.closed_nbhd(masks[k1]) & masks[k2])
        wanted = frozenset((k1, k2)) in _K23_EDGES
        if touching != wanted:
            problems.append(f"X_{k1}-X_{k2} adjacency is {touching}, expected {wanted}")
    return problems


def is_valid_model(g: Graph, model: InducedMinorModel) -> bool:
    return not model_problems(g, model)


def find_k23_model(g: Graph) -> InducedMinorModel | None:
    """Complete search for a K_{2,3} induced-minor model.

    Any model can be shrunk until X_a, X_b, X_c are single vertices: each may be
    cut down to a path between its attachments, and all but one vertex of that
    path merged into X_u. So it is enough to try every independent triple I as
    the small side, every connected subset of V - I dominating I as X_u, and
    then any component of what is left after deleting N[X_u] that also
    dominates I as X_v.
    """
    n = g.n
    adj = g.adj
    for a, b, c in combinations(range(n), 3):
        if adj[a] >> b & 1 or adj[a] >> c & 1 or adj[b] >> c & 1:
            continue
        tri = (1 << a) | (1 << b) | (1 << c)
        rest = g.all_mask & ~tri
        # candidates for X_u must touch all three
        rest_verts = list(bits(rest))
        for xu in _connected_subsets(g, rest_verts):
            if not all(g.closed_nbhd(xu) >> t & 1 for t in (a, b, c)):
                continue
            left = rest & ~g.closed_nbhd(xu)
            for comp in components_mask(g, left):
                nb = g.closed_nbhd(comp)
                if nb >> a & 1 and nb >> b & 1 and nb >> c & 1:
                    return InducedMinorModel(
                        frozenset(bits(xu)), frozenset(bits(comp)),
                        frozenset((a,)), frozenset((b,)), frozenset((c,)),
                    )
    return None


def _connected_subsets(g: Graph, verts: list[int]):
    """Yield every nonempty connected vertex subset of ``verts`` as a bitset.

    Each subset is generated once, rooted at its minimum vertex and grown by
    the usual include/exclude recursion over its frontier.
    """
    allowed = to_mask(verts)
    adj = g.adj
    for root in verts:
        pool = allowed & ~((1 << (root + 1)) - 1)
        yield from _grow(adj, 1 << root, adj[root] & pool, 0, pool)


def _grow(adj, current: int, frontier: int, banned: int, pool: int):
    yield current
    cand = frontier & ~banned
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        nxt = current | low
        yield from _grow(adj, nxt, (frontier | adj[v]) & pool & ~nxt, banned, pool)
        banned |= low
