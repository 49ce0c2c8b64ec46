"""Minimal separators and the independence-number criterion for K_{2,3}."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, bits, components_mask, independence_exceeds, is_clique_mask, is_connected_mask


@dataclass(frozen=True)
class MinimalSeparator:
    vertices: frozenset[int]
    full_components: tuple[frozenset[int], frozenset[int]]


def full_components_mask(g: Graph, s: int) -> list[int]:
    """Components C of G - S with N(C) = S."""
    return [c for c in components_mask(g, g.all_mask & ~s) if g.open_nbhd(c) == s]


def _close(g: Graph) -> list[int]:
    adj = g.adj
    seen: set[int] = set()
    order: list[int] = []

    def push(s: int):
        if s not in seen:
            seen.add(s)
            order.append(s)

    for v in range(g.n):
        closed = adj[v] | 1 << v
        for c in components_mask(g, g.all_mask & ~closed):
            push(g.open_nbhd(c))
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for x in bits(s):
            removed = s | adj[x]
            for c in components_mask(g, g.all_mask & ~removed):
                push(g.open_nbhd(c))
    return order


def enumerate_minimal_separators(g: Graph) -> list[MinimalSeparator]:
    """All minimal separators, sorted by size and then by vertex list."""
    out = []
    for s in _close(g):
        full = full_components_mask(g, s)
        if len(full) < 2:
            raise AssertionError(f"generated set {sorted(bits(s))} is not a minimal separator")
        out.append(MinimalSeparator(frozenset(bits(s)), (frozenset(bits(full[0])), frozenset(bits(full[1])))))
    out.sort(key=lambda m: (len(m.vertices), sorted(m.vertices)))
    return out


def separator_masks(g: Graph) -> list[int]:
    return sorted(_close(g), key=lambda s: (s.bit_count(), sorted(bits(s))))


def violating_separator(g: Graph) -> MinimalSeparator | None:
    """First minimal separator containing an independent triple."""
    for m in enumerate_minimal_separators(g):
        if independence_exceeds(g, m.vertices, 2):
            return m
    return None


def k23_free_by_separators(g: Graph) -> bool:
    return violating_separator(g) is None


def has_clique_cutset(g: Graph) -> bool:
    if g.n and not is_connected_mask(g, g.all_mask):
        raise ValueError("has_clique_cutset expects a connected graph; split it into components first")
    return any(is_clique_mask(g, s) for s in _close(g))


def brute_force_minimal_separators(g: Graph) -> list[frozenset[int]]:
    """Definition-level enumeration over all vertex subsets; only for small n."""
    out = []
    for s in range(1 << g.n):
        if len(full_components_mask(g, s)) >= 2:
            out.append(frozenset(bits(s)))
    out.sort(key=lambda m: (len(m), sorted(m)))
    return out
