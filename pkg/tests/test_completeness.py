"""Pipeline against both oracles on a uniform sample of labelled 7-vertex graphs."""

import random
from itertools import combinations

from truemper import Graph, detect_k23_induced_minor, find_k23_model, k23_free_by_separators

PAIRS = list(combinations(range(7), 2))


def test_seven_vertex_sample():
    rng = random.Random(77)
    bad = []
    for _ in range(100_000):
        mask = rng.getrandbits(len(PAIRS))
        g = Graph(7, [PAIRS[j] for j in range(len(PAIRS)) if mask >> j & 1])
        a = detect_k23_induced_minor(g).contains_k23
        if not (a == (find_k23_model(g) is not None) == (not k23_free_by_separators(g))):
            bad.append(g.edges())
    assert not bad, bad[:3]
