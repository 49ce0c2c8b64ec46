"""Pyramid, theta, long prism, broken wheel: the K_{2,3} induced-minor pipeline."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..graph import Graph
from ..oracle.configs import find_pyramid, find_theta
from ..oracle.minor import InducedMinorModel, model_problems
from ..witness import BrokenWheel, Prism, Pyramid, Theta, Witness, validate_witness
from .broken_wheel import detect_broken_wheel
from .long_prism import detect_long_prism

STAGES = ("pyramid", "theta", "long-prism", "broken-wheel")


def detect_pyramid(g: Graph) -> Pyramid | None:
    # Reference implementation: the exhaustive search stands in for the
    # polynomial pyramid algorithm, behind the same contract.
    return find_pyramid(g)


def detect_theta(g: Graph) -> Theta | None:
    return find_theta(g)


@dataclass
class DetectionResult:
    contains_k23: bool
    stage: str = "none"
    witness: Witness | None = None
    model: InducedMinorModel | None = None
    timings_ms: dict[str, float] = field(default_factory=dict)

    def __iter__(self):
        # allows ``found, witness, model = detect_k23_induced_minor(g)``
        return iter((self.contains_k23, self.witness, self.model))


_DETECTORS = {
    "pyramid": detect_pyramid,
    "theta": detect_theta,
    "long-prism": detect_long_prism,
    "broken-wheel": detect_broken_wheel,
}


def detect_k23_induced_minor(g: Graph) -> DetectionResult:
    """Run the four detectors in order; each stage's precondition is established
    by the stages before it."""
    timings: dict[str, float] = {}
    for stage in STAGES:
        t0 = time.perf_counter()
        w = _DETECTORS[stage](g)
        timings[stage] = (time.perf_counter() - t0) * 1000.0
        if w is not None:
            if not validate_witness(g, w):
                raise AssertionError(f"{stage} detector returned an invalid witness {w}")
            return DetectionResult(True, stage, w, witness_to_model(g, w), timings)
    return DetectionResult(False, "none", None, None, timings)


class ModelConstructionError(AssertionError):
    pass


def _inner(p) -> frozenset[int]:
    return frozenset(p[1:-1])


def witness_to_model(g: Graph, w: Witness) -> InducedMinorModel:
    """K_{2,3} model read off a validated witness by a fixed rule per kind."""
    if isinstance(w, Theta):
        model = InducedMinorModel(frozenset((w.hub1,)), frozenset((w.hub2,)),
                                  *(_inner(p) for p in w.paths))
    elif isinstance(w, Pyramid):
        order = sorted(range(3), key=lambda i: len(w.paths[i]) < 3)  # long paths first, stable
        p1, p2, p3 = (w.paths[i] for i in order)
        b1, b2 = p1[-1], p2[-1]
        model = InducedMinorModel(frozenset((w.apex,)), frozenset((b1, b2)),
                                  _inner(p1), _inner(p2), frozenset(p3[1:]))
    elif isinstance(w, Prism):
        i = next(k for k in range(3) if len(w.paths[k]) >= 3)
        p1, p2, p3 = w.paths[i], w.paths[(i + 1) % 3], w.paths[(i + 2) % 3]
        a1, b1 = p1[0], p1[-1]
        a3, b2 = p3[0], p2[-1]
        model = InducedMinorModel(frozenset((a1,)) | frozenset(p2[:-1]),
                                  frozenset((b1,)) | frozenset(p3[1:]),
                                  _inner(p1), frozenset((a3,)), frozenset((b2,)))
    elif isinstance(w, BrokenWheel):
        model = _wheel_model(g, w)
    else:
        raise TypeError(f"not a witness: {w!r}")
    problems = model_problems(g, model)
    if problems:
        raise ModelConstructionError(f"model built from {w} is invalid: {'; '.join(problems)}")
    return model


def _wheel_model(g: Graph, w: BrokenWheel) -> InducedMinorModel:
    rim = w.rim
    k = len(rim)
    pos = {v: i for i, v in enumerate(rim)}
    longs = [s for s in w.sectors(g) if len(s) >= 3]
    if len(longs) < 2:
        raise ModelConstructionError(f"{w} has fewer than two long sectors")
    P, R = longs[0], longs[1]
    a, b, c, d = P[0], P[-1], R[0], R[-1]

    def arc(u, v):
        i, j = pos[u], pos[v]
        return frozenset(rim[(i + t) % k] for t in range((j - i) % k + 1))

    return InducedMinorModel(arc(d, a), arc(b, c), frozenset((w.center,)), _inner(P), _inner(R))
