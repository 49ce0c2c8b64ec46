"""``truemper`` command line: detect, oracle, gen, xcheck, bench."""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, repeat

from ..detectors import (
    PreconditionViolation,
    detect_broken_wheel,
    detect_k23_induced_minor,
    detect_long_prism,
    detect_pyramid,
    detect_theta,
    witness_to_model,
)
from ..detectors.pipeline import STAGES
from ..graph import Graph
from ..oracle import find_config_exhaustive, find_k23_model, violating_separator
from ..patterns import ConfigSpec, make_config, make_gk, make_named, plant, random_chordal, random_graph
from ..witness import validate_witness
from . import report
from .io import ParseError, load_graph, render, render_edge_list

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_REFUSED, EXIT_DISAGREE = 0, 2, 3, 4, 5

ORACLE_LIMITS = {"model": 14, "exhaustive": 14, "separators": 20}
XCHECK_METHODS = ("pipeline", "model", "separators", "exhaustive")

_PRECONDITIONS = {
    "long-prism": ("pyramid",),
    "broken-wheel": ("pyramid", "theta", "long-prism"),
}


class Refused(Exception):
    pass


def worker_count() -> int:
    raw = os.environ.get("TRUEMPER_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


# detect


def _run_detector(stage: str, g: Graph):
    fn = {"pyramid": detect_pyramid, "theta": detect_theta,
          "long-prism": detect_long_prism, "broken-wheel": detect_broken_wheel}[stage]
    try:
        return fn(g), None
    except PreconditionViolation as exc:
        return None, exc.evidence


def run_single_stage(g: Graph, stage: str):
    """(stage, witness, precondition, timings) for one detector, preconditions first."""
    timings = {}
    required = _PRECONDITIONS.get(stage, ())
    label = "-".join(required) + "-free" if required else None
    for req in required:
        t0 = time.perf_counter()
        w, evidence = _run_detector(req, g)
        timings[req] = _ms(t0)
        w = w or evidence
        if w is not None:
            return w.kind, w, {"required": label, "satisfied": False, "violated_by": w.kind}, timings
    t0 = time.perf_counter()
    w, evidence = _run_detector(stage, g)
    timings[stage] = _ms(t0)
    if evidence is not None:
        return evidence.kind, evidence, {"required": label, "satisfied": False,
                                         "violated_by": evidence.kind}, timings
    pre = {"required": label, "satisfied": True} if required else None
    return (stage if w is not None else "none"), w, pre, timings


def cmd_detect(args) -> int:
    g = load_graph(args.file, args.format)
    if args.stage:
        stage, w, pre, timings = run_single_stage(g, args.stage)
        if w is not None and not validate_witness(g, w):
            raise AssertionError(f"invalid witness {w}")
        model = witness_to_model(g, w) if w is not None else None
    else:
        res = detect_k23_induced_minor(g)
        stage, w, model, pre = res.stage, res.witness, res.model, None
        timings = {k: round(v, 3) for k, v in res.timings_ms.items()}
    both = not args.witness and not args.model
    out = {
        "schema": report.SCHEMA,
        "input": args.file,
        "n": g.n,
        "m": g.m,
        "contains_k23": w is not None,
        "stage": stage,
        "precondition": pre,
        "timings_ms": timings,
    }
    if both or args.witness:
        out["witness"] = report.witness_json(w)
    if both or args.model:
        out["model"] = report.model_json(model)
    sys.stdout.write(report.dumps(out, report.DETECT_KEYS, timings=not args.no_timings))
    return EXIT_OK


# oracle


def run_oracle(g: Graph, method: str):
    """(contains, certificate) for one oracle method."""
    if method == "model":
        m = find_k23_model(g)
        return m is not None, ({"model": report.model_json(m)} if m else None)
    if method == "separators":
        s = violating_separator(g)
        return s is not None, ({"separator": sorted(s.vertices)} if s else None)
    if method == "exhaustive":
        w = find_config_exhaustive(g)
        return w is not None, ({"witness": report.witness_json(w)} if w else None)
    raise ValueError(f"unknown oracle method {method!r}")


def _guard(n: int, method: str, force: bool) -> None:
    limit = ORACLE_LIMITS[method]
    if n > limit and not force:
        raise Refused(f"oracle '{method}' refuses n={n} > {limit}; pass --force to run anyway")


def cmd_oracle(args) -> int:
    g = load_graph(args.file, args.format)
    _guard(g.n, args.method, args.force)
    t0 = time.perf_counter()
    contains, cert = run_oracle(g, args.method)
    out = {
        "schema": report.SCHEMA,
        "input": args.file,
        "n": g.n,
        "m": g.m,
        "method": args.method,
        "contains_k23": contains,
        "certificate": cert,
        "timings_ms": {args.method: _ms(t0)},
    }
    sys.stdout.write(report.dumps(out, report.ORACLE_KEYS, timings=not args.no_timings))
    return EXIT_OK


# gen


def _ints(params, count=None, name="pattern"):
    try:
        vals = [int(x) for x in params]
    except ValueError:
        raise ValueError(f"{name} expects integer parameters, got {params}") from None
    if count is not None and len(vals) != count:
        raise ValueError(f"{name} expects {count} integer parameter(s)")
    return vals


def generate(pattern: str, params, seed: int, background: int = 4, edge_prob: float = 0.3,
             relabel: bool = False) -> Graph:
    pattern = pattern.lower()
    if pattern in ("theta", "pyramid", "prism", "broken-wheel"):
        spec = ConfigSpec(pattern, _ints(params, name=pattern))
        spec.check()
        return make_config(spec)[0]
    if pattern == "plant":
        if not params:
            raise ValueError("plant expects a kind followed by lengths")
        spec = ConfigSpec(params[0], _ints(params[1:], name="plant"))
        spec.check()
        return plant(spec, background, edge_prob, seed, relabel=relabel)
    if pattern == "gk":
        (k,) = _ints(params, 1, "gk")
        return make_gk(k)
    if pattern in ("cycle", "complete", "path"):
        (n,) = _ints(params, 1, pattern)
        return make_named({"cycle": "c", "complete": "k", "path": "p"}[pattern] + str(n))
    if pattern == "random":
        if len(params) != 2:
            raise ValueError("random expects n and p")
        return random_graph(int(params[0]), float(params[1]), seed)
    if pattern == "chordal":
        (n,) = _ints(params, 1, "chordal")
        return random_chordal(n, seed)
    if params:
        raise ValueError(f"{pattern} takes no parameters")
    return make_named(pattern)


def cmd_gen(args) -> int:
    g = generate(args.pattern, args.params, args.seed, args.background, args.edge_prob, args.relabel)
    text = render(g, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# xcheck


def check_one(n: int, edges) -> tuple[bool, ...]:
    """Answers of every method on one graph; also re-validates the pipeline's certificates."""
    g = Graph(n, edges)
    res = detect_k23_induced_minor(g)
    if res.contains_k23 and not validate_witness(g, res.witness):
        raise AssertionError("pipeline witness failed validation")
    return (res.contains_k23,) + tuple(run_oracle(g, m)[0] for m in XCHECK_METHODS[1:])


def _check_batch(n: int, batch):
    return [check_one(n, edges) for edges in batch]


def xcheck_graphs(n: int, count, p: float, seed: int):
    """Yield edge lists: every labelled graph on n vertices, or ``count`` samples of G(n, p)."""
    if count == "exhaustive":
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        return
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(n, p, rng.getrandbits(64)).edges()


def _batched(it, size):
    batch = []
    for x in it:
        batch.append(x)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def run_xcheck(n: int, count, p: float, seed: int, workers: int = 1) -> dict:
    k = len(XCHECK_METHODS)
    matrix = [[0] * k for _ in range(k)]
    positives = [0] * k
    total = agree_all = 0
    counterexample = None
    t0 = time.perf_counter()
    batches = _batched(xcheck_graphs(n, count, p, seed), 256)
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        batches = list(batches)
        results = zip(batches, pool.map(_check_batch, repeat(n), batches))
    else:
        pool = None
        results = ((b, _check_batch(n, b)) for b in batches)
    try:
        for batch, answers in results:
            for edges, ans in zip(batch, answers):
                total += 1
                for i in range(k):
                    positives[i] += ans[i]
                    for j in range(k):
                        matrix[i][j] += ans[i] == ans[j]
                if len(set(ans)) == 1:
                    agree_all += 1
                elif counterexample is None:
                    counterexample = {"answers": dict(zip(XCHECK_METHODS, ans)),
                                      "graph": render_edge_list(Graph(n, edges))}
    finally:
        if pool is not None:
            pool.shutdown()
    return {
        "schema": report.SCHEMA,
        "n": n,
        "count": count,
        "p": p,
        "seed": seed,
        "methods": list(XCHECK_METHODS),
        "agreement": {"all": agree_all, "total": total, "matrix": matrix},
        "positives": dict(zip(XCHECK_METHODS, positives)),
        "counterexample": counterexample,
        "timings_ms": {"total": _ms(t0)},
    }


def _count_arg(s: str):
    if s == "exhaustive":
        return s
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError("count must be an integer or 'exhaustive'") from None
    if v < 0:
        raise argparse.ArgumentTypeError("count must be non-negative")
    return v


def cmd_xcheck(args) -> int:
    if args.n < 0:
        raise ValueError("n must be non-negative")
    for m in ("model", "exhaustive", "separators"):
        _guard(args.n, m, args.force)
    if args.count == "exhaustive" and args.n > 7 and not args.force:
        raise Refused(f"exhaustive sweep over n={args.n} is {2 ** (args.n * (args.n - 1) // 2)} graphs; "
                      "pass --force to run anyway")
    out = run_xcheck(args.n, args.count, args.p, args.seed, worker_count())
    sys.stdout.write(report.dumps(out, report.XCHECK_KEYS, timings=not args.no_timings))
    ag = out["agreement"]
    print(f"agreement {ag['all']}/{ag['total']}", file=sys.stderr)
    return EXIT_OK if ag["all"] == ag["total"] else EXIT_DISAGREE


# bench


def bench_row(n: int, p: float, index: int, seed: int) -> dict:
    g = random_graph(n, p, seed)
    t0 = time.perf_counter()
    res = detect_k23_induced_minor(g)
    total = _ms(t0)
    row = {"n": n, "p": p, "index": index, "seed": seed, "m": g.m,
           "contains_k23": int(res.contains_k23), "stage": res.stage}
    for s in STAGES:
        row[f"{s}_ms"] = round(res.timings_ms.get(s, 0.0), 3)
    row["total_ms"] = total
    return row


def _bench_batch(jobs):
    return [bench_row(*j) for j in jobs]


def cmd_bench(args) -> int:
    import csv

    from .plots import plot_bench

    rng = random.Random(args.seed)
    jobs = [(n, args.p, i, rng.getrandbits(64)) for n in args.n for i in range(args.count)]
    workers = worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [r for chunk in pool.map(_bench_batch, [[j] for j in jobs]) for r in chunk]
    else:
        rows = _bench_batch(jobs)
    os.makedirs(args.out_dir, exist_ok=True)
    csv_path = os.path.join(args.out_dir, "bench.csv")
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]) if rows else ["n"])
        writer.writeheader()
        writer.writerows(rows)
    png_path = os.path.join(args.out_dir, "bench.png")
    plot_bench(rows, png_path)
    print(csv_path)
    print(png_path)
    return EXIT_OK


# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="truemper", description="K_{2,3} induced-minor recognition.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("file", help="graph file, or '-' for standard input")
        p.add_argument("--format", choices=("edges", "graph6"), default=None,
                       help="input format (default: by extension, .g6 means graph6)")
        p.add_argument("--no-timings", action="store_true", help="omit the timings field")

    p = sub.add_parser("detect", help="run the detection pipeline")
    add_input(p)
    p.add_argument("--stage", choices=STAGES, help="run only this detector (after its preconditions)")
    p.add_argument("--witness", action="store_true", help="report the witness")
    p.add_argument("--model", action="store_true", help="report the K_{2,3} model")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("oracle", help="run a brute-force oracle")
    add_input(p)
    p.add_argument("--method", choices=tuple(ORACLE_LIMITS), default="model")
    p.add_argument("--force", action="store_true", help="ignore the size limit")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("pattern", help="theta|pyramid|prism|broken-wheel|plant|gk|cycle|complete|path|"
                                   "random|chordal|cube|co-domino|net|k23")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--format", choices=("edges", "graph6"), default="edges")
    p.add_argument("--background", type=int, default=4, help="plant: background vertices")
    p.add_argument("--edge-prob", type=float, default=0.3, help="plant: attachment probability")
    p.add_argument("--relabel", action="store_true", help="plant: shuffle vertex labels")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("xcheck", help="cross-check the pipeline against every oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=_count_arg, default=100)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true")
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_xcheck)

    p = sub.add_parser("bench", help="time the pipeline on random graphs; writes CSV and a figure")
    p.add_argument("--n", type=int, nargs="+", default=[10, 15, 20, 25])
    p.add_argument("--p", type=float, default=0.15)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", default="bench-out")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"truemper: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"truemper: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Refused as exc:
        print(f"truemper: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"truemper: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
