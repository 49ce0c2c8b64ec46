"""JSON report assembly. Key sets are fixed per schema version."""

from __future__ import annotations

import json

from ..oracle.minor import InducedMinorModel
from ..witness import Witness

SCHEMA = "truemper-report/1"

DETECT_KEYS = ("schema", "input", "n", "m", "contains_k23", "stage", "witness", "model", "precondition", "timings_ms")
ORACLE_KEYS = ("schema", "input", "n", "m", "method", "contains_k23", "certificate", "timings_ms")
XCHECK_KEYS = ("schema", "n", "count", "p", "seed", "methods", "agreement", "positives",
               "counterexample", "timings_ms")


def witness_json(w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {"kind": w.kind, **w.roles()}


def model_json(m: InducedMinorModel | None) -> dict | None:
    if m is None:
        return None
    return m.as_lists()


def ordered(report: dict, keys) -> dict:
    extra = set(report) - set(keys)
    if extra:
        raise KeyError(f"unexpected report keys {sorted(extra)}")
    return {k: report[k] for k in keys if k in report}


def dumps(report: dict, keys, timings: bool = True) -> str:
    out = ordered(report, keys)
    if not timings:
        out.pop("timings_ms", None)
    return json.dumps(out, indent=2) + "\n"
