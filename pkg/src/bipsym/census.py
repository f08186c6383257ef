"""Exhaustive censuses of Aut(K_{n,m}) by classification case.

Enumeration is split into contiguous index ranges; each range is turned
into a batch of permutation arrays, run through the cycle-structure kernel
(see :mod:`bipsym.kernels`), and the per-signature tallies are merged by
summation.  Classification is memoized per distinct signature, so the
kernel dominates the runtime.  Reports are cached as one canonical-JSON
file per (shape, version, seed).
"""

from __future__ import annotations

import json
import math
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path

import numpy as np

from ._version import __version__
from .classifier import classify
from .core import (
    DEFAULT_ENUMERATION_CAP,
    BipartiteShape,
    enumerate_automorphisms,
    automorphism_count,
    signature,
)
from .errors import OutOfTheoremScope, TooLarge
from .geometry import realize
from .jsonio import canonical_json
from .kernels import cycle_stats, stats_row_to_signature
from .verifier import verify

CACHE_ENV_VAR = "BIPSYM_CACHE_DIR"
_CHUNK = 1 << 15


@dataclass
class CensusReport:
    shape: BipartiteShape
    total: int
    per_case: dict[str, int] = field(default_factory=dict)
    unrealizable_op: int = 0
    unrealizable_or: int = 0
    realized_verified: int | None = None
    tool_version: str = __version__
    seed: int = 1


def report_to_obj(report: CensusReport) -> dict:
    return {
        "n": report.shape.n,
        "m": report.shape.m,
        "total": report.total,
        "per_case": dict(report.per_case),
        "unrealizable_op": report.unrealizable_op,
        "unrealizable_or": report.unrealizable_or,
        "realized_verified": report.realized_verified,
        "tool_version": report.tool_version,
        "seed": report.seed,
    }


def report_from_obj(obj: dict) -> CensusReport:
    return CensusReport(
        shape=BipartiteShape(int(obj["n"]), int(obj["m"])),
        total=int(obj["total"]),
        per_case={k: int(v) for k, v in obj["per_case"].items()},
        unrealizable_op=int(obj["unrealizable_op"]),
        unrealizable_or=int(obj["unrealizable_or"]),
        realized_verified=(
            None if obj["realized_verified"] is None else int(obj["realized_verified"])
        ),
        tool_version=obj["tool_version"],
        seed=int(obj["seed"]),
    )


def report_csv(report: CensusReport) -> str:
    """Two-column CSV: one row per case label, then the summary rows."""
    lines = ["key,value"]
    for label in sorted(report.per_case):
        lines.append(f"case:{label},{report.per_case[label]}")
    lines.append(f"total,{report.total}")
    lines.append(f"unrealizable_op,{report.unrealizable_op}")
    lines.append(f"unrealizable_or,{report.unrealizable_or}")
    rv = "" if report.realized_verified is None else report.realized_verified
    lines.append(f"realized_verified,{rv}")
    lines.append(f"n,{report.shape.n}")
    lines.append(f"m,{report.shape.m}")
    lines.append(f"seed,{report.seed}")
    lines.append(f"tool_version,{report.tool_version}")
    return "\n".join(lines) + "\n"


def cache_path(cache_dir: str | Path, shape: BipartiteShape, seed: int) -> Path:
    name = f"census_{shape.n}_{shape.m}_{__version__}_{seed}.json"
    return Path(cache_dir) / name


def _signature_tallies(
    shape: BipartiteShape, backend: str | None, workers: int
) -> Counter:
    """Count automorphisms per cycle-structure stat row over the full group."""
    n, m = shape.n, shape.m
    vtable = np.array(list(permutations(range(n))), dtype=np.int64)
    wtable = np.array(list(permutations(range(m))), dtype=np.int64)
    pairs = len(vtable) * len(wtable)
    flags = (False, True) if n == m else (False,)

    tasks = [
        (swap, lo, min(lo + _CHUNK, pairs))
        for swap in flags
        for lo in range(0, pairs, _CHUNK)
    ]

    def process(task) -> Counter:
        swap, lo, hi = task
        idx = np.arange(lo, hi)
        vi, wi = idx // len(wtable), idx % len(wtable)
        batch = np.empty((hi - lo, n + m), dtype=np.int64)
        if swap:
            batch[:, :n] = vtable[vi] + n
            batch[:, n:] = wtable[wi]
        else:
            batch[:, :n] = vtable[vi]
            batch[:, n:] = wtable[wi] + n
        rows = cycle_stats(batch, n, backend)
        uniq, counts = np.unique(rows, axis=0, return_counts=True)
        return Counter(
            {tuple(int(x) for x in row): int(c) for row, c in zip(uniq, counts)}
        )

    tally: Counter = Counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(process, tasks):
                tally.update(part)
    else:
        for task in tasks:
            tally.update(process(task))
    return tally


def census(
    shape: BipartiteShape,
    realize_all: bool = False,
    seed: int = 1,
    cache_dir: str | Path | None = None,
    backend: str | None = None,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> CensusReport:
    """Classify every automorphism of K_{n,m} and tally the matched cases.

    With ``realize_all``, additionally run realize + verify on every
    (automorphism, orientation) pair the classifier marks realizable and
    count the passing certificates.  Deterministic given (shape, seed); a
    cached report is returned as-is when present.
    """
    if shape.n <= 2 or shape.m <= 2:
        raise OutOfTheoremScope(
            f"census requires n, m > 2; got ({shape.n}, {shape.m})"
        )
    pairs = math.factorial(shape.n) * math.factorial(shape.m)
    if pairs > cap:
        raise TooLarge(f"n!*m! = {pairs} exceeds cap {cap}")

    path = cache_path(cache_dir, shape, seed) if cache_dir is not None else None
    if path is not None and path.exists():
        try:
            report = report_from_obj(json.loads(path.read_text("utf-8")))
        except (ValueError, KeyError):
            report = None  # unreadable cache entry; recompute and overwrite
        if report is not None and (not realize_all or report.realized_verified is not None):
            return report

    per_case: dict[str, int] = {}
    unreal_op = 0
    unreal_or = 0
    for row, count in sorted(_signature_tallies(shape, backend, workers).items()):
        verdict = classify(stats_row_to_signature(np.array(row), shape))
        for case in verdict.op_cases + verdict.or_cases:
            per_case[case.label] = per_case.get(case.label, 0) + count
        if not verdict.op_realizable:
            unreal_op += count
        if not verdict.or_realizable:
            unreal_or += count

    realized_verified = None
    if realize_all:
        realized_verified = 0
        for aut in enumerate_automorphisms(shape, cap):
            verdict = classify(signature(aut))
            for orientation, realizable in (
                ("op", verdict.op_realizable),
                ("or", verdict.or_realizable),
            ):
                if not realizable:
                    continue
                iso, emb = realize(aut, orientation, seed)
                if verify(aut, iso, emb, tol=1e-9).overall:
                    realized_verified += 1

    report = CensusReport(
        shape=shape,
        total=automorphism_count(shape),
        per_case=dict(sorted(per_case.items())),
        unrealizable_op=unreal_op,
        unrealizable_or=unreal_or,
        realized_verified=realized_verified,
        tool_version=__version__,
        seed=seed,
    )
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(canonical_json(report_to_obj(report)), "utf-8")
    return report


def default_cache_dir() -> str | None:
    return os.environ.get(CACHE_ENV_VAR) or None
