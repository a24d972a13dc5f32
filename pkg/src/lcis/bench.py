"""Seeded instance generation, instrumented solves and benchmark sweeps.

Instances come from SplitMix64: the state starts at ``seed``; each draw adds
0x9E3779B97F4A7C15 to the state (mod 2**64) and returns the state mixed by

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

with products taken mod 2**64. An element is ``1 + draw % alphabet_size``.
``x`` takes the first ``n`` draws and ``y`` the next ``m``.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .core import LcisResult
from .full_dp import _fill
from .linear_dp import RowState, _orient, _sweep, _witness

MASK64 = (1 << 64) - 1
ALGOS = ("linear", "full")
CSV_FIELDS = ("seed", "n", "m", "alphabet", "algo", "length", "cells",
              "inner_steps", "reconstruct_steps", "wall_ns")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n: int
    m: int
    alphabet_size: int

    def __post_init__(self):
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.n < 0 or self.m < 0:
            raise ValueError("lengths must be non-negative")
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be at least 1")


def generate(cfg: GenConfig) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    rng = SplitMix64(cfg.seed)
    k = cfg.alphabet_size
    x = tuple(1 + rng.next_u64() % k for _ in range(cfg.n))
    y = tuple(1 + rng.next_u64() % k for _ in range(cfg.m))
    return x, y


@dataclass
class InstrumentReport:
    algo: str
    cells_allocated: int
    inner_steps: int
    reconstruct_steps: int
    wall_time_ns: int
    # work spent re-deriving a witness when the backward scan's pick does not
    # embed in the outer sequence; not part of reconstruct_steps
    repair_steps: int = 0


class _CountingAlloc:
    """Hands out zeroed int buffers and tracks how many cells are live."""

    def __init__(self):
        self.live = 0
        self.peak = 0

    def __call__(self, k: int) -> List[int]:
        self.live += k
        self.peak = max(self.peak, self.live)
        return [0] * k


def run_instrumented(x: Sequence, y: Sequence, algo: str = "linear",
                     want_witness: bool = True) -> Tuple[LcisResult, InstrumentReport]:
    if algo not in ALGOS:
        raise ValueError(f"unknown algo {algo!r}; expected one of {ALGOS}")
    alloc = _CountingAlloc()
    start = time.perf_counter_ns()
    if algo == "linear":
        outer, inner, _ = _orient(x, y)
        L, steps = _sweep(outer, inner, alloc)
        row = RowState(L)
    else:
        # the table's last row is indexed by y
        outer, inner = x, y
        rows, steps = _fill(x, y, alloc)
        row = RowState.from_row(rows[-1] if rows else [0] * len(y))
    scan = repair = 0
    witness = None
    if want_witness:
        witness, scan, repair = _witness(row, inner, outer)
    wall = time.perf_counter_ns() - start
    result = LcisResult(row.best, None if witness is None else tuple(witness))
    return result, InstrumentReport(algo, alloc.peak, steps, scan, wall, repair)


def _bench_one(task: Tuple[GenConfig, str, int, bool]) -> Dict[str, int]:
    cfg, algo, reps, warmup = task
    x, y = generate(cfg)
    if warmup:
        run_instrumented(x, y, algo)
    walls = []
    for _ in range(reps):
        result, rep = run_instrumented(x, y, algo)
        walls.append(rep.wall_time_ns)
    return {
        "seed": cfg.seed, "n": cfg.n, "m": cfg.m, "alphabet": cfg.alphabet_size,
        "algo": algo, "length": result.length, "cells": rep.cells_allocated,
        "inner_steps": rep.inner_steps, "reconstruct_steps": rep.reconstruct_steps,
        "wall_ns": int(statistics.median(walls)),
    }


def bench_sweep(config_grid: Iterable[GenConfig], algos: Iterable[str] = ALGOS,
                repetitions: int = 5, warmup: bool = True, workers: int = 1) -> List[Dict[str, int]]:
    """One row per (config, algo): counters plus the median wall time.

    With ``workers > 1`` instances run in separate processes; keep the
    default when the timings matter.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    algos = list(algos)
    for a in algos:
        if a not in ALGOS:
            raise ValueError(f"unknown algo {a!r}")
    tasks = [(cfg, a, repetitions, warmup) for cfg in config_grid for a in algos]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_bench_one, tasks))
    return [_bench_one(t) for t in tasks]


def to_csv(rows: List[Dict[str, int]]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def to_json(rows: List[Dict[str, int]]) -> str:
    return json.dumps([{k: r[k] for k in CSV_FIELDS} for r in rows], indent=2)
