"""Seeded Monte Carlo estimate of trapping times by direct walk simulation.

Every walk owns a random stream keyed by ``(seed, start_vertex, walk_index)``:
the ``s``-th uniform of a walk is a SplitMix64 output at counter ``s`` of its
key.  Walks are advanced in vectorized batches, but because no stream is
shared the result does not depend on batching or on which walks run
together.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AllWalksCapped, InvalidSize
from .exact import _as_trap
from .graph import Graph

__all__ = ["SimConfig", "SimEstimate", "simulate", "walk_uniforms"]

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def _walk_keys(seed: int, starts: np.ndarray, walks: np.ndarray) -> np.ndarray:
    base = _mix64(np.array([seed & _MASK64], dtype=np.uint64))
    k = _mix64(base + (starts.astype(np.uint64) + np.uint64(1)) * _GOLDEN)
    return _mix64(k ^ _mix64((walks.astype(np.uint64) + np.uint64(1)) * _GOLDEN))


def _uniforms(keys: np.ndarray, steps: np.ndarray) -> np.ndarray:
    bits = _mix64(keys + (steps.astype(np.uint64) + np.uint64(1)) * _GOLDEN)
    return (bits >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


def walk_uniforms(seed: int, start: int, walk: int, count: int) -> np.ndarray:
    """First ``count`` uniforms of one walk's stream (for inspection and tests)."""
    with np.errstate(over="ignore"):
        key = _walk_keys(seed, np.array([start]), np.array([walk]))
        return _uniforms(np.repeat(key, count), np.arange(count))


@dataclass(frozen=True)
class SimConfig:
    seed: int = 0
    walks_per_vertex: int = 10_000
    max_steps: int = 1_000_000
    batch_walks: int = 1 << 20

    def __post_init__(self):
        if self.walks_per_vertex < 1:
            raise InvalidSize("walks_per_vertex must be >= 1")
        if self.max_steps < 1:
            raise InvalidSize("max_steps must be >= 1")
        if self.batch_walks < 1:
            raise InvalidSize("batch_walks must be >= 1")


@dataclass(frozen=True)
class SimEstimate:
    mean_tt: np.ndarray
    stderr_tt: np.ndarray
    att_estimate: float
    att_stderr: float
    capped_walks: int
    # shortest completed walk per start vertex (0 at the trap)
    min_steps: np.ndarray

    @property
    def valid(self) -> bool:
        """False when any walk hit ``max_steps`` (the estimate is biased)."""
        return self.capped_walks == 0

    def as_dict(self) -> dict:
        return {
            "att_estimate": self.att_estimate,
            "att_stderr": self.att_stderr,
            "capped_walks": self.capped_walks,
            "valid": self.valid,
            "mean_tt": self.mean_tt.tolist(),
            "stderr_tt": self.stderr_tt.tolist(),
        }


def _run_batch(indptr, indices, deg, theta, max_steps, seed, starts, walk_ids):
    keys = _walk_keys(seed, starts, walk_ids)
    pos = starts.copy()
    length = np.zeros(len(starts), dtype=np.int64)
    done = np.zeros(len(starts), dtype=bool)
    active = np.arange(len(starts))
    while active.size:
        u = _uniforms(keys[active], length[active])
        here = pos[active]
        choice = np.minimum((u * deg[here]).astype(np.int64), deg[here] - 1)
        pos[active] = indices[indptr[here] + choice]
        length[active] += 1
        absorbed = pos[active] == theta
        done[active[absorbed]] = True
        keep = ~absorbed & (length[active] < max_steps)
        active = active[keep]
    return length, done


def simulate(g: Graph, trap, cfg: SimConfig = SimConfig()) -> SimEstimate:
    """Estimate ``TT_i`` for every non-trap ``i`` from independent walks.

    Capped walks are excluded from the means and counted in
    ``capped_walks``; the estimate is then flagged as not ``valid``.
    """
    trap = _as_trap(g, trap)
    theta = trap.theta
    n = g.vertex_count
    deg = np.asarray(g.degrees, dtype=np.int64)
    indptr = np.concatenate([[0], np.cumsum(deg)]).astype(np.int64)
    indices = np.fromiter((w for nb in g.neighbors for w in nb), dtype=np.int64, count=int(indptr[-1]))

    sources = np.array([v for v in range(n) if v != theta], dtype=np.int64)
    w = cfg.walks_per_vertex
    total = len(sources) * w
    sum_len = np.zeros(n)
    count = np.zeros(n)
    lengths_all = np.empty(total, dtype=np.int64)
    done_all = np.empty(total, dtype=bool)

    with np.errstate(over="ignore"):
        for lo in range(0, total, cfg.batch_walks):
            flat = np.arange(lo, min(total, lo + cfg.batch_walks))
            starts = sources[flat // w]
            walk_ids = flat % w
            lengths, done = _run_batch(indptr, indices, deg, theta, cfg.max_steps, cfg.seed, starts, walk_ids)
            lengths_all[flat] = lengths
            done_all[flat] = done

    starts_all = np.repeat(sources, w)
    ok = done_all
    sum_len = np.bincount(starts_all[ok], weights=lengths_all[ok], minlength=n)
    count = np.bincount(starts_all[ok], minlength=n).astype(float)
    for v in sources:
        if count[v] == 0:
            raise AllWalksCapped(int(v))

    mean = np.zeros(n)
    mean[sources] = sum_len[sources] / count[sources]
    dev = (lengths_all[ok] - mean[starts_all[ok]]) ** 2
    ss = np.bincount(starts_all[ok], weights=dev, minlength=n)
    stderr = np.zeros(n)
    with np.errstate(invalid="ignore", divide="ignore"):
        var = np.where(count > 1, ss / np.maximum(count - 1, 1), np.nan)
        stderr[sources] = np.sqrt(var[sources] / count[sources])

    shortest = np.full(n, np.iinfo(np.int64).max)
    np.minimum.at(shortest, starts_all[ok], lengths_all[ok])
    shortest[theta] = 0

    m = len(sources)
    return SimEstimate(
        mean_tt=mean,
        stderr_tt=stderr,
        att_estimate=float(mean[sources].sum() / m),
        att_stderr=float(np.sqrt(np.sum(stderr[sources] ** 2)) / m),
        capped_walks=int(total - ok.sum()),
        min_steps=shortest,
    )
