"""Box-counting and similarity dimensions of network skeletons.

Two covering heuristics are provided:

* compact-box-burning (CBB): boxes are grown from random seeds and every pair
  of nodes in a box is closer than ``l_B``. Randomized, so results are
  averaged over trials.
* overlapping-box-covering (OBCA): balls of radius ``r_B`` around nodes,
  taken smallest-first whenever they add coverage, then pruned of redundant
  balls. Deterministic. Its box size is reported as ``l_B = 2 r_B + 1``.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.sparse import csgraph

from ._fit import loglog_ols
from .complex import Skeleton
from .errors import DisconnectedGraphError, DomainError, EstimationError
from .generator import GeneratorParams

CBB = "cbb"
OBCA = "obca"
DEFAULT_TRIALS = 100


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    d: np.ndarray  # (n, n) int32 hop counts

    @property
    def n(self) -> int:
        return self.d.shape[0]

    @property
    def diameter(self) -> int:
        return int(self.d.max()) if self.n else 0

    def __getitem__(self, uv) -> int:
        return int(self.d[uv])


def all_pairs_distances(g: Skeleton, threads: int | None = 1) -> DistanceMatrix:
    """Exact hop distances by one BFS per source node.

    Sources are split into contiguous chunks when ``threads > 1``; the chunks
    are stacked back in order so the result does not depend on scheduling.
    """
    if g.n == 0:
        return DistanceMatrix(np.zeros((0, 0), dtype=np.int32))
    csr = g.to_csr()
    threads = max(1, min(threads or os.cpu_count() or 1, g.n))

    def run(idx: np.ndarray) -> np.ndarray:
        return csgraph.shortest_path(csr, method="D", directed=False, unweighted=True, indices=idx)

    if threads == 1:
        raw = run(np.arange(g.n))
    else:
        chunks = np.array_split(np.arange(g.n), threads)
        with ThreadPoolExecutor(threads) as pool:
            raw = np.vstack(list(pool.map(run, chunks)))
    if not np.isfinite(raw).all():
        raise DisconnectedGraphError("graph is disconnected")
    return DistanceMatrix(raw.astype(np.int32))


def cbb_boxes(dm: DistanceMatrix, l_B: int, rng: np.random.Generator) -> list[list[int]]:
    """Partition the nodes into compact boxes of diameter below ``l_B``."""
    if l_B < 1:
        raise DomainError(f"box size must be >= 1, got {l_B}")
    d = dm.d
    uncovered = np.ones(dm.n, dtype=bool)
    boxes = []
    while uncovered.any():
        candidates = uncovered.copy()
        box = []
        while candidates.any():
            pool = np.flatnonzero(candidates)
            p = int(pool[rng.integers(len(pool))])
            box.append(p)
            candidates &= d[p] < l_B
            candidates[p] = False
        uncovered[box] = False
        boxes.append(box)
    return boxes


def cbb_cover(dm: DistanceMatrix, l_B: int, rng: np.random.Generator) -> int:
    """Number of CBB boxes; an upper bound on the minimum ``N_B``."""
    return len(cbb_boxes(dm, l_B, rng))


def obca_boxes(dm: DistanceMatrix, r_B: int) -> list[tuple[int, np.ndarray]]:
    """Selected ``(center, members)`` balls, in selection order."""
    if r_B < 0:
        raise DomainError(f"radius must be >= 0, got {r_B}")
    n = dm.n
    balls = dm.d <= r_B
    sizes = balls.sum(axis=1)
    order = np.lexsort((np.arange(n), sizes))

    covered = np.zeros(n, dtype=bool)
    selected = []
    for i in order:
        if not covered[balls[i]].all():
            selected.append(int(i))
            covered |= balls[i]

    multiplicity = balls[selected].sum(axis=0)
    keep = set(selected)
    for i in reversed(selected):
        if (multiplicity[balls[i]] >= 2).all():
            multiplicity -= balls[i]
            keep.discard(i)
    return [(i, np.flatnonzero(balls[i])) for i in selected if i in keep]


def obca_cover(dm: DistanceMatrix, r_B: int) -> int:
    return len(obca_boxes(dm, r_B))


class BoxSample(NamedTuple):
    l_B: int
    mean_N_B: float
    std_N_B: float
    trials: int


@dataclass(frozen=True)
class BoxCoveringResult:
    method: str
    samples: tuple[BoxSample, ...]


@dataclass(frozen=True)
class DimensionEstimate:
    d_B: float
    r_squared: float
    points_used: int


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one CBB trial, fixed by ``(seed, trial)``."""
    return np.random.default_rng([seed & 0xFFFF_FFFF_FFFF_FFFF, trial])


def fit_box_dimension(samples) -> DimensionEstimate:
    """Fit ``N_B ~ l_B^-d_B`` using only samples with ``mean N_B > 1``."""
    pts = [(s.l_B, s.mean_N_B) for s in samples if s.mean_N_B > 1]
    if len(pts) < 2:
        raise EstimationError(f"only {len(pts)} box sizes with N_B > 1")
    x, y = zip(*pts)
    slope, _, r2 = loglog_ols(x, y)
    return DimensionEstimate(-slope, r2, len(pts))


def box_dimension(
    g: Skeleton,
    method: str = CBB,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    threads: int | None = 1,
    dm: DistanceMatrix | None = None,
) -> tuple[BoxCoveringResult, DimensionEstimate]:
    """Box-covering sweep over all useful box sizes and the fitted ``d_B``.

    CBB uses ``l_B = 1 .. diameter + 1`` averaged over ``trials`` runs, each
    with its own :func:`trial_rng` stream. OBCA uses ``r_B = 0 ..
    ceil(diameter / 2)`` once, since it is deterministic.
    """
    method = method.lower()
    if method not in (CBB, OBCA):
        raise DomainError(f"unknown method {method!r}")
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if dm is None:
        dm = all_pairs_distances(g, threads)
    diam = dm.diameter

    if method == OBCA:
        samples = tuple(
            BoxSample(2 * r + 1, float(obca_cover(dm, r)), 0.0, 1)
            for r in range(math.ceil(diam / 2) + 1)
        )
    else:
        sizes = range(1, diam + 2)

        def one_trial(k: int) -> list[int]:
            rng = trial_rng(seed, k)
            return [cbb_cover(dm, l_B, rng) for l_B in sizes]

        workers = max(1, min(threads or os.cpu_count() or 1, trials))
        if workers == 1:
            counts = [one_trial(k) for k in range(trials)]
        else:
            with ThreadPoolExecutor(workers) as pool:
                counts = list(pool.map(one_trial, range(trials)))
        arr = np.asarray(counts, dtype=float)
        samples = tuple(
            BoxSample(l_B, float(arr[:, j].mean()), float(arr[:, j].std()), trials)
            for j, l_B in enumerate(sizes)
        )
    result = BoxCoveringResult(method, samples)
    return result, fit_box_dimension(samples)


def similarity_dimension(p: GeneratorParams) -> float:
    """``log S / log 2``: each iteration makes ``S`` copies at half the scale."""
    return math.log2(p.S)
