"""Slow, obviously-correct reference computations used only by the tests.

None of these import the code paths they check.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations

import numpy as np


def bfs_distances(adj: list[list[int]]) -> list[list[float]]:
    n = len(adj)
    out = []
    for s in range(n):
        dist = [float("inf")] * n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if dist[v] == float("inf"):
                    dist[v] = dist[u] + 1
                    q.append(v)
        out.append(dist)
    return out


def brute_faces_with_degree(facets, l: int) -> dict[tuple, int]:
    """Every (l+1)-vertex set inside some facet, with a naive facet count."""
    candidates = set()
    for f in facets:
        candidates.update(combinations(sorted(f), l + 1))
    fsets = [set(f) for f in facets]
    return {s: sum(1 for f in fsets if set(s) <= f) for s in candidates}


def brute_cliques(adj: list[list[int]], size: int) -> set[tuple]:
    """All cliques of a given size by checking every vertex subset (tiny n)."""
    n = len(adj)
    nb = [set(a) for a in adj]
    return {
        s for s in combinations(range(n), size) if all(v in nb[u] for u, v in combinations(s, 2))
    }


def min_compact_cover(d, l_B: int) -> int:
    """Minimum number of boxes, each with all pairwise distances < l_B."""
    d = np.asarray(d)
    n = len(d)
    assert n <= 16
    compat = [sum(1 << j for j in range(n) if d[i][j] < l_B) for i in range(n)]
    # maximal compact sets = maximal cliques of the "closer than l_B" graph
    valid = []
    for mask in range(1, 1 << n):
        if all(mask & ~compat[i] == 0 for i in range(n) if mask >> i & 1):
            valid.append(mask)
    maximal = [a for a in valid if not any(b != a and a & b == a for b in valid)]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        return 1 + min(best(mask & ~b) for b in maximal if b & low)

    return best((1 << n) - 1)


def min_ball_cover(d, r_B: int) -> int:
    """Minimum number of radius-r_B balls (centered on nodes) covering all nodes."""
    d = np.asarray(d)
    n = len(d)
    full = (1 << n) - 1
    balls = [sum(1 << j for j in range(n) if d[i][j] <= r_B) for i in range(n)]
    for k in range(1, n + 1):
        for combo in combinations(balls, k):
            acc = 0
            for b in combo:
                acc |= b
            if acc == full:
                return k
    raise AssertionError("unreachable")


def random_connected_graph(n: int, extra: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Random spanning tree plus up to ``extra`` random chords."""
    edges = set()
    for v in range(1, n):
        u = int(rng.integers(v))
        edges.add((u, v))
    for _ in range(extra):
        u, v = sorted(int(x) for x in rng.choice(n, 2, replace=False))
        edges.add((u, v))
    return sorted(edges)


def path_by_subdivision(t: int) -> list[tuple[int, int]]:
    """Repeatedly halve every segment of an interval; returns consecutive pairs."""
    points = [0.0, 1.0]
    for _ in range(t):
        new = []
        for a, b in zip(points, points[1:]):
            new += [a, (a + b) / 2]
        points = new + [points[-1]]
    return list(zip(points, points[1:]))


def greedy_overlap_cover(d, r_B: int) -> int:
    """Plain-Python restatement of the overlapping cover: smallest balls
    first (ties by id), keep a ball if it adds coverage, then drop balls made
    redundant, newest first."""
    n = len(d)
    balls = {i: {j for j in range(n) if d[i][j] <= r_B} for i in range(n)}
    order = sorted(range(n), key=lambda i: (len(balls[i]), i))
    covered: set = set()
    chosen = []
    for i in order:
        if balls[i] - covered:
            chosen.append(i)
            covered |= balls[i]
    for i in reversed(list(chosen)):
        others = set().union(*(balls[j] for j in chosen if j != i))
        if balls[i] <= others:
            chosen.remove(i)
    return len(chosen)
