"""Deterministic iterative construction of the fractal complexes K_t(K, m).

One iteration replaces every facet by ``S`` smaller facets: each edge gets a
midpoint, the ``K`` midpoints around every vertex are joined into a
``(K-1)``-simplex (a *bottom*), and every distinct bottom receives ``m`` new
multiplier nodes wired to all of its vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complex import MIDPOINT, MULTIPLIER, ORIGINAL, NodeRole, PureComplex, Simplex, Skeleton
from .errors import DomainError, SizeError

DEFAULT_FACET_CAP = 2_000_000


def compute_S(K: int, m: int) -> int:
    """Facet multiplication factor of one iteration."""
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if K == 1:
        return m + 2
    if K == 2:
        return 3 * m + 4
    return (m + 1) * (K + 1)


@dataclass(frozen=True)
class GeneratorParams:
    K: int
    m: int
    t: int
    seed: int = 0

    def __post_init__(self):
        if self.K < 1:
            raise DomainError(f"K must be >= 1, got {self.K}")
        if self.m < 0:
            raise DomainError(f"m must be >= 0, got {self.m}")
        if self.t < 0:
            raise DomainError(f"t must be >= 0, got {self.t}")

    @property
    def S(self) -> int:
        return compute_S(self.K, self.m)


def predicted_facets(p: GeneratorParams) -> int:
    """Exact facet count ``S**t`` (Python ints never overflow)."""
    return p.S**p.t


@dataclass(frozen=True)
class IterationState:
    """A complex together with the bookkeeping of the iteration that built it.

    ``midpoints`` maps each edge of the previous skeleton to its midpoint and
    ``bottoms`` holds the distinct bottoms created; both are empty at time 0.
    """

    complex: PureComplex
    time: int = 0
    midpoints: dict[tuple[int, int], int] | None = None
    bottoms: frozenset[Simplex] = frozenset()


def initial_complex(K: int, params: GeneratorParams | None = None) -> PureComplex:
    """A single ``K``-simplex on nodes ``0..K``."""
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    nodes = tuple(range(K + 1))
    skel = Skeleton.from_edges(
        K + 1, combinations(nodes, 2), [NodeRole(ORIGINAL, 0)] * (K + 1)
    )
    return PureComplex(K, skel, (nodes,), params)


def iterate(state: IterationState, m: int) -> IterationState:
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    c = state.complex
    K = c.K
    t = state.time + 1
    n = c.n
    roles = list(c.skeleton.roles or ())

    old_edges = sorted({e for f in c.facets for e in combinations(f, 2)})
    midpoint: dict[tuple[int, int], int] = {}
    for e in old_edges:
        midpoint[e] = n
        n += 1
    roles.extend([NodeRole(MIDPOINT, t)] * len(old_edges))

    edges: set[tuple[int, int]] = set()
    for (u, v), x in midpoint.items():
        # subdivision: u-v is dropped, u-x and x-v take its place
        edges.add((u, x))
        edges.add((v, x))

    facets: list[Simplex] = []
    bottoms: set[Simplex] = set()
    for f in c.facets:
        for v in f:
            bottom = tuple(sorted(midpoint[(v, w) if v < w else (w, v)] for w in f if w != v))
            facets.append((v,) + bottom)
            bottoms.add(bottom)
        if K == 2:
            facets.append(tuple(sorted(midpoint[e] for e in combinations(f, 2))))

    for bottom in sorted(bottoms):
        edges.update(combinations(bottom, 2))
        for _ in range(m):
            facets.append(bottom + (n,))
            edges.update((u, n) for u in bottom)
            n += 1
            roles.append(NodeRole(MULTIPLIER, t))

    skel = Skeleton.from_edges(n, edges, roles)
    facets.sort()
    new = PureComplex(K, skel, tuple(facets), c.params)
    return IterationState(new, t, midpoint, frozenset(bottoms))


def generate(p: GeneratorParams, facet_cap: int | None = DEFAULT_FACET_CAP) -> PureComplex:
    """Build ``K_t(K, m)``.

    Raises:
        SizeError: if ``S**t`` exceeds ``facet_cap`` (checked before any work).
    """
    predicted = predicted_facets(p)
    if facet_cap is not None and predicted > facet_cap:
        raise SizeError(predicted, facet_cap)
    state = IterationState(initial_complex(p.K, p))
    for _ in range(p.t):
        state = iterate(state, p.m)
    return state.complex
