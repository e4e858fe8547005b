"""Pure simplicial complexes stored as facets plus a 1-skeleton.

Simplices are plain sorted tuples of node ids. A :class:`PureComplex` is the
downward closure of its facets; it is *not* the clique complex of its
skeleton, which for ``K >= 3`` contains extra (non-facet) triangles between
midpoints.
"""

from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np
from scipy import sparse

from .errors import DomainError

if TYPE_CHECKING:
    from .generator import GeneratorParams

Simplex = tuple[int, ...]

ORIGINAL = "original"
MIDPOINT = "midpoint"
MULTIPLIER = "multiplier"
ROLE_KINDS = (ORIGINAL, MIDPOINT, MULTIPLIER)


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form of a vertex collection: a strictly increasing tuple."""
    s = tuple(sorted(int(v) for v in vertices))
    if not s:
        raise DomainError("a simplex needs at least one vertex")
    if s[0] < 0:
        raise DomainError(f"negative node id in {s}")
    if any(a == b for a, b in zip(s, s[1:])):
        raise DomainError(f"repeated vertex in {s}")
    return s


def dim(s: Simplex) -> int:
    return len(s) - 1


@dataclass(frozen=True)
class NodeRole:
    kind: str
    birth: int

    def __post_init__(self):
        if self.kind not in ROLE_KINDS:
            raise DomainError(f"unknown node role {self.kind!r}")
        if self.kind == ORIGINAL and self.birth != 0:
            raise DomainError("original nodes are born at time 0")
        if self.kind != ORIGINAL and self.birth < 1:
            raise DomainError(f"{self.kind} nodes are born at time >= 1")


@dataclass(frozen=True)
class Skeleton:
    """Undirected simple graph with sorted neighbor tuples per node."""

    n: int
    neighbors: tuple[tuple[int, ...], ...]
    roles: tuple[NodeRole, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        roles: Sequence[NodeRole] | None = None,
    ) -> "Skeleton":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        if roles is not None:
            if len(roles) != n:
                raise DomainError("one role per node is required")
            roles = tuple(roles)
        return cls(n, tuple(tuple(sorted(a)) for a in adj), roles)

    @cached_property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.neighbors) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u, nb in enumerate(self.neighbors) for v in nb if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors[u]
        i = bisect.bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def to_csr(self) -> sparse.csr_matrix:
        """Symmetric 0/1 adjacency matrix."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.neighbors])
        if indptr[-1]:
            indices = np.fromiter(
                (v for a in self.neighbors for v in a), dtype=np.int32, count=int(indptr[-1])
            )
        else:
            indices = np.zeros(0, dtype=np.int32)
        data = np.ones(len(indices), dtype=np.int8)
        return sparse.csr_matrix((data, indices, indptr), shape=(self.n, self.n))


@dataclass(frozen=True)
class PureComplex:
    """Downward closure of a set of ``K``-simplices.

    ``facets`` is kept sorted so that two complexes built the same way compare
    equal and serialize identically.
    """

    K: int
    skeleton: Skeleton
    facets: tuple[Simplex, ...]
    params: "GeneratorParams | None" = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.skeleton.n

    @cached_property
    def _facets_by_vertex(self) -> list[list[int]]:
        index: list[list[int]] = [[] for _ in range(self.n)]
        for i, f in enumerate(self.facets):
            for v in f:
                index[v].append(i)
        return index

    def validate(self) -> None:
        """Raise :class:`DomainError` if a structural invariant is broken."""
        if self.K < 1:
            raise DomainError("K must be >= 1")
        seen = set()
        covered = set()
        for f in self.facets:
            if len(f) != self.K + 1:
                raise DomainError(f"facet {f} does not have K+1 = {self.K + 1} vertices")
            if simplex(f) != f:
                raise DomainError(f"facet {f} is not in canonical form")
            if f in seen:
                raise DomainError(f"duplicate facet {f}")
            seen.add(f)
            for u, v in combinations(f, 2):
                if not self.skeleton.has_edge(u, v):
                    raise DomainError(f"facet {f} is not a clique: missing edge ({u}, {v})")
                covered.add((u, v))
        if len(covered) != self.skeleton.n_edges:
            raise DomainError("skeleton has edges that lie in no facet")


def faces(s: Simplex, l: int) -> list[Simplex]:
    """All ``l``-dimensional faces of ``s`` (``l = dim(s)`` gives ``[s]``)."""
    if not 0 <= l <= dim(s):
        raise DomainError(f"face dimension {l} outside 0..{dim(s)}")
    return list(combinations(s, l + 1))


def face_count_within(d: int, f: int) -> int:
    """Number of ``d``-faces of an ``f``-simplex, ``C(f+1, d+1)``."""
    if not 0 <= d <= f:
        raise DomainError(f"need 0 <= d <= f, got d={d}, f={f}")
    return comb(f + 1, d + 1)


def face_degrees(c: PureComplex, l: int) -> Counter:
    """Map every ``l``-face of ``c`` to the number of facets containing it."""
    if not 0 <= l <= c.K:
        raise DomainError(f"face dimension {l} outside 0..{c.K}")
    counts: Counter = Counter()
    for f in c.facets:
        counts.update(combinations(f, l + 1))
    return counts


def enumerate_l_faces(c: PureComplex, l: int) -> set[Simplex]:
    """The ``l``-simplices of the complex (deduplicated faces of its facets)."""
    return set(face_degrees(c, l))


def generalized_degree(c: PureComplex, f: Simplex) -> int:
    """Number of facets of ``c`` that contain the simplex ``f``."""
    f = simplex(f)
    if len(f) > c.K:
        raise DomainError(f"{f} has dimension >= K = {c.K}")
    if f[-1] >= c.n:
        raise DomainError(f"{f} has a vertex outside the complex")
    # scan only the facets through the rarest vertex of f
    pivot = min(f, key=lambda v: len(c._facets_by_vertex[v]))
    members = set(f)
    k = sum(1 for i in c._facets_by_vertex[pivot] if members.issubset(c.facets[i]))
    if k == 0:
        raise DomainError(f"{f} is not a face of any facet")
    return k


def maximal_cliques(g: Skeleton) -> list[Simplex]:
    """Maximal cliques by Bron-Kerbosch with Tomita pivoting.

    Exponential in the worst case; meant for graphs of at most ~10^4 nodes
    with small cliques, like the skeletons produced here.
    """
    adj = [set(nb) for nb in g.neighbors]
    out: list[Simplex] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(p & adj[u]))
        for v in list(p - adj[pivot]):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p.remove(v)
            x.add(v)

    expand([], set(range(g.n)), set())
    out.sort()
    return out


def cliques_of_size(g: Skeleton, size: int) -> set[Simplex]:
    """All cliques with exactly ``size`` vertices, via maximal cliques."""
    if size < 1:
        raise DomainError("clique size must be >= 1")
    found: set[Simplex] = set()
    for q in maximal_cliques(g):
        if len(q) >= size:
            found.update(combinations(q, size))
    return found


def verify_facets_match_cliques(c: PureComplex) -> bool:
    """True iff the (K+1)-cliques of the skeleton are exactly the facets."""
    return cliques_of_size(c.skeleton, c.K + 1) == set(c.facets)
