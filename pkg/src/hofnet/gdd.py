"""Generalized-degree distributions: exact recurrences, asymptotics, fits.

``Y(l, t, r)`` counts the ``l``-faces of ``K_t(K, m)`` that lie in exactly
``(m+1)**r`` facets. The recurrences hold for ``K >= 3``; for ``K = 2`` the
central midpoint triangle breaks them (edges then have degree 1 or ``m+2``).
All counts are exact Python integers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

from ._fit import loglog_ols
from .complex import PureComplex, face_degrees
from .errors import DomainError, EstimationError
from .generator import compute_S

CLOSED_FORM = "closed_form"
LEAST_SQUARES = "least_squares"


def _check_theory_K(K: int) -> None:
    if K < 3:
        raise DomainError(
            f"theory tables need K >= 3 (got K={K}); for K = 2 the edge degrees "
            "form a two-point law on {1, m+2} and the recurrences do not apply"
        )


@lru_cache(maxsize=256)
def _history(K: int, m: int, t: int) -> tuple:
    S = compute_S(K, m)
    rows = [
        {(l, r): (math.comb(K + 1, l + 1) if r == 0 else 0) for l in range(1, K + 1) for r in range(K - l + 1)}
    ]
    for step in range(1, t + 1):
        prev = rows[-1]
        cur = {(K, 0): S**step}
        for l in range(K - 1, 0, -1):
            for r in range(1, K - l + 1):
                cur[l, r] = (l + 1) * prev[l, r] + (l + 2) * prev[l + 1, r - 1]
            direct = (l + 1) * prev[l, 0] + m * (K + 1) * S ** (step - 1) * math.comb(K, l)
            complement = math.comb(K + 1, l + 1) * S**step - sum(
                (m + 1) ** j * cur[l, j] for j in range(1, K - l + 1)
            )
            if direct != complement:
                raise RuntimeError(
                    f"degree-1 count disagrees for K={K}, m={m}, t={step}, l={l}: "
                    f"{direct} != {complement}"
                )
            cur[l, 0] = direct
        rows.append(cur)
    return tuple(MappingProxyType(row) for row in rows)


@dataclass(frozen=True)
class TheoryTable:
    K: int
    m: int
    t: int
    rows: tuple  # rows[s][(l, r)] for s = 0..t, read-only mappings

    @property
    def S(self) -> int:
        return compute_S(self.K, self.m)

    def Y(self, l: int, r: int, t: int | None = None) -> int:
        t = self.t if t is None else t
        if not 0 <= t <= self.t:
            raise DomainError(f"table only covers t = 0..{self.t}")
        return self.rows[t].get((l, r), 0)

    def degree_counts(self, l: int, t: int | None = None) -> dict[int, int]:
        """Nonzero counts keyed by generalized degree ``(m+1)**r``."""
        if not 1 <= l <= self.K:
            raise DomainError(f"face dimension {l} outside 1..{self.K}")
        out: Counter = Counter()
        for r in range(self.K - l + 1):
            y = self.Y(l, r, t)
            if y:
                out[(self.m + 1) ** r] += y
        return dict(sorted(out.items()))


def y_table(K: int, m: int, t: int) -> TheoryTable:
    """Exact ``Y(l, s, r)`` for all ``s <= t``.

    The degree-1 row is evaluated twice, once from the multiplier-face count
    and once from facet-incidence conservation, and the two must agree.
    """
    _check_theory_K(K)
    if m < 0 or t < 0:
        raise DomainError("need m >= 0 and t >= 0")
    return TheoryTable(K, m, t, _history(K, m, t))


def _check_asymptotic_args(K: int, m: int, l: int) -> None:
    _check_theory_K(K)
    if m < 1:
        raise DomainError("asymptotic constants need m >= 1")
    if not 1 <= l <= K:
        raise DomainError(f"face dimension {l} outside 1..{K}")


def growth_factor_exact(K: int, m: int, l: int, r: int) -> Fraction:
    _check_asymptotic_args(K, m, l)
    if not 0 <= r <= K - l:
        raise DomainError(f"r={r} outside 0..{K - l}")
    S = compute_S(K, m)
    top = l + r
    if top == K:
        c = Fraction(1)
    else:
        c = Fraction(math.comb(K + 1, top + 1) * m * (top + 1), S - top - 1)
    for j in range(r):
        c *= Fraction(l + j + 2, S - l - j - 1)
    return c


def growth_factor(K: int, m: int, l: int, r: int) -> float:
    """Limit of ``Y(l, t, r) / S**t`` as ``t`` grows."""
    return float(growth_factor_exact(K, m, l, r))


def ratio_C_l(K: int, m: int, l: int) -> float:
    """Limiting ratio of degree-1 to degree-(m+1) counts among ``l``-faces."""
    _check_theory_K(K)
    if not 1 <= l <= K - 1:
        raise DomainError(f"C_l needs 1 <= l <= K-1, got l={l}")
    S = compute_S(K, m)
    return float(Fraction((S - l - 2) * (l + 1), (K - l) * (l + 2)))


@dataclass(frozen=True)
class GammaEstimate:
    gamma: float
    method: str
    points_used: int
    r_squared: float | None = None


def gamma_closed_form(K: int, m: int, l: int) -> GammaEstimate:
    """Two-point exponent from the first and last support points.

    ``log((l+1)/(K+1) * C(S-l-2, K-l)) / ((K-l) log(m+1))``, with the
    binomial kept as an exact integer so huge ``S`` cannot overflow.
    """
    _check_asymptotic_args(K, m, l)
    if l == K:
        raise DomainError("l must be below K")
    S = compute_S(K, m)
    num = math.log(l + 1) - math.log(K + 1) + math.log(math.comb(S - l - 2, K - l))
    return GammaEstimate(num / ((K - l) * math.log(m + 1)), CLOSED_FORM, 2)


@dataclass(frozen=True)
class DegreeDistribution:
    l: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def support(self) -> dict[int, float]:
        """Probability of each generalized degree (exact int division)."""
        total = self.total
        return {k: c / total for k, c in self.counts.items()}


def theory_distribution(K: int, m: int, t: int, l: int) -> DegreeDistribution:
    table = y_table(K, m, t)
    if not 1 <= l <= K - 1:
        raise DomainError(f"face dimension {l} outside 1..{K - 1}")
    return DegreeDistribution(l, table.degree_counts(l))


def empirical_gdd(c: PureComplex, l: int) -> DegreeDistribution:
    """Histogram of generalized degrees over all ``l``-faces of ``c``."""
    if not 1 <= l <= c.K - 1:
        raise DomainError(f"face dimension {l} outside 1..{c.K - 1}")
    hist = Counter(face_degrees(c, l).values())
    return DegreeDistribution(l, dict(sorted(hist.items())))


def fit_power_law(d: DegreeDistribution) -> GammaEstimate:
    """Unweighted least squares of ``log P(k)`` on ``log k``; ``gamma = -slope``."""
    pts = [(k, p) for k, p in d.support.items() if p > 0]
    if len(pts) < 2:
        raise EstimationError(f"need at least 2 support points, got {len(pts)}")
    k, p = zip(*pts)
    slope, _, r2 = loglog_ols(k, p)
    return GammaEstimate(0.0 - slope, LEAST_SQUARES, len(pts), r2)


def smallest_t_above(S: int, threshold: float) -> int:
    """Smallest ``t`` with ``S**t > threshold``."""
    if S < 2:
        raise DomainError("S must be >= 2")
    t = 0
    while S**t <= threshold:
        t += 1
    return t
