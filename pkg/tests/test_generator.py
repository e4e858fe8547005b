from itertools import combinations
from math import comb

import pytest

from hofnet import DomainError, GeneratorParams, SizeError, compute_S, generate, iterate, predicted_facets
from hofnet.complex import MIDPOINT, MULTIPLIER, ORIGINAL
from hofnet.generator import IterationState, initial_complex
from hofnet.io import dumps_complex

from oracles import path_by_subdivision


@pytest.mark.parametrize("K,m,S", [(1, 1, 3), (2, 3, 13), (3, 1, 8), (1, 0, 2), (2, 0, 4), (7, 2, 24)])
def test_compute_S(K, m, S):
    assert compute_S(K, m) == S


def test_compute_S_domain():
    with pytest.raises(DomainError):
        compute_S(0, 1)
    with pytest.raises(DomainError):
        compute_S(2, -1)


def _one_step(K, m):
    return iterate(IterationState(initial_complex(K)), m).complex


def test_iterate_K1():
    c = _one_step(1, 1)
    assert c.skeleton.edges() == [(0, 2), (1, 2), (2, 3)]
    assert c.facets == ((0, 2), (1, 2), (2, 3))


def test_iterate_K2():
    c = _one_step(2, 1)
    assert (c.n, c.skeleton.n_edges, len(c.facets)) == (9, 15, 7)
    assert [r.kind for r in c.skeleton.roles] == [ORIGINAL] * 3 + [MIDPOINT] * 3 + [MULTIPLIER] * 3
    assert (3, 4, 5) in c.facets  # central midpoint triangle


def test_iterate_K3():
    c = _one_step(3, 1)
    assert (c.n, c.skeleton.n_edges, len(c.facets)) == (14, 36, 8)


@pytest.mark.parametrize("K,m,t", [(2, 3, 3), (3, 1, 2), (5, 0, 2)])
def test_generate_facet_count(K, m, t):
    assert len(generate(GeneratorParams(K, m, t)).facets) == compute_S(K, m) ** t


def test_generate_K2_m3_t3():
    assert len(generate(GeneratorParams(2, 3, 3)).facets) == 2197


@pytest.mark.parametrize("K", [1, 2, 3, 6])
def test_generate_t0(K):
    c = generate(GeneratorParams(K, 4, 0))
    assert (c.n, c.skeleton.n_edges, len(c.facets)) == (K + 1, comb(K + 1, 2), 1)


def test_generate_pure_subdivision_is_path():
    c = generate(GeneratorParams(1, 0, 4))
    ref = path_by_subdivision(4)
    assert c.n == len(ref) + 1 == 17
    assert len(c.facets) == 16 == c.skeleton.n_edges
    degrees = sorted(c.skeleton.degree(u) for u in range(c.n))
    assert degrees == [1, 1] + [2] * 15
    # walk from original node 0 and make sure we visit everything once
    prev, cur, seen = None, 0, [0]
    while True:
        nxt = [v for v in c.skeleton.neighbors[cur] if v != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        seen.append(cur)
    assert sorted(seen) == list(range(17)) and seen[-1] == 1


@pytest.mark.parametrize("K,m,t,expected", [(2, 1, 2, 49), (3, 5, 0, 1), (10, 0, 3, 1331)])
def test_predicted_facets(K, m, t, expected):
    assert predicted_facets(GeneratorParams(K, m, t)) == expected


def test_predicted_facets_no_overflow():
    assert predicted_facets(GeneratorParams(25, 100, 20)) == 2626**20


def test_size_guard():
    with pytest.raises(SizeError) as info:
        generate(GeneratorParams(6, 4, 9), facet_cap=10**6)
    assert info.value.predicted == 35**9


def test_params_validation():
    for bad in [(0, 1, 1), (1, -1, 1), (1, 1, -1)]:
        with pytest.raises(DomainError):
            GeneratorParams(*bad)


@pytest.mark.parametrize("K,m", [(1, 2), (2, 1), (3, 2), (4, 0)])
def test_old_edges_are_subdivided(K, m):
    state = IterationState(initial_complex(K))
    for _ in range(3):
        old = state.complex
        state = iterate(state, m)
        g = state.complex.skeleton
        assert set(state.midpoints) == set(old.skeleton.edges())
        for (u, v), x in state.midpoints.items():
            assert not g.has_edge(u, v)
            assert g.has_edge(u, x) and g.has_edge(x, v)


@pytest.mark.parametrize("K,m", [(1, 0), (1, 3), (2, 2), (3, 1), (5, 2)])
def test_bottom_registry(K, m):
    state = IterationState(initial_complex(K))
    for _ in range(2):
        n_old = len(state.complex.facets)
        state = iterate(state, m)
        expected = n_old if K == 1 else (K + 1) * n_old
        assert len(state.bottoms) == expected
        n_mult = sum(1 for r in state.complex.skeleton.roles if r.kind == MULTIPLIER and r.birth == state.time)
        assert n_mult == m * expected


@pytest.mark.parametrize("K,m,t", [(3, 2, 2), (1, 1, 3), (2, 0, 3)])
def test_role_partition(K, m, t):
    roles = generate(GeneratorParams(K, m, t)).skeleton.roles
    assert sum(r.kind == ORIGINAL for r in roles) == K + 1
    assert all(r.birth == 0 for r in roles[: K + 1])
    assert all(r.kind != ORIGINAL and 1 <= r.birth <= t for r in roles[K + 1 :])
    births = [r.birth for r in roles]
    assert births == sorted(births)  # ids follow creation order


def test_generate_is_deterministic():
    p = GeneratorParams(3, 2, 2)
    a, b = generate(p), generate(p)
    assert a == b
    assert dumps_complex(a) == dumps_complex(b)


def test_m_zero_is_plain_subdivision():
    c = generate(GeneratorParams(3, 0, 2))
    assert not any(r.kind == MULTIPLIER for r in c.skeleton.roles)
    assert len(c.facets) == 16


def test_facets_are_cliques_and_cover_skeleton():
    for K in range(1, 6):
        c = generate(GeneratorParams(K, 2, 2))
        c.validate()
        assert {e for f in c.facets for e in combinations(f, 2)} == set(c.skeleton.edges())
