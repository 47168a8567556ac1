import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from artifact.errors import NonLaurent, WindowTooSmall
from artifact.multiseg import mutated_det_label, shift_label, wt_of
from artifact.qcluster import (
    TorusElement, commutation_ok, compatible, exact_divide, initial_seed, lambda_init,
    lambda_matrix, make_seed, mutate_along, mutate_pair, mutate_seed, mutation_degrees,
    principal_seed, seed_compatible, torus_mul, truncated_rule, truncated_seed,
)
from artifact.quiver import TrustRegion, sigma_minus, sigma_plus
from artifact.word import coord, coord_inv, jp


def mono(*a, c=None):
    return TorusElement.monomial(a, c)


L2 = np.array([[0, -1], [1, 0]])


def test_torus_product_normalization():
    assert torus_mul(mono(1, 0), mono(0, 1), L2) == mono(1, 1, c={-1: 1})
    assert torus_mul(mono(2, -1), mono(0, 0), L2) == mono(2, -1)
    assert torus_mul(mono(2, -1), mono(-2, 1), L2) == mono(0, 0)


def test_exact_division():
    x = mono(0, 1) + mono(0, 0)
    assert exact_divide(x, x, L2) == TorusElement.unit(2)
    prod = torus_mul(x, mono(1, 0), L2)
    assert exact_divide(prod, mono(1, 0), L2) == x
    with pytest.raises(NonLaurent):
        exact_divide(mono(0, 0), x, L2)


def test_compatibility_basics():
    B = np.array([[0, 1], [-1, 0]])
    assert not any(compatible(np.zeros((2, 2)), B, 2, [0, 1]).values())
    seed = principal_seed(B)
    assert all(compatible(seed.L, seed.B, 2, [0, 1]).values())
    L, Bm = mutate_pair(seed.L, seed.B, 0)
    assert all(compatible(L, Bm, 2, [0, 1]).values())


def test_path_mutation_matrix():
    B = np.array([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    _, Bm = mutate_pair(np.zeros((3, 3), dtype=np.int64), B, 1)
    assert Bm[0, 2] == 1 and Bm[2, 0] == -1
    assert Bm[0, 1] == -1 and Bm[1, 2] == -1


def test_rank_two_exchange():
    seed = make_seed([1, 2], [[0, 1], [-1, 0]], np.zeros((2, 2)))
    out = mutate_seed(seed, 1)
    assert out.var(1) == mono(-1, 1) + mono(-1, 0)


def test_lambda_entries():
    assert lambda_init(1, 2) == -1
    assert lambda_init(5, 5) == 0
    L = lambda_matrix(list(range(1, 30)))
    assert (L == -L.T).all()


def test_initial_seed_is_compatible():
    assert seed_compatible(initial_seed(12))
    assert seed_compatible(truncated_seed(3, 6))


def test_window_too_small_is_reported():
    seed = initial_seed(6)
    bad = make_seed(seed.vertices, seed.B, seed.L, frozen=(), quantum=False)
    with pytest.raises(WindowTooSmall):
        seed_compatible(bad)


def test_single_mutations_follow_the_labels():
    seed = initial_seed(10, quantum=True)
    for p in seed.exchangeable():
        if sum(coord(p)) > 8:
            continue
        out = mutate_seed(seed, p)
        assert out.label(p) == mutated_det_label(p)
        assert out.weights[seed.index(p)] == wt_of(mutated_det_label(p))
        assert out.var(p).is_positive()
        assert commutation_ok(out, p)


def test_first_exchange_binomial_supports():
    seed = initial_seed(8, quantum=True)
    out = mutate_seed(seed, 1)
    supports = {frozenset(seed.vertices[i] for i, a in enumerate(e) if a) for e in out.var(1).terms}
    assert {1, 3} in [set(s) for s in supports]


@pytest.mark.parametrize("r", [1, 2])
def test_sweeps_shift_labels(r):
    cap = 10
    seed = initial_seed(cap)
    trust = TrustRegion(cap_sum=cap, margin=2 * r)
    for sched, sign in ((sigma_plus(cap - 1), 1), (sigma_minus(cap - 1), -1)):
        out = seed
        for _ in range(r):
            out = mutate_along(out, sched)
        for p in seed.vertices:
            if trust.contains(p):
                assert out.label(p) == shift_label(*coord(p), jp(p), sign * r)


def test_truncated_rule_treats_column_n_as_trivial():
    seed = truncated_seed(4, 7)
    out = mutate_along(seed, [(3, 1)], truncated_rule(4))
    assert out.label(coord_inv(3, 1)) is not None


def test_mutation_degrees_are_half_integers():
    seed = initial_seed(8, quantum=True)
    m, m2 = mutation_degrees(seed, 1)
    assert (2 * m).denominator == 1 and (2 * m2).denominator == 1
    toy = make_seed([1, 2], [[0, 1], [-1, 0]], np.zeros((2, 2)), weights=[wt_of(seed.labels[0])] * 2)
    a, b = mutation_degrees(toy, 1)
    assert a == b


def test_frozen_vertex_cannot_mutate():
    seed = truncated_seed(3, 4)
    with pytest.raises(ValueError):
        mutate_seed(seed, next(iter(seed.frozen)))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=1, max_size=6))
def test_quantum_mutation_is_an_involution(steps):
    seed = truncated_seed(3, 5, quantum=True)
    ex = seed.exchangeable()
    cur = seed
    for i in steps:
        v = ex[i % len(ex)]
        nxt = mutate_seed(cur, v)
        back = mutate_seed(nxt, v)
        assert back.vars == cur.vars
        assert (back.B == cur.B).all() and (back.L == cur.L).all()
        assert seed_compatible(nxt)
        cur = nxt


def test_random_schedules_stay_laurent_and_positive():
    rng = random.Random(7)
    seed = truncated_seed(3, 5, quantum=True)
    ex = seed.exchangeable()
    for _ in range(10):
        cur = seed
        for _ in range(rng.randint(1, 8)):
            v = rng.choice(ex)
            cur = mutate_seed(cur, v)
            assert cur.var(v).is_positive()
