from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artifact.lattice import (
    ZERO, Weight, alpha_w, apply_word, coroot, eps_w, lambda_w, pair, pair_doubled, reflect,
)


def test_eps_expands_into_lambdas():
    assert eps_w(3) == lambda_w(3) - lambda_w(2)
    assert alpha_w(0) == eps_w(0) - eps_w(1)


def test_pairings():
    assert pair(lambda_w(0), lambda_w(1)) == Fraction(-1, 2)
    assert pair(eps_w(2), eps_w(2)) == 1
    assert pair(eps_w(2), eps_w(3)) == 0
    assert pair(alpha_w(0), alpha_w(1)) == -1
    assert pair(alpha_w(0), alpha_w(0)) == 2


def test_coroot():
    assert coroot(0, lambda_w(0)) == 1
    assert coroot(1, alpha_w(0)) == -1
    assert coroot(0, eps_w(0)) == 1


def test_coroots_are_dual_to_fundamental_weights():
    for k in range(-4, 5):
        for j in range(-4, 5):
            assert coroot(k, lambda_w(j)) == (1 if k == j else 0)


def test_reflections():
    assert reflect(0, lambda_w(0)) == lambda_w(1) - eps_w(0)
    assert reflect(1, eps_w(1)) == eps_w(2)
    assert reflect(5, lambda_w(0)) == lambda_w(0)


def test_apply_word():
    assert apply_word([0, 1], lambda_w(1)) == lambda_w(2) - eps_w(0)
    x = lambda_w(3) + 2 * eps_w(-1)
    assert apply_word([], x) == x
    assert apply_word([0, 0], x) == x


def test_to_eps_round_trip():
    x = alpha_w(-2) + 3 * alpha_w(4)
    assert x.to_eps() == x
    assert set(x.to_eps().lam) == set()
    with pytest.raises(ValueError):
        lambda_w(0).to_eps()


def test_json_round_trip():
    x = lambda_w(2) - 3 * eps_w(-1)
    assert Weight.from_json(x.to_json()) == x
    assert not ZERO


small = st.integers(-6, 6)
weights = st.builds(
    lambda lam, eps: Weight(lam, eps),
    st.dictionaries(small, st.integers(-3, 3), max_size=4),
    st.dictionaries(small, st.integers(-3, 3), max_size=4),
)


@given(weights, weights, small)
def test_reflection_preserves_the_form(x, y, j):
    assert pair(reflect(j, x), reflect(j, y)) == pair(x, y)


@given(weights, small)
def test_reflection_is_an_involution(x, j):
    assert reflect(j, reflect(j, x)) == x


@given(weights, weights)
def test_form_is_symmetric(x, y):
    assert pair_doubled(x, y) == pair_doubled(y, x)
