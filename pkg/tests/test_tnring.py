from hypothesis import given, strategies as st

from artifact.lattice import alpha_w, eps_w
from artifact.multiseg import Multisegment, Segment
from artifact.tnring import (
    ZERO_CLASS, b_form_n, c_a, dual_star_degree, f_aj, grade_project, omega_merge, omega_n,
    pairing_n, shift_n, star_degree,
)


def ms(*pairs):
    return Multisegment(Segment(a, b) for a, b in pairs)


def test_omega_classification():
    assert omega_n(ms((0, 1), (2, 4)), 5).ms == ms((0, 1), (2, 4))
    assert omega_n(ms((0, 5)), 5).is_zero
    assert omega_n(ms((0, 4)), 5).is_unit
    assert omega_n(ms((0, 4), (1, 2)), 5).ms == ms((1, 2))
    assert ZERO_CLASS.describe() == "ZERO"


def test_omega_merge():
    x = omega_n(ms((0, 1)), 3)
    y = omega_n(ms((5, 7), (2, 2)), 3)
    assert omega_merge(x, y).ms == ms((0, 1), (2, 2))
    assert omega_merge(x, ZERO_CLASS).is_zero


def test_twisted_form():
    assert b_form_n(alpha_w(-1), alpha_w(0), 2) == 1
    assert b_form_n(alpha_w(0), alpha_w(0), 3) == 0
    assert b_form_n(alpha_w(40), alpha_w(0), 3) == 0
    assert star_degree(alpha_w(-1), alpha_w(0), 2) == 1
    assert shift_n(alpha_w(0), 3) == alpha_w(3)


def test_quotient_coefficients():
    assert c_a(0, alpha_w(0), 3) == 1
    assert c_a(0, alpha_w(1), 3) == 0
    assert c_a(0, alpha_w(2), 3) == -1


def test_f_aj():
    assert f_aj(0, 0, 3) == (1, -1)
    assert f_aj(0, 3, 3) == (-1, -1)
    assert f_aj(0, 7, 3) == (1, 0)


def test_grading():
    assert grade_project(alpha_w(0) + alpha_w(3), 3) == {0: 2, 1: -2}
    assert grade_project(eps_w(0) - eps_w(3), 3) == {}
    assert pairing_n(1, 4, 3) == 1
    assert pairing_n(1, 2, 3) == 0
    assert dual_star_degree(alpha_w(0), alpha_w(0), 3) == 2
    assert dual_star_degree(alpha_w(0), alpha_w(1), 3) == -1


roots = st.lists(st.tuples(st.integers(-6, 6), st.integers(-2, 2)), max_size=4).map(
    lambda xs: sum((c * alpha_w(j) for j, c in xs), alpha_w(0) - alpha_w(0)))


@given(st.sampled_from([2, 3, 5]), st.integers(-8, 8), roots)
def test_quotient_coefficient_identity(N, a, beta):
    x = eps_w(a) - eps_w(a + N)
    assert c_a(a, beta, N) == -b_form_n(x, beta, N) + b_form_n(beta, x, N)


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 6)), max_size=5), st.integers(2, 5))
def test_omega_is_idempotent(pairs, N):
    cls = omega_n(ms(*[(a, a + n) for a, n in pairs]), N)
    if not cls.is_zero:
        assert omega_n(cls.ms, N) == cls
