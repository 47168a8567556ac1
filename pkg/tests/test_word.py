import numpy as np
from hypothesis import given, strategies as st

from artifact.lattice import alpha_w, apply_word
from artifact.word import (
    a_val, coord, coord_array, coord_inv, coord_inv_array, coxeter_length, first_non_reduced,
    is_reduced_prefix, jp, jp_array, jp_from_coord, longest_interval, p_minus, p_minus_closed,
    p_minus_j, p_plus, p_plus_closed, p_plus_j, perm_of_prefix, prefix, prefix_root,
    prefix_root_direct, reversal, window_size,
)


def test_a_val():
    assert [a_val(u) for u in (0, 2, 3)] == [0, 3, 6]


def test_letters():
    assert [jp(p) for p in (1, 2, 3, 4, 7, 11)] == [0, 1, 0, -1, 2, -2]
    assert prefix(6) == [jp(p) for p in range(1, 7)]


def test_coordinates():
    assert coord(8) == (3, 2)
    assert coord_inv(3, 2) == 8
    assert coord(1) == (1, 1)
    assert coord(3) == (1, 2)


def test_neighbours():
    assert p_plus(1) == 3
    assert p_minus(2) == 0
    assert p_plus_j(1, 1) == 2
    for p in range(1, 120):
        assert p_plus(p) == p_plus_closed(p)
        assert p_minus(p) == p_minus_closed(p)
        assert p_minus_j(p_plus_j(p, jp(p)), jp(p)) == p


def test_reducedness():
    assert is_reduced_prefix(210)
    assert first_non_reduced([0, 0]) == 2
    assert first_non_reduced(prefix(210)) is None


def test_prefix_roots():
    for p in range(1, 80):
        assert prefix_root(p) == prefix_root_direct(p)
        assert prefix_root(p) == apply_word(prefix(p - 1), alpha_w(jp(p)))


def test_permutations():
    assert perm_of_prefix(0) == {}
    assert perm_of_prefix(3) == reversal(0, 2)
    assert perm_of_prefix(a_val(2)) == reversal(0, 2)
    for u in range(1, 11):
        assert perm_of_prefix(a_val(u)) == reversal(*longest_interval(u))
        assert coxeter_length(perm_of_prefix(a_val(u))) == a_val(u)


def test_window_is_a_prefix():
    for cap in range(2, 12):
        inside = [p for p in range(1, 200) if sum(coord(p)) <= cap]
        assert inside == list(range(1, window_size(cap) + 1))


def test_vectorized_helpers_agree():
    ps = np.arange(1, 3000)
    ell, m = coord_array(ps)
    assert [(int(a), int(b)) for a, b in zip(ell, m)] == [coord(int(p)) for p in ps]
    assert (coord_inv_array(ell, m) == ps).all()
    assert list(jp_array(ps)) == [jp(int(p)) for p in ps]


@given(st.integers(1, 400), st.integers(1, 400))
def test_coord_inverse(ell, m):
    p = coord_inv(ell, m)
    assert coord(p) == (ell, m)
    assert jp(p) == jp_from_coord(ell, m) == (ell - m + 1) // 2
