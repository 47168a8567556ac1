import json

import numpy as np
import pytest

from artifact.errors import WindowTooSmall
from artifact.quiver import (
    Quiver, TrustRegion, apply_schedule, crossing_arrows, drop_frozen, equals_labeled, export_dot,
    export_json, from_b, word_quiver, import_json, initial_quiver, sigma_even, sigma_blocks, sigma_odd,
    sigma_plus, to_b, truncate, truncated_window, verify_word_quiver, verify_blocks, verify_periodicity,
    verify_periodicity_n, verify_reversing,
)
from artifact.word import coord, coord_inv


def test_word_quiver_small_prefix():
    q = word_quiver(3)
    assert q.arrows() == {(3, 1): 1, (1, 2): 1}
    assert word_quiver(0).vertices == ()


def test_mutation_of_a_path():
    q = Quiver.from_arrows([1, 2, 3], [(1, 2), (2, 3)])
    assert q.mutate(2).arrows() == {(2, 1): 1, (3, 2): 1, (1, 3): 1}
    assert q.mutate(2).mutate(2) == q


def test_b_round_trip():
    q = initial_quiver(8)
    assert from_b(q.vertices, to_b(q), q.frozen) == q
    B = to_b(q)
    assert (B == -B.T).all()


def test_quiver_is_immutable():
    q = initial_quiver(5)
    with pytest.raises(ValueError):
        q.B[0, 1] = 7


def test_schedules():
    assert sigma_even(4) == [(1, 1), (1, 3), (2, 2), (3, 1)]
    assert sigma_odd(3) == [(1, 2), (2, 1)]
    assert sigma_plus(4) == sigma_even(4) + sigma_odd(4)


def test_schedule_outside_window():
    with pytest.raises(WindowTooSmall):
        apply_schedule(initial_quiver(4), [(5, 5)])


def test_truncation():
    q = truncated_window(3, 4)
    assert sorted(coord(v) for v in q.frozen) == [(3, 1), (3, 2), (3, 3), (3, 4)]
    assert all(coord(v)[0] <= 3 for v in q.vertices)
    assert len(drop_frozen(q).vertices) == 8
    big = initial_quiver(6)
    assert truncate(big, 10).arrows() == big.arrows()


def test_labeled_equality():
    q = initial_quiver(10)
    trust = TrustRegion(cap_sum=10, margin=2)
    assert equals_labeled(q, q, trust)
    assert not equals_labeled(q, q.op(), trust)


@pytest.mark.parametrize("cap", [14, 16])
def test_word_quiver_agrees_with_closed_form(cap):
    assert verify_word_quiver(cap, 2)


def test_sweeps():
    assert verify_reversing(14, 4)
    assert verify_periodicity(14, 4)
    assert verify_periodicity(20, 4, reps=2)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_truncated_periodicity(N):
    assert verify_periodicity_n(N, 10, 3)


def test_no_crossing_in_initial_window():
    assert crossing_arrows(initial_quiver(12), 3) == []


def test_block_schedule_reaches_its_target():
    assert verify_blocks(4, 8, 3)
    assert sigma_blocks(4, 3)[:2] == [(1, 2), (3, 2)]


def test_exports():
    q = truncated_window(3, 3)
    dot = export_dot(q)
    assert dot.startswith("digraph Q {")
    assert "shape=box" in dot
    data = json.loads(export_json(q))
    assert {"p", "ell", "m", "frozen"} == set(data["vertices"][0])
    assert import_json(export_json(q)) == q
    assert export_json(q) == export_json(import_json(export_json(q)))


def test_initial_quiver_has_closed_form_neighbours():
    q = initial_quiver(12)
    v = coord_inv(2, 3)
    assert q.degree(v) > 0
    assert np.count_nonzero(to_b(q)[q.index(v)]) >= 4
