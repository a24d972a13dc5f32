import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcis import (ReconstructionError, RowState, full_table, is_common_increasing, is_subsequence,
                  lcis_length_from_table, lcis_length_linear, oracle_lcis, reconstruct, solve)
from lcis.linear_dp import _resweep, _scan

X = (3, 5, 1, 2, 7, 5, 7)
Y = (3, 5, 2, 1, 5, 7)

small = st.lists(st.integers(1, 4), max_size=10)


def random_pair(rng, max_len, alphabet):
    return ([rng.randint(1, alphabet) for _ in range(rng.randint(0, max_len))],
            [rng.randint(1, alphabet) for _ in range(rng.randint(0, max_len))])


def test_paper_instance():
    length, row, swapped = lcis_length_linear(X, Y)
    assert length == 3
    assert row.cells == [3, 1, 2, 1, 1, 2, 3]
    assert not swapped
    assert reconstruct(row, Y) == [1, 5, 7]
    assert solve(X, Y).witness == (1, 5, 7)


def test_single_match_and_empty():
    length, row, _ = lcis_length_linear((5,), (5,))
    assert (length, row.cells, len(row)) == (1, [1, 1], 2)
    length, row, _ = lcis_length_linear((1, 2, 3), ())
    assert (length, len(row)) == (0, 1)
    length, row, swapped = lcis_length_linear((), (1, 2, 3))
    assert (length, len(row), swapped) == (0, 1, True)


def test_swap_keeps_buffer_on_shorter_input():
    length, row, swapped = lcis_length_linear(Y, X)
    assert swapped and length == 3
    assert row.inner_length == 6


def test_no_common_element():
    r = solve((1, 2), (3, 4))
    assert (r.length, r.witness) == (0, ())
    assert reconstruct(RowState([0, 0, 0]), (3, 4)) == []


def test_swapped_call_symmetry():
    assert solve((2, 1), (1, 2)).length == solve((1, 2), (2, 1)).length == 1
    assert solve((2, 1), (1, 2), want_witness=False).witness is None


def test_final_row_matches_table():
    rng = random.Random(5)
    for _ in range(10_000):
        x, y = random_pair(rng, 50, rng.choice((2, 4, 8, 16)))
        length, row, swapped = lcis_length_linear(x, y)
        outer, inner = (y, x) if swapped else (x, y)
        assert len(y) <= len(x) or swapped
        t = full_table(outer, inner)
        assert row.cells[1:] == list(t.last_row())
        assert length == lcis_length_from_table(t)


def test_witnesses_valid_and_optimal():
    rng = random.Random(9)
    for _ in range(3000):
        x, y = random_pair(rng, 10, rng.choice((2, 4, 8)))
        r = solve(x, y)
        assert is_common_increasing(r.witness, x, y)
        assert r.length == oracle_lcis(x, y).length


def test_witnesses_valid_on_larger_instances():
    rng = random.Random(10)
    for _ in range(500):
        x, y = random_pair(rng, 50, rng.choice((4, 16, 64)))
        r = solve(x, y)
        assert len(r.witness) == r.length
        assert is_common_increasing(r.witness, x, y)


def test_scan_alone_can_miss_the_outer_sequence():
    # The rightmost-position scan over the final row yields (1, 3), which is
    # increasing and inside y but not inside x.
    x, y = (2, 3, 1), (2, 1, 3)
    length, row, _ = lcis_length_linear(x, y)
    assert row.cells == [2, 1, 1, 2]
    picked = reconstruct(row, y)
    assert picked == [1, 3]
    assert not is_subsequence(picked, x)
    assert solve(x, y).witness == (2, 3)


def test_resweep_recovers_a_valid_chain():
    rng = random.Random(12)
    for _ in range(2000):
        x, y = random_pair(rng, 12, rng.choice((2, 4, 8)))
        length = oracle_lcis(x, y).length
        outer, inner = (y, x) if len(y) > len(x) else (x, y)
        w, _ = _resweep(outer, inner, length)
        assert len(w) == length
        assert is_common_increasing(w, x, y)


@given(small, small)
def test_scan_output_is_increasing_inner_subsequence(x, y):
    length, row, swapped = lcis_length_linear(x, y)
    inner = x if swapped else y
    w = reconstruct(row, inner)
    assert len(w) == length
    assert all(a < b for a, b in zip(w, w[1:]))
    assert is_subsequence(w, inner)


@given(st.lists(st.integers(1, 6), max_size=30), st.lists(st.integers(1, 6), max_size=30))
def test_scan_moves_at_most_inner_length(x, y):
    length, row, swapped = lcis_length_linear(x, y)
    inner = x if swapped else y
    _, steps = _scan(row, inner)
    assert steps <= len(inner)


def test_corrupted_row_raises():
    with pytest.raises(ReconstructionError):
        reconstruct(RowState([2, 2, 1]), (1, 2))
    with pytest.raises(ValueError):
        reconstruct(RowState([1, 1]), (1, 2))


def check_mid_sweep(x, y):
    _, _, swapped = lcis_length_linear(x, y)
    outer, inner = (y, x) if swapped else (x, y)
    t = full_table(outer, inner)
    seen = []

    def trace(i, j, cells):
        seen.append((i, j))
        for k in range(1, j):
            assert cells[k] == t.f(i, k)
        for k in range(j, len(inner) + 1):
            assert cells[k] == t.f(i - 1, k)
        eligible = [t.f(i - 1, s) for s in range(1, j) if inner[s - 1] < outer[i - 1]]
        assert cells[0] == max(eligible, default=0)
        assert len(cells) == len(inner) + 1

    lcis_length_linear(x, y, trace=trace)
    assert len(seen) == len(outer) * len(inner)


def test_mid_sweep_invariant_paper():
    check_mid_sweep(X, Y)


@given(small, small)
def test_mid_sweep_invariant(x, y):
    check_mid_sweep(x, y)
