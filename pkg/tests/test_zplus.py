import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiflows.errors import ContractError
from semiflows.zplus import (
    WindowedSet,
    all_subsets_with_zero,
    covers_by_window,
    covers_by_window_batch,
    lemma_equivalence,
    membership_matrix,
    min_window,
    min_window_batch,
    parse_windowed_set,
    random_subsets_with_zero,
    window_hits,
    window_hits_batch,
)


# brute-force oracles straight from the definitions

def covers_oracle(A, R):
    members = set(A.elements)
    return all(any(m - k in members for k in range(R + 1)) for m in range(A.horizon + 1))


def hits_oracle(A, R):
    members = set(A.elements)
    return all(any(m + j in members for j in range(R + 1)) for m in range(A.horizon - R + 1))


def min_window_oracle(A):
    members = set(A.elements)
    return min(R for R in range(A.horizon + 1)
               if all(any(m + j in members for j in range(R + 1))
                      for m in range(A.horizon - R + 1)))


@st.composite
def windowed_sets(draw, max_horizon=40):
    horizon = draw(st.integers(0, max_horizon))
    rest = draw(st.sets(st.integers(1, max(1, horizon)), max_size=horizon)) if horizon else set()
    return WindowedSet.from_iterable({0} | rest, horizon)


class TestWindowedSet:
    def test_requires_zero(self):
        with pytest.raises(ContractError):
            WindowedSet((1, 2), 5)

    def test_rejects_unsorted(self):
        with pytest.raises(ContractError):
            WindowedSet((0, 3, 2), 5)

    def test_rejects_element_past_horizon(self):
        with pytest.raises(ContractError):
            WindowedSet((0, 7), 5)

    def test_mask_and_membership(self):
        A = WindowedSet((0, 2, 5), 6)
        assert A.mask == 0b100101
        assert 2 in A and 3 not in A

    def test_from_mask_roundtrip(self):
        A = WindowedSet.from_iterable([0, 3, 4], 9)
        assert WindowedSet.from_mask(A.mask, 9) == A


class TestExamples:
    def test_evens_from_four(self):
        A = parse_windowed_set("0,4..N:2", horizon=200)
        assert covers_by_window(A, 3)
        assert min_window(A) == 3

    def test_singleton_zero(self):
        A = WindowedSet((0,), 10)
        assert not covers_by_window(A, 5)
        assert not window_hits(A, 5)
        assert covers_by_window(A, 10)

    def test_multiples_of_seven(self):
        assert min_window(parse_windowed_set("0,7..98:7")) == 6

    def test_radius_outside_horizon(self):
        with pytest.raises(ContractError):
            covers_by_window(WindowedSet((0,), 4), 5)
        with pytest.raises(ContractError):
            window_hits(WindowedSet((0,), 4), -1)


class TestParse:
    def test_plain_list(self):
        assert parse_windowed_set("0, 3, 5").elements == (0, 3, 5)

    def test_default_horizon_is_max(self):
        assert parse_windowed_set("0,3,5").horizon == 5

    def test_range_without_step(self):
        assert parse_windowed_set("0..4").elements == (0, 1, 2, 3, 4)

    def test_N_needs_horizon(self):
        with pytest.raises(ContractError):
            parse_windowed_set("0,4..N:2")

    @pytest.mark.parametrize("text", ["0,x", "0,3..", "0,1..5:0", "3,4"])
    def test_malformed(self, text):
        with pytest.raises(ContractError):
            parse_windowed_set(text)


@settings(max_examples=300, deadline=None)
@given(windowed_sets(), st.data())
def test_scalar_predicates_match_oracles(A, data):
    R = data.draw(st.integers(0, A.horizon))
    assert covers_by_window(A, R) == covers_oracle(A, R)
    assert window_hits(A, R) == hits_oracle(A, R)
    assert lemma_equivalence(A, R)


@settings(max_examples=300, deadline=None)
@given(windowed_sets())
def test_min_window_is_least_hitting_radius(A):
    assert min_window(A) == min_window_oracle(A)


@settings(max_examples=100, deadline=None)
@given(windowed_sets(), st.data())
def test_monotone_in_radius(A, data):
    R = data.draw(st.integers(0, A.horizon))
    if covers_by_window(A, R) and R < A.horizon:
        assert covers_by_window(A, R + 1)


def test_batch_matches_scalar_exhaustively():
    horizon = 9
    M = all_subsets_with_zero(horizon)
    assert M.shape == (2 ** horizon, horizon + 1)
    sets = [WindowedSet.from_iterable(np.flatnonzero(row), horizon) for row in M]
    mw = min_window_batch(M)
    for R in range(horizon + 1):
        c, h = covers_by_window_batch(M, R), window_hits_batch(M, R)
        assert c.tolist() == [covers_by_window(A, R) for A in sets]
        assert h.tolist() == [window_hits(A, R) for A in sets]
    assert mw.tolist() == [min_window(A) for A in sets]


def test_all_subsets_are_distinct_and_contain_zero():
    M = all_subsets_with_zero(6)
    assert M[:, 0].all()
    assert len({tuple(r) for r in M}) == 64


def test_membership_matrix_roundtrip():
    sets = [WindowedSet.from_iterable(s, 8) for s in ([0], [0, 8], [0, 2, 3])]
    M = membership_matrix(sets, 8)
    assert [tuple(np.flatnonzero(r)) for r in M] == [(0,), (0, 8), (0, 2, 3)]


def test_random_subsets_reproducible():
    a = random_subsets_with_zero(50, 30, np.random.default_rng(3))
    b = random_subsets_with_zero(50, 30, np.random.default_rng(3))
    assert (a == b).all() and a[:, 0].all()


def test_small_horizon_all_pairs():
    for horizon in range(5):
        for bits in itertools.product([0, 1], repeat=horizon):
            A = WindowedSet.from_iterable([0] + [i + 1 for i, b in enumerate(bits) if b], horizon)
            for R in range(horizon + 1):
                assert covers_by_window(A, R) == window_hits(A, R)
