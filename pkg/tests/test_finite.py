import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiflows.errors import ContractError
from semiflows.finite import (
    ActionSystem,
    cascade_return_exponents,
    compose,
    dumps_system,
    enumerate_systems,
    identity,
    is_ap_modified,
    is_ap_syndetic,
    is_minimal_orbit_closure,
    loads_system,
    minimal_subsets,
    modified_ap_witness,
    monoid_closure,
    orbit,
    sample_systems,
    sweep,
    verify_ap_existence,
    verify_flow_equivalence,
    verify_semicascade_coincidence,
    verify_theorem,
)


@st.composite
def systems(draw, max_n=5, max_g=2, bijective=False):
    n = draw(st.integers(1, max_n))
    g = draw(st.integers(1, max_g))
    if bijective:
        gens = [tuple(draw(st.permutations(range(n)))) for _ in range(g)]
    else:
        gens = [tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))) for _ in range(g)]
    return monoid_closure(gens, n)


def graph_of(system):
    G = nx.DiGraph()
    G.add_nodes_from(range(system.n))
    for g in system.generators:
        G.add_edges_from((i, g[i]) for i in range(system.n))
    return G


def brute_monoid(generators, n):
    # fixed point of closing under composition with generators
    found = {identity(n)}
    while True:
        new = {compose(g, m) for g in generators for m in found} | found
        if new == found:
            return found
        found = new


def brute_modified(system, x):
    # search over every subset K of the monoid, smallest first
    members = system.monoid
    for size in range(1, len(members) + 1):
        for K in itertools.combinations(members, size):
            if all(any(compose(k, s)[x] == x for k in K) for s in members):
                return True
    return False


class TestClosure:
    def test_three_cycle(self):
        S = monoid_closure([(1, 2, 0)], 3)
        assert len(S.monoid) == 3 and S.is_group

    def test_constant_map(self):
        S = monoid_closure([(0, 0)], 2)
        assert set(S.monoid) == {(0, 1), (0, 0)}
        assert not S.is_group

    def test_compose_applies_right_first(self):
        a, b = (1, 1, 2), (2, 0, 1)
        assert compose(a, b) == (2, 1, 1)

    @pytest.mark.parametrize("gens, n", [([], 3), ([(0, 1)], 0), ([(0, 5)], 2), ([(0,)], 2)])
    def test_bad_input(self, gens, n):
        with pytest.raises(ContractError):
            monoid_closure(gens, n)

    @settings(max_examples=100, deadline=None)
    @given(systems())
    def test_matches_fixed_point(self, S):
        assert set(S.monoid) == brute_monoid(S.generators, S.n)
        assert identity(S.n) in S


class TestMinimalSets:
    def test_two_fixed_points(self):
        S = monoid_closure([(0, 1)], 2)
        assert sorted(map(sorted, minimal_subsets(S))) == [[0], [1]]

    def test_transient_point(self):
        # 0 -> 1 -> 2 -> 1
        S = monoid_closure([(1, 2, 1)], 3)
        assert minimal_subsets(S) == [frozenset({1, 2})]
        assert not is_minimal_orbit_closure(S, 0)
        assert is_minimal_orbit_closure(S, 1)

    def test_orbit_contains_base(self):
        S = monoid_closure([(1, 2, 1)], 3)
        assert orbit(S, 0).points == frozenset({0, 1, 2})

    @settings(max_examples=150, deadline=None)
    @given(systems())
    def test_match_attracting_components(self, S):
        expected = sorted(sorted(c) for c in nx.attracting_components(graph_of(S)))
        assert sorted(sorted(m) for m in minimal_subsets(S)) == expected


class TestAlmostPeriodic:
    def test_identity_neighbourhood_default(self):
        S = monoid_closure([(1, 2, 1)], 3)
        assert not is_ap_modified(S, 0)
        assert is_ap_modified(S, 2)

    def test_syndetic_trivial_on_finite_monoid(self):
        S = monoid_closure([(1, 2, 1)], 3)
        assert all(is_ap_syndetic(S, x) for x in range(3))

    def test_witness_is_valid(self):
        S = monoid_closure([(1, 2, 0), (0, 0, 2)], 3)
        for x in range(3):
            K = modified_ap_witness(S, x)
            if is_ap_modified(S, x):
                assert all(any(compose(k, s)[x] == x for k in K) for s in S.monoid)
            else:
                assert K is None

    @settings(max_examples=60, deadline=None)
    @given(systems(max_n=4))
    def test_modified_matches_subset_search(self, S):
        if len(S.monoid) > 10:
            return
        for x in range(S.n):
            assert is_ap_modified(S, x) == brute_modified(S, x)


class TestVerifiers:
    @settings(max_examples=150, deadline=None)
    @given(systems())
    def test_theorem(self, S):
        assert verify_theorem(S).passed

    @settings(max_examples=100, deadline=None)
    @given(systems(bijective=True))
    def test_flow(self, S):
        assert verify_flow_equivalence(S).passed

    def test_flow_rejects_non_bijection(self):
        with pytest.raises(ContractError):
            verify_flow_equivalence(monoid_closure([(0, 0)], 2))

    @settings(max_examples=150, deadline=None)
    @given(systems(max_n=6, max_g=1))
    def test_cascade(self, S):
        assert verify_semicascade_coincidence(S).passed

    def test_cascade_needs_one_generator(self):
        with pytest.raises(ContractError):
            verify_semicascade_coincidence(monoid_closure([(0, 1), (1, 0)], 2))

    @settings(max_examples=100, deadline=None)
    @given(systems())
    def test_existence(self, S):
        assert verify_ap_existence(S).passed


def test_cascade_return_exponents():
    # 0 -> 1 -> 2 -> 0
    A = cascade_return_exponents((1, 2, 0), 0, 10)
    assert A.elements == (0, 3, 6, 9)
    assert cascade_return_exponents((1, 1), 0, 5).elements == (0,)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_systems(5, 1)) == 3125
    assert sum(1 for _ in enumerate_systems(3, 2)) == 729
    assert sum(1 for _ in enumerate_systems(4, 2, permutations=True)) == 576


def test_sampling_is_seeded():
    assert sample_systems(4, 2, 20, seed=1) == sample_systems(4, 2, 20, seed=1)
    assert sample_systems(4, 2, 20, seed=1) != sample_systems(4, 2, 20, seed=2)
    for gens in sample_systems(4, 1, 20, seed=1, permutations=True):
        assert sorted(gens[0]) == [0, 1, 2, 3]


def test_sweep_rows_and_workers_agree():
    corpus = list(enumerate_systems(3, 1))
    rows = sweep("theorem", 3, corpus, chunk_size=5)
    assert [r["id"] for r in rows] == list(range(27))
    assert set(rows[0]) == {"id", "n", "generators", "passed", "counterexample"}
    assert sweep("theorem", 3, corpus, workers=2, chunk_size=5) == rows


def test_sweep_unknown_check():
    with pytest.raises(ContractError):
        sweep("nope", 2, [])


def test_serialisation_roundtrip():
    S = monoid_closure([(1, 2, 0), (0, 0, 2)], 3)
    text = dumps_system(S)
    assert text == "3\n1 2 0\n0 0 2\n"
    assert loads_system(text) == S


def test_loads_rejects_garbage():
    with pytest.raises(ContractError):
        loads_system("three\n1 2 0\n")
    with pytest.raises(ContractError):
        loads_system("")


def test_action_system_is_hashable():
    S = monoid_closure([(1, 0)], 2)
    assert isinstance(S, ActionSystem) and hash(S) == hash(monoid_closure([(1, 0)], 2))
