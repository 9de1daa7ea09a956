import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randposet import (
    CycleError,
    Dag,
    PosetKey,
    class_size_exponent,
    empty_dag,
    hasse_edges,
    poset_key,
    transitive_closure,
    transitive_reduction,
    would_create_cycle,
)

from conftest import (
    all_dags_bruteforce,
    naive_closure,
    naive_has_cycle,
    naive_reduction,
    random_dag,
)

PATH3 = [(1, 2), (2, 3)]  # a 3-chain on labels 1..3, vertex 0 isolated


@st.composite
def dags(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    perm = draw(st.permutations(range(n)))
    upper = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(upper), unique=True)) if upper else []
    return Dag.from_edges(n, edges)


ALL_SMALL = [Dag.from_edges(n, e) for n in (1, 2, 3, 4) for e in all_dags_bruteforce(n)]


class TestConstruction:
    @pytest.mark.parametrize("n", [1, 3, 21])
    def test_empty_dag(self, n):
        g = empty_dag(n)
        assert g.n == n
        assert g.num_edges == 0
        assert g.edges() == []

    def test_empty_dag_rejects_zero(self):
        with pytest.raises(ValueError):
            empty_dag(0)

    def test_from_edges_rejects_cycle(self):
        with pytest.raises(CycleError):
            Dag.from_edges(3, [(0, 1), (1, 2), (2, 0)])

    def test_from_edges_rejects_self_loop(self):
        with pytest.raises(CycleError):
            Dag.from_edges(2, [(1, 1)])

    def test_from_edges_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Dag.from_edges(2, [(0, 2)])


class TestWouldCreateCycle:
    def test_closing_edge(self):
        assert would_create_cycle(Dag.from_edges(4, PATH3), 3, 1)

    def test_transitive_edge(self):
        assert not would_create_cycle(Dag.from_edges(4, PATH3), 1, 3)

    def test_single_edge(self):
        assert not would_create_cycle(empty_dag(2), 0, 1)

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            would_create_cycle(empty_dag(2), 1, 1)

    def test_present_edge_rejected(self):
        with pytest.raises(ValueError):
            would_create_cycle(Dag.from_edges(2, [(0, 1)]), 0, 1)

    def test_agrees_with_full_cycle_detection(self):
        for g in ALL_SMALL:
            edges = g.edge_set()
            for i in range(g.n):
                for j in range(g.n):
                    if i != j and (i, j) not in edges:
                        expected = naive_has_cycle(g.n, edges | {(i, j)})
                        assert would_create_cycle(g, i, j) == expected


class TestClosureReduction:
    def test_closure_of_path(self):
        assert transitive_closure(Dag.from_edges(4, PATH3)).edge_set() == {(1, 2), (2, 3), (1, 3)}

    def test_closure_of_empty(self):
        assert transitive_closure(empty_dag(3)).num_edges == 0

    def test_closure_of_4_chain(self):
        c = transitive_closure(Dag.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
        assert c.edge_set() == {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}

    def test_reduction_drops_implied_edge(self):
        g = Dag.from_edges(4, [(1, 2), (2, 3), (1, 3)])
        assert transitive_reduction(g).edge_set() == {(1, 2), (2, 3)}

    def test_reduction_of_empty(self):
        assert transitive_reduction(empty_dag(4)).num_edges == 0

    def test_reduction_of_4_chain_closure_matches_bruteforce(self):
        closure = naive_closure(4, [(0, 1), (1, 2), (2, 3)])
        expected = naive_reduction(4, closure)
        assert expected == {(0, 1), (1, 2), (2, 3)}
        assert transitive_reduction(Dag.from_edges(4, closure)).edge_set() == expected

    def test_cyclic_input_rejected(self):
        g = Dag(3, (0b010, 0b100, 0b001))  # unchecked construction of a 3-cycle
        with pytest.raises(CycleError):
            transitive_closure(g)
        with pytest.raises(CycleError):
            transitive_reduction(g)

    @pytest.mark.parametrize("g", ALL_SMALL, ids=repr)
    def test_exhaustive_against_naive(self, g):
        assert transitive_closure(g).edge_set() == naive_closure(g.n, g.edge_set())
        assert transitive_reduction(g).edge_set() == naive_reduction(g.n, g.edge_set())


def _check_laws(g):
    c, r = transitive_closure(g), transitive_reduction(g)
    assert transitive_closure(c) == c
    assert transitive_closure(r) == c
    assert transitive_reduction(c) == r
    assert r.edge_set() <= g.edge_set() <= c.edge_set()
    PosetKey(c.n, c.rows)  # closure satisfies the strict-order invariants


@settings(max_examples=300, deadline=None)
@given(dags(max_n=12))
def test_closure_reduction_laws(g):
    _check_laws(g)


def test_closure_reduction_laws_exhaustive():
    for g in ALL_SMALL:
        _check_laws(g)


class TestClassSizeExponent:
    def test_empty(self):
        for n in (1, 2, 5):
            assert class_size_exponent(empty_dag(n)) == 0

    def test_3_chain(self):
        assert class_size_exponent(Dag.from_edges(3, [(0, 1), (1, 2)])) == 1

    def test_linear_order_4(self):
        assert class_size_exponent(Dag.from_edges(4, [(0, 1), (1, 2), (2, 3)])) == 3

    def test_matches_class_count(self):
        by_closure = {}
        for n in (1, 2, 3, 4):
            for e in all_dags_bruteforce(n):
                key = (n, frozenset(naive_closure(n, e)))
                by_closure[key] = by_closure.get(key, 0) + 1
        for g in ALL_SMALL:
            key = (g.n, frozenset(naive_closure(g.n, g.edge_set())))
            assert 2 ** class_size_exponent(g) == by_closure[key]

    @settings(max_examples=200, deadline=None)
    @given(dags(max_n=12))
    def test_bounds(self, g):
        e = class_size_exponent(g)
        assert 0 <= e <= g.n * (g.n - 1) // 2


class TestPosetKey:
    def test_same_closure_same_key(self):
        a = Dag.from_edges(4, PATH3)
        b = Dag.from_edges(4, PATH3 + [(1, 3)])
        assert poset_key(a) == poset_key(b)

    def test_empty_is_antichain(self):
        k = poset_key(empty_dag(5))
        assert k.pairs() == []

    def test_direction_matters(self):
        assert poset_key(Dag.from_edges(2, [(0, 1)])) != poset_key(Dag.from_edges(2, [(1, 0)]))

    def test_invalid_relations(self):
        with pytest.raises(ValueError):
            PosetKey(2, (0b01, 0))  # reflexive
        with pytest.raises(ValueError):
            PosetKey(3, (0b010, 0b100, 0))  # 0<1<2 without 0<2
        with pytest.raises(ValueError):
            PosetKey(2, (0b10, 0b01))  # 0<1 and 1<0

    def test_bytes_layout(self):
        k = poset_key(Dag.from_edges(3, [(0, 1), (1, 2)]))
        assert k.bits() == "011001000"
        assert k.to_bytes() == b"\x03\x00\x00\x00" + bytes([0b01100100, 0b00000000])

    @settings(max_examples=200, deadline=None)
    @given(dags(max_n=12))
    def test_bytes_round_trip(self, g):
        k = poset_key(g)
        data = k.to_bytes()
        assert len(data) == 4 + (g.n * g.n + 7) // 8
        assert PosetKey.from_bytes(data) == k

    def test_truncated_bytes(self):
        with pytest.raises(ValueError):
            PosetKey.from_bytes(b"\x03\x00\x00\x00\x00")


class TestHasse:
    def test_chain(self):
        assert hasse_edges(poset_key(Dag.from_edges(4, PATH3))) == [(1, 2), (2, 3)]

    def test_antichain(self):
        assert hasse_edges(poset_key(empty_dag(4))) == []

    def test_v_shape(self):
        assert hasse_edges(poset_key(Dag.from_edges(3, [(0, 2), (1, 2)]))) == [(0, 2), (1, 2)]

    def test_random_reclose(self, rng):
        for _ in range(200):
            g = random_dag(int(rng.integers(1, 10)), rng)
            k = poset_key(g)
            assert poset_key(Dag.from_edges(g.n, hasse_edges(k))) == k
