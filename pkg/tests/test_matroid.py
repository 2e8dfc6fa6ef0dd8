import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import brute_bases, hall_independent
from strategies import admissible
from wlpositroid.diagram import WilsonLoopDiagram, all_admissible
from wlpositroid.matroid import (
    bases,
    bases_from_necklace,
    gale_leq,
    is_independent,
    is_independent_hall,
    lexmin_basis,
    lexmin_basis_bruteforce,
)
from wlpositroid.necklace import grassmann_necklace


def test_independence_examples(eight):
    assert is_independent(eight, {1, 2, 3, 5})
    # 3 -> (2,4), 6 -> (5,7) works
    assert is_independent(eight, {3, 6})
    # Prop({6,7,8}) = {(5,7),(5,8)}, only two propagators
    assert not is_independent(eight, {6, 7, 8})
    assert not is_independent_hall(eight, {6, 7, 8})
    assert is_independent(eight, set())
    assert not is_independent(eight, {1, 2, 3, 4, 5})


def test_bases_examples(eight):
    assert bases(WilsonLoopDiagram(6)) == {frozenset()}
    assert bases(WilsonLoopDiagram(8, [(1, 4)])) == {frozenset({v}) for v in (1, 2, 4, 5)}
    B = bases(eight)
    for t in grassmann_necklace(eight).terms:
        assert t in B
    assert B == brute_bases(8, [p.ends for p in eight.propagators])


def test_lexmin_examples(eight):
    assert lexmin_basis(eight, 1) == {1, 2, 3, 5}
    assert lexmin_basis(eight, 5) == {5, 6, 7, 1}
    assert lexmin_basis(WilsonLoopDiagram(6), 3) == frozenset()
    for i in range(1, 9):
        assert lexmin_basis(eight, i) == lexmin_basis_bruteforce(eight, i)


def test_gale_examples():
    assert gale_leq({2, 5, 6}, {2, 6, 1}, 2, 6)
    assert not gale_leq({2, 5, 6}, {3, 4, 6}, 2, 6)
    assert gale_leq({1, 4}, {1, 4}, 3, 6)
    with pytest.raises(ValueError):
        gale_leq({1}, {1, 2}, 1, 4)


def test_bases_from_necklace_examples(eight):
    assert bases_from_necklace(grassmann_necklace(WilsonLoopDiagram(6))) == {frozenset()}
    single = WilsonLoopDiagram(8, [(1, 4)])
    assert bases_from_necklace(grassmann_necklace(single)) == {frozenset({v}) for v in (1, 2, 4, 5)}
    assert bases_from_necklace(grassmann_necklace(eight)) == bases(eight)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_hall_equivalence_exhaustive(n):
    for W in all_admissible(n, min_n=n):
        for size in range(0, W.k + 1):
            for J in itertools.combinations(range(1, n + 1), size):
                assert is_independent(W, J) == is_independent_hall(W, J)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_exchange_axiom(n):
    for W in all_admissible(n, min_n=n):
        B = bases(W)
        for A in B:
            for C in B:
                for a in A - C:
                    assert any((A - {a}) | {c} in B for c in C - A)


@given(admissible(max_n=9), st.data())
def test_hall_matches_oracle(W, data):
    J = data.draw(st.sets(st.integers(1, W.n), max_size=W.k))
    assert is_independent(W, J) == hall_independent(W.n, [p.ends for p in W.propagators], sorted(J))


@given(admissible(max_n=9))
def test_oh_and_lexmin(W):
    neck = grassmann_necklace(W)
    for i in range(1, W.n + 1):
        assert neck.term(i) == lexmin_basis(W, i)
    assert bases_from_necklace(neck) == bases(W)


@given(admissible(max_n=9), st.data())
def test_deleting_a_propagator_keeps_small_independents(W, data):
    p = data.draw(st.sampled_from(W.propagators))
    V = WilsonLoopDiagram(W.n, [q for q in W.propagators if q != p])
    J = data.draw(st.sets(st.integers(1, W.n), max_size=W.k - 1))
    if is_independent(V, J):
        assert is_independent(W, J)
