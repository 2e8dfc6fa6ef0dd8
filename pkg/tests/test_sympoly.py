import random

import pytest
from hypothesis import given, strategies as st

from oracles import leibniz
from strategies import admissible
from wlpositroid.diagram import WilsonLoopDiagram
from wlpositroid.matroid import is_independent
from wlpositroid.sympoly import (
    ONE,
    ZERO,
    DoesNotDivide,
    FactoredPolynomial,
    SparsePolynomial,
    SymbolicMatrix,
    c_matrix,
    exact_divide,
    minor_det,
    parse_poly,
    saturating_bijections,
    structural_factors,
)

x = SparsePolynomial.var


def letters(M):
    """a, b, c, ... for the nonzero entries, row by row."""
    out = {}
    it = iter("abcdefghijkl")
    for r in range(1, M.k + 1):
        for v in sorted(M.support[r - 1]):
            out[next(it)] = x(r, v)
    return out


def test_arithmetic_basics():
    a, b = x(1, 1), x(1, 2)
    assert (a + b) - b == a
    assert (a * b).degree() == 2
    assert (a - a).is_zero() and ZERO.degree() == -1
    assert (a + 1) * (a - 1) == a * a - 1
    assert -(-a) == a and 2 * a == a + a
    assert (a ** 3).terms == {(((1, 1), 3),): 1}


def test_text_and_parse():
    f = x(2, 4) * x(1, 5) - x(2, 5) * x(1, 4)
    assert str(f) == "-x_{1,4}*x_{2,5} + x_{1,5}*x_{2,4}"
    assert parse_poly("x_{2,4}*x_{1,5} - x_{2,5}*x_{1,4}") == f
    assert parse_poly(str(3 * f + 2)) == 3 * f + 2
    assert str(ZERO) == "0" and parse_poly("0") == ZERO


def test_c_matrix_eight(eight):
    M = c_matrix(eight, [(1, 4), (2, 4), (5, 7), (5, 8)])
    pattern = [[v for v in range(1, 9) if not M.entry(r, v).is_zero()] for r in range(1, 5)]
    assert pattern == [[1, 2, 4, 5], [2, 3, 4, 5], [5, 6, 7, 8], [1, 5, 6, 8]]


def test_c_matrix_seven(seven):
    M = c_matrix(seven)
    pattern = [sorted(M.support[r]) for r in range(3)]
    assert pattern == [[1, 2, 6, 7], [1, 2, 5, 6], [1, 2, 4, 5]]
    assert c_matrix(WilsonLoopDiagram(6)).k == 0
    with pytest.raises(ValueError):
        c_matrix(seven, [(1, 6), (1, 5)])


def test_minor_examples(seven):
    M = c_matrix(seven)
    L = letters(M)
    a, b, e, f, i, j, k = (L[c] for c in "abefijk")
    p, q, s = seven.propagators
    assert minor_det(M, [q, s], [1, 2]) == e * j - f * i
    assert minor_det(M, [p, q, s], [1, 2, 4]) == k * (a * f - b * e)
    assert minor_det(M, [p], [6]) == L["c"]
    assert minor_det(M, [p], [3]) == ZERO
    assert minor_det(M, [], []) == ONE
    with pytest.raises(ValueError):
        minor_det(M, [p, q], [1])


def test_exact_divide_examples(seven):
    L = letters(c_matrix(seven))
    e, f, i, j, d = (L[c] for c in "efijd")
    assert exact_divide((e * j - f * i) * d, e * j - f * i) == d
    with pytest.raises(DoesNotDivide):
        exact_divide(x(1, 1), x(1, 2))
    with pytest.raises(ZeroDivisionError):
        exact_divide(x(1, 1), ZERO)
    with pytest.raises(DoesNotDivide):
        exact_divide(x(1, 1) + 1, 2 * x(1, 1) + 2)


def test_factored_polynomial():
    a, b = x(1, 1), x(1, 2)
    fp = FactoredPolynomial.build(-1, [a, b, a])
    assert fp.factors == ((a, 2), (b, 1))
    assert fp.expand() == -(a * a * b)
    assert not fp.is_square_free()
    assert not FactoredPolynomial.build(1, [a - b, b - a]).is_square_free()
    assert FactoredPolynomial.build(1, [a, a - b]).text() == "x_{1,1}*(x_{1,1} - x_{1,2})"


def _random_matrix(rng, k, n):
    sup = [rng.sample(range(1, n + 1), rng.randint(1, n)) for _ in range(k)]
    return SymbolicMatrix.from_pattern(sup, n)


@given(st.integers(0, 2**32 - 1), st.integers(1, 5))
def test_minor_matches_leibniz(seed, m):
    rng = random.Random(seed)
    M = _random_matrix(rng, m, 6)
    cols = rng.sample(range(1, 7), m)
    rows = list(range(1, m + 1))
    ref = leibniz(lambda r, c: M.entry(rows[r], cols[c]) if M.is_nonzero(rows[r], cols[c]) else 0, m)
    ref = ref if isinstance(ref, SparsePolynomial) else SparsePolynomial.const(ref)
    got = minor_det(M, rows, cols)
    assert got == ref
    # no cancellation: one monomial per bijection
    assert len(got) == len(saturating_bijections(M, rows, cols))


@given(st.integers(0, 2**32 - 1), st.integers(2, 5))
def test_minor_alternating(seed, m):
    rng = random.Random(seed)
    M = _random_matrix(rng, m, 7)
    cols = rng.sample(range(1, 8), m)
    rows = list(range(1, m + 1))
    a, b = rng.sample(range(m), 2)
    swapped = list(rows)
    swapped[a], swapped[b] = swapped[b], swapped[a]
    assert minor_det(M, swapped, cols) == -minor_det(M, rows, cols)
    rep = list(cols)
    rep[a] = rep[b]
    assert minor_det(M, rows, rep).is_zero()


@given(admissible(max_n=9), st.data())
def test_minor_vanishes_iff_dependent(W, data):
    J = sorted(data.draw(st.sets(st.integers(1, W.n), min_size=W.k, max_size=W.k)))
    M = c_matrix(W)
    D = minor_det(M, list(M.order), J)
    assert D.is_zero() != is_independent(W, J)
    if D:
        assert D.is_homogeneous() and D.degree() == W.k
        fp = structural_factors(M, list(M.order), J)
        assert fp.expand() == D


_vars = st.builds(x, st.integers(1, 3), st.integers(1, 4))
_polys = st.lists(st.tuples(st.integers(-3, 3), st.lists(_vars, max_size=3)), min_size=1, max_size=4).map(
    lambda ts: sum((c * _prod(vs) for c, vs in ts), ZERO)
)


def _prod(vs):
    out = ONE
    for v in vs:
        out = out * v
    return out


@given(_polys, _polys)
def test_exact_divide_round_trip(f, g):
    if g.is_zero():
        return
    assert exact_divide(f * g, g) == f


@given(_polys)
def test_parse_round_trip(f):
    assert parse_poly(str(f)) == f
