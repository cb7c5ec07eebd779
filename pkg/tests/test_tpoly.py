from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from oracles import pluecker_limit, pluecker_of, proportional

from hilbincidence.tpoly import (
    TPoly,
    echelon,
    gcd,
    leading_position,
    popov_reduce,
    primitive,
    rank,
    rational_rref,
    top_coefficients,
)

small = st.integers(-3, 3)
polys = st.lists(small, max_size=4).map(TPoly)
points = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=3, max_cols=4):
    cols = draw(st.integers(2, max_cols))
    rows = draw(st.integers(1, min(max_rows, cols)))
    return [[draw(polys) for _ in range(cols)] for _ in range(rows)]


@given(polys, polys, points)
def test_ring_operations_evaluate_pointwise(p, q, t):
    assert (p + q)(t) == p(t) + q(t)
    assert (p - q)(t) == p(t) - q(t)
    assert (p * q)(t) == p(t) * q(t)
    assert p.shift(2)(t) == t * t * p(t)


@given(polys, polys)
def test_division_with_remainder(p, q):
    assume(q)
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.deg < q.deg


@given(polys, polys, polys)
def test_gcd_divides_both(p, q, r):
    assume(p and q and r)
    g = gcd(p * r, q * r)
    assert g.lc == 1
    assert not (p * r).divmod(g)[1] and not (q * r).divmod(g)[1]
    assert not g.divmod(gcd(r, r))[1]


def test_degree_of_zero():
    assert TPoly().deg == -1
    assert TPoly([0, 0]) == TPoly()
    assert str(TPoly([1, 0, -2])) == "-2*t^2 + 1"
    assert str(TPoly([0, -1])) == "-t"


def test_leading_position_and_top():
    row = [TPoly([0, 1]), TPoly([1]), TPoly([0, 2])]
    assert leading_position(row) == 2
    assert top_coefficients(row) == [1, 0, 2]


def test_primitive_clears_t_content():
    assert primitive([TPoly([0, 2]), TPoly([0, 0, 4])]) == [TPoly([2]), TPoly([0, 4])]
    assert primitive([TPoly([-1, 0, 1]), TPoly([1, 1])]) == [TPoly([-1, 1]), TPoly([1])]


@given(matrices(), points)
@settings(max_examples=80)
def test_rank_bounds_specialization(rows, t):
    specialized = rational_rref([[v(t) for v in r] for r in rows])
    assert len(specialized) <= rank(rows)


@given(matrices())
@settings(max_examples=80)
def test_echelon_pivots(rows):
    piv = echelon(rows)
    assert len(piv) == rank(rows)
    for col, r in piv.items():
        assert max(i for i, v in enumerate(r) if v) == col
        for other in piv:
            if other != col:
                assert not r[other]


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_popov_limit_matches_pluecker(rows):
    assume(rank(rows) == len(rows))
    reduced = popov_reduce([list(r) for r in rows])
    assert len({leading_position(r) for r in reduced}) == len(reduced)
    assert proportional(pluecker_limit(rows), pluecker_of([top_coefficients(r) for r in reduced]))


@given(matrices(max_rows=2, max_cols=4), st.integers(-2, 2), st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_limit_invariant_under_unimodular_recombination(rows, c, k):
    assume(len(rows) == 2 and rank(rows) == 2)
    mixed = [rows[0], [x + y * TPoly.monomial(k, c) for x, y in zip(rows[1], rows[0])]]
    one = rational_rref([top_coefficients(r) for r in popov_reduce([list(r) for r in rows])])
    two = rational_rref([top_coefficients(r) for r in popov_reduce(mixed)])
    assert one == two


def test_popov_rejects_zero_row():
    with pytest.raises(ValueError):
        popov_reduce([[TPoly([1]), TPoly()], [TPoly(), TPoly()]])


def test_rref_is_canonical():
    a = rational_rref([[1, 2, 0], [0, 1, 1]])
    b = rational_rref([[1, 3, 1], [2, 4, 0]])
    assert a == b
    assert all(r[max(i for i, x in enumerate(r) if x)] == 1 for r in a)
    assert a == [(Fraction(-1, 2), 0, 1), (Fraction(1, 2), 1, 0)]
