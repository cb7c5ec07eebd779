import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import first_monomials, partitions, staircases_of_size, staircases_with_hilbert

from hilbincidence.staircase import (
    STANDARD,
    Box,
    BoxFitError,
    Grading,
    GradingError,
    InfiniteStaircaseError,
    Monomial,
    Staircase,
    StaircaseError,
    compare,
    degree,
    dual,
    enumerate_staircases,
    format_generators,
    hilbert_function,
    minimal_generators,
    monomial_colon,
    monomials_of_degree,
    parse_monomial,
    parse_staircase,
    rank,
    staircase_from_generators,
    unrank,
)

GRADINGS = [STANDARD, Grading(2, -1), Grading(1, -2), Grading(3, -2), Grading(1, -3)]


@st.composite
def staircases(draw, max_size=8):
    n = draw(st.integers(0, max_size))
    parts = draw(st.sampled_from(list(partitions(n))))
    return Staircase.of((i, j) for i, h in enumerate(parts) for j in range(h))


@st.composite
def staircase_in_box(draw):
    E = draw(staircases())
    M = draw(st.integers(E.bounding_box().M, 8)) if len(E) else draw(st.integers(1, 8))
    N = draw(st.integers(E.bounding_box().N, 8)) if len(E) else draw(st.integers(1, 8))
    return E, Box(max(M, 1), max(N, 1))


def test_first_monomials_of_standard_order():
    assert unrank(STANDARD, 7) == Monomial(2, 1)
    assert rank(STANDARD, Monomial(0, 1)) == 2
    assert [unrank(STANDARD, k) for k in range(6)] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


@pytest.mark.parametrize("g", GRADINGS, ids=str)
def test_rank_matches_sorted_window(g):
    expected = first_monomials(g.a, g.b, 400)
    assert [unrank(g, k) for k in range(400)] == expected
    assert all(rank(g, m) == k for k, m in enumerate(expected))


def test_rank_strictly_increasing_first_ten_thousand():
    prev = unrank(STANDARD, 0)
    for k in range(1, 10_000):
        m = unrank(STANDARD, k)
        assert compare(STANDARD, prev, m) == -1
        assert rank(STANDARD, m) == k
        prev = m


@given(st.sampled_from(GRADINGS), st.integers(0, 40))
def test_degree_line_is_arithmetic(g, d):
    line = monomials_of_degree(g, d)
    assert all(degree(g, m) == d for m in line)
    for p, q in zip(line, line[1:]):
        assert (q[0] - p[0], q[1] - p[1]) == (-g.a, -g.b)


@pytest.mark.parametrize("a,b", [(1, 1), (0, -1), (2, -2), (-1, 1)])
def test_rejected_gradings(a, b):
    with pytest.raises(GradingError):
        Grading(a, b)


def test_grading_of_normalizes_sign():
    assert Grading.of(-1, 1) == STANDARD
    with pytest.raises(GradingError):
        Grading.of(0, 3)


def test_minimal_generators_example():
    E = Staircase.of([(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (1, 2), (3, 0), (4, 0)])
    assert minimal_generators(E) == [(0, 3), (2, 1), (5, 0)]
    assert staircase_from_generators(minimal_generators(E)) == E


def test_empty_staircase_generated_by_one():
    assert minimal_generators(Staircase.of([])) == [(0, 0)]


def test_missing_pure_power_is_infinite():
    with pytest.raises(InfiniteStaircaseError):
        staircase_from_generators([(0, 2), (1, 1)])


def test_not_downward_closed():
    with pytest.raises(StaircaseError):
        Staircase.of([(0, 0), (1, 1)])


def test_two_staircases_with_h111():
    found = {E.key() for E in enumerate_staircases(STANDARD, (1, 1, 1))}
    assert found == {Staircase.of([(0, 0), (1, 0), (2, 0)]).key(), Staircase.of([(0, 0), (0, 1), (0, 2)]).key()}


def test_nine_staircases_for_worked_example():
    assert len(enumerate_staircases(STANDARD, (1, 2, 3, 2, 1))) == 9


@pytest.mark.parametrize("g", GRADINGS, ids=str)
def test_enumeration_partitions_all_sizes(g):
    # every staircase of size n is found under exactly its own Hilbert function
    for n in range(8):
        hs = {hilbert_function(g, Staircase.of(c)) for c in staircases_of_size(n)}
        total = sum(len(enumerate_staircases(g, H)) for H in hs)
        assert total == len(list(partitions(n)))


def test_enumeration_against_degree_line_filter():
    for H in [(1, 2, 2, 1), (1, 1, 2, 1, 1), (1, 2, 3, 2, 1), (1, 2, 1, 1)]:
        got = {E.cells for E in enumerate_staircases(STANDARD, H)}
        assert got == staircases_with_hilbert(1, -1, H)


def test_unattainable_hilbert_function_is_empty():
    assert enumerate_staircases(STANDARD, (2,)) == []
    assert enumerate_staircases(STANDARD, (1, 0, 1)) == []


def test_counterexample_duals():
    box = Box(5, 5)
    assert dual(parse_staircase("y^4,x*y^2,x^2*y,x^5"), box) == parse_staircase("y^4,x^3*y^3,x^4*y,x^5")
    assert dual(parse_staircase("y^5,x*y^2,x^3"), box) == parse_staircase("y^5,x^2*y^3,x^4")


def test_dual_needs_fit():
    with pytest.raises(BoxFitError):
        dual(parse_staircase("y,x^3"), Box(2, 2))


def test_colon_of_unit_staircase():
    assert sorted(monomial_colon(Staircase.of([(0, 0)]), Box(2, 2))) == [(0, 2), (1, 1), (2, 0)]


@given(staircase_in_box())
def test_dual_is_involution(pair):
    E, box = pair
    D = dual(E, box)
    assert len(D) == box.M * box.N - len(E)
    assert dual(D, box) == E


@given(staircase_in_box())
def test_colon_equals_generators_of_dual(pair):
    E, box = pair
    assert sorted(monomial_colon(E, box)) == sorted(minimal_generators(dual(E, box)))


@given(staircases(), st.sampled_from(GRADINGS))
def test_hilbert_function_sums_to_size(E, g):
    assert sum(hilbert_function(g, E)) == len(E)


@given(staircases())
@settings(max_examples=50)
def test_text_round_trip(E):
    assert parse_staircase(format_generators(minimal_generators(E))) == E
    assert Staircase.from_json(E.to_json()) == E


@pytest.mark.parametrize(
    "text,expected",
    [("1", (0, 0)), ("x", (1, 0)), ("xy^2", (1, 2)), ("x^2*y", (2, 1)), ("y^10", (0, 10)), ("x^3 y^4", (3, 4))],
)
def test_parse_monomial(text, expected):
    assert parse_monomial(text) == expected


def test_parse_staircase_formats():
    E = parse_staircase("y^3,x*y^2,x^4")
    assert parse_staircase("(y^3, xy^2, x^4)") == E
    assert parse_staircase("[[0,3],[1,2],[4,0]]") == E
    assert parse_staircase('{"cells": ' + str([list(c) for c in E.sorted()]) + "}") == E
    with pytest.raises(ValueError):
        parse_staircase("z^2")
