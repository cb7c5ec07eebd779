"""Small worked examples, one assertion block per documented case."""

import pytest
from conftest import NAMED

from hilbincidence.arrows import ArrowSystem, apply_system, validate_system
from hilbincidence.atlas import build_atlas
from hilbincidence.cli import main
from hilbincidence.families import (
    GradedFamily,
    extract_cosystem,
    generic_initial_staircase,
    limit_subspace,
    load_family,
    verify_witness,
)
from hilbincidence.grassmannian import (
    SchubertIndex,
    classical_leq,
    grassmannian_hilbert_function,
    staircase_of,
)
from hilbincidence.staircase import (
    STANDARD,
    Box,
    Grading,
    Monomial,
    Staircase,
    compare,
    degree,
    dual,
    enumerate_staircases,
    hilbert_function,
    is_staircase,
    minimal_generators,
    monomial_colon,
    monomials_of_degree,
    parse_staircase,
    rank,
    staircase_from_generators,
)
from hilbincidence.tpoly import TPoly, rational_rref
from hilbincidence.yameogo import dominates, extremal_staircases, profile

NINE = {(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (0, 1), (0, 2), (0, 3), (1, 1)}


def constant_family(E: Staircase, top: int) -> GradedFamily:
    gens = {}
    for d in range(top + 1):
        gens[d] = tuple({m: TPoly([1])} for m in monomials_of_degree(STANDARD, d) if m not in E)
    return GradedFamily(STANDARD, top, gens, "constant")


def test_degree_values():
    assert degree(STANDARD, Monomial(2, 3)) == 5
    assert degree(Grading(2, -3), Monomial(0, 0)) == 0
    assert degree(Grading(2, -3), Monomial(3, 1)) == 11


def test_order_values():
    assert compare(STANDARD, Monomial(3, 0), Monomial(2, 1)) == -1
    assert compare(Grading(3, -2), Monomial(0, 0), Monomial(1, 0)) == -1
    assert compare(Grading(2, -3), Monomial(0, 1), Monomial(1, 0)) == -1
    assert rank(STANDARD, Monomial(0, 0)) == 0


def test_staircase_predicate():
    assert is_staircase([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert not is_staircase([(0, 0), (1, 1)])
    assert is_staircase(NINE)


def test_generators_of_the_nine_cells():
    E = Staircase.of(NINE)
    assert minimal_generators(E) == [(0, 4), (1, 2), (2, 1), (5, 0)]
    assert staircase_from_generators([(0, 4), (1, 2), (2, 1), (5, 0)]).cells == NINE
    assert staircase_from_generators([(1, 0), (0, 1)]).cells == {(0, 0)}
    assert hilbert_function(STANDARD, E) == (1, 2, 3, 2, 1)
    assert hilbert_function(STANDARD, Staircase.of([])) == ()
    assert hilbert_function(STANDARD, Staircase.of([(0, 0), (1, 0), (0, 1), (1, 1)])) == (1, 2, 1)


def test_duals_and_colons_at_the_extremes():
    box = Box(3, 2)
    assert dual(Staircase.of([]), box) == Staircase.of(box.cells())
    assert sorted(monomial_colon(Staircase.of([]), box)) == [(0, 2), (3, 0)]
    assert monomial_colon(Staircase.of(box.cells()), box) == [(0, 0)]


def test_one_arrow_on_two_cells():
    S = ArrowSystem(STANDARD, Staircase.of([(0, 0), (1, 0)]), {(0, 0): 0, (1, 0): -1})
    assert validate_system(S) == []
    assert apply_system(S).cells == {(0, 0), (0, 1)}


def test_empty_profile_and_dominance(named):
    assert profile(STANDARD, Staircase.of([]), length=5).values == (0, 0, 0, 0, 0)
    assert dominates(STANDARD, named["c"], named["g"])
    assert dominates(STANDARD, named["c"], named["c"])
    assert not dominates(STANDARD, named["g"], named["c"])


def test_single_staircase_is_extremal():
    ext = extremal_staircases(STANDARD, (1,))
    assert len(ext["maxima"]) == len(ext["minima"]) == 1


def test_grassmannian_examples():
    assert grassmannian_hilbert_function(2, 2) == (1, 2, 1)
    assert grassmannian_hilbert_function(1, 1) == (1, 1)
    assert grassmannian_hilbert_function(4, 3) == (1, 2, 3)

    def top_cells(p):
        return {m for m in staircase_of(SchubertIndex(2, 2, p)) if sum(m) == 2}

    assert top_cells((0, 0)) == {(2, 0)}
    assert top_cells((1, 1)) == {(0, 2)}
    assert top_cells((1, 0)) == {(1, 1)}
    assert classical_leq(SchubertIndex(2, 2, (0, 0)), SchubertIndex(2, 2, (1, 1)))
    assert not classical_leq(SchubertIndex(2, 2, (1, 0)), SchubertIndex(2, 2, (0, 0)))
    assert classical_leq(SchubertIndex(2, 2, (1, 0)), SchubertIndex(2, 2, (1, 0)))


def test_generic_staircases_of_t_and_u(named):
    assert generic_initial_staircase(load_family("T")) == named["a"]
    assert generic_initial_staircase(load_family("U")) == named["b"]


def test_constant_family(named):
    E = named["c"]
    fam = constant_family(E, 5)
    assert generic_initial_staircase(fam) == E
    report = verify_witness(fam, E, E)
    assert report.passed
    assert extract_cosystem(fam, Box(9, 9)).listed == {}


def test_trivial_limits():
    constant = [[1, 2, 0], [0, 1, 3]]
    got = limit_subspace([[TPoly([v]) for v in r] for r in constant])
    assert rational_rref(got) == rational_rref(constant)
    assert limit_subspace([[TPoly([0, 1]), TPoly([1])]]) == [[1, 0]]


def test_small_atlases():
    assert len(build_atlas(STANDARD, (1,)).edges) == 0
    assert len(build_atlas(STANDARD, (1,)).nodes) == 1
    chain = build_atlas(STANDARD, (1, 2, 1))
    assert len(chain.nodes) == 3
    assert len(chain.edges) == 3
    assert all(e.holds for e in chain.edges)


@pytest.mark.parametrize(
    "argv,code,rows",
    [
        (["enumerate", "--hilbert", "1,2,3,2,1", "--grading", "1,-1"], 0, 9),
        (["enumerate", "--hilbert", "1,1,1"], 0, 2),
        (["check", NAMED["c"], NAMED["c"]], 0, None),
        (["verify", "U", NAMED["b"], NAMED["d"]], 0, None),
        (["verify", "T", NAMED["a"], NAMED["c"]], 1, None),
        (["grassmann", "2", "2"], 0, None),
        (["grassmann", "3", "4"], 0, None),
    ],
)
def test_cli_examples(capsys, argv, code, rows):
    assert main(argv) == code
    out = capsys.readouterr().out
    if rows is not None:
        assert len(out.strip().splitlines()) == rows
    if argv[0] == "grassmann":
        assert "equivalent: yes" in out


def test_parse_of_named_staircases(named):
    assert parse_staircase(NAMED["c"]).cells == NINE
    assert len({E.key() for E in named.values()}) == 9
    assert {E.key() for E in enumerate_staircases(STANDARD, (1, 2, 3, 2, 1))} == {E.key() for E in named.values()}
