"""One-parameter families of quasi-homogeneous ideals and their limits.

A family fixes, for each degree ``d <= top``, generators of the degree-``d``
piece of an ideal of ``k[x,y][t]``; every degree above ``top`` is the full
space and a degree without generators is zero.  Over the field of rational
functions in ``t`` each piece is a subspace of the span of the degree-``d``
monomials, so everything reduces to exact linear algebra degree by degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional, Sequence

from .arrows import CoArrowSystem, SystemValidationError, apply_cosystem, validate_cosystem
from .staircase import Box, Grading, Monomial, Staircase, StaircaseError, degree, is_staircase, monomials_of_degree
from .tpoly import TPoly, echelon, leading_position, popov_reduce, rank, rational_rref, top_coefficients, vec_degree


class ClosureError(ValueError):
    pass


class DependentVectorsError(ValueError):
    pass


Vector = Mapping[Monomial, TPoly]


@dataclass(frozen=True)
class GradedFamily:
    grading: Grading
    top: int
    generators: Mapping[int, tuple] = field(hash=False)
    name: str = ""

    def __post_init__(self):
        gens = {}
        for d, vecs in dict(self.generators).items():
            d = int(d)
            if d < 0 or d > self.top:
                raise ValueError(f"generators given in degree {d} outside 0..{self.top}")
            clean = []
            for v in vecs:
                v = {Monomial(*m): c if isinstance(c, TPoly) else TPoly(c) for m, c in dict(v).items()}
                for m in v:
                    if degree(self.grading, m) != d:
                        raise ValueError(f"monomial {m} has degree {degree(self.grading, m)}, listed in degree {d}")
                clean.append({m: c for m, c in v.items() if c})
            gens[d] = tuple(clean)
        object.__setattr__(self, "generators", gens)

    def matrix(self, d: int) -> list[list[TPoly]]:
        """Generator rows of degree ``d`` over the increasing monomial basis."""
        cols = monomials_of_degree(self.grading, d)
        return [[v.get(m, TPoly()) for m in cols] for v in self.generators.get(d, ())]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "grading": self.grading.to_json(),
            "top": self.top,
            "degrees": {
                str(d): [[{"m": list(m), "c": c.to_json()} for m, c in sorted(v.items())] for v in vecs]
                for d, vecs in sorted(self.generators.items())
            },
        }

    @classmethod
    def from_json(cls, data: dict, variant: Optional[str] = None) -> "GradedFamily":
        degrees = data["degrees"]
        if variant is not None:
            degrees = {**degrees, **data["variants"][variant]["degrees"]}
        gens = {}
        for d, vecs in degrees.items():
            gens[int(d)] = [
                {Monomial(*term["m"]): TPoly(Fraction(c) for c in term["c"]) for term in vec} for vec in vecs
            ]
        name = data.get("name", "") + (f"[{variant}]" if variant else "")
        return cls(Grading.from_json(data["grading"]), int(data["top"]), gens, name)


def load_family(source: str, variant: Optional[str] = None) -> GradedFamily:
    """Load a family from a JSON file or by bundled name (``T``, ``U``, ...)."""
    path = Path(source)
    if path.exists():
        text = path.read_text()
    else:
        ref = resources.files("hilbincidence") / "data" / "families" / f"{source}.json"
        if not ref.is_file():
            raise FileNotFoundError(f"no family file or bundled family named {source!r}")
        text = ref.read_text()
    return GradedFamily.from_json(json.loads(text), variant)


def bundled_family_names() -> list[str]:
    folder = resources.files("hilbincidence") / "data" / "families"
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))


# --------------------------------------------------------------------------


def _shifted(fam: GradedFamily, vec: Vector, by: Monomial) -> Vector:
    return {m.times(by): c for m, c in vec.items()}


def closure_violations(fam: GradedFamily) -> list[str]:
    """Products ``x*v``, ``y*v`` of generators not lying in the target degree."""
    g = fam.grading
    out = []
    for d in range(fam.top + 1):
        for i, v in enumerate(fam.generators.get(d, ())):
            for var, by in (("x", Monomial(1, 0)), ("y", Monomial(0, 1))):
                target = degree(g, by) + d
                if target > fam.top:
                    continue
                cols = monomials_of_degree(g, target)
                rows = fam.matrix(target)
                w = _shifted(fam, v, by)
                extra = [w.get(m, TPoly()) for m in cols]
                if rank(rows + [extra]) != rank(rows):
                    out.append(f"{var} * generator {i} of degree {d} is not in degree {target}")
    return out


def _pivot_rows(fam: GradedFamily, d: int) -> dict[int, list[TPoly]]:
    return echelon(fam.matrix(d))


def generic_initial_staircase(fam: GradedFamily) -> Staircase:
    problems = closure_violations(fam)
    if problems:
        raise ClosureError("; ".join(problems))
    return _generic_staircase(fam)


def _generic_staircase(fam: GradedFamily) -> Staircase:
    g = fam.grading
    cells = []
    for d in range(fam.top + 1):
        cols = monomials_of_degree(g, d)
        pivots = _pivot_rows(fam, d)
        cells += [m for i, m in enumerate(cols) if i not in pivots]
    if not is_staircase(cells):
        raise StaircaseError("initial monomials do not form the complement of a staircase")
    return Staircase.of(cells)


def limit_subspace(vectors: Sequence[Sequence[TPoly]]) -> list[list[Fraction]]:
    """Limit as ``t -> oo`` of the span of ``vectors``, as a basis of rational vectors.

    The rows are reduced until their leading positions differ; the top
    coefficient vectors of such a basis span the limit.
    """
    rows = [[v if isinstance(v, TPoly) else TPoly(v) for v in row] for row in vectors]
    if not rows:
        return []
    if rank(rows) != len(rows):
        raise DependentVectorsError("input vectors are linearly dependent")
    return [top_coefficients(r) for r in popov_reduce(rows)]


def limit_pieces(fam: GradedFamily) -> dict[int, list[tuple[Fraction, ...]]]:
    """Degree-wise limit subspaces (canonical rational bases)."""
    out = {}
    for d in range(fam.top + 1):
        basis = list(_pivot_rows(fam, d).values())
        out[d] = rational_rref(limit_subspace(basis)) if basis else []
    return out


def _limit_closure_violations(fam: GradedFamily, pieces) -> list[str]:
    g = fam.grading
    out = []
    for d in range(fam.top + 1):
        cols = monomials_of_degree(g, d)
        for i, row in enumerate(pieces[d]):
            for var, by in (("x", Monomial(1, 0)), ("y", Monomial(0, 1))):
                target = degree(g, by) + d
                if target > fam.top:
                    continue
                tcols = monomials_of_degree(g, target)
                pos = {m: j for j, m in enumerate(tcols)}
                w = [Fraction(0)] * len(tcols)
                for m, c in zip(cols, row):
                    if c:
                        w[pos[m.times(by)]] = c
                if len(rational_rref(list(pieces[target]) + [w])) != len(pieces[target]):
                    out.append(f"limit: {var} * basis vector {i} of degree {d} is not in degree {target}")
    return out


def family_staircases(fam: GradedFamily) -> tuple[Staircase, Staircase]:
    """Generic and limit staircases of a family (closure is not checked)."""
    return _generic_staircase(fam), _limit_staircase(fam, limit_pieces(fam))


def _limit_staircase(fam: GradedFamily, pieces) -> Staircase:
    g = fam.grading
    cells = []
    for d in range(fam.top + 1):
        cols = monomials_of_degree(g, d)
        lead = {max(i for i, c in enumerate(row) if c) for row in pieces[d]}
        cells += [m for i, m in enumerate(cols) if i not in lead]
    if not is_staircase(cells):
        raise StaircaseError("limit initial monomials do not form the complement of a staircase")
    return Staircase.of(cells)


@dataclass
class LimitReport:
    generic: Staircase
    limit: Optional[Staircase]
    generic_ranks: tuple[int, ...]
    limit_ranks: tuple[int, ...]
    closure_ok: bool
    generic_matches: bool
    limit_matches: bool
    problems: list[str] = field(default_factory=list)
    extracted: Optional[CoArrowSystem] = None

    @property
    def passed(self) -> bool:
        return (
            self.closure_ok
            and self.generic_matches
            and self.limit_matches
            and self.generic_ranks == self.limit_ranks
        )

    def to_json(self) -> dict:
        return {
            "generic": self.generic.to_json()["generators"],
            "limit": self.limit.to_json()["generators"] if self.limit is not None else None,
            "generic_ranks": list(self.generic_ranks),
            "limit_ranks": list(self.limit_ranks),
            "closure_ok": self.closure_ok,
            "generic_matches": self.generic_matches,
            "limit_matches": self.limit_matches,
            "passed": self.passed,
            "problems": self.problems,
            "cosystem": self.extracted.to_json() if self.extracted is not None else None,
        }


def verify_witness(
    fam: GradedFamily, E: Staircase, F: Staircase, box: Optional[Box] = None
) -> LimitReport:
    """Check that ``fam`` degenerates a point of the cell of ``E`` into the cell of ``F``.

    Mismatches are reported, not raised.  When everything passes and ``box``
    holds ``F`` (default: the ``n x n`` box), the extracted co-system is
    attached to the report.
    """
    problems = closure_violations(fam)
    generic = _generic_staircase(fam)
    pieces = limit_pieces(fam)
    problems += _limit_closure_violations(fam, pieces)
    try:
        limit = _limit_staircase(fam, pieces)
    except StaircaseError as exc:
        limit = None
        problems.append(str(exc))
    generic_ranks = tuple(len(_pivot_rows(fam, d)) for d in range(fam.top + 1))
    limit_ranks = tuple(len(pieces[d]) for d in range(fam.top + 1))
    report = LimitReport(
        generic=generic,
        limit=limit,
        generic_ranks=generic_ranks,
        limit_ranks=limit_ranks,
        closure_ok=not problems,
        generic_matches=generic == E,
        limit_matches=limit == F,
        problems=problems,
    )
    if generic != E:
        report.problems.append(f"generic staircase is ({generic.label()}), expected ({E.label()})")
    if limit is not None and limit != F:
        report.problems.append(f"limit staircase is ({limit.label()}), expected ({F.label()})")
    if report.passed:
        box = box or Box(max(len(E), 1), max(len(E), 1))
        if E.fits(box) and F.fits(box):
            report.extracted = extract_cosystem(fam, box)
    return report


def canonical_representatives(fam: GradedFamily, d: int) -> dict[Monomial, list[TPoly]]:
    """For each initial monomial ``m`` of degree ``d``, the element ``P(m)``.

    Starting from the reduced echelon basis, the top term of a row is
    cancelled against a row with smaller initial monomial whenever both share
    their leading position.  At the end the leading positions differ, and by
    the predictable-degree property each row minimises (degree spread, leading
    monomial) among elements with its initial monomial.
    """
    cols = monomials_of_degree(fam.grading, d)
    pivots = _pivot_rows(fam, d)
    order = sorted(pivots)
    rows = popov_reduce([pivots[c] for c in order], order)
    return {cols[c]: r for c, r in zip(order, rows)}


def extract_cosystem(fam: GradedFamily, box: Box) -> CoArrowSystem:
    """The co-arrow system ``m -> val(P(m))`` read off the family."""
    g = fam.grading
    base = _generic_staircase(fam)
    listed = {}
    for d in range(fam.top + 1):
        cols = monomials_of_degree(g, d)
        pos = {m: i for i, m in enumerate(cols)}
        for m, row in canonical_representatives(fam, d).items():
            lam = pos[m] - leading_position(row)
            if lam:
                if m not in box:
                    raise SystemValidationError([f"non-identity arrow from {m} outside the {box} box"])
                listed[m] = lam
    Sc = CoArrowSystem(g, box, base, listed)
    problems = validate_cosystem(Sc)
    if problems:
        raise SystemValidationError(problems)
    expected = _limit_staircase(fam, limit_pieces(fam))
    if apply_cosystem(Sc) != expected:
        raise SystemValidationError([f"co-system ends do not match the limit staircase ({expected.label()})"])
    return Sc


def spread(row: Sequence[TPoly], initial: int) -> int:
    """``t``-degree of the row minus ``t``-degree of its initial coefficient."""
    return vec_degree(row) - row[initial].deg
