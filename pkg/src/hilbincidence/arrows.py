"""Arrow systems on staircases, co-arrow systems on complements, and the
two-sided necessary condition for weak incidence.

An arrow with origin ``p`` and multiple ``lam`` ends at ``p + lam*(a, b)``.
On a staircase ``lam <= 0`` (the end is a larger monomial of the same
degree); on a complement ``lam >= 0``.  "Shorter" compares ``|lam|``.

Division compatibility only needs checking against the two immediate
divisors ``Q/x`` and ``Q/y`` of each end: divisibility is generated by
them and "shorter" is transitive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Optional

from .staircase import (
    Box,
    Grading,
    Monomial,
    Staircase,
    degree,
    dual,
    hilbert_function,
    monomials_of_degree,
    order_key,
)


class SystemValidationError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class PsiDomainError(ValueError):
    pass


def arrow_end(g: Grading, origin: Monomial, lam: int) -> Monomial:
    return Monomial(origin[0] + lam * g.a, origin[1] + lam * g.b)


@dataclass(frozen=True)
class Arrow:
    origin: Monomial
    lam: int

    def end(self, g: Grading) -> Monomial:
        return arrow_end(g, self.origin, self.lam)

    @property
    def length(self) -> int:
        return abs(self.lam)

    def to_json(self) -> dict:
        return {"origin": list(self.origin), "lambda": self.lam}


@dataclass(frozen=True)
class Violation:
    kind: str  # origin | sign | negative-end | distinct-ends | division-x | division-y | ...
    at: Monomial
    detail: str = ""

    def __str__(self):
        return f"{self.kind} at {self.at}: {self.detail}" if self.detail else f"{self.kind} at {self.at}"


@dataclass(frozen=True)
class ArrowSystem:
    """One arrow per cell of ``base``, stored as ``origin -> lam``."""

    grading: Grading
    base: Staircase
    lambdas: Mapping[Monomial, int] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "lambdas", {Monomial(*p): int(l) for p, l in dict(self.lambdas).items()}
        )

    @classmethod
    def identity(cls, g: Grading, E: Staircase) -> "ArrowSystem":
        return cls(g, E, {p: 0 for p in E.cells})

    def arrows(self) -> list[Arrow]:
        return [Arrow(p, self.lambdas[p]) for p in sorted(self.lambdas, key=lambda m: order_key(self.grading, m))]

    def ends(self) -> dict[Monomial, int]:
        """Map each end to the multiple of the arrow reaching it."""
        return {arrow_end(self.grading, p, l): l for p, l in self.lambdas.items()}

    def to_json(self) -> list:
        return [a.to_json() for a in self.arrows()]

    @classmethod
    def from_json(cls, g: Grading, E: Staircase, data: Iterable[dict]) -> "ArrowSystem":
        return cls(g, E, {Monomial(*d["origin"]): int(d["lambda"]) for d in data})


def validate_system(S: ArrowSystem) -> list[Violation]:
    """Return the violated axioms of ``S``; an empty list means valid."""
    g, E = S.grading, S.base
    out = []
    for p in E.cells:
        if p not in S.lambdas:
            out.append(Violation("origin", p, "cell of the staircase carries no arrow"))
    ends: dict[Monomial, int] = {}
    for p, lam in S.lambdas.items():
        if p not in E.cells:
            out.append(Violation("origin", p, "origin outside the staircase"))
            continue
        if lam > 0:
            out.append(Violation("sign", p, f"multiple {lam} is positive"))
        q = arrow_end(g, p, lam)
        if q[0] < 0 or q[1] < 0:
            out.append(Violation("negative-end", p, f"end {tuple(q)} leaves the quadrant"))
            continue
        if q in ends:
            out.append(Violation("distinct-ends", q, "reached by two arrows"))
        ends[q] = lam
    for q, lam in sorted(ends.items()):
        for kind, d in (("division-x", (q[0] - 1, q[1])), ("division-y", (q[0], q[1] - 1))):
            if d[0] < 0 or d[1] < 0:
                continue
            d = Monomial(*d)
            if d not in ends:
                out.append(Violation(kind, q, f"divisor {d} is not the end of an arrow"))
            elif abs(ends[d]) > abs(lam):
                out.append(
                    Violation(kind, q, f"arrow to divisor {d} is longer ({abs(ends[d])} > {abs(lam)})")
                )
    return out


def apply_system(S: ArrowSystem) -> Staircase:
    problems = validate_system(S)
    if problems:
        raise SystemValidationError(problems)
    return Staircase(frozenset(S.ends()))


def enumerate_systems(g: Grading, E: Staircase) -> list[ArrowSystem]:
    """Every valid arrow system on ``E``, by exhaustive end assignment."""
    cells = E.sorted()
    choices = []
    for p in cells:
        lams = []
        lam = 0
        while True:
            q = arrow_end(g, p, lam)
            if q[0] < 0:
                break
            lams.append(lam)
            lam -= 1
        choices.append(lams)
    out = []
    for combo in product(*choices):
        S = ArrowSystem(g, E, dict(zip(cells, combo)))
        if not validate_system(S):
            out.append(S)
    return out


# --------------------------------------------------------------------------
# solver


def _hall_ok(thresholds: list[int], free_positions: list[int]) -> bool:
    """Nested-prefix Hall check: ends needing an origin at position <= t."""
    free_positions = sorted(free_positions)
    k = 0
    for i, t in enumerate(sorted(thresholds)):
        while k < len(free_positions) and free_positions[k] <= t:
            k += 1
        if k < i + 1:
            return False
    return True


def find_system(g: Grading, E: Staircase, F: Staircase) -> Optional[ArrowSystem]:
    """A system of arrows on ``E`` with image ``F``, or ``None``.

    A system with image ``F`` is a bijection ``E -> F`` sending ``p`` to
    ``q = p + lam*(a, b)`` with ``lam <= 0`` and ``|lam|`` non-decreasing
    under multiplication inside ``F``.  Ends are visited in increasing
    monomial order, so the immediate divisors of an end are always already
    assigned and give a lower bound on its length.  Inside one degree the
    monomials form a line with step ``(a, b)``; an end at position ``i`` with
    lower bound ``j`` can take any free origin at position ``<= i - j``, which
    makes Hall's condition a sorted-prefix count.  Shorter arrows are tried
    first, so the result is deterministic.
    """
    if len(E) != len(F):
        return None
    if hilbert_function(g, E) != hilbert_function(g, F):
        return None

    levels: dict[int, list[Monomial]] = {}
    for q in F.cells:
        levels.setdefault(degree(g, q), []).append(q)
    degrees = sorted(levels)
    position: dict[Monomial, int] = {}
    line: dict[int, list[Monomial]] = {}
    for d in degrees:
        line[d] = monomials_of_degree(g, d)
        for i, m in enumerate(line[d]):
            position[m] = i
        levels[d].sort(key=lambda m: position[m])
    origins = {d: {position[p] for p in E.cells if degree(g, p) == d} for d in degrees}

    lam: dict[Monomial, int] = {}  # end -> |multiple|

    def lower_bound(q, table):
        return max((table[d] for d in q.divisors()), default=0)

    def forward_ok(start: int) -> bool:
        bounds = dict(lam)
        for d in degrees[start:]:
            thresholds = []
            for q in levels[d]:
                lb = lower_bound(q, bounds)
                bounds[q] = lb
                thresholds.append(position[q] - lb)
            if not _hall_ok(thresholds, list(origins[d])):
                return False
        return True

    def solve_level(li: int) -> bool:
        if li == len(degrees):
            return True
        if not forward_ok(li):
            return False
        d = degrees[li]
        ends = levels[d]
        free = origins[d]

        def assign(k: int) -> bool:
            if k == len(ends):
                return solve_level(li + 1)
            q = ends[k]
            i = position[q]
            lb = lower_bound(q, lam)
            for j in range(lb, i + 1):
                if i - j not in free:
                    continue
                free.discard(i - j)
                lam[q] = j
                rest = ends[k + 1:]
                if _hall_ok([position[r] - lower_bound(r, lam) for r in rest], list(free)):
                    if assign(k + 1):
                        return True
                del lam[q]
                free.add(i - j)
            return False

        return assign(0)

    if not solve_level(0):
        return None
    lambdas = {}
    for q, j in lam.items():
        p = line[degree(g, q)][position[q] - j]
        lambdas[p] = -j
    return ArrowSystem(g, E, lambdas)


# --------------------------------------------------------------------------
# co-arrow systems on complements


@dataclass(frozen=True)
class CoArrowSystem:
    """Arrows on the complement of ``base`` with nonnegative multiples.

    Only non-identity arrows are stored; every other monomial outside
    ``base`` carries the identity arrow.  Listed origins lie in ``box``.
    """

    grading: Grading
    box: Box
    base: Staircase
    listed: Mapping[Monomial, int] = field(hash=False)

    def __post_init__(self):
        listed = {Monomial(*p): int(l) for p, l in dict(self.listed).items() if int(l) != 0}
        object.__setattr__(self, "listed", listed)

    @classmethod
    def identity(cls, g: Grading, box: Box, E: Staircase) -> "CoArrowSystem":
        return cls(g, box, E, {})

    def lam(self, p: Monomial) -> int:
        return self.listed.get(p, 0)

    def arrows(self) -> list[Arrow]:
        return [Arrow(p, self.listed[p]) for p in sorted(self.listed, key=lambda m: order_key(self.grading, m))]

    def ends_in_box(self) -> dict[Monomial, int]:
        """Ends lying in the box, mapped to their multiple (identities included)."""
        ends = {}
        for p in self.box.cells():
            if p in self.base.cells:
                continue
            q = arrow_end(self.grading, p, self.lam(p))
            if q in self.box:
                ends[q] = self.lam(p)
        return ends

    def to_json(self) -> list:
        return [a.to_json() for a in self.arrows()]


def validate_cosystem(Sc: CoArrowSystem) -> list[Violation]:
    """Finite check of the co-system axioms.

    Monomials outside the box are outside the base and carry identities, so
    distinct ends and multiplication compatibility only need checking for
    ends inside the box and their products by ``x`` and ``y``.
    """
    g, box, E = Sc.grading, Sc.box, Sc.base
    out = []
    if not E.fits(box):
        out.append(Violation("box", Monomial(box.M, box.N), "base staircase leaves the box"))
        return out
    seen: dict[Monomial, Monomial] = {}
    for p in box.cells():
        if p in E.cells:
            continue
        lam = Sc.lam(p)
        q = arrow_end(g, p, lam)
        if q[0] < 0 or q[1] < 0:
            out.append(Violation("negative-end", p, f"end {tuple(q)} leaves the quadrant"))
            continue
        if q not in box:
            # every monomial outside the box is already the end of its identity arrow
            out.append(Violation("distinct-ends", q, f"end of {p} collides with an identity outside the box"))
            continue
        if q in seen:
            out.append(Violation("distinct-ends", q, f"reached from {seen[q]} and {p}"))
        seen[q] = p
    for p, lam in Sc.listed.items():
        if p not in box:
            out.append(Violation("origin", p, "listed origin outside the box"))
        elif p in E.cells:
            out.append(Violation("origin", p, "listed origin inside the base staircase"))
        if lam < 0:
            out.append(Violation("sign", p, f"multiple {lam} is negative"))
    if out:
        return out
    ends = Sc.ends_in_box()
    for q, lam in sorted(ends.items()):
        for kind, r in (("multiplication-x", Monomial(q[0] + 1, q[1])), ("multiplication-y", Monomial(q[0], q[1] + 1))):
            if r not in box:
                continue
            if r not in ends:
                out.append(Violation(kind, q, f"product {r} is not the end of an arrow"))
            elif abs(ends[r]) > abs(lam):
                out.append(Violation(kind, q, f"arrow to product {r} is longer ({abs(ends[r])} > {abs(lam)})"))
    return out


def apply_cosystem(Sc: CoArrowSystem) -> Staircase:
    """The staircase whose complement is the set of ends."""
    problems = validate_cosystem(Sc)
    if problems:
        raise SystemValidationError(problems)
    ends = Sc.ends_in_box()
    return Staircase(frozenset(m for m in Sc.box.cells() if m not in ends))


def psi_forward(Snu: ArrowSystem, box: Box) -> CoArrowSystem:
    """Transport a system on a dual staircase to a co-system on the complement.

    ``Snu.base`` plays the role of the dual; the co-system lives on the
    complement of its dual in the same box.
    """
    g = Snu.grading
    if not Snu.base.fits(box):
        raise PsiDomainError(f"base staircase does not fit in the {box} box")
    listed = {}
    for p, lam in Snu.lambdas.items():
        q = arrow_end(g, p, lam)
        if q not in box:
            raise PsiDomainError(f"arrow from {p} ends outside the {box} box")
        if lam:
            listed[box.flip(p)] = -lam
    return CoArrowSystem(g, box, dual(Snu.base, box), listed)


def psi_backward(Sc: CoArrowSystem) -> ArrowSystem:
    g, box = Sc.grading, Sc.box
    lambdas = {}
    for p, lam in Sc.listed.items():
        if p not in box:
            raise PsiDomainError(f"listed origin {p} outside the {box} box")
        q = arrow_end(g, p, lam)
        if q not in box:
            raise PsiDomainError(f"arrow from {p} ends outside the {box} box")
        lambdas[box.flip(p)] = -lam
    base = dual(Sc.base, box)
    for p in base.cells:
        lambdas.setdefault(p, 0)
    return ArrowSystem(g, base, lambdas)


# --------------------------------------------------------------------------
# necessary condition


@dataclass(frozen=True)
class NecessaryConditionReport:
    yameogo: bool
    cond1: bool
    cond2: bool
    box: Box
    witness1: Optional[ArrowSystem] = field(default=None, compare=False)
    witness2: Optional[ArrowSystem] = field(default=None, compare=False)

    @property
    def holds(self) -> bool:
        return self.cond1 and self.cond2

    def to_json(self, witnesses: bool = False) -> dict:
        out = {
            "yameogo": self.yameogo,
            "cond1": self.cond1,
            "cond2": self.cond2,
            "box": [self.box.M, self.box.N],
        }
        if witnesses:
            out["witness1"] = self.witness1.to_json() if self.witness1 else None
            out["witness2"] = self.witness2.to_json() if self.witness2 else None
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def default_box(E: Staircase) -> Box:
    n = max(len(E), 1)
    return Box(n, n)


def necessary_condition(
    g: Grading, E: Staircase, F: Staircase, box: Optional[Box] = None
) -> NecessaryConditionReport:
    from .yameogo import dominates

    if len(E) != len(F):
        raise ValueError(f"staircases have different lengths ({len(E)} vs {len(F)})")
    box = box or default_box(E)
    Enu, Fnu = dual(E, box), dual(F, box)
    w1 = find_system(g, E, F)
    w2 = find_system(g, Enu, Fnu)
    return NecessaryConditionReport(
        yameogo=dominates(g, E, F),
        cond1=w1 is not None,
        cond2=w2 is not None,
        box=box,
        witness1=w1,
        witness2=w2,
    )
