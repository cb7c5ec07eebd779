"""Monomials, gradings, staircases and the monomial-ideal dictionary.

A monomial ``x^alpha y^beta`` is the pair ``Monomial(alpha, beta)``.  A
staircase is a finite set of monomials closed under division; it stands
for the monomial ideal generated by everything outside it.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence


class StaircaseError(ValueError):
    pass


class GradingError(ValueError):
    pass


class InfiniteStaircaseError(StaircaseError):
    """The generated monomial ideal has infinite colength."""


class BoxFitError(StaircaseError):
    pass


class Monomial(NamedTuple):
    alpha: int
    beta: int

    def divides(self, other: "Monomial") -> bool:
        return self.alpha <= other.alpha and self.beta <= other.beta

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.alpha + other.alpha, self.beta + other.beta)

    def divisors(self) -> Iterator["Monomial"]:
        """Immediate divisors ``m/x`` and ``m/y`` (those that exist)."""
        if self.alpha:
            yield Monomial(self.alpha - 1, self.beta)
        if self.beta:
            yield Monomial(self.alpha, self.beta - 1)

    def __str__(self) -> str:
        return format_monomial(self)


ONE = Monomial(0, 0)
X = Monomial(1, 0)
Y = Monomial(0, 1)


@dataclass(frozen=True)
class Grading:
    """Degree ``d(x^alpha y^beta) = -b*alpha + a*beta`` with ``a > 0 > b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a <= 0 or self.b >= 0:
            raise GradingError(
                f"grading ({self.a},{self.b}) unsupported: need a > 0 and b < 0"
            )
        if math.gcd(self.a, -self.b) != 1:
            raise GradingError(f"grading ({self.a},{self.b}): a and b must be coprime")

    @classmethod
    def of(cls, a: int, b: int) -> "Grading":
        """Build a grading, flipping the sign of the pair when ``a < 0``."""
        if a == 0 or b == 0:
            raise GradingError("gradings with a*b = 0 have no incidence problem")
        if a < 0:
            a, b = -a, -b
        return cls(a, b)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}

    @classmethod
    def from_json(cls, data: dict) -> "Grading":
        return cls.of(int(data["a"]), int(data["b"]))


STANDARD = Grading(1, -1)


def degree(g: Grading, m: Monomial) -> int:
    return -g.b * m[0] + g.a * m[1]


def order_key(g: Grading, m: Monomial) -> tuple[int, int]:
    """Sort key realising the monomial order (degree, then y-exponent)."""
    return (-g.b * m[0] + g.a * m[1], m[1])


def compare(g: Grading, m1: Monomial, m2: Monomial) -> int:
    """Return -1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    k1, k2 = order_key(g, m1), order_key(g, m2)
    return (k1 > k2) - (k1 < k2)


def monomials_of_degree(g: Grading, d: int) -> list[Monomial]:
    """All monomials of degree ``d``, in increasing order.

    Consecutive entries differ by the vector ``(-a, -b)``, so the list is an
    arithmetic progression along the arrow direction.
    """
    if d < 0:
        return []
    out = []
    for beta in range(d // g.a + 1):
        rest = d - g.a * beta
        if rest % (-g.b) == 0:
            out.append(Monomial(rest // (-g.b), beta))
    return out


def _count_below_degree(g: Grading, d: int) -> int:
    # number of (alpha, beta) with -b*alpha + a*beta < d
    total = 0
    beta = 0
    while g.a * beta < d:
        total += -((g.a * beta - d) // (-g.b))  # ceil((d - a*beta) / -b)
        beta += 1
    return total


def rank(g: Grading, m: Monomial) -> int:
    d = degree(g, m)
    same = sum(1 for n in monomials_of_degree(g, d) if n[1] < m[1])
    return _count_below_degree(g, d) + same


def unrank(g: Grading, k: int) -> Monomial:
    if k < 0:
        raise ValueError("rank must be nonnegative")
    # largest d with fewer than k+1 monomials below it
    lo, hi = 0, 1
    while _count_below_degree(g, hi) <= k:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _count_below_degree(g, mid) <= k:
            lo = mid
        else:
            hi = mid
    return monomials_of_degree(g, lo)[k - _count_below_degree(g, lo)]


def is_staircase(cells: Iterable[Sequence[int]]) -> bool:
    s = {Monomial(*c) for c in cells}
    if any(c[0] < 0 or c[1] < 0 for c in s):
        return False
    return all(d in s for c in s for d in c.divisors())


@dataclass(frozen=True)
class Box:
    M: int
    N: int

    def __post_init__(self):
        if self.M < 1 or self.N < 1:
            raise ValueError(f"box {self.M}x{self.N}: sizes must be positive")

    def __contains__(self, m) -> bool:
        return 0 <= m[0] < self.M and 0 <= m[1] < self.N

    def cells(self) -> list[Monomial]:
        return [Monomial(i, j) for i in range(self.M) for j in range(self.N)]

    def flip(self, m: Monomial) -> Monomial:
        """The dualizing map ``(i, j) -> (M-1-i, N-1-j)``."""
        return Monomial(self.M - 1 - m[0], self.N - 1 - m[1])

    @classmethod
    def parse(cls, text: str) -> "Box":
        match = re.fullmatch(r"\s*(\d+)\s*[xX*,]\s*(\d+)\s*", text)
        if not match:
            raise ValueError(f"cannot parse box {text!r}; expected MxN")
        return cls(int(match.group(1)), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.M}x{self.N}"


@dataclass(frozen=True)
class Staircase:
    cells: frozenset

    def __post_init__(self):
        cells = frozenset(Monomial(*c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        if not is_staircase(cells):
            raise StaircaseError("cell set is not closed under division")

    @classmethod
    def of(cls, cells: Iterable[Sequence[int]]) -> "Staircase":
        return cls(frozenset(Monomial(*c) for c in cells))

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]]) -> "Staircase":
        return staircase_from_generators(gens)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, m) -> bool:
        return m in self.cells

    def sorted(self) -> list[Monomial]:
        return sorted(self.cells)

    def key(self) -> tuple:
        """Canonical serialization: the sorted exponent pairs."""
        return tuple(self.sorted())

    def generators(self) -> list[Monomial]:
        return minimal_generators(self)

    def fits(self, box: Box) -> bool:
        return all(c in box for c in self.cells)

    def bounding_box(self) -> Box:
        if not self.cells:
            return Box(1, 1)
        return Box(max(c[0] for c in self.cells) + 1, max(c[1] for c in self.cells) + 1)

    def label(self) -> str:
        return format_generators(self.generators())

    def to_json(self) -> dict:
        return {"generators": [list(m) for m in self.generators()]}

    @classmethod
    def from_json(cls, data) -> "Staircase":
        if isinstance(data, dict):
            if "generators" in data:
                return staircase_from_generators(data["generators"])
            return cls.of(data["cells"])
        return staircase_from_generators(data)

    def __repr__(self) -> str:
        return f"Staircase({self.label()})"


EMPTY = Staircase(frozenset())


def minimal_generators(E: Staircase) -> list[Monomial]:
    """Minimal monomial generators of the ideal of ``E``, sorted by x-exponent."""
    if not E.cells:
        return [ONE]
    cells = E.cells
    width = max(c[0] for c in cells) + 1
    gens = []
    for alpha in range(width + 1):
        column = [c[1] for c in cells if c[0] == alpha]
        beta = max(column) + 1 if column else 0
        m = Monomial(alpha, beta)
        # m/x must be in E (or x does not divide m) for m to be minimal
        if alpha == 0 or Monomial(alpha - 1, beta) in cells:
            gens.append(m)
    return gens


def staircase_from_generators(gens: Iterable[Sequence[int]]) -> Staircase:
    gens = [Monomial(*g) for g in gens]
    if any(g[0] < 0 or g[1] < 0 for g in gens):
        raise StaircaseError("negative exponent in generator")
    if not gens:
        raise InfiniteStaircaseError("no generators: the zero ideal has infinite colength")
    pure_x = [g[0] for g in gens if g[1] == 0]
    pure_y = [g[1] for g in gens if g[0] == 0]
    if not pure_x or not pure_y:
        raise InfiniteStaircaseError(
            "generated ideal has infinite colength (needs pure powers of x and y)"
        )
    cells = [
        Monomial(i, j)
        for i in range(min(pure_x))
        for j in range(min(pure_y))
        if not any(g.divides(Monomial(i, j)) for g in gens)
    ]
    return Staircase(frozenset(cells))


def hilbert_function(g: Grading, E: Staircase) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for c in E.cells:
        d = degree(g, c)
        counts[d] = counts.get(d, 0) + 1
    if not counts:
        return ()
    return tuple(counts.get(i, 0) for i in range(max(counts) + 1))


def normalize_hilbert(H: Iterable[int]) -> tuple[int, ...]:
    h = [int(v) for v in H]
    if any(v < 0 for v in h):
        raise ValueError("Hilbert function entries must be nonnegative")
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def enumerate_staircases(g: Grading, H: Iterable[int]) -> list[Staircase]:
    """All staircases with Hilbert function ``H``, in canonical order."""
    H = normalize_hilbert(H)
    found: list[frozenset] = []

    def extend(i: int, chosen: frozenset):
        if i == len(H):
            found.append(chosen)
            return
        allowed = [
            m for m in monomials_of_degree(g, i) if all(d in chosen for d in m.divisors())
        ]
        for pick in combinations(allowed, H[i]):
            extend(i + 1, chosen.union(pick))

    extend(0, frozenset())
    return sorted((Staircase(c) for c in found), key=Staircase.key)


def dual(E: Staircase, box: Box) -> Staircase:
    """The 180-degree rotation of the complement of ``E`` in ``box``."""
    if not E.fits(box):
        raise BoxFitError(f"{E.label()} does not fit in the {box} box")
    return Staircase(frozenset(m for m in box.cells() if box.flip(m) not in E.cells))


def monomial_colon(E: Staircase, box: Box) -> list[Monomial]:
    """Minimal generators of ``((x^M, y^N) : I^E)`` by direct membership tests."""
    if not E.fits(box):
        raise BoxFitError(f"{E.label()} does not fit in the {box} box")
    complete = [Monomial(box.M, 0), Monomial(0, box.N)]
    ideal_gens = minimal_generators(E)

    def in_ci(m):
        return any(g.divides(m) for g in complete)

    def in_colon(m):
        return all(in_ci(m.times(f)) for f in ideal_gens)

    window = [Monomial(i, j) for i in range(box.M + 1) for j in range(box.N + 1)]
    members = {m for m in window if in_colon(m)}
    return sorted(
        (m for m in members if not any(d in members for d in m.divisors())),
        key=lambda m: (m[0], -m[1]),
    )


# text formats

_TERM = re.compile(r"(?:(x)(?:\^(\d+))?)?\*?(?:(y)(?:\^(\d+))?)?")


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for var, e in (("x", m[0]), ("y", m[1])):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts) or "1"


def format_generators(gens: Iterable[Sequence[int]]) -> str:
    return ",".join(format_monomial(m) for m in gens)


def parse_monomial(text: str) -> Monomial:
    text = text.strip().replace(" ", "")
    if text == "1":
        return ONE
    match = _TERM.fullmatch(text)
    if not text or not match or not (match.group(1) or match.group(3)):
        raise ValueError(f"cannot parse monomial {text!r}")
    alpha = int(match.group(2) or 1) if match.group(1) else 0
    beta = int(match.group(4) or 1) if match.group(3) else 0
    return Monomial(alpha, beta)


def parse_monomials(text: str) -> list[Monomial]:
    """Parse ``"y^4,x*y^2,x^2*y,x^5"`` or a JSON list of exponent pairs."""
    text = text.strip()
    if text.startswith("(") and not text.startswith("(("):
        text = text[1:-1] if text.endswith(")") else text
    if text.startswith("[") or text.startswith("{"):
        data = json.loads(text)
        if isinstance(data, dict):
            data = data.get("generators", data.get("cells"))
        try:
            return [Monomial(int(p[0]), int(p[1])) for p in data]
        except (TypeError, IndexError, KeyError) as exc:
            raise ValueError(f"bad exponent-pair list {text!r}") from exc
    if not text:
        raise ValueError("empty monomial list")
    return [parse_monomial(t) for t in text.split(",")]


def parse_staircase(text: str) -> Staircase:
    """Generators string, or JSON ``{"generators": ...}`` / ``{"cells": ...}``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if "cells" in data:
            return Staircase.of(data["cells"])
    return staircase_from_generators(parse_monomials(text))
