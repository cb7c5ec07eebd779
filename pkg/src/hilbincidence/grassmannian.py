"""Grassmannian case: Schubert indices, their staircases, and the check that
classical dominance, the direct arrow condition and the dual arrow
condition all agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional

from .arrows import default_box, find_system
from .staircase import STANDARD, Box, Monomial, Staircase, dual, monomials_of_degree


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SchubertIndex:
    n: int
    k: int
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(v) for v in self.p))
        if not 1 <= self.n <= self.k + 1:
            raise ValueError(f"need 1 <= n <= k+1, got n={self.n}, k={self.k}")
        if len(self.p) != self.n:
            raise ValueError(f"index {self.p} must have {self.n} parts")
        if any(u < v for u, v in zip(self.p, self.p[1:])) or (self.p and self.p[-1] < 0):
            raise ValueError(f"index {self.p} must be non-increasing and nonnegative")
        if self.p and self.p[0] > self.k + 1 - self.n:
            raise ValueError(f"index {self.p}: first part exceeds k+1-n = {self.k + 1 - self.n}")


def _check_range(n: int, k: int):
    if k < 1 or not 1 <= n <= k + 1:
        raise ValueError(f"need k >= 1 and 1 <= n <= k+1, got n={n}, k={k}")


def grassmannian_hilbert_function(n: int, k: int) -> tuple[int, ...]:
    _check_range(n, k)
    h = list(range(1, k + 1)) + [k + 1 - n]
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def schubert_indices(n: int, k: int) -> list[SchubertIndex]:
    _check_range(n, k)
    top = k + 1 - n
    out = []
    for parts in combinations_with_replacement(range(top, -1, -1), n):
        out.append(SchubertIndex(n, k, parts))
    return sorted(out, key=lambda idx: idx.p)


def excluded_monomials(idx: SchubertIndex) -> list[Monomial]:
    n, k = idx.n, idx.k
    return [Monomial(n - i + idx.p[i - 1], k - n + i - idx.p[i - 1]) for i in range(1, n + 1)]


def staircase_of(idx: SchubertIndex) -> Staircase:
    removed = set(excluded_monomials(idx))
    cells = [m for d in range(idx.k) for m in monomials_of_degree(STANDARD, d)]
    cells += [m for m in monomials_of_degree(STANDARD, idx.k) if m not in removed]
    return Staircase.of(cells)


def classical_leq(p: SchubertIndex, q: SchubertIndex) -> bool:
    """The cell of ``p`` has the cell of ``q`` in its closure."""
    if (p.n, p.k) != (q.n, q.k):
        raise ValueError("indices belong to different Grassmannians")
    return all(qi >= pi for pi, qi in zip(p.p, q.p))


@dataclass
class EquivalenceRow:
    p: SchubertIndex
    q: SchubertIndex
    classical: bool
    cond1: bool
    cond2: bool

    @property
    def agrees(self) -> bool:
        return self.classical == self.cond1 == self.cond2


def equivalence_table(
    n: int, k: int, box: Optional[Box] = None, budget: int = 20000
) -> list[EquivalenceRow]:
    """All ordered index pairs with the three conditions.

    The dual is taken in ``box``, by default the ``n x n`` box with ``n`` the
    common length of the staircases.
    """
    indices = schubert_indices(n, k)
    if len(indices) ** 2 > budget:
        raise BudgetExceeded(f"{len(indices) ** 2} pairs exceed the budget of {budget}")
    stairs = {idx.p: staircase_of(idx) for idx in indices}
    box = box or default_box(next(iter(stairs.values())))
    duals = {p: dual(E, box) for p, E in stairs.items()}
    rows = []
    for p in indices:
        for q in indices:
            rows.append(
                EquivalenceRow(
                    p,
                    q,
                    classical_leq(p, q),
                    find_system(STANDARD, stairs[p.p], stairs[q.p]) is not None,
                    find_system(STANDARD, duals[p.p], duals[q.p]) is not None,
                )
            )
    return rows


def verify_equivalence(
    n: int, k: int, box: Optional[Box] = None, budget: int = 20000
) -> tuple[bool, Optional[EquivalenceRow]]:
    """``(True, None)``, or ``(False, first counterexample row)``."""
    for row in equivalence_table(n, k, box, budget):
        if not row.agrees:
            return False, row
    return True, None
