"""Univariate polynomials in ``t`` over the rationals, and row reduction of
vectors of such polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class TPoly:
    """Coefficients listed from ``t^0`` upward; no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, v: Scalar) -> "TPoly":
        return cls((v,))

    @classmethod
    def monomial(cls, k: int, v: Scalar = 1) -> "TPoly":
        return cls([0] * k + [v])

    @property
    def deg(self) -> int:
        """Degree in ``t``; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            other = TPoly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return TPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "TPoly":
        return TPoly(-x for x in self.coeffs)

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other) -> "TPoly":
        if not isinstance(other, TPoly):
            return TPoly(x * other for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TPoly":
        """Multiply by ``t^k``."""
        return TPoly((0,) * k + self.coeffs) if self.coeffs else self

    def divmod(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        while len(rem) >= len(other.coeffs) and any(rem):
            k = len(rem) - len(other.coeffs)
            f = rem[-1] / other.lc
            quot[k] = f
            for i, y in enumerate(other.coeffs):
                rem[i + k] -= f * y
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return TPoly(quot), TPoly(rem)

    def __call__(self, t: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self) -> str:
        return f"TPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(head + ("t" if k == 1 else f"t^{k}"))
        return " + ".join(reversed(terms)).replace("+ -", "- ")

    def to_json(self) -> list:
        return [c.numerator if c.denominator == 1 else str(c) for c in self.coeffs]


ZERO = TPoly()
ONE = TPoly.const(1)


def gcd(p: TPoly, q: TPoly) -> TPoly:
    while q:
        p, q = q, p.divmod(q)[1]
    if not p:
        return p
    return p * (1 / p.lc)


def content(row: Sequence[TPoly]) -> TPoly:
    g = ZERO
    for v in row:
        if v:
            g = gcd(g, v) if g else v * (1 / v.lc)
            if g.deg == 0:
                break
    return g


def primitive(row: Sequence[TPoly]) -> list[TPoly]:
    """Divide a vector by the monic gcd of its entries."""
    g = content(row)
    if not g or g == ONE:
        return list(row)
    return [v.divmod(g)[0] for v in row]


def vec_degree(row: Sequence[TPoly]) -> int:
    return max((v.deg for v in row), default=-1)


def leading_position(row: Sequence[TPoly]) -> int:
    """Last index whose entry reaches the top ``t``-degree; -1 for zero."""
    d = vec_degree(row)
    if d < 0:
        return -1
    return max(i for i, v in enumerate(row) if v.deg == d)


def top_coefficients(row: Sequence[TPoly]) -> list[Fraction]:
    d = vec_degree(row)
    return [v.coeffs[d] if v.deg == d else Fraction(0) for v in row]


def echelon(rows: Sequence[Sequence[TPoly]]) -> dict[int, list[TPoly]]:
    """Reduced echelon form over the field of rational functions in ``t``.

    Pivots are taken on the largest column first.  The result maps each pivot
    column to a primitive polynomial row that vanishes on every other pivot
    column and on every column above its own.  Elimination is fraction free
    (cross multiplication followed by content removal).
    """
    pending = [list(r) for r in rows if any(r)]
    if not pending:
        return {}
    width = len(pending[0])
    pivots: dict[int, list[TPoly]] = {}
    for col in reversed(range(width)):
        idx = next((i for i, r in enumerate(pending) if r[col]), None)
        if idx is None:
            continue
        piv = pending.pop(idx)
        p = piv[col]

        def clear(r):
            f = r[col]
            return primitive([p * x - f * y for x, y in zip(r, piv)])

        pending = [r2 for r2 in (clear(r) if r[col] else r for r in pending) if any(r2)]
        for c, r in pivots.items():
            if r[col]:
                pivots[c] = clear(r)
        pivots[col] = primitive(piv)
    return pivots


def rank(rows: Sequence[Sequence[TPoly]]) -> int:
    return len(echelon(rows))


def rational_rref(rows: Sequence[Sequence[Scalar]]) -> list[tuple[Fraction, ...]]:
    """Canonical reduced row echelon basis of a span over the rationals.

    Pivots are on the largest column first and are normalised to 1.
    """
    pending = [[Fraction(x) for x in r] for r in rows]
    pending = [r for r in pending if any(r)]
    if not pending:
        return []
    width = len(pending[0])
    basis: list[list[Fraction]] = []
    pivcols: list[int] = []
    for col in reversed(range(width)):
        idx = next((i for i, r in enumerate(pending) if r[col]), None)
        if idx is None:
            continue
        piv = pending.pop(idx)
        piv = [x / piv[col] for x in piv]
        pending = [[x - r[col] * y for x, y in zip(r, piv)] for r in pending]
        pending = [r for r in pending if any(r)]
        basis = [[x - r[col] * y for x, y in zip(r, piv)] for r in basis]
        basis.append(piv)
        pivcols.append(col)
    return [tuple(r) for r in basis]


def popov_reduce(rows: list[list[TPoly]], order: Sequence[int] | None = None) -> list[list[TPoly]]:
    """Row-reduce until the leading positions are pairwise distinct.

    While two rows share a leading position, the top term there is cancelled
    in one of them by a ``t``-power multiple of the other.  Without
    ``order`` the row of larger ``t``-degree is modified and drops in
    (degree, leading position).

    With ``order`` the rows must be in echelon form with ``order[i]`` the
    column of the last nonzero entry of row ``i``.  Only the row with the
    larger such column is modified (first multiplied by a power of ``t`` if
    needed to stay polynomial), so its last nonzero column is kept and it
    drops in (degree minus degree at that column, leading position).

    Once positions are distinct the top coefficient vectors are independent.
    """
    rows = [primitive(r) for r in rows]
    while True:
        seen: dict[int, int] = {}
        clash = None
        for i, r in enumerate(rows):
            pos = leading_position(r)
            if pos < 0:
                raise ValueError("zero row in popov_reduce")
            if pos in seen:
                clash = (seen[pos], i, pos)
                break
            seen[pos] = i
        if clash is None:
            return rows
        i, j, pos = clash
        if order is not None:
            hi, lo = (i, j) if order[i] > order[j] else (j, i)
        else:
            hi, lo = (i, j) if vec_degree(rows[i]) >= vec_degree(rows[j]) else (j, i)
        P, Q = rows[hi], rows[lo]
        k = P[pos].deg - Q[pos].deg
        cP, cQ = P[pos].lc, Q[pos].lc
        new = [x.shift(max(0, -k)) * cQ - y.shift(max(0, k)) * cP for x, y in zip(P, Q)]
        rows[hi] = primitive(new)
