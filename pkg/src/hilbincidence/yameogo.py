"""Counting profiles along the monomial order and Yameogo's dominance test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .staircase import Grading, Staircase, enumerate_staircases, rank


@dataclass(frozen=True)
class YameogoProfile:
    """``values[k]`` counts the cells of a staircase that are ``<= m_k``.

    Past the last stored index the profile is constant, equal to the size.
    """

    values: tuple[int, ...]
    size: int

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def at(self, k: int) -> int:
        if k < 0:
            return 0
        if k < len(self.values):
            return self.values[k]
        return self.size

    def to_json(self) -> list[int]:
        return list(self.values)


def profile(g: Grading, E: Staircase, length: int | None = None) -> YameogoProfile:
    ranks = sorted(rank(g, c) for c in E.cells)
    top = ranks[-1] + 1 if ranks else 0
    n = max(top, length or 0)
    values = []
    count = 0
    it = iter(ranks)
    nxt = next(it, None)
    for k in range(n):
        while nxt is not None and nxt == k:
            count += 1
            nxt = next(it, None)
        values.append(count)
    return YameogoProfile(tuple(values), len(E))


def profile_leq(p: YameogoProfile, q: YameogoProfile) -> bool:
    """Pointwise ``p <= q``."""
    n = max(len(p.values), len(q.values))
    return all(p.at(k) <= q.at(k) for k in range(n + 1))


def dominates(g: Grading, E: Staircase, F: Staircase) -> bool:
    """``S_E >= S_F`` pointwise."""
    if len(E) != len(F):
        raise ValueError(f"staircases have different lengths ({len(E)} vs {len(F)})")
    return profile_leq(profile(g, F), profile(g, E))


def extremal_staircases(g: Grading, H: Iterable[int]) -> dict[str, list[Staircase]]:
    stairs = enumerate_staircases(g, H)
    profiles = [profile(g, E) for E in stairs]

    def strictly_above(i, j):
        return profile_leq(profiles[j], profiles[i]) and not profile_leq(profiles[i], profiles[j])

    idx = range(len(stairs))
    maxima = [stairs[i] for i in idx if not any(strictly_above(j, i) for j in idx)]
    minima = [stairs[i] for i in idx if not any(strictly_above(i, j) for j in idx)]
    return {"maxima": maxima, "minima": minima}
