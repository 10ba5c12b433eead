"""Exact convex-hull membership by a phase-one simplex over ``Fraction``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["convex_weights", "in_convex_hull"]


def _phase_one(rows: list[list[Fraction]], rhs: list[Fraction], nvars: int) -> list[Fraction] | None:
    """Find ``x >= 0`` with ``rows @ x == rhs`` or return None.

    Artificial variables are added for every row and their sum is minimised.
    Bland's rule keeps the pivoting finite.
    """
    m = len(rows)
    # tableau columns: structural vars, artificials, rhs
    width = nvars + m
    tab = []
    for r in range(m):
        row, b = rows[r], rhs[r]
        if b < 0:
            row, b = [-v for v in row], -b
        tab.append(list(row) + [Fraction(int(r == j)) for j in range(m)] + [b])
    basis = [nvars + r for r in range(m)]
    # reduced costs of the phase-one objective sum(artificials)
    cost = [Fraction(0)] * (width + 1)
    for r in range(m):
        for j in range(width + 1):
            if j < nvars or j == width:
                cost[j] -= tab[r][j]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for r in range(m):
            a = tab[r][enter]
            if a > 0:
                ratio = tab[r][width] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    leave, best = r, ratio
        if leave is None:
            # cannot happen: phase one is bounded below by zero
            raise AssertionError("unbounded phase-one problem")
        piv = tab[leave][enter]
        prow = [v / piv for v in tab[leave]]
        tab[leave] = prow
        for r in range(m):
            if r != leave:
                f = tab[r][enter]
                if f:
                    tab[r] = [a - f * b for a, b in zip(tab[r], prow)]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, prow)]
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * nvars
    for r, j in enumerate(basis):
        if j < nvars:
            x[j] = tab[r][width]
    return x


def convex_weights(point: Sequence[int], generators: Sequence[Sequence[int]]) -> list[Fraction] | None:
    """Nonnegative weights summing to one that combine ``generators`` into ``point``.

    Returns None when ``point`` lies outside the closed convex hull. The
    weights form a basic feasible solution, so they are exact rationals.
    """
    gens = [tuple(g) for g in generators]
    if not gens:
        return None
    dim = len(point)
    if any(len(g) != dim for g in gens):
        raise ValueError("dimension mismatch between point and generators")
    # bounding box rejection is exact and cheap
    for c in range(dim):
        if not min(g[c] for g in gens) <= point[c] <= max(g[c] for g in gens):
            return None
    rows = [[Fraction(g[c]) for g in gens] for c in range(dim)]
    rows.append([Fraction(1)] * len(gens))
    rhs = [Fraction(v) for v in point] + [Fraction(1)]
    return _phase_one(rows, rhs, len(gens))


def in_convex_hull(point: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """Exact test of ``point`` in conv(generators); empty generators give False."""
    return convex_weights(point, generators) is not None
