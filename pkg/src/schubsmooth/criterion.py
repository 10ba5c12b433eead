"""Smoothness verdicts for Schubert varieties X(w) in G/B.

X(w) is smooth exactly when the rank generating function of ``[e, w]`` is
palindromic and the curve set ``E(w)`` is closed under taking roots in its
convex hull. The characterization fails in type G2, so G2 queries return
``CRITERION_INAPPLICABLE`` and, with ``allow_g2``, only report the two
condition values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bruhat import DEFAULT_MAX_INTERVAL, is_palindromic, lower_interval, poincare_polynomial
from .curves import curve_roots, hull_report
from .permutations import (
    Permutation,
    contains_pattern,
    permutation_to_weyl,
    smooth_by_pattern,
    weyl_to_permutation,
)
from .rootsys import Root, RootSystem
from .weyl import WeylElement, reduced_word

__all__ = [
    "Permutation",
    "Status",
    "Verdict",
    "contains_pattern",
    "is_smooth",
    "permutation_to_weyl",
    "smooth_by_pattern",
    "weyl_to_permutation",
]


class Status(str, enum.Enum):
    SMOOTH = "SMOOTH"
    SINGULAR = "SINGULAR"
    CRITERION_INAPPLICABLE = "CRITERION_INAPPLICABLE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    cartan_type: str
    w_word: tuple[int, ...]
    length: int
    palindromic: bool | None
    hull_closed: bool | None
    status: Status
    poincare: tuple[int, ...] | None = None
    curve_roots: tuple[Root, ...] | None = None
    hull_violations: tuple[Root, ...] | None = None
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)
    # set when G2 conditions were evaluated on request; never a smoothness claim
    criterion_only: bool = False

    @property
    def conditions_hold(self) -> bool | None:
        if self.palindromic is None or self.hull_closed is None:
            return None
        return self.palindromic and self.hull_closed


def is_smooth(
    rs: RootSystem,
    w: WeylElement,
    *,
    allow_g2: bool = False,
    fast: bool = False,
    max_interval: int = DEFAULT_MAX_INTERVAL,
) -> Verdict:
    """Evaluate both conditions for ``w`` and combine them.

    Both conditions are always computed so the verdict carries full evidence;
    ``fast=True`` skips the hull test once the polynomial is not palindromic.
    Raises ``IntervalBudgetError`` if ``[e, w]`` is larger than ``max_interval``.
    """
    if w.rs.cartan_type != rs.cartan_type:
        raise ValueError(f"element of {w.rs.cartan_type} used with {rs.cartan_type}")
    word = tuple(reduced_word(w))
    is_g2 = rs.cartan_type.letter == "G"
    if is_g2 and not allow_g2:
        return Verdict(
            cartan_type=str(rs.cartan_type),
            w_word=word,
            length=w.length,
            palindromic=None,
            hull_closed=None,
            status=Status.CRITERION_INAPPLICABLE,
        )

    interval = lower_interval(w, max_interval)
    poly = poincare_polynomial(interval)
    palin = is_palindromic(poly)
    cs = curve_roots(rs, w, interval)
    if fast and not palin:
        report = None
        closed = None
    else:
        report = hull_report(rs, cs)
        closed = report.closed

    if is_g2:
        status = Status.CRITERION_INAPPLICABLE
    else:
        status = Status.SMOOTH if palin and closed else Status.SINGULAR

    order = rs.index.__getitem__
    return Verdict(
        cartan_type=str(rs.cartan_type),
        w_word=word,
        length=w.length,
        palindromic=palin,
        hull_closed=closed,
        status=status,
        poincare=poly.coeffs,
        curve_roots=tuple(cs.sorted_roots()),
        hull_violations=None if report is None else tuple(sorted(report.violations, key=order)),
        witnesses={} if report is None else dict(report.witnesses),
        criterion_only=is_g2,
    )
