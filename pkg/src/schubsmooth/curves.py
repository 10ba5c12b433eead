"""The curve set E(w) and its convex-hull closure.

``E(w)`` is the set of negative roots ``-beta`` whose reflection ``s_beta``
lies below ``w`` in Bruhat order; it labels the weight spaces spanned by the
tangent lines to T-stable curves through the identity point of X(w). The
closure condition asks that every root in the convex hull of ``E(w)`` already
belongs to ``E(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bruhat import BruhatInterval, bruhat_leq
from .hull import convex_weights, in_convex_hull
from .rootsys import Root, RootSystem
from .weyl import WeylElement, reflection_element

__all__ = [
    "CurveSet",
    "HullReport",
    "curve_roots",
    "hull_closed",
    "hull_report",
    "in_convex_hull",
]


@dataclass(frozen=True)
class CurveSet:
    w: WeylElement
    roots: frozenset

    def sorted_roots(self) -> list[Root]:
        """Roots in the fixed root-system order."""
        index = self.w.rs.index
        return sorted(self.roots, key=index.__getitem__)

    def __len__(self):
        return len(self.roots)


@dataclass(frozen=True)
class HullReport:
    members: frozenset
    violations: frozenset
    # violation -> convex multipliers, aligned with CurveSet.sorted_roots()
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def closed(self) -> bool:
        return not self.violations


def curve_roots(rs: RootSystem, w: WeylElement, interval: BruhatInterval | None = None) -> CurveSet:
    """``{-beta : beta > 0, s_beta <= w}``.

    When the lower interval of ``w`` is already at hand, membership in it is
    used instead of pairwise Bruhat comparisons.
    """
    roots = set()
    for beta in rs.positive_roots:
        s = reflection_element(rs, beta)
        below = (s in interval) if interval is not None else bruhat_leq(s, w)
        if below:
            roots.add(tuple(-c for c in beta))
    return CurveSet(w=w, roots=frozenset(roots))


def hull_report(rs: RootSystem, cs: CurveSet) -> HullReport:
    gens = cs.sorted_roots()
    if not gens:
        return HullReport(frozenset(), frozenset())
    # height functional: every generator is negative, every positive root is
    # positive, so no positive root can be a convex combination
    assert all(sum(g) < 0 for g in gens)
    assert all(sum(p) > 0 for p in rs.positive_roots)

    members = set(cs.roots)
    violations = set()
    witnesses = {}
    for gamma in rs.negative_roots:
        if gamma in cs.roots:
            continue
        lam = convex_weights(gamma, gens)
        if lam is not None:
            members.add(gamma)
            violations.add(gamma)
            witnesses[gamma] = tuple(lam)
    return HullReport(frozenset(members), frozenset(violations), witnesses)


def hull_closed(rs: RootSystem, cs: CurveSet) -> bool:
    return hull_report(rs, cs).closed
