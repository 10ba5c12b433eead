"""Smoothness of Schubert varieties X(w) in G/B from Weyl group combinatorics."""

from .bruhat import (
    BruhatInterval,
    IntervalBudgetError,
    PoincarePolynomial,
    bruhat_leq,
    is_palindromic,
    lower_interval,
    poincare_polynomial,
    subword_leq_oracle,
)
from .criterion import Permutation, Status, Verdict, is_smooth
from .curves import CurveSet, HullReport, curve_roots, hull_closed, hull_report
from .hull import convex_weights, in_convex_hull
from .rootsys import CartanType, RootSystem, build_root_system, pairing, reflect_root, sign_of
from .weyl import (
    WeylElement,
    from_word,
    identity,
    inverse,
    longest_element,
    multiply,
    reduced_word,
    reflection_element,
)

__version__ = "0.1.0"
