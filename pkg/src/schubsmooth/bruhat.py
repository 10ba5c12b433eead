"""Bruhat order, lower intervals ``[e, w]`` and their rank generating functions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .weyl import WeylElement, WeylError, _check_same, identity, reduced_word

__all__ = [
    "BruhatInterval",
    "DEFAULT_MAX_INTERVAL",
    "IntervalBudgetError",
    "PoincarePolynomial",
    "bruhat_leq",
    "is_palindromic",
    "lower_interval",
    "poincare_polynomial",
    "subword_leq_oracle",
]

DEFAULT_MAX_INTERVAL = 10_000_000
SUBWORD_MAX_LENGTH = 16


class IntervalBudgetError(RuntimeError):
    """A lower interval has more elements than the configured budget."""


@dataclass(frozen=True)
class BruhatInterval:
    top: WeylElement
    elements: frozenset

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class PoincarePolynomial:
    """``coeffs[k]`` is the number of interval elements of length ``k``."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coeffs))

    def is_palindromic(self) -> bool:
        return is_palindromic(self)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(terms) or "0"


def _left_descent(w: WeylElement) -> int | None:
    inv = w.inverse_perm
    npos = w.rs.npos
    for k in w.rs.simple_index:
        if inv[k] >= npos:
            return k
    return None


@lru_cache(maxsize=1 << 18)
def _leq(x: WeylElement, w: WeylElement) -> bool:
    rs = w.rs
    npos = rs.npos
    while True:
        if x.length > w.length:
            return False
        if x.length == 0:
            return True
        if x.length == w.length:
            return x == w
        # smallest s with s w < w
        k = _left_descent(w)
        s = rs.simple_perms[rs.simple_index.index(k)]
        w = WeylElement(rs, [s[p] for p in w.perm])
        if x.inverse_perm[k] >= npos:
            x = WeylElement(rs, [s[p] for p in x.perm])


def bruhat_leq(x: WeylElement, w: WeylElement) -> bool:
    """Decide ``x <= w`` by the lifting property.

    With ``s`` the smallest left descent of ``w``: if ``s`` is also a left
    descent of ``x`` then ``x <= w`` iff ``sx <= sw``, otherwise iff
    ``x <= sw``.
    """
    _check_same(x, w)
    return _leq(x, w)


def subword_leq_oracle(x: WeylElement, w: WeylElement, max_length: int = SUBWORD_MAX_LENGTH) -> bool:
    """Brute-force check: is ``x`` a product of some subword of a reduced word of ``w``?"""
    _check_same(x, w)
    if w.length > max_length:
        raise WeylError(f"subword oracle refuses length {w.length} > {max_length}")
    return x.key in _subword_products(w)


@lru_cache(maxsize=256)
def _subword_products(w: WeylElement) -> frozenset:
    rs = w.rs
    word = reduced_word(w)
    n = len(rs.all_roots)
    out = set()
    for mask in itertools.product((False, True), repeat=len(word)):
        perm = list(range(n))
        for keep, i in zip(mask, word):
            if keep:
                s = rs.simple_perms[i - 1]
                perm = [perm[j] for j in s]
        out.add(tuple(perm[k] for k in rs.simple_index))
    return frozenset(out)


def lower_interval(w: WeylElement, max_elements: int = DEFAULT_MAX_INTERVAL) -> BruhatInterval:
    """All ``x <= w``, found by walking down Bruhat covers ``x -> x s_beta``."""
    rs = w.rs
    npos = rs.npos
    refl = [rs.reflection_perm(b) for b in range(npos)]
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            target = x.length - 1
            xp = x.perm
            for b in range(npos):
                # x s_beta < x iff x(beta) < 0
                if xp[b] < npos:
                    continue
                y = WeylElement(rs, [xp[j] for j in refl[b]])
                if y.length == target and y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > max_elements:
                        raise IntervalBudgetError(
                            f"interval below {w!r} exceeds {max_elements} elements"
                        )
        frontier = nxt
    assert identity(rs) in seen
    return BruhatInterval(top=w, elements=frozenset(seen))


def poincare_polynomial(w: WeylElement | BruhatInterval, max_elements: int = DEFAULT_MAX_INTERVAL) -> PoincarePolynomial:
    interval = w if isinstance(w, BruhatInterval) else lower_interval(w, max_elements)
    coeffs = [0] * (interval.top.length + 1)
    for x in interval.elements:
        coeffs[x.length] += 1
    return PoincarePolynomial(tuple(coeffs))


def is_palindromic(p: PoincarePolynomial | list | tuple) -> bool:
    coeffs = tuple(p.coeffs if isinstance(p, PoincarePolynomial) else p)
    return coeffs == coeffs[::-1]
