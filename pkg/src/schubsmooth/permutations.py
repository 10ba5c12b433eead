"""Type A pattern-avoidance oracle.

``W(A_{n-1})`` is identified with ``S_n`` by sending ``s_i`` to the adjacent
transposition ``(i, i+1)``. A Schubert variety in type A is smooth exactly
when its permutation avoids the patterns 3412 and 4231.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rootsys import RootSystem
from .weyl import WeylElement, from_word, reduced_word

__all__ = [
    "Permutation",
    "contains_pattern",
    "permutation_to_weyl",
    "smooth_by_pattern",
    "weyl_to_permutation",
]

SINGULAR_PATTERNS = ((3, 4, 1, 2), (4, 2, 3, 1))


@dataclass(frozen=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        one_line = tuple(self.one_line)
        object.__setattr__(self, "one_line", one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"{one_line} is not a permutation of 1..{len(one_line)}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        parts = text.split(",") if "," in text else list(text)
        return cls(tuple(int(p) for p in parts if p.strip()))

    def __len__(self):
        return len(self.one_line)

    def inversions(self) -> int:
        p = self.one_line
        return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])

    def __str__(self):
        sep = "," if len(self) > 9 else ""
        return sep.join(map(str, self.one_line))


def _require_type_a(rs: RootSystem):
    if rs.cartan_type.letter != "A":
        raise ValueError(f"permutations model type A only, not {rs.cartan_type}")


def weyl_to_permutation(rs: RootSystem, w: WeylElement) -> Permutation:
    _require_type_a(rs)
    p = list(range(1, rs.rank + 2))
    for i in reduced_word(w):
        # right multiplication by s_i swaps positions i, i+1
        p[i - 1], p[i] = p[i], p[i - 1]
    return Permutation(tuple(p))


def permutation_to_weyl(rs: RootSystem, perm: Permutation) -> WeylElement:
    _require_type_a(rs)
    if len(perm) != rs.rank + 1:
        raise ValueError(f"{rs.cartan_type} needs a permutation of length {rs.rank + 1}")
    p = list(perm.one_line)
    peeled = []
    while True:
        i = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if i is None:
            break
        p[i], p[i + 1] = p[i + 1], p[i]
        peeled.append(i + 1)
    return from_word(rs, reversed(peeled))


def contains_pattern(p: Permutation, q: Permutation) -> bool:
    """Does some subsequence of ``p`` have the same relative order as ``q``?"""
    k = len(q)
    target = q.one_line
    for sub in itertools.combinations(p.one_line, k):
        ranks = sorted(sub)
        if all(ranks.index(v) + 1 == t for v, t in zip(sub, target)):
            return True
    return False


def smooth_by_pattern(p: Permutation) -> bool:
    return not any(contains_pattern(p, Permutation(q)) for q in SINGULAR_PATTERNS)
