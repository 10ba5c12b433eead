"""Weyl group elements acting on a root system.

An element is stored as the permutation it induces on ``rs.all_roots``.
Its canonical key (used for equality and hashing) is the tuple of images of
the simple roots, which carries exactly the information of the action
matrix.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

from .rootsys import CartanType, Root, RootSystem, RootSystemError, sign_of, Sign

__all__ = [
    "WeylElement",
    "WeylError",
    "enumerate_group",
    "from_word",
    "identity",
    "inverse",
    "length",
    "longest_element",
    "multiply",
    "reduced_word",
    "reflection_element",
    "simple_reflection",
    "weyl_group_order",
]


class WeylError(ValueError):
    pass


class WeylElement:
    """Immutable Weyl group element.

    ``perm[k]`` is the index of ``w(root_k)``; ``length`` is the inversion
    count, always recomputed from ``perm``.
    """

    __slots__ = ("rs", "perm", "length", "key", "_inv")

    def __init__(self, rs: RootSystem, perm: Sequence[int]):
        perm = tuple(perm)
        npos = rs.npos
        self.rs = rs
        self.perm = perm
        self.length = sum(1 for p in perm[:npos] if p >= npos)
        self.key = tuple(perm[k] for k in rs.simple_index)
        self._inv = None

    def __setattr__(self, name, value):
        if name != "_inv" and hasattr(self, "_inv"):
            raise AttributeError("WeylElement is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.key == other.key and self.rs.cartan_type == other.rs.cartan_type

    def __hash__(self):
        return hash(self.key)

    def __mul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        word = "".join(f"s{i}" for i in reduced_word(self)) or "e"
        return f"<{self.rs.cartan_type} {word}>"

    def __reduce__(self):
        return (_rebuild, (self.rs.cartan_type, self.perm))

    @property
    def action(self) -> tuple[tuple[int, ...], ...]:
        """Action matrix in the simple-root basis; column i is ``w(alpha_i)``."""
        cols = [self.rs.all_roots[p] for p in self.key]
        return tuple(tuple(col[r] for col in cols) for r in range(self.rs.rank))

    @property
    def inverse_perm(self) -> tuple[int, ...]:
        if self._inv is None:
            inv = [0] * len(self.perm)
            for k, p in enumerate(self.perm):
                inv[p] = k
            self._inv = tuple(inv)
        return self._inv

    def __call__(self, root: Root) -> Root:
        return self.rs.all_roots[self.perm[self.rs.root_index(root)]]

    def is_right_descent(self, i: int) -> bool:
        """``w s_i < w``, i.e. ``w(alpha_i)`` is negative (``i`` is 1-based)."""
        return self.perm[self.rs.simple_index[i - 1]] >= self.rs.npos

    def is_left_descent(self, i: int) -> bool:
        """``s_i w < w``, i.e. ``w^-1(alpha_i)`` is negative (``i`` is 1-based)."""
        return self.inverse_perm[self.rs.simple_index[i - 1]] >= self.rs.npos


def _rebuild(ct: CartanType, perm):
    from .rootsys import build_root_system

    return WeylElement(build_root_system(ct), perm)


def _check_same(x: WeylElement, y: WeylElement):
    if x.rs.cartan_type != y.rs.cartan_type:
        raise WeylError(f"elements of different Weyl groups: {x.rs.cartan_type} vs {y.rs.cartan_type}")


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, range(len(rs.all_roots)))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise WeylError(f"simple index {i} out of range 1..{rs.rank}")
    return WeylElement(rs, rs.simple_perms[i - 1])


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """The product ``s_{i1} s_{i2} ... s_{ik}`` (indices are 1-based)."""
    perm = list(range(len(rs.all_roots)))
    for i in word:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise WeylError(f"simple index {i!r} out of range 1..{rs.rank}")
        s = rs.simple_perms[i - 1]
        # (w s)(k) = w(s(k))
        perm = [perm[j] for j in s]
    return WeylElement(rs, perm)


def multiply(x: WeylElement, y: WeylElement) -> WeylElement:
    _check_same(x, y)
    xp = x.perm
    return WeylElement(x.rs, [xp[j] for j in y.perm])


def inverse(x: WeylElement) -> WeylElement:
    return WeylElement(x.rs, x.inverse_perm)


def length(w: WeylElement) -> int:
    return w.length


def reflection_element(rs: RootSystem, beta: Root) -> WeylElement:
    """The reflection ``s_beta``, for a positive root ``beta``."""
    if tuple(beta) not in rs:
        raise RootSystemError(f"{tuple(beta)} is not a root of {rs.cartan_type}")
    if sign_of(beta) is not Sign.POSITIVE:
        raise WeylError(f"reflection_element expects a positive root, got {tuple(beta)}")
    return WeylElement(rs, rs.reflection_perm(rs.root_index(beta)))


def reduced_word(w: WeylElement) -> list[int]:
    """Peel off the smallest right descent until the identity is reached."""
    rs = w.rs
    npos = rs.npos
    perm = w.perm
    peeled = []
    while True:
        for i, k in enumerate(rs.simple_index):
            if perm[k] >= npos:
                break
        else:
            break
        s = rs.simple_perms[i]
        perm = tuple(perm[j] for j in s)
        peeled.append(i + 1)
    peeled.reverse()
    return peeled


def longest_element(rs: RootSystem) -> WeylElement:
    npos = rs.npos
    perm = tuple(range(len(rs.all_roots)))
    while True:
        for i, k in enumerate(rs.simple_index):
            if perm[k] < npos:
                break
        else:
            return WeylElement(rs, perm)
        s = rs.simple_perms[i]
        perm = tuple(perm[j] for j in s)


def enumerate_group(rs: RootSystem, limit: int | None = None) -> Iterator[WeylElement]:
    """Breadth-first closure from the identity under right multiplication by simple reflections.

    Elements come out grouped by length. Raises ``WeylError`` when more than
    ``limit`` elements would be produced.
    """
    e = identity(rs)
    seen = {e.perm}
    queue = deque([e.perm])
    count = 0
    while queue:
        perm = queue.popleft()
        count += 1
        if limit is not None and count > limit:
            raise WeylError(f"group {rs.cartan_type} has more than {limit} elements")
        yield WeylElement(rs, perm)
        for s in rs.simple_perms:
            nxt = tuple(perm[j] for j in s)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)


_DEGREES_E = {6: (2, 5, 6, 8, 9, 12), 7: (2, 6, 8, 10, 12, 14, 18), 8: (2, 8, 12, 14, 18, 20, 24, 30)}


def weyl_group_order(ct: CartanType) -> int:
    """|W| as the product of the fundamental degrees."""
    n = ct.rank
    if ct.letter == "A":
        degrees = range(2, n + 2)
    elif ct.letter in "BC":
        degrees = range(2, 2 * n + 1, 2)
    elif ct.letter == "D":
        degrees = list(range(2, 2 * n - 1, 2)) + [n]
    elif ct.letter == "E":
        degrees = _DEGREES_E[n]
    elif ct.letter == "F":
        degrees = (2, 6, 8, 12)
    else:
        degrees = (2, 6)
    return math.prod(degrees)
