"""Crystallographic root systems of simple Cartan types.

Roots are integer tuples in the simple-root basis. The Cartan matrix follows
the convention ``A[i][j] = <alpha_j, alpha_i^vee>`` with Bourbaki labelling,
so in B2 the first simple root is long and in G2 the first simple root is
short.

>>> rs = build_root_system(CartanType("B", 2))
>>> rs.positive_roots
((0, 1), (1, 0), (1, 1), (1, 2))
>>> reflect_root(rs, (1, 0), (0, 1))
(1, 2)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

__all__ = [
    "CartanType",
    "Root",
    "RootSystem",
    "RootSystemError",
    "Sign",
    "build_root_system",
    "cartan_matrix",
    "pairing",
    "reflect_root",
    "sign_of",
]

# coefficients of a root in the simple-root basis
Root = tuple[int, ...]


class RootSystemError(ValueError):
    """Raised for inadmissible Cartan types or vectors that are not roots."""


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True, order=True)
class CartanType:
    letter: str
    rank: int

    def __post_init__(self):
        letter = self.letter.upper() if isinstance(self.letter, str) else self.letter
        object.__setattr__(self, "letter", letter)
        ok = {
            "A": lambda n: n >= 1,
            "B": lambda n: n >= 2,
            "C": lambda n: n >= 2,
            "D": lambda n: n >= 3,
            "E": lambda n: n in (6, 7, 8),
            "F": lambda n: n == 4,
            "G": lambda n: n == 2,
        }
        if letter not in ok or not isinstance(self.rank, int) or not ok[letter](self.rank):
            raise RootSystemError(f"inadmissible Cartan type ({self.letter!r}, {self.rank!r})")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse strings like ``"A3"`` or ``"E8"``. Products are rejected."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise RootSystemError(f"cannot parse Cartan type {text!r} (one simple type only)")
        return cls(text[0], int(text[1:]))

    @property
    def simply_laced(self) -> bool:
        return self.letter in "ADE"

    def __str__(self):
        return f"{self.letter}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Bourbaki-labelled Cartan matrix, 0-indexed, ``A[i][j] = <alpha_j, alpha_i^vee>``."""
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j):
        a[i][j] = a[j][i] = -1

    letter = ct.letter
    if letter in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if letter == "B":
            # alpha_n short
            a[n - 1][n - 2] = -2
        elif letter == "C":
            # alpha_n long
            a[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif letter == "E":
        # 1-3-4-5-6-7-8 with 2 hanging off 4
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif letter == "F":
        bond(0, 1)
        bond(1, 2)
        bond(2, 3)
        a[2][1] = -2
    elif letter == "G":
        # alpha_1 short, alpha_2 long
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizer(a) -> tuple[int, ...]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                # d_i A_ij = d_j A_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _simple_reflect(a, v: Root, i: int) -> Root:
    c = sum(a[i][j] * v[j] for j in range(len(v)))
    if c == 0:
        return v
    w = list(v)
    w[i] -= c
    return tuple(w)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root system with index tables used by the Weyl group code.

    ``all_roots`` lists the positive roots first, then their negations in the
    same order, so index ``k < npos`` means positive.
    """

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    all_roots: tuple[Root, ...] = field(repr=False)
    index: dict = field(repr=False)
    simple_index: tuple[int, ...] = field(repr=False)
    negation: tuple[int, ...] = field(repr=False)
    # simple_perms[i][k] = index of s_i(root_k)
    simple_perms: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def npos(self) -> int:
        return len(self.positive_roots)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(self.all_roots[k] for k in self.simple_index)

    @property
    def negative_roots(self) -> tuple[Root, ...]:
        return self.all_roots[self.npos:]

    def __contains__(self, v) -> bool:
        return tuple(v) in self.index

    def root_index(self, v: Root) -> int:
        try:
            return self.index[tuple(v)]
        except KeyError:
            raise RootSystemError(f"{tuple(v)} is not a root of {self.cartan_type}") from None

    def form(self, u, v) -> Fraction:
        """Symmetric bilinear form ``(u, v)`` with ``(alpha_i, alpha_i) = 2 d_i``."""
        a, d = self.cartan_matrix, self.symmetrizer
        n = self.rank
        return Fraction(sum(u[i] * d[i] * a[i][j] * v[j] for i in range(n) for j in range(n)))

    def reflection_perm(self, k: int) -> tuple[int, ...]:
        """Permutation of root indices induced by the reflection in root ``k``."""
        return _reflection_perm(self, k)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan_type == other.cartan_type

    def __hash__(self):
        return hash(self.cartan_type)

    def __reduce__(self):
        return (build_root_system, (self.cartan_type,))


@lru_cache(maxsize=None)
def _reflection_perm(rs: RootSystem, k: int) -> tuple[int, ...]:
    beta = rs.all_roots[k]
    return tuple(rs.index[reflect_root(rs, v, beta)] for v in rs.all_roots)


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootSystem:
    """Close the simple roots under the simple reflections."""
    a = cartan_matrix(ct)
    n = ct.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = _simple_reflect(a, v, i)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt

    for v in seen:
        if any(c > 0 for c in v) and any(c < 0 for c in v):
            raise AssertionError(f"mixed-sign vector {v} generated for {ct}")
    pos = sorted((v for v in seen if any(c > 0 for c in v)), key=lambda v: (sum(v), v))
    if 2 * len(pos) != len(seen):
        raise AssertionError(f"root set of {ct} is not symmetric under negation")
    neg = [tuple(-c for c in v) for v in pos]
    all_roots = tuple(pos + neg)
    index = {v: k for k, v in enumerate(all_roots)}
    npos = len(pos)
    negation = tuple((k + npos) % (2 * npos) for k in range(2 * npos))
    simple_perms = tuple(
        tuple(index[_simple_reflect(a, v, i)] for v in all_roots) for i in range(n)
    )
    return RootSystem(
        cartan_type=ct,
        cartan_matrix=a,
        symmetrizer=_symmetrizer(a),
        positive_roots=tuple(pos),
        all_roots=all_roots,
        index=index,
        simple_index=tuple(index[s] for s in simple),
        negation=negation,
        simple_perms=simple_perms,
    )


def pairing(rs: RootSystem, v: Root, beta: Root) -> Fraction:
    """Coroot pairing ``<v, beta^vee> = 2 (v, beta) / (beta, beta)``."""
    norm = rs.form(beta, beta)
    if norm == 0:
        raise AssertionError(f"{beta} has zero norm")
    return 2 * rs.form(v, beta) / norm


def reflect_root(rs: RootSystem, v: Root, beta: Root) -> Root:
    """``s_beta(v) = v - <v, beta^vee> beta``."""
    c = pairing(rs, v, beta)
    out = [Fraction(x) - c * b for x, b in zip(v, beta)]
    if any(x.denominator != 1 for x in out):
        raise AssertionError(f"non-integral reflection of {v} in {beta}")
    return tuple(int(x) for x in out)


def sign_of(root) -> Sign:
    if all(c >= 0 for c in root) and any(c > 0 for c in root):
        return Sign.POSITIVE
    if all(c <= 0 for c in root) and any(c < 0 for c in root):
        return Sign.NEGATIVE
    raise RootSystemError(f"{tuple(root)} has mixed signs (or is zero) and is not a root")
