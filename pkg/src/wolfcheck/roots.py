"""Finite root systems of the simple types, generated from Cartan data.

Roots are integer tuples of coordinates over the simple roots (Bourbaki
numbering).  The inner product is the symmetrised Cartan matrix scaled so
that long roots have squared length 2.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import ConfigurationError

Root = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8")
_EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "G2": lambda n: 12,
    "F4": lambda n: 48,
    "E6": lambda n: 72,
    "E7": lambda n: 126,
    "E8": lambda n: 240,
}


@dataclass(frozen=True, order=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConfigurationError(f"unknown root system family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ConfigurationError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family in _EXCEPTIONAL_RANK and self.rank != _EXCEPTIONAL_RANK[self.family]:
            raise ConfigurationError(
                f"{self.family} has rank {_EXCEPTIONAL_RANK[self.family]}, not {self.rank}"
            )
        if self.family == "D" and self.rank < 3:
            raise ConfigurationError(f"type D needs rank >= 3, got {self.rank}")

    @classmethod
    def parse(cls, text: str) -> RootSystemType:
        """Parse ``"A3"``, ``"E8"``, ``"G2"``, ``"D_5"`` and the like."""
        t = text.strip().upper().replace("_", "")
        if t in _EXCEPTIONAL_RANK:
            return cls(t, _EXCEPTIONAL_RANK[t])
        m = re.fullmatch(r"([ABCD])(\d+)", t)
        if not m:
            raise ConfigurationError(f"cannot parse root system type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    @property
    def name(self) -> str:
        return self.family if self.family in _EXCEPTIONAL_RANK else f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name


def _dynkin(t: RootSystemType) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths of the simple roots and the simply-connected edges."""
    n = t.rank
    f = t.family
    if f == "A":
        return [Fraction(2)] * n, [(i, i + 1) for i in range(n - 1)]
    if f == "B":
        lengths = [Fraction(2)] * n
        if n > 1:
            lengths[-1] = Fraction(1)
        return lengths, [(i, i + 1) for i in range(n - 1)]
    if f == "C":
        lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
        return lengths, [(i, i + 1) for i in range(n - 1)]
    if f == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return [Fraction(2)] * n, edges
    if f == "G2":
        return [Fraction(2, 3), Fraction(2)], [(0, 1)]
    if f == "F4":
        return [Fraction(2), Fraction(2), Fraction(1), Fraction(1)], [(0, 1), (1, 2), (2, 3)]
    # E6/E7/E8, Bourbaki: 1-3-4-5-6-7-8 with 2 hanging off 4
    edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    return [Fraction(2)] * n, edges


def _gram_from_dynkin(t: RootSystemType) -> list[list[Fraction]]:
    lengths, edges = _dynkin(t)
    n = t.rank
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = lengths[i]
    for i, j in edges:
        # single, double and triple bonds all give (a_i, a_j) = -|long|^2 / 2
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2
    return gram


def _vec_add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _vec_scale(k: int, a: Root) -> Root:
    return tuple(k * x for x in a)


def neg(a: Root) -> Root:
    return tuple(-x for x in a)


def height(a: Root) -> int:
    return sum(a)


def order_key(a: Root) -> tuple:
    """Sort key realising the fixed linear order: height, then lexicographic.

    Ties are broken so that alpha_1 < alpha_2 < ... among the simple roots,
    i.e. lexicographically on the negated coefficient vector.
    """
    return (sum(a), tuple(-x for x in a))


class RootSystem:
    """An irreducible reduced root system, immutable after construction."""

    def __init__(self, rtype: RootSystemType, gram: list[list[Fraction]], roots: Iterable[Root]):
        self.type = rtype
        self.rank = rtype.rank
        self.gram = tuple(tuple(row) for row in gram)
        n = self.rank
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
        )
        self.cartan_matrix = tuple(
            tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(n)) for i in range(n)
        )
        pos = sorted((r for r in roots if any(x > 0 for x in r)), key=order_key)
        self.positive_roots: tuple[Root, ...] = tuple(pos)
        self.all_roots: tuple[Root, ...] = self.positive_roots + tuple(neg(r) for r in pos)
        self.root_set = frozenset(self.all_roots)
        self.index = {r: i for i, r in enumerate(self.all_roots)}
        self._pos_rank = {r: i for i, r in enumerate(self.positive_roots)}

    def __repr__(self) -> str:
        return f"RootSystem({self.type.name}, {len(self.all_roots)} roots)"

    def __contains__(self, r) -> bool:
        return r in self.root_set

    def inner(self, a: Root, b: Root) -> Fraction:
        if len(a) != self.rank or len(b) != self.rank:
            raise ValueError(f"expected vectors of length {self.rank}, got {len(a)} and {len(b)}")
        g = self.gram
        total = Fraction(0)
        for i, x in enumerate(a):
            if x:
                row = g[i]
                for j, y in enumerate(b):
                    if y:
                        total += x * y * row[j]
        return total

    def pairing(self, gamma: Root, alpha: Root) -> int:
        """The Cartan integer 2(gamma, alpha)/(alpha, alpha)."""
        v = 2 * self.inner(gamma, alpha) / self.inner(alpha, alpha)
        if v.denominator != 1:
            raise ValueError(f"non-integral pairing of {gamma} with {alpha}")
        return v.numerator

    def is_positive(self, a: Root) -> bool:
        return any(x > 0 for x in a)

    def is_long(self, a: Root) -> bool:
        return self.inner(a, a) == 2

    def precedes(self, a: Root, b: Root) -> bool:
        """Strict comparison in the fixed order on positive roots."""
        return self._pos_rank[a] < self._pos_rank[b]

    def reflect(self, gamma: Root, alpha: Root) -> Root:
        return _vec_sub(gamma, _vec_scale(self.pairing(gamma, alpha), alpha))

    def add(self, a: Root, b: Root) -> Root:
        return _vec_add(a, b)

    def sub(self, a: Root, b: Root) -> Root:
        return _vec_sub(a, b)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=order_key)

    def level_set(self, gamma: Root, n: int) -> tuple[Root, ...]:
        """Roots alpha with 2(gamma, alpha)/(gamma, gamma) == n, in the order of all_roots."""
        gg = self.inner(gamma, gamma)
        return tuple(a for a in self.all_roots if 2 * self.inner(gamma, a) == n * gg)

    def root_string(self, alpha: Root, gamma: Root) -> tuple[int, int]:
        """(p, q) with p, q maximal such that gamma - p*alpha and gamma + q*alpha are roots."""
        if gamma == alpha or gamma == neg(alpha):
            raise ValueError("root string undefined for gamma = +-alpha")
        p = 0
        while _vec_sub(gamma, _vec_scale(p + 1, alpha)) in self.root_set:
            p += 1
        q = 0
        while _vec_add(gamma, _vec_scale(q + 1, alpha)) in self.root_set:
            q += 1
        return p, q

    def coroot_coeffs(self, alpha: Root) -> tuple[int, ...]:
        """Coordinates of the coroot of alpha over the simple coroots."""
        aa = self.inner(alpha, alpha)
        out = []
        for i, c in enumerate(alpha):
            v = c * self.gram[i][i] / aa
            if v.denominator != 1:
                raise ValueError(f"non-integral coroot coefficient for {alpha}")
            out.append(v.numerator)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "type": self.type.family,
            "rank": self.rank,
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "roots": [list(r) for r in self.all_roots],
        }

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)


def _closure(rank: int, cartan: list[list[int]]) -> set[Root]:
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(rank):
                k = sum(r[j] * cartan[j][i] for j in range(rank))
                if not k:
                    continue
                s = tuple(x - k if j == i else x for j, x in enumerate(r))
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    return found


def build_root_system(rtype: RootSystemType | str) -> RootSystem:
    """Generate the full root system of ``rtype`` by simple-reflection closure."""
    if isinstance(rtype, str):
        rtype = RootSystemType.parse(rtype)
    gram = _gram_from_dynkin(rtype)
    n = rtype.rank
    cartan = [[int(2 * gram[i][j] / gram[j][j]) for j in range(n)] for i in range(n)]
    roots = _closure(n, cartan)
    rs = RootSystem(rtype, gram, roots)
    expected = ROOT_COUNTS[rtype.family](n)
    if len(rs.all_roots) != expected:
        raise ConfigurationError(
            f"{rtype}: generated {len(rs.all_roots)} roots, expected {expected}"
        )
    return rs


def highest_root(rs: RootSystem) -> Root:
    return rs.highest_root


def inner(rs: RootSystem, a: Root, b: Root) -> Fraction:
    return rs.inner(a, b)


def level_set(rs: RootSystem, gamma: Root, n: int) -> tuple[Root, ...]:
    return rs.level_set(gamma, n)


def root_string(rs: RootSystem, alpha: Root, gamma: Root) -> tuple[int, int]:
    return rs.root_string(alpha, gamma)
