"""Chevalley basis, structure constants and the compact real form.

Basis of the complexified algebra: the simple coroots ``H_j = A_{alpha_j}``
followed by one root vector ``X_alpha`` per root, with

* ``[X_a, X_-a] = A_a`` (the coroot, expanded over the ``H_j``),
* ``[X_a, X_b] = N_{a,b} X_{a+b}`` with ``|N_{a,b}| = p + 1``,
* ``tau(X_a) = -X_{-a}`` for the conjugation fixing the compact form.

Signs of ``N`` are seeded positive on extraspecial pairs (ordering by height,
then lexicographically) and every other sign is forced by the standard
identities for a Chevalley basis.

The invariant form is a fixed positive multiple of the Killing form: Cartan
pairings come from the root Gram matrix (long roots of length 2) and
``(X_a, X_-a) = 2/(a, a)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

from .errors import InvariantError
from .gaussian import GaussianRational, I, ZERO
from .roots import Root, RootSystem, neg


class ChevalleyBasisIndex(NamedTuple):
    kind: str  # "cartan" or "root"
    key: object  # simple-root index or Root


class StructureConstants:
    """Integer table ``(a, b) -> N_{a,b}``, defined exactly when ``a + b`` is a root."""

    def __init__(self, rs: RootSystem, table: dict[tuple[Root, Root], int]):
        self.rs = rs
        self.table = table

    def __getitem__(self, pair: tuple[Root, Root]) -> int:
        return self.table[pair]

    def __contains__(self, pair) -> bool:
        return pair in self.table

    def __len__(self) -> int:
        return len(self.table)

    def get(self, a: Root, b: Root) -> int:
        """N_{a,b}, or 0 when a + b is not a root."""
        return self.table.get((a, b), 0)

    def to_json(self) -> list[dict]:
        return [
            {"alpha": list(a), "gamma": list(b), "n": n}
            for (a, b), n in sorted(self.table.items(), key=lambda kv: (self.rs.index[kv[0][0]], self.rs.index[kv[0][1]]))
        ]

    def dumps(self, **kw) -> str:
        return json.dumps({"type": self.rs.type.name, "constants": self.to_json()}, **kw)


def build_structure_constants(rs: RootSystem) -> StructureConstants:
    """Structure constants for ``rs`` with the extraspecial sign convention."""
    roots = rs.root_set
    pos = set(rs.positive_roots)
    add, sub = rs.add, rs.sub
    ip = rs.inner
    positive_pairs: dict[tuple[Root, Root], int] = {}

    def n_of(a: Root, b: Root) -> Fraction:
        s = add(a, b)
        if s not in roots:
            return Fraction(0)
        a_pos, b_pos = a in pos, b in pos
        if a_pos and b_pos:
            if rs.precedes(a, b):
                return Fraction(positive_pairs[(a, b)])
            return Fraction(-positive_pairs[(b, a)])
        if not a_pos and not b_pos:
            return -n_of(neg(a), neg(b))
        if not a_pos:
            return -n_of(b, a)
        # a > 0 > b; c = -(a+b) closes the triangle a + b + c = 0
        c = neg(s)
        if s in pos:
            # b, c negative: N_{a,b} = (c,c)/(a,a) N_{b,c}
            return ip(c, c) / ip(a, a) * -n_of(neg(b), neg(c))
        # a, c positive: N_{a,b} = (c,c)/(b,b) N_{c,a}
        return ip(c, c) / ip(b, b) * n_of(c, a)

    for xi in rs.positive_roots:
        pairs = [
            (a, sub(xi, a))
            for a in rs.positive_roots
            if sub(xi, a) in pos and rs.precedes(a, sub(xi, a))
        ]
        if not pairs:
            continue
        alpha, beta = pairs[0]
        p, _ = rs.root_string(alpha, beta)
        positive_pairs[(alpha, beta)] = p + 1
        n_ab = Fraction(p + 1)
        for zeta, eta in pairs[1:]:
            total = Fraction(0)
            d1 = sub(beta, zeta)
            if d1 in roots:
                total += n_of(beta, neg(zeta)) * n_of(alpha, neg(eta)) / ip(d1, d1)
            d2 = sub(alpha, zeta)
            if d2 in roots:
                total += n_of(neg(zeta), alpha) * n_of(beta, neg(eta)) / ip(d2, d2)
            val = ip(xi, xi) / n_ab * total
            pz, _ = rs.root_string(zeta, eta)
            if val.denominator != 1 or abs(val) != pz + 1:
                raise InvariantError(
                    f"N({zeta},{eta}) came out {val}, expected +-{pz + 1}"
                )
            positive_pairs[(zeta, eta)] = int(val)

    table: dict[tuple[Root, Root], int] = {}
    for a in rs.all_roots:
        for b in rs.all_roots:
            if add(a, b) in roots:
                v = n_of(a, b)
                if v.denominator != 1:
                    raise InvariantError(f"non-integral N({a},{b}) = {v}")
                table[(a, b)] = int(v)
    sc = StructureConstants(rs, table)
    _check_constants(sc)
    return sc


def _check_constants(sc: StructureConstants) -> None:
    rs = sc.rs
    for (a, b), n in sc.table.items():
        p, _ = rs.root_string(a, b)
        if abs(n) != p + 1:
            raise InvariantError(f"|N({a},{b})| = {abs(n)} but p + 1 = {p + 1}")
        if sc.table[(b, a)] != -n:
            raise InvariantError(f"N({b},{a}) != -N({a},{b})")
        if sc.table[(neg(a), neg(b))] != -n:
            raise InvariantError(f"N(-{a},-{b}) != -N({a},{b})")


class LieElement:
    """Sparse Gaussian-rational coefficient vector over the Chevalley basis.

    Zero coefficients are never stored, so equality is plain dict equality.
    """

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: ChevalleyAlgebra, coeffs: dict[int, GaussianRational] | None = None):
        self.alg = alg
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def _raw(cls, alg, coeffs):
        obj = cls.__new__(cls)
        obj.alg = alg
        obj.coeffs = coeffs
        return obj

    def _check(self, other: LieElement) -> None:
        if other.alg is not self.alg:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: LieElement) -> LieElement:
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            nv = out[k] + v if k in out else v
            if nv:
                out[k] = nv
            else:
                del out[k]
        return LieElement._raw(self.alg, out)

    def __neg__(self) -> LieElement:
        return LieElement._raw(self.alg, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: LieElement) -> LieElement:
        return self + (-other)

    def __mul__(self, c) -> LieElement:
        if not isinstance(c, (int, Fraction, GaussianRational)):
            return NotImplemented
        if not c:
            return LieElement._raw(self.alg, {})
        return LieElement._raw(self.alg, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.alg is other.alg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def real_coords(self) -> dict:
        out = {}
        for k, v in self.coeffs.items():
            if v.re:
                out[(k, 0)] = v.re
            if v.im:
                out[(k, 1)] = v.im
        return out

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            parts.append(f"({self.coeffs[k]})*{self.alg.basis_label(k)}")
        return " + ".join(parts)


@dataclass(frozen=True)
class CompactBasis:
    labels: tuple[str, ...]
    elements: tuple[LieElement, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[LieElement]:
        return iter(self.elements)

    def __getitem__(self, i) -> LieElement:
        return self.elements[i]

    @property
    def dim(self) -> int:
        return len(self.elements)


class ChevalleyAlgebra:
    """The complex simple Lie algebra attached to a root system, with exact arithmetic."""

    def __init__(self, rs: RootSystem, sc: StructureConstants | None = None):
        self.rs = rs
        self.sc = sc if sc is not None else build_structure_constants(rs)
        if self.sc.rs is not rs:
            raise ValueError("structure constants were built for a different root system")
        self.rank = r = rs.rank
        self.dim = r + len(rs.all_roots)
        self._root_of = {r + i: a for i, a in enumerate(rs.all_roots)}
        self._idx = {a: r + i for i, a in enumerate(rs.all_roots)}
        self._opp = {self._idx[a]: self._idx[neg(a)] for a in rs.all_roots}
        g = rs.gram
        self._cartan_form = [
            [4 * g[i][j] / (g[i][i] * g[j][j]) for j in range(r)] for i in range(r)
        ]
        self._bb: dict[tuple[int, int], tuple] = {}

    def __repr__(self) -> str:
        return f"ChevalleyAlgebra({self.rs.type.name}, dim={self.dim})"

    # basis bookkeeping

    def basis_index(self, k: int) -> ChevalleyBasisIndex:
        if k < self.rank:
            return ChevalleyBasisIndex("cartan", k)
        return ChevalleyBasisIndex("root", self._root_of[k])

    def basis_label(self, k: int) -> str:
        if k < self.rank:
            return f"H{k + 1}"
        return "X" + "".join(str(c) if c >= 0 else f"({c})" for c in self._root_of[k])

    def root_index(self, a: Root) -> int:
        return self._idx[a]

    def zero(self) -> LieElement:
        return LieElement._raw(self, {})

    def H(self, j: int) -> LieElement:
        return LieElement._raw(self, {j: GaussianRational(1)})

    def X(self, a: Root) -> LieElement:
        return LieElement._raw(self, {self._idx[a]: GaussianRational(1)})

    def A(self, a: Root) -> LieElement:
        """The coroot A_a = 2 H_a/(a, a), over the simple coroots."""
        return LieElement._raw(
            self, {j: GaussianRational(c) for j, c in enumerate(self.rs.coroot_coeffs(a)) if c}
        )

    def iA(self, a: Root) -> LieElement:
        return self.A(a) * I

    def Z(self, a: Root) -> LieElement:
        """Z_a = X_a - X_-a (for negative a this is -Z_{-a})."""
        return self.X(a) - self.X(neg(a))

    def W(self, a: Root) -> LieElement:
        """W_a = i (X_a + X_-a)."""
        return (self.X(a) + self.X(neg(a))) * I

    def element(self, index: ChevalleyBasisIndex, coeff=1) -> LieElement:
        k = index.key if index.kind == "cartan" else self._idx[index.key]
        return LieElement(self, {k: GaussianRational.coerce(coeff)})

    # bracket

    def _basis_bracket(self, i: int, j: int) -> tuple:
        key = (i, j)
        hit = self._bb.get(key)
        if hit is not None:
            return hit
        r = self.rank
        rs = self.rs
        if i < r and j < r:
            out = ()
        elif i < r:
            c = rs.pairing(self._root_of[j], rs.simple_roots[i])
            out = ((j, c),) if c else ()
        elif j < r:
            c = rs.pairing(self._root_of[i], rs.simple_roots[j])
            out = ((i, -c),) if c else ()
        else:
            a, b = self._root_of[i], self._root_of[j]
            if self._opp[i] == j:
                out = tuple((k, c) for k, c in enumerate(rs.coroot_coeffs(a)) if c)
            else:
                n = self.sc.get(a, b)
                out = ((self._idx[rs.add(a, b)], n),) if n else ()
        self._bb[key] = out
        return out

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        if x.alg is not self or y.alg is not self:
            raise ValueError("bracket of elements from different algebras")
        out: dict[int, GaussianRational] = {}
        bb = self._basis_bracket
        for i, a in x.coeffs.items():
            for j, b in y.coeffs.items():
                terms = bb(i, j)
                if not terms:
                    continue
                ab = a * b
                for k, c in terms:
                    v = ab * c
                    if k in out:
                        nv = out[k] + v
                        if nv:
                            out[k] = nv
                        else:
                            del out[k]
                    else:
                        out[k] = v
        return LieElement._raw(self, out)

    def ad_power(self, x: LieElement, y: LieElement, k: int) -> LieElement:
        for _ in range(k):
            y = self.bracket(x, y)
        return y

    # conjugation and forms

    def tau(self, x: LieElement) -> LieElement:
        out = {}
        for k, v in x.coeffs.items():
            t = k if k < self.rank else self._opp[k]
            out[t] = -v.conjugate()
        return LieElement._raw(self, out)

    def invariant_form(self, x: LieElement, y: LieElement) -> GaussianRational:
        """Complex-bilinear ad-invariant form, a positive multiple of the Killing form."""
        if x.alg is not self or y.alg is not self:
            raise ValueError("form of elements from different algebras")
        r = self.rank
        total = ZERO
        yc = y.coeffs
        for i, a in x.coeffs.items():
            if i < r:
                row = self._cartan_form[i]
                for j, b in yc.items():
                    if j < r and row[j]:
                        total = total + a * b * row[j]
            else:
                b = yc.get(self._opp[i])
                if b is not None:
                    root = self._root_of[i]
                    total = total + a * b * (Fraction(2) / self.rs.inner(root, root))
        return total

    def compact_inner(self, x: LieElement, y: LieElement) -> Fraction:
        """Positive definite inner product on the compact form: minus invariant_form."""
        v = -self.invariant_form(x, y)
        if v.im:
            raise ValueError("compact inner product of non-real pair; are both tau-fixed?")
        return v.re

    def killing_form(self, x: LieElement, y: LieElement) -> GaussianRational:
        """trace(ad x ad y), computed over the Chevalley basis."""
        total = ZERO
        for k in range(self.dim):
            e = LieElement._raw(self, {k: GaussianRational(1)})
            c = self.bracket(x, self.bracket(y, e)).coeffs.get(k)
            if c is not None:
                total = total + c
        return total

    def compact_basis(self) -> CompactBasis:
        labels, elems = [], []
        for j in range(self.rank):
            labels.append(f"iA{j + 1}")
            elems.append(self.iA(self.rs.simple_roots[j]))
        for a in self.rs.positive_roots:
            tag = "".join(map(str, a))
            labels.append(f"Z{tag}")
            elems.append(self.Z(a))
            labels.append(f"W{tag}")
            elems.append(self.W(a))
        return CompactBasis(tuple(labels), tuple(elems))


def bracket(x: LieElement, y: LieElement) -> LieElement:
    if x.alg is not y.alg:
        raise ValueError("bracket of elements from different algebras")
    return x.alg.bracket(x, y)


def tau(x: LieElement) -> LieElement:
    return x.alg.tau(x)


def invariant_form(x: LieElement, y: LieElement) -> GaussianRational:
    if x.alg is not y.alg:
        raise ValueError("form of elements from different algebras")
    return x.alg.invariant_form(x, y)


def compact_basis(rs: RootSystem, sc: StructureConstants) -> CompactBasis:
    return ChevalleyAlgebra(rs, sc).compact_basis()


# engine self-checks ---------------------------------------------------------


def basis_triples(dim: int, samples: int | None = None, seed: int = 0) -> Iterator[tuple[int, int, int]]:
    """All index triples i < j < k, or ``samples`` seeded random triples."""
    if samples is None:
        return combinations(range(dim), 3)
    rng = random.Random(seed)
    return ((rng.randrange(dim), rng.randrange(dim), rng.randrange(dim)) for _ in range(samples))


def jacobi_failures(alg: ChevalleyAlgebra, triples: Iterable[tuple[int, int, int]]) -> tuple[int, list]:
    """(number of triples checked, failing triples) for antisymmetry and Jacobi on basis elements."""
    basis = [LieElement._raw(alg, {k: GaussianRational(1)}) for k in range(alg.dim)]
    br = alg.bracket
    bad = []
    n = 0
    for i, j, k in triples:
        n += 1
        x, y, z = basis[i], basis[j], basis[k]
        if br(x, y) != -br(y, x) or br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)):
            bad.append((alg.basis_label(i), alg.basis_label(j), alg.basis_label(k)))
    return n, bad


def invariance_failures(alg: ChevalleyAlgebra, triples: Iterable[tuple[int, int, int]]) -> list:
    """Triples with ([x, y], z) + (y, [x, z]) != 0 for the invariant form."""
    basis = [LieElement._raw(alg, {k: GaussianRational(1)}) for k in range(alg.dim)]
    f, br = alg.invariant_form, alg.bracket
    bad = []
    for i, j, k in triples:
        x, y, z = basis[i], basis[j], basis[k]
        if f(br(x, y), z) + f(y, br(x, z)):
            bad.append((alg.basis_label(i), alg.basis_label(j), alg.basis_label(k)))
    return bad
