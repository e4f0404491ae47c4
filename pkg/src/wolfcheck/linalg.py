"""Exact sparse linear algebra over Q for spans of Lie-algebra elements.

Vectors handed to :class:`Subspace` only need three things: a
``real_coords()`` method returning a sparse ``{key: rational}`` dict of real
coordinates (zero entries omitted), multiplication by a rational scalar, and
addition.  Both :class:`wolfcheck.chevalley.LieElement` and
:class:`wolfcheck.g2_model.So7Matrix` qualify.

Elimination is kept fully reduced: each pivot key occurs in exactly one row,
so reducing a vector is a single pass over its pivot keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

Form = Callable[[object, object], Fraction]


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _axpy(target: dict, coeff, row: dict) -> None:
    """target -= coeff * row, in place, dropping zeros."""
    for k, v in row.items():
        nv = _norm(target.get(k, 0) - coeff * v)
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class Subspace:
    """Real span of a list of vectors, with exact membership and projection.

    ``form`` is an optional symmetric bilinear form, positive definite on the
    span; it is required for projection and orthogonality queries.
    """

    def __init__(self, vectors: Iterable = (), form: Form | None = None, name: str = ""):
        self.name = name
        self.form = form
        self.basis: list = []
        self._rows: dict[Hashable, dict] = {}
        self._orth: list | None = None
        for v in vectors:
            self._insert(v)

    def _insert(self, v) -> bool:
        residual = self._reduce(v.real_coords())
        if not residual:
            return False
        pivot = next(iter(residual))
        inv = Fraction(1) / Fraction(residual[pivot])
        row = {k: _norm(c * inv) for k, c in residual.items()}
        for other in self._rows.values():
            c = other.get(pivot)
            if c:
                _axpy(other, c, row)
        self._rows[pivot] = row
        self.basis.append(v)
        self._orth = None
        return True

    def _reduce(self, coords: dict) -> dict:
        out = dict(coords)
        for k in [k for k in coords if k in self._rows]:
            c = out.get(k)
            if c:
                _axpy(out, c, self._rows[k])
        return out

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Subspace{label} dim={self.dim}>"

    def contains(self, v) -> bool:
        return not self._reduce(v.real_coords())

    __contains__ = contains

    def residual(self, v) -> dict:
        """Coordinates of ``v`` left over after elimination (empty iff v is in the span)."""
        return self._reduce(v.real_coords())

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(b) for b in self.basis)

    def same_span(self, other: Subspace) -> bool:
        return self.dim == other.dim and self.is_subspace_of(other)

    def span_with(self, other: Subspace | Sequence, name: str = "") -> Subspace:
        extra = other.basis if isinstance(other, Subspace) else list(other)
        return Subspace([*self.basis, *extra], form=self.form, name=name)

    def _need_form(self) -> Form:
        if self.form is None:
            raise ValueError(f"subspace {self.name or '<anon>'} has no bilinear form attached")
        return self.form

    def orthogonal_basis(self) -> list:
        """Gram-Schmidt without normalisation, so everything stays rational."""
        if self._orth is None:
            form = self._need_form()
            orth: list = []
            norms: list = []
            for v in self.basis:
                u = v
                for w, n in zip(orth, norms):
                    c = form(v, w)
                    if c:
                        u = u + w * (-Fraction(c) / n)
                n = form(u, u)
                if n <= 0:
                    raise ValueError("form is not positive definite on this span")
                orth.append(u)
                norms.append(Fraction(n))
            self._orth = list(zip(orth, norms))
        return [u for u, _ in self._orth]

    def project(self, v):
        """Orthogonal projection of ``v`` onto the span under ``form``."""
        form = self._need_form()
        self.orthogonal_basis()
        out = v * 0
        for u, n in self._orth:
            c = form(v, u)
            if c:
                out = out + u * (Fraction(c) / n)
        return out

    def is_orthogonal_to(self, other: Subspace | Sequence) -> bool:
        return self.orthogonality_witness(other) is None

    def orthogonality_witness(self, other: Subspace | Sequence):
        """First basis pair with nonzero pairing, or None."""
        form = self._need_form()
        vecs = other.basis if isinstance(other, Subspace) else list(other)
        for a in self.basis:
            for b in vecs:
                if form(a, b):
                    return a, b
        return None

    def orthogonal_complement(self, within: Subspace, name: str = "") -> Subspace:
        """Orthogonal complement of this span inside ``within``."""
        if not self.is_subspace_of(within):
            raise ValueError("complement requested in a space that does not contain this one")
        vecs = [b - self.project(b) for b in within.basis]
        return Subspace(vecs, form=self.form, name=name)


def rank(vectors: Iterable) -> int:
    return Subspace(vectors).dim
