"""The exceptional algebra g2 realised inside so(7), and the orbit L = Ad(H) Z_delta.

Matrices act on column vectors, so ``G_ij`` sends ``e_i`` to ``e_j`` and
``e_j`` to ``-e_i``.  Each ``G_ij`` (i < j) occurs in exactly one of the seven
families ``V_k(lam, mu, nu)``, which makes decomposing a skew matrix into
V-components a matter of reading off entries.

Two kinds of check live here.  The *literal* checks compare against the
published bracket table and eigenvector identities exactly as printed; the
*corrected* checks assert the values that the matrices actually produce.
The two disagree in a handful of places (see :data:`PUBLISHED_NINE` and
:func:`table_consistency_witnesses`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import isqrt
from typing import Iterable, Sequence

from .chevalley import ChevalleyAlgebra, LieElement, StructureConstants, build_structure_constants
from .gaussian import GaussianRational, I
from .linalg import Subspace
from .roots import Root, RootSystem, build_root_system, neg, order_key

N = 7

# V_k(lam, mu, nu) = sum of sign * (lam, mu, nu)[slot] * G_ij
V_TABLE: dict[int, tuple[tuple[int, int, int, int], ...]] = {
    1: ((0, 1, 2, 3), (1, 1, 4, 5), (2, 1, 6, 7)),
    2: ((0, -1, 1, 3), (1, -1, 4, 6), (2, 1, 5, 7)),
    3: ((0, 1, 1, 2), (1, 1, 4, 7), (2, 1, 5, 6)),
    4: ((0, -1, 1, 5), (1, 1, 2, 6), (2, -1, 3, 7)),
    5: ((0, 1, 1, 4), (1, -1, 2, 7), (2, -1, 3, 6)),
    6: ((0, -1, 1, 7), (1, -1, 2, 4), (2, 1, 3, 5)),
    7: ((0, 1, 1, 6), (1, 1, 2, 5), (2, 1, 3, 4)),
}

# (i, j) -> (k, slot, sign)
_OWNER = {(i, j): (k, slot, s) for k, rows in V_TABLE.items() for slot, s, i, j in rows}


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class So7Matrix:
    """A 7x7 skew-symmetric matrix with rational entries."""

    __slots__ = ("_upper",)

    def __init__(self, upper: dict[tuple[int, int], Fraction] | None = None):
        # 1-based (i, j) with i < j -> entry M[i][j]; zeros are not stored
        self._upper = {k: _fr(v) for k, v in (upper or {}).items() if v}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> So7Matrix:
        if len(rows) != N or any(len(r) != N for r in rows):
            raise ValueError("expected a 7x7 matrix")
        for i in range(N):
            for j in range(N):
                if _fr(rows[i][j]) != -_fr(rows[j][i]):
                    raise ValueError(f"matrix is not skew-symmetric at ({i + 1}, {j + 1})")
        return cls({(i + 1, j + 1): rows[i][j] for i in range(N) for j in range(i + 1, N)})

    def entry(self, i: int, j: int) -> Fraction:
        """1-based entry M[i][j]."""
        if i == j:
            return Fraction(0)
        if i < j:
            return self._upper.get((i, j), Fraction(0))
        return -self._upper.get((j, i), Fraction(0))

    def rows(self) -> list[list[Fraction]]:
        return [[self.entry(i, j) for j in range(1, N + 1)] for i in range(1, N + 1)]

    def apply(self, vec: Sequence) -> list[Fraction]:
        return [sum((self.entry(i, j) * _fr(vec[j - 1]) for j in range(1, N + 1)), Fraction(0))
                for i in range(1, N + 1)]

    def real_coords(self) -> dict:
        return dict(self._upper)

    def __add__(self, other: So7Matrix) -> So7Matrix:
        out = dict(self._upper)
        for k, v in other._upper.items():
            out[k] = out.get(k, 0) + v
        return So7Matrix(out)

    def __neg__(self) -> So7Matrix:
        return So7Matrix({k: -v for k, v in self._upper.items()})

    def __sub__(self, other: So7Matrix) -> So7Matrix:
        return self + (-other)

    def __mul__(self, c) -> So7Matrix:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return So7Matrix({k: v * c for k, v in self._upper.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, So7Matrix) and self._upper == other._upper

    def __hash__(self):
        return hash(frozenset(self._upper.items()))

    def __bool__(self) -> bool:
        return bool(self._upper)

    def __repr__(self) -> str:
        parts = [render_v(k, p) for k, p in sorted(decompose_v(self).items())]
        return " + ".join(parts) if parts else "0"


def _matmul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in cols] for row in a]


def bracket(x: So7Matrix, y: So7Matrix) -> So7Matrix:
    """[x, y] = xy - yx."""
    xr, yr = x.rows(), y.rows()
    xy, yx = _matmul(xr, yr), _matmul(yr, xr)
    return So7Matrix({(i + 1, j + 1): xy[i][j] - yx[i][j] for i in range(N) for j in range(i + 1, N)})


def g_ij(i: int, j: int) -> So7Matrix:
    """The elementary skew endomorphism e_i -> e_j, e_j -> -e_i."""
    if not (1 <= i <= N and 1 <= j <= N):
        raise ValueError(f"indices must lie in 1..7, got ({i}, {j})")
    if i == j:
        raise ValueError("G_ii is not defined")
    # column i holds the image of e_i, so M[j][i] = 1 and M[i][j] = -1
    return So7Matrix({(i, j): -1}) if i < j else So7Matrix({(j, i): 1})


def v(k: int, lam, mu, nu) -> So7Matrix:
    """V_k(lam, mu, nu) as a matrix."""
    if k not in V_TABLE:
        raise ValueError(f"V index must be 1..7, got {k}")
    coeffs = (_fr(lam), _fr(mu), _fr(nu))
    out = So7Matrix()
    for slot, sign, i, j in V_TABLE[k]:
        if coeffs[slot]:
            out = out + g_ij(i, j) * (sign * coeffs[slot])
    return out


Triple = tuple[Fraction, Fraction, Fraction]


def decompose_v(x: So7Matrix) -> dict[int, Triple]:
    """{k: (lam, mu, nu)} with x equal to the sum of V_k(lam, mu, nu); zero parts omitted."""
    out: dict[int, list[Fraction]] = {}
    for (i, j), val in x.real_coords().items():
        k, slot, sign = _OWNER[(i, j)]
        # the coefficient of G_ij (i < j) is -M[i][j]
        out.setdefault(k, [Fraction(0)] * 3)[slot] = -val * sign
    return {k: tuple(c) for k, c in sorted(out.items())}


def _num(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_v(k: int, p: Sequence) -> str:
    return f"V{k}({','.join(_num(_fr(c)) for c in p)})"


def model_form(x: So7Matrix, y: So7Matrix) -> Fraction:
    """-4 trace(xy); equals 8(lam lam' + mu mu' + nu nu') on matching V-families."""
    # trace(xy) = sum_ij x_ij y_ji = -2 sum_{i<j} x_ij y_ij for skew x, y
    yc = y.real_coords()
    return 8 * sum((val * yc[k] for k, val in x.real_coords().items() if k in yc), Fraction(0))


def in_g2(x: So7Matrix) -> bool:
    return all(sum(p) == 0 for p in decompose_v(x).values())


def g2_coordinates(x: So7Matrix) -> dict[tuple[int, int], Fraction]:
    """Coordinates over the basis V_k(1,-1,0), V_k(0,1,-1); raises if x is not in g2."""
    out = {}
    for k, (lam, mu, nu) in decompose_v(x).items():
        if lam + mu + nu:
            raise ValueError(f"{render_v(k, (lam, mu, nu))} is not in g2")
        if lam:
            out[(k, 0)] = lam
        if lam + mu:
            out[(k, 1)] = lam + mu
    return out


def g2_basis() -> list[So7Matrix]:
    return [v(k, *p) for k in range(1, 8) for p in ((1, -1, 0), (0, 1, -1))]


def killing(x: So7Matrix, y: So7Matrix) -> Fraction:
    """trace(ad x ad y) on g2."""
    total = Fraction(0)
    for b, key in zip(g2_basis(), [(k, s) for k in range(1, 8) for s in (0, 1)]):
        total += g2_coordinates(bracket(x, bracket(y, b))).get(key, 0)
    return total


# decomposition ---------------------------------------------------------------

TWO = (2, -1, -1)
ONE = (0, 1, -1)


@dataclass
class G2Decomposition:
    g2: Subspace
    a: Subspace
    k: Subspace
    m: Subspace
    s: Subspace
    h: Subspace
    h_p: Subspace
    a_point: So7Matrix
    T_aL: Subspace
    N_aL: Subspace

    def span(self, vectors: Iterable[So7Matrix]) -> Subspace:
        return Subspace(vectors, form=model_form)


@lru_cache(maxsize=1)
def g2_decomposition() -> G2Decomposition:
    def span(vs, name):
        return Subspace(vs, form=model_form, name=name)

    pair = ((1, -1, 0), (0, 1, -1))
    return G2Decomposition(
        g2=span(g2_basis(), "g2"),
        a=span([v(1, *p) for p in pair], "a"),
        k=span([v(i, *p) for i in (1, 2, 3) for p in pair], "k"),
        m=span([v(i, *p) for i in (4, 5, 6, 7) for p in pair], "m"),
        s=span([v(i, *ONE) for i in (1, 2, 3)], "s"),
        h=span([v(i, *TWO) for i in (1, 2, 3)], "h"),
        h_p=span([v(1, *TWO)], "h_p"),
        a_point=v(6, *ONE),
        T_aL=span([v(4, *TWO), v(5, *TWO), v(7, *ONE)], "T_aL"),
        N_aL=span([v(4, *ONE), v(5, *ONE), v(6, *TWO), v(7, *TWO)], "N_aL"),
    )


@dataclass
class Report:
    name: str
    ok: bool = True
    witnesses: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.witnesses.append(msg)

    def __bool__(self) -> bool:
        return self.ok


def verify_g2_closure(basis: Sequence[So7Matrix] | None = None) -> Report:
    """Every bracket of basis elements lies in their span, and the span is 14-dimensional."""
    basis = list(basis) if basis is not None else g2_basis()
    r = Report("closure")
    sp = Subspace(basis, form=model_form)
    if sp.dim != 14:
        r.fail(f"span has dimension {sp.dim}, expected 14")
    for x, y in combinations(sp.basis, 2):
        z = bracket(x, y)
        if not sp.contains(z):
            r.fail(f"[{x!r}, {y!r}] = {z!r} leaves the span")
            break
    r.info["dim"] = sp.dim
    return r


def verify_form() -> Report:
    """model_form: the 8(..) formula on V-families, orthogonality across families, ad-invariance, definiteness."""
    r = Report("model_form")
    grid = range(-2, 3)
    triples = [(a, b, c) for a in grid for b in grid for c in grid]
    small = [t for t in triples if sum(map(abs, t)) <= 3]
    for i in range(1, 8):
        for p in small:
            for q in small:
                want = 8 * (p[0] * q[0] + p[1] * q[1] + p[2] * q[2])
                if model_form(v(i, *p), v(i, *q)) != want:
                    r.fail(f"<{render_v(i, p)}, {render_v(i, q)}> != {want}")
    for i, j in combinations(range(1, 8), 2):
        if model_form(v(i, 1, 1, 1), v(j, 1, 1, 1)):
            r.fail(f"<V{i}, V{j}> != 0")
    basis = g2_basis()
    for z in basis:
        for x in basis:
            zx = bracket(z, x)
            for y in basis:
                if model_form(zx, y) + model_form(x, bracket(z, y)):
                    r.fail(f"form not ad-invariant at ({z!r}, {x!r}, {y!r})")
                    return r
    # definiteness on g2: the Gram matrix in the V-basis is block diagonal with
    # blocks 8*[[2,-1],[-1,2]], which is positive definite
    try:
        Subspace(basis, form=model_form).orthogonal_basis()
    except ValueError as exc:
        r.fail(str(exc))
    return r


def verify_decomposition(dec: G2Decomposition | None = None) -> Report:
    """Symmetric pair, the ideal s, and the orthogonal split m = R a + T_aL + N_aL."""
    dec = dec or g2_decomposition()
    r = Report("decomposition")
    dims = {name: getattr(dec, name).dim for name in ("g2", "k", "m", "h", "h_p", "T_aL", "N_aL")}
    r.info["dims"] = dims
    if (dims["k"], dims["m"], dims["h"], dims["h_p"]) != (6, 8, 3, 1):
        r.fail(f"unexpected dimensions {dims}")
    for a_sp, b_sp, target, label in ((dec.k, dec.k, dec.k, "k"), (dec.k, dec.m, dec.m, "m"),
                                      (dec.m, dec.m, dec.k, "k"), (dec.k, dec.s, dec.s, "s")):
        for x in a_sp.basis:
            for y in b_sp.basis:
                if not target.contains(bracket(x, y)):
                    r.fail(f"[{x!r}, {y!r}] not in {label}")
    if not dec.k.is_orthogonal_to(dec.m):
        r.fail("<k, m> != 0")
    ra = Subspace([dec.a_point], form=model_form)
    parts = (ra, dec.T_aL, dec.N_aL)
    for p, q in combinations(parts, 2):
        if not p.is_orthogonal_to(q):
            r.fail(f"{p.name or 'R a'} and {q.name} are not orthogonal")
    total = ra.span_with(dec.T_aL).span_with(dec.N_aL)
    if not total.same_span(dec.m):
        r.fail("R a + T_aL + N_aL != m")
    tangent = Subspace([bracket(x, dec.a_point) for x in dec.h.basis], form=model_form)
    if not tangent.same_span(dec.T_aL):
        r.fail("[h, a] != T_aL")
    s_perp = dec.s.orthogonal_complement(dec.k)
    if not s_perp.same_span(dec.h):
        r.fail("h is not the complement of s in k")
    # no nonzero element of h centralises a
    if Subspace([bracket(x, dec.a_point) for x in dec.h.basis]).dim != dec.h.dim:
        r.fail("h has a nonzero centraliser of a")
    return r


def quaternionic_relations(dec: G2Decomposition | None = None) -> Report:
    """ad(I)^2, ad(J)^2, ad(K)^2 are negative scalars on m and pairwise anticommute, for s = span(I, J, K)."""
    dec = dec or g2_decomposition()
    r = Report("quaternionic")
    ops = {f"V{i}(0,1,-1)": v(i, *ONE) for i in (1, 2, 3)}
    consts = {}
    for name, op in ops.items():
        cs = set()
        for x in dec.m.basis:
            twice = bracket(op, bracket(op, x))
            c = _ratio(twice, x)
            if c is None or c >= 0:
                r.fail(f"ad({name})^2 {x!r} = {twice!r} is not a negative multiple")
            else:
                cs.add(-c)
        if len(cs) != 1:
            r.fail(f"ad({name})^2 is not scalar on m: {sorted(cs)}")
        else:
            consts[name] = cs.pop()
    for (p, x), (q, y) in combinations(ops.items(), 2):
        for e in dec.m.basis:
            if bracket(x, bracket(y, e)) + bracket(y, bracket(x, e)):
                r.fail(f"ad({p}) and ad({q}) do not anticommute on {e!r}")
                break
    r.info["constants"] = {k: str(c) for k, c in consts.items()}
    return r


def _ratio(x: So7Matrix, y: So7Matrix) -> Fraction | None:
    yc = y.real_coords()
    if not yc:
        return None
    k = next(iter(yc))
    c = x.real_coords().get(k, Fraction(0)) / yc[k]
    return c if y * c == x else None


# root data -------------------------------------------------------------------

# a generic element V1(lam, mu, nu) of a is evaluated on these two points
A_POINTS = ((1, -1, 0), (0, 1, -1))


def _lin(coeffs: Sequence[int]):
    """The functional c0*lam + c1*mu + c2*nu."""
    return lambda p: sum(c * x for c, x in zip(coeffs, p))


# The six displayed identities, exactly as printed:
# [V1(l,m,n), V_a(pa) +- i V_b(pb)] = (-+ i) f(l,m,n) (V_c(pc) s i V_d(pd))
# where s is "+-" (follows the sign) or "+" (fixed).
PUBLISHED_EIGEN = (
    # lhs a, pa, b, pb;     functional;  rhs c, pc, d, pd, sign rule
    ((2, (0, -1, 1), 3, ONE), (0, 1, -1), (2, (0, -1, 1), 3, ONE, "+")),
    ((4, (0, -1, 1), 5, ONE), (1, 0, -1), (4, (0, -1, 1), 5, ONE, "+-")),
    ((6, (0, -1, 1), 7, ONE), (1, 0, -1), (4, (0, -1, 1), 5, ONE, "+-")),
    ((3, TWO, 2, TWO), (2, 0, 0), (3, TWO, 2, TWO, "+-")),
    ((5, TWO, 4, TWO), (0, 2, 0), (5, TWO, 4, TWO, "+-")),
    ((7, TWO, 6, TWO), (0, 0, 2), (7, TWO, 6, TWO, "+-")),
)

# the printed root list: +-i(l-m), +-i(l-n), +-i(m-n), +-2il, +-2im, +-2in
PUBLISHED_ROOTS = ((1, -1, 0), (1, 0, -1), (0, 1, -1), (2, 0, 0), (0, 2, 0), (0, 0, 2))


class CMatrix:
    """re + i*im with re, im skew rational matrices (complexified so(7))."""

    __slots__ = ("re", "im")

    def __init__(self, re: So7Matrix | None = None, im: So7Matrix | None = None):
        self.re = re if re is not None else So7Matrix()
        self.im = im if im is not None else So7Matrix()

    def __add__(self, o: CMatrix) -> CMatrix:
        return CMatrix(self.re + o.re, self.im + o.im)

    def __neg__(self) -> CMatrix:
        return CMatrix(-self.re, -self.im)

    def __sub__(self, o: CMatrix) -> CMatrix:
        return self + (-o)

    def scale(self, c) -> CMatrix:
        c = GaussianRational.coerce(c)
        return CMatrix(self.re * c.re - self.im * c.im, self.re * c.im + self.im * c.re)

    def conj(self) -> CMatrix:
        return CMatrix(self.re, -self.im)

    def __eq__(self, o) -> bool:
        return isinstance(o, CMatrix) and self.re == o.re and self.im == o.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __repr__(self) -> str:
        if not self.im:
            return repr(self.re)
        return f"({self.re!r}) + i({self.im!r})"


def cbracket(x: CMatrix, y: CMatrix) -> CMatrix:
    return CMatrix(bracket(x.re, y.re) - bracket(x.im, y.im), bracket(x.re, y.im) + bracket(x.im, y.re))


def _eigen_check(lhs: CMatrix, rhs_factor, rhs: CMatrix) -> list[str]:
    """Check [V1(p), lhs] == f(p) * rhs on the two spanning points of a."""
    bad = []
    for p in A_POINTS:
        got = cbracket(CMatrix(v(1, *p)), lhs)
        want = rhs.scale(rhs_factor(p))
        if got != want:
            bad.append(f"at V1{p}: got {got!r}, displayed {want!r}")
    return bad


def verify_root_data_literal() -> Report:
    """The six eigenvector identities and the root list, exactly as printed."""
    r = Report("root_data_literal")
    for (a, pa, b, pb), fun, (c, pc, d, pd, rule) in PUBLISHED_EIGEN:
        f = _lin(fun)
        for sign in (1, -1):
            lhs = CMatrix(v(a, *pa), v(b, *pb) * sign)
            rsign = sign if rule == "+-" else 1
            rhs = CMatrix(v(c, *pc), v(d, *pd) * rsign)
            # displayed scalar: (-+ i) f
            bad = _eigen_check(lhs, lambda p: GaussianRational(0, -sign * f(p)), rhs)
            tag = f"[V1, {render_v(a, pa)} {'+' if sign > 0 else '-'} i{render_v(b, pb)}]"
            for msg in bad:
                r.fail(f"{tag} {msg}")
    computed = {tuple(root) for root in computed_roots()}
    printed = set()
    for t in PUBLISHED_ROOTS:
        printed.add(t)
        printed.add(tuple(-x for x in t))
    if _normalise_roots(printed) != computed:
        r.fail(f"printed root list {sorted(_normalise_roots(printed))} != computed {sorted(computed)}")
    return r


def _normalise_roots(roots: Iterable[tuple[int, int, int]]) -> set[tuple[int, ...]]:
    """Root functionals i*(c . (l,m,n)) reduced to their values on A_POINTS."""
    return {tuple(_lin(c)(p) for p in A_POINTS) for c in roots}


# Root planes: (u, v) with ad(a) rotating u into v.  u - i v is a root vector.
ROOT_PLANES = (
    ((2, (0, -1, 1)), (3, ONE)),
    ((4, (0, -1, 1)), (5, ONE)),
    ((6, (0, -1, 1)), (7, ONE)),
    ((3, TWO), (2, TWO)),
    ((5, TWO), (4, TWO)),
    ((7, TWO), (6, TWO)),
)


def root_vectors() -> dict[tuple, CMatrix]:
    """{root key: eigenvector} for all twelve roots of g2 relative to a.

    A root is recorded by its values c(T) at the two points of A_POINTS,
    where [T, E] = i c(T) E.
    """
    out = {}
    for (k1, p1), (k2, p2) in ROOT_PLANES:
        u, w = v(k1, *p1), v(k2, *p2)
        vals = []
        for p in A_POINTS:
            t = v(1, *p)
            cu = _ratio(bracket(t, u), w) if bracket(t, u) else Fraction(0)
            cw = _ratio(bracket(t, w), u) if bracket(t, w) else Fraction(0)
            if cu is None or cw is None or cw != -cu:
                raise AssertionError(f"{render_v(k1, p1)}, {render_v(k2, p2)} is not a rotation plane of a")
            vals.append(cu)
        key = tuple(int(x) if x.denominator == 1 else x for x in vals)
        out[key] = CMatrix(u, -w)
        out[tuple(-x for x in key)] = CMatrix(u, w)
    return out


def computed_roots() -> list[tuple]:
    return sorted(root_vectors())


def verify_root_data_corrected() -> Report:
    """Eigen-identities with the values the matrices produce, and the beta/delta data."""
    r = Report("root_data_corrected")
    vecs = root_vectors()
    if len(vecs) != 12:
        r.fail(f"found {len(vecs)} roots, expected 12")
    for key, e in vecs.items():
        for p, c in zip(A_POINTS, key):
            if cbracket(CMatrix(v(1, *p)), e) != e.scale(GaussianRational(0, c)):
                r.fail(f"root vector for {key} fails at V1{p}")
    corrected = {
        # combination -> functional of the top sign; the lower sign negates it
        "V2(0,-1,1) +- iV3(0,1,-1)": (0, 1, -1),
        "V4(0,-1,1) +- iV5(0,1,-1)": (1, 0, -1),
        "V6(0,-1,1) +- iV7(0,1,-1)": (1, -1, 0),
        "V3(2,-1,-1) +- iV2(2,-1,-1)": (1, 0, 0),
        "V5(2,-1,-1) +- iV4(2,-1,-1)": (0, 1, 0),
        "V7(2,-1,-1) +- iV6(2,-1,-1)": (0, 0, 1),
    }
    for ((k1, p1), (k2, p2)), (label, fun) in zip(ROOT_PLANES, corrected.items()):
        f = _lin(fun)
        for sign in (1, -1):
            lhs = CMatrix(v(k1, *p1), v(k2, *p2) * sign)
            bad = _eigen_check(lhs, lambda p: GaussianRational(0, sign * f(p)), lhs)
            for msg in bad:
                r.fail(f"{label} ({'+' if sign > 0 else '-'}): {msg}")
    r.info["eigenvalues"] = {label: f"+-i({_fmt_fun(fun)})" for label, fun in corrected.items()}
    # beta = i(m - n), delta = i(m - l)
    beta, delta = _normalise_roots([(0, 1, -1)]).pop(), _normalise_roots([(-1, 1, 0)]).pop()
    if beta not in vecs or delta not in vecs:
        r.fail("beta or delta is not a root")
        return r
    level = 2 * root_inner(beta, delta) / root_inner(beta, beta)
    r.info["level_beta_delta"] = str(level)
    if level != 1:
        r.fail(f"2(beta, delta)/(beta, beta) = {level}, expected 1")
    if root_inner(delta, delta) != root_inner(beta, beta):
        r.fail("delta is not long")
    z_delta = _z_of(vecs[delta])
    if not Subspace([v(6, *ONE)]).contains(z_delta) or not z_delta:
        r.fail(f"R Z_delta = R {z_delta!r}, not R V6(0,1,-1)")
    return r


def _fmt_fun(c: Sequence[int]) -> str:
    names = ("l", "m", "n")
    terms = [f"{'-' if x < 0 else '+'}{abs(x) if abs(x) != 1 else ''}{nm}" for x, nm in zip(c, names) if x]
    s = "".join(terms)
    return s[1:] if s.startswith("+") else s


def _z_of(e: CMatrix) -> So7Matrix:
    """Z = E - E_- with E_- = -conj(E); real part up to the factor 2."""
    return (e + e.conj()).re


def _coroot_in_a(key: tuple) -> So7Matrix:
    """H in a with model_form(H, T) = c(T) at both points of A_POINTS."""
    t1, t2 = (v(1, *p) for p in A_POINTS)
    g11, g12, g22 = model_form(t1, t1), model_form(t1, t2), model_form(t2, t2)
    c1, c2 = key
    det = g11 * g22 - g12 * g12
    x = (c1 * g22 - c2 * g12) / det
    y = (c2 * g11 - c1 * g12) / det
    return t1 * x + t2 * y


def root_inner(a: tuple, b: tuple) -> Fraction:
    return model_form(_coroot_in_a(a), _coroot_in_a(b))


def verify_root_data() -> Report:
    """The literal check: every displayed eigen-identity and the printed root list."""
    return verify_root_data_literal()


# brackets and the second fundamental form -------------------------------------

# [X, Y] = sum of V_k(p), exactly as printed
PUBLISHED_TAL = (
    ((1, TWO), (6, ONE), ((7, (0, -3, 3)),)),
    ((2, TWO), (6, ONE), ((4, (-2, -1, -1)),)),
    ((3, TWO), (6, ONE), ((5, TWO),)),
)

PUBLISHED_NINE = (
    ((1, TWO), (7, ONE), ((6, (0, -3, 3)),)),
    ((2, TWO), (7, ONE), ((5, (-2, 1, 1)),)),
    ((3, TWO), (7, ONE), ((4, TWO),)),
    ((1, TWO), (4, TWO), ((5, TWO),)),
    ((2, TWO), (4, TWO), ((6, (-4, 1, 3)),)),
    ((3, TWO), (4, TWO), ((7, (4, -5, 1)),)),
    ((1, TWO), (5, TWO), ((4, TWO),)),
    ((2, TWO), (5, TWO), ((7, (4, 1, -5)),)),
    ((3, TWO), (5, TWO), ((6, (4, -5, 1)),)),
)


def _vsum(parts) -> So7Matrix:
    out = So7Matrix()
    for k, p in parts:
        out = out + v(k, *p)
    return out


def _render_sum(x: So7Matrix) -> str:
    return repr(x)


@dataclass
class BracketLine:
    left: str
    right: str
    printed: str
    computed: str
    match: bool

    def render(self) -> str:
        mark = "ok" if self.match else "MISMATCH"
        line = f"[{self.left}, {self.right}] = {self.computed}"
        return line if self.match else f"{line}    ({mark}: printed {self.printed})"


def bracket_table(table=PUBLISHED_NINE) -> list[BracketLine]:
    out = []
    for (kx, px), (ky, py), rhs in table:
        got = bracket(v(kx, *px), v(ky, *py))
        printed = _vsum(rhs)
        out.append(BracketLine(render_v(kx, px), render_v(ky, py), _render_sum(printed), _render_sum(got), got == printed))
    return out


def table_consistency_witnesses() -> list[str]:
    """Pairs of printed brackets that contradict ad-invariance of the form.

    For printed [X, Y1] = R1 and [X, Y2] = R2 invariance forces
    <R1, Y2> = -<Y1, R2>.  This uses only the printed values and the form,
    so a violation shows the table cannot be right under any convention.
    """
    printed: dict[tuple, list[tuple[So7Matrix, So7Matrix, str]]] = {}
    for (kx, px), (ky, py), rhs in PUBLISHED_TAL + PUBLISHED_NINE:
        key = (kx, px)
        printed.setdefault(key, []).append((v(ky, *py), _vsum(rhs), f"[{render_v(kx, px)}, {render_v(ky, py)}]"))
    out = []
    for x, rows in printed.items():
        for (y1, r1, l1), (y2, r2, l2) in combinations(rows, 2):
            lhs, rhs = model_form(r1, y2), -model_form(y1, r2)
            if lhs != rhs:
                out.append(f"<{l1}, {_render_sum(y2)}> = {lhs} but -<{_render_sum(y1)}, {l2}> = {rhs}")
    for (kx, px), (ky, py), rhs in PUBLISHED_TAL + PUBLISHED_NINE:
        r = _vsum(rhs)
        if not in_g2(r):
            out.append(f"[{render_v(kx, px)}, {render_v(ky, py)}] printed as {_render_sum(r)}, which is not in g2")
    return out


def second_fundamental_form(x: So7Matrix, y: So7Matrix, dec: G2Decomposition | None = None) -> So7Matrix:
    """h_a(X*, Y*) = pi([X, [Y, a]]) with pi the orthogonal projection onto N_aL."""
    dec = dec or g2_decomposition()
    for name, z in (("X", x), ("Y", y)):
        if not dec.h.contains(z):
            raise ValueError(f"{name} = {z!r} is not in h")
    return dec.N_aL.project(bracket(x, bracket(y, dec.a_point)))


def sff_table(dec: G2Decomposition | None = None) -> list[tuple[str, str, So7Matrix]]:
    dec = dec or g2_decomposition()
    labels = [render_v(i, TWO) for i in (1, 2, 3)]
    out = []
    for (lx, x) in zip(labels, dec.h.basis):
        for (ly, y) in zip(labels, dec.h.basis):
            out.append((lx, ly, second_fundamental_form(x, y, dec)))
    return out


def verify_not_totally_geodesic(dec: G2Decomposition | None = None) -> Report:
    """h is symmetric, N_aL-valued and nonzero somewhere.

    The published bracket table is compared as well and reported in
    ``info["bracket_table_match"]``; it does not affect the verdict.
    """
    dec = dec or g2_decomposition()
    r = Report("not_totally_geodesic")
    if not (dec.a_point in dec.m) or not dec.T_aL.is_orthogonal_to([dec.a_point]) \
            or not dec.N_aL.is_orthogonal_to([dec.a_point]):
        r.fail("a is not orthogonal to T_aL and N_aL")
    table = {(lx, ly): val for lx, ly, val in sff_table(dec)}
    nonzero = []
    for (lx, ly), val in table.items():
        if val != table[(ly, lx)]:
            r.fail(f"h({lx}, {ly}) = {val!r} != h({ly}, {lx}) = {table[(ly, lx)]!r}")
        if not dec.N_aL.contains(val):
            r.fail(f"h({lx}, {ly}) = {val!r} not in N_aL")
        if val:
            nonzero.append(f"h({lx}, {ly}) = {val!r}")
    if not nonzero:
        r.fail("second fundamental form vanishes identically")
    r.info["nonzero"] = nonzero
    r.info["dims"] = (dec.T_aL.dim, dec.N_aL.dim)
    r.info["bracket_table_match"] = all(line.match for line in bracket_table())
    return r


def verify_bracket_table() -> Report:
    """The nine printed brackets, bit-exactly."""
    r = Report("bracket_table")
    for line in bracket_table():
        if not line.match:
            r.fail(f"[{line.left}, {line.right}]: printed {line.printed}, computed {line.computed}")
    return r


def verify_tal_brackets() -> Report:
    """The three printed brackets spanning T_aL, bit-exactly."""
    r = Report("tal_brackets")
    for line in bracket_table(PUBLISHED_TAL):
        if not line.match:
            r.fail(f"[{line.left}, {line.right}]: printed {line.printed}, computed {line.computed}")
    return r


# bridge to the abstract pipeline --------------------------------------------

@dataclass
class Isomorphism:
    """phi on the Chevalley basis of the abstract g2, as complex matrices."""

    alg: ChevalleyAlgebra
    images: dict[int, CMatrix]

    def __call__(self, x: LieElement) -> CMatrix:
        out = CMatrix()
        for k, c in x.coeffs.items():
            out = out + self.images[k].scale(c)
        return out

    def real(self, x: LieElement) -> So7Matrix:
        m = self(x)
        if m.im:
            raise ValueError(f"image of {x!r} is not real")
        return m.re


def _scaled_generator(e: CMatrix, target: int = 2) -> CMatrix:
    """Rescale e by a Gaussian rational so that [[e, -conj e], e] = target * e."""
    h = cbracket(e, -e.conj())
    he = cbracket(h, e)
    k = None
    for part_h, part_e in ((he.re, e.re), (he.im, e.im)):
        if part_e:
            k = _ratio(part_h, part_e)
            break
    if k is None or k <= 0:
        raise AssertionError("generator does not give an sl2 triple")
    # need |s|^2 = target / k with s Gaussian rational
    want = Fraction(target) / k
    for s in _gaussian_with_norm(want):
        return e.scale(s)
    raise AssertionError(f"no Gaussian rational of norm {want}")


def _gaussian_with_norm(n: Fraction):
    """Gaussian rationals a + bi with a^2 + b^2 = n, small denominators first."""
    for den in range(1, 13):
        target = n * den * den
        if target.denominator != 1:
            continue
        t = target.numerator
        a = 0
        while a * a <= t:
            b2 = t - a * a
            b = isqrt(b2)
            if b * b == b2:
                yield GaussianRational(Fraction(a, den), Fraction(b, den))
            a += 1


def build_isomorphism(rs: RootSystem | None = None, sc: StructureConstants | None = None) -> Isomorphism:
    """An explicit Lie algebra isomorphism from the abstract g2 onto the matrix model.

    The simple roots are matched to the matrix roots through
    beta = i(m - n), delta = i(m - l): alpha_2 = beta - delta and
    alpha_1 = (delta - alpha_2)/3.  Chevalley generators are root vectors
    scaled to sl2-triples, with phases chosen so that Z_delta lands on a
    positive multiple of V6(0,1,-1).
    """
    rs = rs or build_root_system("G2")
    alg = ChevalleyAlgebra(rs, sc if sc is not None else build_structure_constants(rs))
    vecs = root_vectors()
    beta = _normalise_roots([(0, 1, -1)]).pop()
    delta = _normalise_roots([(-1, 1, 0)]).pop()
    a2 = tuple(b - d for b, d in zip(beta, delta))
    a1 = tuple(Fraction(d - x, 3) for d, x in zip(delta, a2))
    simple = (a1, a2)

    def key_of(root: Root) -> tuple:
        return tuple(sum(c * s[j] for c, s in zip(root, simple)) for j in range(2))

    gens = [_scaled_generator(vecs[key_of(s)]) for s in rs.simple_roots]
    units = (GaussianRational(1), I, GaussianRational(-1), -I)
    bb = rs.inner(rs.highest_root, rs.highest_root)
    abs_delta = max((g for g in rs.level_set(rs.highest_root, 1) if rs.inner(g, g) == bb), key=order_key)
    for u in units:
        trial = [gens[0], gens[1].scale(u)]
        images = _extend(alg, rs, trial)
        z = (images[alg.root_index(abs_delta)] - images[alg.root_index(neg(abs_delta))])
        c = _ratio(z.re, v(6, *ONE)) if not z.im else None
        if c is not None and c > 0:
            return Isomorphism(alg, images)
    raise AssertionError("could not align Z_delta with V6(0,1,-1)")


def _extend(alg: ChevalleyAlgebra, rs: RootSystem, gens: list[CMatrix]) -> dict[int, CMatrix]:
    images: dict[int, CMatrix] = {}
    root_img: dict[Root, CMatrix] = {}
    for s, e in zip(rs.simple_roots, gens):
        root_img[s] = e
    for g in rs.positive_roots:
        if g in root_img:
            continue
        for i, s in enumerate(rs.simple_roots):
            rest = rs.sub(g, s)
            if rest in root_img:
                n = alg.sc[(s, rest)]
                root_img[g] = cbracket(root_img[s], root_img[rest]).scale(Fraction(1, n))
                break
    for g in rs.positive_roots:
        root_img[neg(g)] = -root_img[g].conj()
    for a, m in root_img.items():
        images[alg.root_index(a)] = m
    for j, s in enumerate(rs.simple_roots):
        images[j] = cbracket(root_img[s], root_img[neg(s)])
    return images


def verify_isomorphism(phi: Isomorphism) -> Report:
    """phi preserves every bracket of Chevalley basis elements and is bijective onto g2."""
    r = Report("isomorphism")
    alg = phi.alg
    basis = [alg.element(alg.basis_index(k)) for k in range(alg.dim)]
    for i, x in enumerate(basis):
        for y in basis[i + 1:]:
            if phi(alg.bracket(x, y)) != cbracket(phi(x), phi(y)):
                r.fail(f"phi([{x!r}, {y!r}]) != [phi x, phi y]")
                return r
    reals = [phi.real(e) for e in alg.compact_basis().elements]
    if Subspace(reals).dim != 14 or not all(in_g2(m) for m in reals):
        r.fail("phi does not map the compact form onto g2")
    return r


def cross_validate_with_abstract(rs_g2: RootSystem | None = None, sc: StructureConstants | None = None) -> Report:
    """Compare the abstract G2 pipeline with the matrix model through an explicit isomorphism."""
    from . import wolf

    r = Report("cross_validation")
    rs = rs_g2 or build_root_system("G2")
    sc = sc if sc is not None else build_structure_constants(rs)
    wd = wolf.beta_grading(rs, sc)
    model = wolf.build_submanifold_model(wd, wolf.choose_delta(wd))
    dec = g2_decomposition()

    abstract_dims = (wd.k.dim, wd.m.dim, wd.h.dim, model.h_p.dim)
    matrix_dims = (dec.k.dim, dec.m.dim, dec.h.dim, dec.h_p.dim)
    r.info["abstract_dims"] = abstract_dims
    r.info["matrix_dims"] = matrix_dims
    if abstract_dims != (6, 8, 3, 1) or matrix_dims != (6, 8, 3, 1):
        r.fail(f"dimensions differ: abstract {abstract_dims}, matrix {matrix_dims}")

    phi = build_isomorphism(rs, sc)
    iso = verify_isomorphism(phi)
    if not iso:
        r.witnesses.extend(iso.witnesses)
        r.ok = False
        return r

    def image(sp: Subspace) -> Subspace:
        return Subspace([phi.real(x) for x in sp.basis], form=model_form)

    alg = wd.alg
    zd = alg.Z(model.delta)
    pairs = (("k", wd.k, dec.k), ("m", wd.m, dec.m), ("s", wd.s, dec.s), ("h", wd.h, dec.h),
             ("h_p", model.h_p, dec.h_p), ("R a + T_aL", model.m_N, Subspace([dec.a_point]).span_with(dec.T_aL)))
    for name, abstract, matrix in pairs:
        if not image(abstract).same_span(matrix):
            r.fail(f"phi({name}) differs from the matrix model's {name}")
    if not Subspace([dec.a_point]).same_span(Subspace([phi.real(zd)])):
        r.fail("phi(Z_delta) is not on R V6(0,1,-1)")

    # lemma verdicts in both models
    abstract_verdicts = {k: bool(x) for k, x in wolf.lemma_verdicts(model, wd).items()}
    m_N = Subspace([dec.a_point]).span_with(dec.T_aL)
    i_op = v(1, *ONE)
    tc = all(m_N.contains(bracket(i_op, x)) for x in m_N.basis)
    for j in (2, 3):
        op = v(j, *ONE)
        tc = tc and all(not model_form(bracket(op, x), y) for x in m_N.basis for y in m_N.basis)
    if not abstract_verdicts["lemma_totally_complex"] or not tc:
        r.fail(f"totally-complex verdicts: abstract {abstract_verdicts['lemma_totally_complex']}, matrix {tc}")
    q_abs, q_mat = wolf.quaternionic_relations(wd), quaternionic_relations(dec)
    if not q_abs or not q_mat:
        r.fail(f"quaternionic relations: abstract {q_abs.ok}, matrix {q_mat.ok}")

    # ad(Z_delta)^2 = -c on the Sigma_(delta,1) part, compared scale-free via the Killing form
    a = dec.a_point
    k_abs = alg.killing_form(zd, zd)
    k_mat = killing(a, a)
    c_abs = Fraction(wolf.verify_projection_claims(model, wd).info["c"])
    c_mats = set()
    for g in rs.level_set(model.delta, 1):
        for x in (alg.Z(g), alg.W(g)):
            y = phi.real(x)
            c = _ratio(bracket(a, bracket(a, y)), y)
            if c is None:
                r.fail(f"phi({x!r}) is not an eigenvector of ad(a)^2")
            else:
                c_mats.add(-c)
    if len(c_mats) != 1:
        r.fail(f"matrix ad(a)^2 constants {sorted(c_mats)}")
    else:
        c_mat = c_mats.pop()
        ratio_abs = c_abs / -k_abs.re
        ratio_mat = c_mat / -k_mat
        r.info["c_over_killing"] = (str(ratio_abs), str(ratio_mat))
        if k_abs.im or ratio_abs != ratio_mat:
            r.fail(f"c / -Killing(Z_delta, Z_delta): abstract {ratio_abs}, matrix {ratio_mat}")
    return r


def g2_report(emit_sff: bool = False, emit_brackets: bool = False) -> dict:
    """Everything the g2-check command prints, as a JSON-ready dict."""
    dec = g2_decomposition()
    checks = [
        verify_g2_closure(),
        verify_form(),
        verify_decomposition(dec),
        quaternionic_relations(dec),
        verify_root_data_literal(),
        verify_root_data_corrected(),
        verify_tal_brackets(),
        verify_bracket_table(),
        verify_not_totally_geodesic(dec),
        cross_validate_with_abstract(),
    ]
    out = {
        "verdicts": {c.name: c.ok for c in checks},
        "witnesses": {c.name: c.witnesses for c in checks if c.witnesses},
        "closure": checks[0].ok,
        "root_data": checks[4].ok,
        "bracket_table_match": checks[7].ok,
        "not_totally_geodesic": checks[8].ok,
        "table_inconsistencies": table_consistency_witnesses(),
    }
    if emit_sff:
        out["sff_values"] = [
            {"X": lx, "Y": ly, "h": repr(val)} for lx, ly, val in sff_table(dec)
        ]
    if emit_brackets:
        out["brackets"] = [line.render() for line in bracket_table(PUBLISHED_TAL) + bracket_table()]
    return out
