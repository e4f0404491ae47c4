"""Highest-root grading, the Wolf-space decomposition, and the submanifold model.

Everything here lives in the compact real form, spanned by ``iA_j`` and
``Z_g, W_g`` for positive roots ``g``.  Subspaces are exact spans
(:class:`wolfcheck.linalg.Subspace`) under the positive definite form
``-invariant_form``.

The verifiers return :class:`Verdict` objects, which are truthy iff the
check passed and carry human-readable witnesses otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .catalog import DEFAULT_MAX_RANK, SpaceSpec, parse_space
from .chevalley import (
    ChevalleyAlgebra,
    LieElement,
    StructureConstants,
    basis_triples,
    build_structure_constants,
    invariance_failures,
    jacobi_failures,
)
from .errors import NoDeltaError, StructuralError
from .linalg import Subspace
from .roots import Root, RootSystem, RootSystemType, build_root_system, neg, order_key

MAX_WITNESSES = 5


@dataclass
class Verdict:
    name: str
    ok: bool = True
    witnesses: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def fail(self, msg: str) -> None:
        self.ok = False
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(msg)

    def __bool__(self) -> bool:
        return self.ok


def _fmt_root(a: Root) -> str:
    return "(" + ",".join(map(str, a)) + ")"


class _Namer:
    """Render compact-form elements as Z(..)/W(..)/iA(..) when possible."""

    def __init__(self, alg: ChevalleyAlgebra):
        self.alg = alg
        self._names: dict[LieElement, str] = {}
        for a in alg.rs.positive_roots:
            self._names[alg.Z(a)] = f"Z{_fmt_root(a)}"
            self._names[alg.W(a)] = f"W{_fmt_root(a)}"
            self._names[alg.iA(a)] = f"iA{_fmt_root(a)}"

    def __call__(self, x: LieElement) -> str:
        if x in self._names:
            return self._names[x]
        if -x in self._names:
            return "-" + self._names[-x]
        return repr(x)


@dataclass
class WolfDecomposition:
    rs: RootSystem
    alg: ChevalleyAlgebra
    beta: Root
    sigma_levels: dict[int, tuple[Root, ...]]
    g: Subspace
    a: Subspace
    k: Subspace
    m: Subspace
    s: Subspace
    h: Subspace
    a_beta: Subspace

    def __post_init__(self):
        self.name = _Namer(self.alg)

    @property
    def sc(self) -> StructureConstants:
        return self.alg.sc

    def form(self, x: LieElement, y: LieElement) -> Fraction:
        return self.alg.compact_inner(x, y)

    def pi_m(self, x: LieElement) -> LieElement:
        """Orthogonal projection onto m."""
        return self.m.project(x)

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        return self.alg.bracket(x, y)

    def span(self, vectors: Iterable[LieElement], name: str = "") -> Subspace:
        return Subspace(vectors, form=self.form, name=name)

    def zw(self, roots: Iterable[Root]) -> list[LieElement]:
        out = []
        for a in roots:
            out.append(self.alg.Z(a))
            out.append(self.alg.W(a))
        return out

    def positive_level(self, n: int) -> tuple[Root, ...]:
        return tuple(a for a in self.sigma_levels[n] if self.rs.is_positive(a))


def beta_grading(rs: RootSystem, sc: StructureConstants | None = None) -> WolfDecomposition:
    """Grade the roots by the highest root and assemble k, m, s, a_beta, h."""
    alg = ChevalleyAlgebra(rs, sc if sc is not None else build_structure_constants(rs))
    beta = rs.highest_root
    levels = {n: rs.level_set(beta, n) for n in range(-2, 3)}
    if sum(len(v) for v in levels.values()) != len(rs.all_roots):
        raise StructuralError(f"{rs.type}: levels -2..2 do not exhaust the roots")
    if levels[2] != (beta,) or levels[-2] != (neg(beta),):
        raise StructuralError(f"{rs.type}: Sigma_(+-2) is not {{+-beta}}")
    form = alg.compact_inner

    def span(vs, name):
        return Subspace(vs, form=form, name=name)

    def zw(roots):
        return [e for a in roots for e in (alg.Z(a), alg.W(a))]

    cartan = [alg.iA(a) for a in rs.simple_roots]
    pos0 = [a for a in levels[0] if rs.is_positive(a)]
    a_sp = span(cartan, "a")
    s_sp = span([alg.iA(beta), alg.Z(beta), alg.W(beta)], "s")
    a_beta = span([alg.iA(beta)], "iA_beta").orthogonal_complement(a_sp, name="a_beta")
    wd = WolfDecomposition(
        rs=rs,
        alg=alg,
        beta=beta,
        sigma_levels=levels,
        g=span(alg.compact_basis().elements, "g"),
        a=a_sp,
        k=span(cartan + zw([beta]) + zw(pos0), "k"),
        m=span(zw(levels[1]), "m"),
        s=s_sp,
        h=span(a_beta.basis + zw(pos0), "h"),
        a_beta=a_beta,
    )
    if wd.m.dim != 2 * len(levels[1]) or wd.k.dim + wd.m.dim != wd.g.dim:
        raise StructuralError(f"{rs.type}: g != k + m dimensionally")
    return wd


def verify_grading(wd: WolfDecomposition) -> Verdict:
    """Orthogonality and the subspace identities of the decomposition (no brackets)."""
    v = Verdict("grading")
    if not wd.k.is_orthogonal_to(wd.m):
        v.fail("<k, m> != 0")
    if wd.k.dim + wd.m.dim != wd.g.dim:
        v.fail("dim k + dim m != dim g")
    h_perp = wd.s.orthogonal_complement(wd.k)
    if not h_perp.same_span(wd.h):
        v.fail("h is not the orthogonal complement of s in k")
    if not wd.s.is_subspace_of(wd.k):
        v.fail("s not contained in k")
    # theta = Ad(exp pi iA_beta) acts on X_g by (-1)^level: k is the even part
    theta_fixed = [e for e in wd.g.basis if _theta_sign(wd, wd.beta, e) == 1]
    if not wd.span(theta_fixed).same_span(wd.k):
        v.fail("k is not the fixed space of theta")
    v.info["dim_k"] = wd.k.dim
    v.info["dim_m"] = wd.m.dim
    v.info["dim_h"] = wd.h.dim
    return v


def _theta_sign(wd: WolfDecomposition, gamma: Root, e: LieElement) -> int:
    """Eigenvalue of Ad(exp pi iA_gamma) on a basis element (Cartan, Z or W)."""
    signs = set()
    for k in e.coeffs:
        idx = wd.alg.basis_index(k)
        if idx.kind == "cartan":
            signs.add(1)
        else:
            signs.add(-1 if wd.rs.pairing(idx.key, gamma) % 2 else 1)
    if len(signs) != 1:
        raise ValueError("element is not an eigenvector of theta")
    return signs.pop()


def _bracket_inclusion(wd: WolfDecomposition, left: Subspace, right: Subspace,
                       target: Subspace, label: str, v: Verdict, symmetric: bool = False) -> None:
    for i, x in enumerate(left.basis):
        for j, y in enumerate(right.basis):
            if symmetric and j < i:
                continue
            z = wd.bracket(x, y)
            if z and not target.contains(z):
                v.fail(f"[{wd.name(x)}, {wd.name(y)}] = {z!r} not in {label}")


def verify_symmetric_pair(wd: WolfDecomposition) -> Verdict:
    """[k,k] in k, [k,m] in m, [m,m] in k, and s is an sp(1) ideal of k."""
    v = Verdict("symmetric_pair")
    _bracket_inclusion(wd, wd.k, wd.k, wd.k, "k", v, symmetric=True)
    _bracket_inclusion(wd, wd.k, wd.m, wd.m, "m", v)
    _bracket_inclusion(wd, wd.m, wd.m, wd.k, "k", v, symmetric=True)
    _bracket_inclusion(wd, wd.k, wd.s, wd.s, "s", v)
    alg, b = wd.alg, wd.beta
    iab, zb, wb = alg.iA(b), alg.Z(b), alg.W(b)
    for lhs, rhs, label in (
        (alg.bracket(iab, zb), wb * 2, "[iA_b, Z_b] = 2 W_b"),
        (alg.bracket(iab, wb), zb * -2, "[iA_b, W_b] = -2 Z_b"),
        (alg.bracket(zb, wb), iab * 2, "[Z_b, W_b] = 2 iA_b"),
    ):
        if lhs != rhs:
            v.fail(f"sp(1) relation {label} fails: got {lhs!r}")
    return v


def _scalar_multiple(x: LieElement, y: LieElement) -> Fraction | None:
    """c with x == c*y (c rational), or None."""
    if not y:
        return None
    k = next(iter(y.coeffs))
    c = x.coeffs.get(k)
    if c is None:
        return None
    ratio = c / y.coeffs[k]
    if ratio.im:
        return None
    r = Fraction(ratio.re)
    return r if y * r == x else None


def quaternionic_relations(wd: WolfDecomposition) -> Verdict:
    """ad(iA_b)^2 = -1, ad(Z_b)^2 = ad(W_b)^2 = -c on m, pairwise anticommuting."""
    v = Verdict("quaternionic")
    alg, b = wd.alg, wd.beta
    ops = {"I": alg.iA(b), "J": alg.Z(b), "K": alg.W(b)}
    consts: dict[str, set] = {name: set() for name in ops}
    for x in wd.m.basis:
        images = {}
        for name, op in ops.items():
            once = alg.bracket(op, x)
            images[name] = once
            twice = alg.bracket(op, once)
            c = _scalar_multiple(twice, x)
            if c is None or c >= 0:
                v.fail(f"ad({name})^2 {wd.name(x)} is not a negative multiple: {twice!r}")
            else:
                consts[name].add(-c)
        for p, q in (("I", "J"), ("J", "K"), ("K", "I")):
            anti = alg.bracket(ops[p], images[q]) + alg.bracket(ops[q], images[p])
            if anti:
                v.fail(f"ad({p}) and ad({q}) do not anticommute on {wd.name(x)}")
    if consts["I"] != {1}:
        v.fail(f"ad(iA_beta)^2 != -id on m (constants {sorted(consts['I'])})")
    if len(consts["J"]) != 1 or consts["J"] != consts["K"]:
        v.fail(f"ad(Z_b)^2, ad(W_b)^2 constants not a single shared c: {consts['J']}, {consts['K']}")
    if consts["J"]:
        v.info["c"] = str(min(consts["J"]))
    return v


# submanifold model -------------------------------------------------------


def valid_deltas(wd: WolfDecomposition) -> list[Root]:
    """Long roots of level one, in the fixed order."""
    return [a for a in wd.sigma_levels[1] if wd.rs.inner(a, a) == wd.rs.inner(wd.beta, wd.beta)]


def choose_delta(wd: WolfDecomposition) -> Root:
    """Deterministic delta: the maximal long root of level one."""
    cands = valid_deltas(wd)
    if not cands:
        raise NoDeltaError(
            f"{wd.rs.type}: no long root delta with 2(beta, delta)/(beta, beta) = 1; "
            "there are no such delta when G = Sp(n), i.e. for quaternionic projective space"
        )
    return max(cands, key=order_key)


@dataclass
class SubmanifoldModel:
    delta: Root
    beta_minus_delta: Root
    hp_roots: tuple[Root, ...]
    h_roots: dict[int, tuple[Root, ...]]
    delta_plus: tuple[Root, ...]
    delta_minus: tuple[Root, ...]
    h_p: Subspace
    h_parts: dict[int, Subspace]
    m_N: Subspace
    m_N_alt: Subspace
    m_N_perp: Subspace

    @property
    def h1(self) -> Subspace:
        return self.h_parts[1]

    @property
    def h2(self) -> Subspace:
        return self.h_parts[2]

    @property
    def h3(self) -> Subspace:
        return self.h_parts[3]

    @property
    def h4(self) -> Subspace:
        return self.h_parts[4]


def build_submanifold_model(wd: WolfDecomposition, delta: Root) -> SubmanifoldModel:
    """h_p, h_1..h_4, m_N and its orthogonal complement for a level-one root delta.

    delta need not be long: short choices are accepted so that negative
    controls can be run, but the lemmas are only expected to hold for long delta.
    """
    rs = wd.rs
    if delta not in wd.sigma_levels[1]:
        raise ValueError(f"delta {delta} is not in Sigma_1")
    beta = wd.beta
    bmd = rs.sub(beta, delta)
    pos0 = wd.positive_level(0)
    lvl_d = {a: 2 * rs.inner(delta, a) / rs.inner(delta, delta) for a in rs.all_roots}
    lvl_bmd = {a: 2 * rs.inner(bmd, a) / rs.inner(bmd, bmd) for a in rs.all_roots}
    hp_roots = tuple(a for a in pos0 if lvl_bmd[a] == 0)
    h_roots = {
        2: tuple(a for a in pos0 if lvl_d[a] == 0),
        3: tuple(a for a in pos0 if lvl_d[a] == 1),
        4: tuple(a for a in pos0 if lvl_d[a] == -1),
    }
    d_plus = tuple(rs.sub(delta, g) for g in h_roots[3])
    d_minus = tuple(rs.add(delta, g) for g in h_roots[4])
    alg = wd.alg
    zd = [alg.Z(delta), alg.W(delta)]
    level1 = wd.sigma_levels[1]
    both1 = [a for a in level1 if lvl_d[a] == 1]
    perp_roots = [a for a in level1 if lvl_d[a] == 0]
    parts = {1: wd.a_beta}
    for i in (2, 3, 4):
        parts[i] = wd.span(wd.zw(h_roots[i]), f"h{i}")
    return SubmanifoldModel(
        delta=delta,
        beta_minus_delta=bmd,
        hp_roots=hp_roots,
        h_roots=h_roots,
        delta_plus=d_plus,
        delta_minus=d_minus,
        h_p=wd.span(wd.a_beta.basis + wd.zw(hp_roots), "h_p"),
        h_parts=parts,
        m_N=wd.span(zd + wd.zw(d_plus) + wd.zw(d_minus), "m_N"),
        m_N_alt=wd.span(zd + wd.zw(both1), "m_N(alt)"),
        m_N_perp=wd.span(wd.zw([bmd]) + wd.zw(perp_roots), "m_N_perp"),
    )


def verify_model_structure(model: SubmanifoldModel, wd: WolfDecomposition) -> Verdict:
    """Subspace identities: h = sum h_i, h_p = h_1 + h_2, the m_N presentations, m = m_N + m_N_perp."""
    v = Verdict("model_structure")
    hs = model.h_parts
    total = hs[1].span_with(hs[2]).span_with(hs[3]).span_with(hs[4])
    if not total.same_span(wd.h) or sum(p.dim for p in hs.values()) != wd.h.dim:
        v.fail("h != h_1 + h_2 + h_3 + h_4 (direct)")
    if not hs[1].span_with(hs[2]).same_span(model.h_p):
        v.fail("h_p != h_1 + h_2")
    if not model.h_p.is_subspace_of(wd.h):
        v.fail("h_p not inside h")
    if set(model.delta_plus) & set(model.delta_minus):
        v.fail("Delta_+ and Delta_- intersect")
    if not model.m_N.same_span(model.m_N_alt):
        v.fail("the two presentations of m_N differ")
    if not model.m_N.is_subspace_of(wd.m):
        v.fail("m_N not inside m")
    if not model.m_N.is_orthogonal_to(model.m_N_perp):
        v.fail("m_N and m_N_perp not orthogonal")
    computed_perp = model.m_N.orthogonal_complement(wd.m)
    if not computed_perp.same_span(model.m_N_perp):
        v.fail("displayed m_N_perp is not the orthogonal complement of m_N in m")
    if model.m_N.dim != model.m_N_perp.dim:
        v.fail("dim m_N != dim m_N_perp")
    if 2 * model.m_N.dim != wd.m.dim:
        v.fail(f"2 dim m_N = {2 * model.m_N.dim} != dim m = {wd.m.dim}")
    # tangent model at Z_delta: R Z_delta + [h, Z_delta]
    zdel = wd.alg.Z(model.delta)
    tangent = wd.span([zdel] + [wd.bracket(x, zdel) for x in wd.h.basis])
    if not tangent.same_span(model.m_N):
        v.fail("R Z_delta + [h, Z_delta] != m_N")
    return v


def verify_lemma_rotation(model: SubmanifoldModel, wd: WolfDecomposition) -> Verdict:
    """ad(h_p) preserves span{Z_delta, W_delta}; root vectors of h_p kill it."""
    v = Verdict("lemma_rotation")
    alg = wd.alg
    zd, wdl = alg.Z(model.delta), alg.W(model.delta)
    plane = wd.span([zd, wdl])
    for t in model.h_p.basis:
        for y in (zd, wdl):
            z = alg.bracket(t, y)
            if not plane.contains(z):
                v.fail(f"[{wd.name(t)}, {wd.name(y)}] = {z!r} leaves R Z_delta + R W_delta")
    for g in model.hp_roots:
        for x in (alg.Z(g), alg.W(g)):
            for y in (zd, wdl):
                z = alg.bracket(x, y)
                if z:
                    v.fail(f"[{wd.name(x)}, {wd.name(y)}] = {z!r} != 0")
    for t in wd.a_beta.basis:
        if not wd.span([wdl]).contains(alg.bracket(t, zd)):
            v.fail(f"[{wd.name(t)}, Z_delta] not in R W_delta")
        if not wd.span([zd]).contains(alg.bracket(t, wdl)):
            v.fail(f"[{wd.name(t)}, W_delta] not in R Z_delta")
    return v


def verify_lemma_root(model: SubmanifoldModel, rs: RootSystem) -> Verdict:
    """The four root-set identities, by exhaustive set comparison."""
    v = Verdict("lemma_root")
    beta, delta = rs.highest_root, model.delta
    b1 = set(rs.level_set(beta, 1))
    d = {n: set(rs.level_set(delta, n)) for n in (-1, 0, 1, 2)}
    both = b1 & d[1]
    dp, dm = set(model.delta_plus), set(model.delta_minus)
    if dp & dm:
        v.fail(f"Delta_+ and Delta_- share {sorted(dp & dm)}")
    if dp | dm != both:
        v.fail(f"Sigma_b1 & Sigma_d1 = {sorted(both)} but Delta_+ u Delta_- = {sorted(dp | dm)}")
    if len(dp) + len(dm) != len(both):
        v.fail("Delta_+ u Delta_- is not a disjoint union of the right size")
    refl = {rs.sub(beta, g) for g in both}
    if b1 & d[0] != refl:
        v.fail(f"Sigma_b1 & Sigma_d0 = {sorted(b1 & d[0])} != beta - (Sigma_b1 & Sigma_d1)")
    if b1 & d[2] != {delta}:
        v.fail(f"Sigma_b1 & Sigma_d2 = {sorted(b1 & d[2])} != {{delta}}")
    if b1 & d[-1] != {rs.sub(beta, delta)}:
        v.fail(f"Sigma_b1 & Sigma_d(-1) = {sorted(b1 & d[-1])} != {{beta - delta}}")
    v.info["n_both"] = len(both)
    return v


def verify_lemma_totally_complex(model: SubmanifoldModel, wd: WolfDecomposition) -> Verdict:
    """[iA_b, m_N] in m_N; [Z_b, m_N] and [W_b, m_N] orthogonal to m_N."""
    v = Verdict("lemma_totally_complex")
    alg, b = wd.alg, wd.beta
    iab = alg.iA(b)
    basis = model.m_N.basis
    for x in basis:
        z = alg.bracket(iab, x)
        if not model.m_N.contains(z):
            v.fail(f"[iA_beta, {wd.name(x)}] = {wd.name(z)} not in m_N")
    for op_name, op in (("Z_beta", alg.Z(b)), ("W_beta", alg.W(b))):
        for x in basis:
            z = alg.bracket(op, x)
            for y in basis:
                if wd.form(z, y):
                    v.fail(f"<[{op_name}, {wd.name(x)}], {wd.name(y)}> != 0")
    # the two explicit brackets used along the way
    zd, wdl = alg.Z(model.delta), alg.W(model.delta)
    if alg.bracket(iab, zd) != wdl:
        v.fail("[iA_beta, Z_delta] != W_delta")
    bmd = model.beta_minus_delta
    zb_zd = alg.bracket(alg.Z(b), zd)
    if zb_zd not in (alg.Z(bmd), -alg.Z(bmd)):
        v.fail(f"[Z_beta, Z_delta] = {zb_zd!r} is not +-Z_(beta-delta)")
    if not model.m_N_perp.contains(zb_zd):
        v.fail("[Z_beta, Z_delta] not in m_N_perp")
    return v


def verify_projection_claims(model: SubmanifoldModel, wd: WolfDecomposition) -> Verdict:
    """Bracket-level content of the tangent-space computation along the geodesic."""
    v = Verdict("projection_claims")
    alg = wd.alg
    delta = model.delta
    zd, wdl = alg.Z(delta), alg.W(delta)
    ad = lambda x: alg.bracket(zd, x)  # noqa: E731

    # h_1 = a_beta: first order rotates into R W_delta; at t = pi/2 nothing survives in m
    images = []
    for t in model.h1.basis:
        images.append(wd.pi_m(ad(t)))
        a1, a2, a3 = ad(t), ad(ad(t)), ad(ad(ad(t)))
        if a3 != a1 * -4:
            v.fail(f"ad(Z_delta)^3 != -4 ad(Z_delta) on {wd.name(t)}")
        if wd.pi_m(t + a2 * Fraction(1, 2)):
            v.fail(f"pi_m(Ad(b(pi/2)^-1) {wd.name(t)}) != 0")
    if not wd.span(images).same_span(wd.span([wdl])):
        v.fail("pi_m([Z_delta, h_1]) does not span R W_delta")

    # h_2 commutes with the whole delta plane
    for x in model.h2.basis:
        for y in (zd, wdl):
            if alg.bracket(x, y):
                v.fail(f"[{wd.name(x)}, {wd.name(y)}] != 0 for x in h_2")

    # h_3, h_4 are carried onto the Delta_+ and Delta_- parts of m_N
    for part, targets in ((3, model.delta_plus), (4, model.delta_minus)):
        target = wd.span(wd.zw(targets))
        imgs = [ad(x) for x in model.h_parts[part].basis]
        for x, y in zip(model.h_parts[part].basis, imgs):
            if not target.contains(y):
                v.fail(f"ad(Z_delta) {wd.name(x)} = {y!r} escapes h_{part} target")
            if wd.pi_m(y) != y:
                v.fail(f"ad(Z_delta) {wd.name(x)} not in m")
        if wd.span(imgs).dim != target.dim:
            v.fail(f"ad(Z_delta)(h_{part}) does not fill its target")

    # ad(Z_delta) is a complex structure (up to scale) on the Sigma_{delta,1} part
    rs = wd.rs
    cs = set()
    for g in rs.level_set(delta, 1):
        diff = rs.sub(delta, g)
        for maker in (alg.Z, alg.W):
            x = maker(g)
            y = ad(x)
            if y not in (maker(diff), -maker(diff)):
                v.fail(f"[Z_delta, {wd.name(x)}] = {y!r} is not +-{maker.__name__}_(delta-gamma)")
            c = _scalar_multiple(ad(y), x)
            if c is None or c >= 0:
                v.fail(f"ad(Z_delta)^2 {wd.name(x)} not a negative multiple")
            else:
                cs.add(-c)
    if len(cs) != 1:
        v.fail(f"ad(Z_delta)^2 constants on Sigma_(delta,1) not unique: {sorted(cs)}")
    else:
        v.info["c"] = str(cs.pop())
    return v


LEMMAS = ("lemma_rotation", "lemma_root", "lemma_totally_complex", "projection_claims")


def lemma_verdicts(model: SubmanifoldModel, wd: WolfDecomposition) -> dict[str, Verdict]:
    return {
        "lemma_rotation": verify_lemma_rotation(model, wd),
        "lemma_root": verify_lemma_root(model, wd.rs),
        "lemma_totally_complex": verify_lemma_totally_complex(model, wd),
        "projection_claims": verify_projection_claims(model, wd),
    }


def verify_delta_independence(wd: WolfDecomposition, deltas: Sequence[Root] | None = None) -> Verdict:
    """Every valid delta gives the same lemma verdicts as the canonical one."""
    v = Verdict("delta_independence")
    deltas = list(deltas) if deltas is not None else valid_deltas(wd)
    canonical = choose_delta(wd)
    ref = {k: bool(x) for k, x in lemma_verdicts(build_submanifold_model(wd, canonical), wd).items()}
    for d in deltas:
        if d == canonical:
            continue
        got = {k: bool(x) for k, x in lemma_verdicts(build_submanifold_model(wd, d), wd).items()}
        if got != ref:
            v.fail(f"delta={_fmt_root(d)} gives {got}, canonical gives {ref}")
    v.info["n_deltas"] = len(deltas)
    return v


def dimensions(model: SubmanifoldModel, wd: WolfDecomposition) -> dict[str, int]:
    """dim M, dim N, dim H(p), dim K(p).

    dim K(p) is computed independently of h_p: it counts the positive roots of
    k on which theta_p = Ad(exp pi iA_(beta-delta)) acts by -1.
    """
    rs = wd.rs
    bmd = model.beta_minus_delta
    k_roots = [wd.beta] + list(wd.positive_level(0))
    moved = sum(1 for a in k_roots if rs.pairing(a, bmd) % 2)
    return {
        "dim_M": wd.m.dim,
        "dim_N": model.m_N.dim,
        "dim_Hp": wd.h.dim - model.h_p.dim,
        "dim_Kp": 2 * moved,
    }


def verify_engine(wd: WolfDecomposition, samples: int = 10_000, seed: int = 0,
                  exhaustive_dim: int = 52) -> Verdict:
    """Antisymmetry, Jacobi and ad-invariance on basis triples, and tau-closure of the compact form.

    Triples are exhaustive when dim g <= exhaustive_dim, otherwise ``samples``
    seeded random triples.
    """
    v = Verdict("engine")
    alg = wd.alg
    n_samples = None if alg.dim <= exhaustive_dim else samples
    n, bad = jacobi_failures(alg, basis_triples(alg.dim, n_samples, seed))
    for t in bad:
        v.fail(f"Jacobi/antisymmetry fails on {t}")
    inv_samples = min(samples, 2000) if n_samples is not None else None
    for t in invariance_failures(alg, basis_triples(alg.dim, inv_samples, seed + 1)):
        v.fail(f"invariant form not ad-invariant on {t}")
    basis = alg.compact_basis().elements
    for x in basis:
        if alg.tau(x) != x:
            v.fail(f"{wd.name(x)} is not tau-fixed")
    rng = random.Random(seed + 2)
    pairs = [(rng.randrange(len(basis)), rng.randrange(len(basis))) for _ in range(min(samples, 2000))]
    for i, j in pairs:
        z = alg.bracket(basis[i], basis[j])
        if alg.tau(z) != z:
            v.fail(f"[{wd.name(basis[i])}, {wd.name(basis[j])}] is not tau-fixed")
    v.info["jacobi_triples"] = n
    v.info["jacobi_mode"] = "exhaustive" if n_samples is None else f"sampled(seed={seed})"
    return v


# reports -------------------------------------------------------------------


@lru_cache(maxsize=None)
def decomposition_for(rtype: RootSystemType) -> WolfDecomposition:
    """Shared, immutable decomposition per root system type."""
    return beta_grading(build_root_system(rtype))


@dataclass
class VerificationReport:
    space: str
    group: str
    type: str
    beta: Root
    delta: Root
    dims: dict[str, int]
    published_dims: dict[str, int | None]
    verdicts: dict[str, bool]
    witnesses: dict[str, list[str]]
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def dims_match(self) -> bool:
        return all(v is None or self.dims[k] == v for k, v in self.published_dims.items())

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "group": self.group,
            "type": self.type,
            "beta": list(self.beta),
            "delta": list(self.delta),
            "dims": dict(self.dims),
            "published_dims": dict(self.published_dims),
            "verdicts": dict(self.verdicts),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "details": dict(self.details),
        }


def dimension_identities(dims: dict[str, int]) -> Verdict:
    v = Verdict("dimension_identities")
    if 2 * dims["dim_N"] != dims["dim_M"]:
        v.fail(f"2 dim N = {2 * dims['dim_N']} != dim M = {dims['dim_M']}")
    if dims["dim_N"] != dims["dim_Hp"] + 2:
        v.fail(f"dim N = {dims['dim_N']} != dim H(p) + 2 = {dims['dim_Hp'] + 2}")
    if dims["dim_Kp"] != dims["dim_Hp"] + 2:
        v.fail(f"dim K(p) = {dims['dim_Kp']} != dim H(p) + 2 = {dims['dim_Hp'] + 2}")
    return v


def full_report(space: str | SpaceSpec, *, max_rank: int | None = DEFAULT_MAX_RANK,
                delta_independence: bool = True, engine_samples: int = 10_000,
                seed: int = 0) -> VerificationReport:
    """Run every construction and verifier for one catalog space."""
    spec = space if isinstance(space, SpaceSpec) else parse_space(space, max_rank=max_rank)
    wd = decomposition_for(spec.rtype)
    delta = choose_delta(wd)
    model = build_submanifold_model(wd, delta)
    checks = [
        verify_engine(wd, samples=engine_samples, seed=seed),
        verify_grading(wd),
        verify_symmetric_pair(wd),
        quaternionic_relations(wd),
        verify_model_structure(model, wd),
        *lemma_verdicts(model, wd).values(),
    ]
    if delta_independence:
        checks.append(verify_delta_independence(wd))
    dims = dimensions(model, wd)
    checks.append(dimension_identities(dims))
    published = spec.published_dims()
    pv = Verdict("published_dimensions")
    for k, want in published.items():
        if want is not None and dims[k] != want:
            pv.fail(f"{k}: computed {dims[k]}, published {want}")
    checks.append(pv)
    details = {}
    for c in checks:
        for k, val in c.info.items():
            details[f"{c.name}.{k}"] = val
    return VerificationReport(
        space=spec.name,
        group=spec.group,
        type=spec.rtype.name,
        beta=wd.beta,
        delta=delta,
        dims=dims,
        published_dims=published,
        verdicts={c.name: c.ok for c in checks},
        witnesses={c.name: list(c.witnesses) for c in checks if c.witnesses},
        details=details,
    )


def table_row(spec: SpaceSpec) -> dict:
    """Computed and published dimensions for one space (no bracket verification)."""
    wd = decomposition_for(spec.rtype)
    model = build_submanifold_model(wd, choose_delta(wd))
    dims = dimensions(model, wd)
    published = spec.published_dims()
    return {
        "space": spec.name,
        "group": spec.group,
        "type": spec.rtype.name,
        "computed": dims,
        "published": published,
        "H(p)": spec.published_Hp,
        "match": all(v is None or dims[k] == v for k, v in published.items()),
    }
