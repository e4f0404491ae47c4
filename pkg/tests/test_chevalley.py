import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wolfcheck.chevalley import (ChevalleyAlgebra, ChevalleyBasisIndex, basis_triples, bracket,
                                 build_structure_constants, compact_basis, invariance_failures,
                                 invariant_form, jacobi_failures, tau)
from wolfcheck.gaussian import GaussianRational, I
from wolfcheck.roots import build_root_system, neg

SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]
# dual Coxeter numbers: with long roots of length 2 the Killing form is 2 h^v times the invariant form
DUAL_COXETER = {"A2": 3, "A3": 4, "B3": 5, "C3": 4, "D4": 6, "G2": 4, "F4": 9}

_cache = {}


def alg(name):
    if name not in _cache:
        rs = build_root_system(name)
        _cache[name] = ChevalleyAlgebra(rs, build_structure_constants(rs))
    return _cache[name]


def test_a2_and_g2_constants():
    sc = alg("A2").sc
    assert sc[((1, 0), (0, 1))] == 1
    g2 = alg("G2").sc
    assert abs(g2[((1, 0), (0, 1))]) == 1
    assert abs(g2[((1, 0), (1, 1))]) == 2
    assert abs(g2[((1, 0), (2, 1))]) == 3
    assert ((1, 0), (3, 1)) not in g2
    assert g2.get((3, 1), (0, 1)) == 0 or ((3, 1), (0, 1)) in g2


@pytest.mark.parametrize("name", SMALL + ["E6", "E7", "E8"])
def test_constant_rules(name):
    a = alg(name)
    rs, sc = a.rs, a.sc
    for (x, y), n in sc.table.items():
        p, _ = rs.root_string(x, y)
        assert abs(n) == p + 1
        assert sc[(y, x)] == -n
        assert sc[(neg(x), neg(y))] == -n
    for x in rs.all_roots:
        for y in rs.all_roots:
            assert ((x, y) in sc) == (rs.add(x, y) in rs)


def test_unrelated_roots_commute():
    a = alg("A3")
    assert not a.bracket(a.X((1, 0, 0)), a.X((0, 0, 1)))
    assert not a.bracket(a.X((1, 1, 0)), a.X((1, 0, 0)))


@pytest.mark.parametrize("name", SMALL)
def test_jacobi_exhaustive(name):
    a = alg(name)
    n, bad = jacobi_failures(a, basis_triples(a.dim))
    assert n == a.dim * (a.dim - 1) * (a.dim - 2) // 6
    assert bad == []


@pytest.mark.parametrize("name", ["E6", "E7", "E8"])
def test_jacobi_sampled(name):
    a = alg(name)
    n, bad = jacobi_failures(a, basis_triples(a.dim, samples=10000, seed=0))
    assert n == 10000
    assert bad == []


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2"])
def test_form_invariance_exhaustive(name):
    a = alg(name)
    triples = [(i, j, k) for i in range(a.dim) for j in range(a.dim) for k in range(j, a.dim)]
    assert invariance_failures(a, triples) == []


@pytest.mark.parametrize("name", ["F4", "E8"])
def test_form_invariance_sampled(name):
    a = alg(name)
    assert invariance_failures(a, basis_triples(a.dim, samples=3000, seed=1)) == []


@pytest.mark.parametrize("name,h", DUAL_COXETER.items())
def test_killing_proportional(name, h):
    a = alg(name)
    els = a.compact_basis().elements
    for x in els[:6]:
        for y in els:
            assert a.killing_form(x, y) == invariant_form(x, y) * (2 * h)


def test_bracket_examples():
    a = alg("B3")
    rs = a.rs
    beta = rs.highest_root
    x = a.Z(beta)
    assert not bracket(x, x)
    assert a.bracket(a.X(beta), a.X(neg(beta))) == a.A(beta)
    for g in rs.level_set(beta, 1):
        if rs.is_positive(g):
            assert a.bracket(a.iA(beta), a.Z(g)) == a.W(g)
    for j in range(rs.rank):
        for r in rs.all_roots:
            assert a.bracket(a.H(j), a.X(r)) == a.X(r) * rs.pairing(r, rs.simple_roots[j])


def test_mixed_algebras_rejected():
    a, b = alg("A2"), alg("A3")
    with pytest.raises(ValueError):
        bracket(a.X((1, 0)), b.X((1, 0, 0)))
    with pytest.raises(ValueError):
        invariant_form(a.X((1, 0)), b.X((1, 0, 0)))


def test_tau_examples():
    a = alg("G2")
    for r in a.rs.all_roots:
        assert tau(a.X(r)) == -a.X(neg(r))
        assert tau(a.Z(r)) == a.Z(r)
        assert tau(a.Z(r) * I) == a.Z(r) * (-I)


def test_form_examples():
    a = alg("F4")
    for g in a.rs.positive_roots:
        z, w = a.Z(g), a.W(g)
        assert invariant_form(z, w) == 0
        zz = a.compact_inner(z, z)
        assert zz == a.compact_inner(w, w) == 4 / a.rs.inner(g, g)
    x, y = a.rs.positive_roots[:2]
    assert invariant_form(a.X(x), a.X(y)) == 0


@pytest.mark.parametrize("name,dim", [("A1", 3), ("G2", 14), ("F4", 52), ("E8", 248)])
def test_compact_basis(name, dim):
    a = alg(name)
    cb = compact_basis(a.rs, a.sc)
    assert cb.dim == len(cb) == dim
    for g in cb:
        assert tau(g) == g


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2"])
def test_compact_form_closed(name):
    a = alg(name)
    els = a.compact_basis().elements
    for i, x in enumerate(els):
        for y in els[i + 1:]:
            z = a.bracket(x, y)
            assert tau(z) == z


@pytest.mark.parametrize("name", ["A3", "B4", "D4", "G2", "F4", "E6"])
def test_quaternionic_engine_relations(name):
    a = alg(name)
    rs = a.rs
    beta = rs.highest_root
    ia, zb, wb = a.iA(beta), a.Z(beta), a.W(beta)
    cs = set()
    for g in rs.level_set(beta, 1):
        if not rs.is_positive(g):
            continue
        for v in (a.Z(g), a.W(g)):
            assert a.ad_power(ia, v, 2) == -v
            z2, w2 = a.ad_power(zb, v, 2), a.ad_power(wb, v, 2)
            c = z2.coeffs[next(iter(v.coeffs))] / v.coeffs[next(iter(v.coeffs))] * -1
            assert z2 == v * -c and w2 == v * -c
            cs.add(c)
            assert a.bracket(ia, a.bracket(zb, v)) == -a.bracket(zb, a.bracket(ia, v))
    assert len(cs) == 1 and next(iter(cs)).re > 0


def test_element_index():
    a = alg("A2")
    assert a.element(ChevalleyBasisIndex("root", (1, 1))) == a.X((1, 1))
    assert a.element(ChevalleyBasisIndex("cartan", 0), 2) == a.H(0) * 2


def test_json_export():
    sc = alg("G2").sc
    doc = json.loads(sc.dumps())
    assert doc["type"] == "G2"
    rows = doc["constants"]
    assert len(rows) == len(sc)
    assert {"alpha": [1, 0], "gamma": [0, 1], "n": sc[((1, 0), (0, 1))]} in rows
    assert sc.dumps() == sc.dumps()


gauss = st.builds(GaussianRational, st.integers(-3, 3), st.integers(-3, 3))


def combos(name):
    a = alg(name)
    return st.dictionaries(st.integers(0, a.dim - 1), gauss, max_size=4).map(
        lambda d: sum((a.element(a.basis_index(k), c) for k, c in d.items()), a.zero()))


@given(combos("B3"), combos("B3"), combos("B3"))
def test_random_combinations(x, y, z):
    a = alg("B3")
    br = a.bracket
    assert br(x, y) == -br(y, x)
    assert not (br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)))
    assert a.invariant_form(br(z, x), y) + a.invariant_form(x, br(z, y)) == 0
    assert tau(tau(x)) == x
    assert tau(br(x, y)) == br(tau(x), tau(y))


@given(combos("G2"))
def test_compact_form_definite(x):
    a = alg("G2")
    real = x + tau(x)
    if real:
        assert a.compact_inner(real, real) > 0
