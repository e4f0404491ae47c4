import pytest
from hypothesis import given, strategies as st

from wolfcheck.g2_model import (ONE, PUBLISHED_NINE, PUBLISHED_TAL, TWO, So7Matrix, bracket, bracket_table,
                                build_isomorphism, computed_roots, cross_validate_with_abstract, decompose_v,
                                g2_basis, g2_decomposition, g2_report, g_ij, in_g2, model_form,
                                quaternionic_relations, root_vectors, second_fundamental_form, sff_table,
                                table_consistency_witnesses, v, verify_bracket_table, verify_decomposition,
                                verify_form, verify_g2_closure, verify_isomorphism, verify_not_totally_geodesic,
                                verify_root_data, verify_root_data_corrected, verify_root_data_literal,
                                verify_tal_brackets)


def e(k):
    return [1 if i == k else 0 for i in range(1, 8)]


def test_g_ij_examples():
    g = g_ij(2, 3)
    assert g.apply(e(2)) == e(3)
    assert g.apply(e(3)) == [-x for x in e(2)]
    assert g.apply(e(5)) == [0] * 7
    assert not (g_ij(2, 3) + g_ij(3, 2))
    for bad in ((2, 2), (0, 1), (1, 8)):
        with pytest.raises(ValueError):
            g_ij(*bad)


def test_skew_check():
    with pytest.raises(ValueError):
        So7Matrix.from_rows([[1 if i == j else 0 for j in range(7)] for i in range(7)])


def test_v_examples():
    assert v(1, 1, 0, 0) == g_ij(2, 3)
    assert v(6, 0, 1, -1) == -g_ij(2, 4) - g_ij(3, 5)
    for k in range(1, 8):
        assert not v(k, 0, 0, 0)
        assert in_g2(v(k, 1, 2, -3)) and not in_g2(v(k, 1, 1, 1))
        assert decompose_v(v(k, 2, -1, -1)) == {k: (2, -1, -1)}


def test_model_form_examples():
    x = v(1, *TWO)
    assert model_form(x, x) == 48
    assert model_form(v(1, *TWO), v(2, *TWO)) == 0


def test_model_form_is_minus_four_trace():
    basis = g2_basis()
    for x in basis:
        for y in basis:
            xr, yr = x.rows(), y.rows()
            tr = sum(xr[i][j] * yr[j][i] for i in range(7) for j in range(7))
            assert model_form(x, y) == -4 * tr


def test_form_report():
    assert verify_form().ok


def test_closure():
    r = verify_g2_closure()
    assert r.ok and r.info["dim"] == 14


def test_closure_negative_control():
    partial = [x for x in g2_basis() if 7 not in decompose_v(x)]
    r = verify_g2_closure(partial)
    assert not r.ok and r.witnesses


def test_decomposition():
    d = g2_decomposition()
    assert (d.g2.dim, d.k.dim, d.m.dim, d.h.dim, d.h_p.dim, d.T_aL.dim, d.N_aL.dim) == (14, 6, 8, 3, 1, 3, 4)
    assert verify_decomposition(d).ok
    assert quaternionic_relations(d).ok
    assert d.T_aL.is_orthogonal_to(d.N_aL)
    assert d.T_aL.is_orthogonal_to([d.a_point]) and d.N_aL.is_orthogonal_to([d.a_point])


def test_root_data():
    roots = computed_roots()
    assert len(roots) == 12
    assert len(root_vectors()) == 12
    r = verify_root_data_corrected()
    assert r.ok, r.witnesses
    assert r.info["level_beta_delta"] == "1"


def test_root_data_literal_fails_as_printed():
    r = verify_root_data_literal()
    assert not r.ok
    assert verify_root_data().ok == r.ok
    # the printed list with +-2il etc. is not the computed root set
    assert any("printed root list" in w for w in r.witnesses)


def test_brackets_as_computed():
    assert bracket(v(1, *TWO), v(6, *ONE)) == v(7, 0, 3, -3)
    assert bracket(v(2, *TWO), v(6, *ONE)) == v(4, *TWO)
    assert bracket(v(3, *TWO), v(6, *ONE)) == v(5, *TWO)
    assert bracket(v(1, *TWO), v(4, *TWO)) == v(5, -2, 1, 1)
    assert bracket(v(2, *TWO), v(4, *TWO)) == v(6, -4, -1, 5)
    assert bracket(v(3, *TWO), v(4, *TWO)) == v(7, 4, -5, 1)


def test_printed_mismatches_are_exactly_known():
    tal = [(line.left, line.right) for line in bracket_table(PUBLISHED_TAL) if not line.match]
    assert tal == [("V1(2,-1,-1)", "V6(0,1,-1)"), ("V2(2,-1,-1)", "V6(0,1,-1)")]
    nine = [i for i, line in enumerate(bracket_table(PUBLISHED_NINE)) if not line.match]
    assert nine == [3, 4]
    assert not verify_bracket_table().ok and not verify_tal_brackets().ok


def test_printed_table_is_self_inconsistent():
    w = table_consistency_witnesses()
    assert len(w) == 4
    assert any("not in g2" in x for x in w)


def test_sff_values():
    d = g2_decomposition()
    h1, h2, h3 = (v(i, *TWO) for i in (1, 2, 3))
    assert second_fundamental_form(h2, h2) == v(6, -4, 2, 2)
    assert second_fundamental_form(h2, h3) == second_fundamental_form(h3, h2) == v(7, *TWO) * 2
    assert second_fundamental_form(h3, h3) == v(6, 4, -2, -2)
    for x in (h1, h2, h3):
        assert not second_fundamental_form(h1, x)
    assert v(7, 4, 1, -5) == v(7, *TWO) * 2 + v(7, *ONE) * 3
    assert d.N_aL.project(v(7, 4, 1, -5)) == v(7, *TWO) * 2
    vals = [val for _, _, val in sff_table()]
    assert sum(1 for x in vals if x) == 4


def test_sff_rejects_outside_h():
    with pytest.raises(ValueError):
        second_fundamental_form(v(1, *ONE), v(2, *TWO))
    with pytest.raises(ValueError):
        second_fundamental_form(v(2, *TWO), v(6, *ONE))


def test_not_totally_geodesic():
    r = verify_not_totally_geodesic()
    assert r.ok
    assert r.info["dims"] == (3, 4)
    assert len(r.info["nonzero"]) == 4
    assert r.info["bracket_table_match"] is False


def test_cross_validation():
    phi = build_isomorphism()
    assert verify_isomorphism(phi).ok
    r = cross_validate_with_abstract()
    assert r.ok, r.witnesses
    assert r.info["c_over_killing"] == ("1/16", "1/16")


def test_report_keys():
    rep = g2_report(emit_sff=True, emit_brackets=True)
    assert rep["closure"] and rep["not_totally_geodesic"]
    assert rep["root_data"] is False and rep["bracket_table_match"] is False
    assert len(rep["sff_values"]) == 9 and len(rep["brackets"]) == 12
    failing = sorted(k for k, ok in rep["verdicts"].items() if not ok)
    assert failing == ["bracket_table", "root_data_literal", "tal_brackets"]


coeff = st.integers(-3, 3)
g2_elems = st.lists(st.tuples(st.integers(0, 13), coeff), max_size=4).map(
    lambda items: sum((g2_basis()[i] * c for i, c in items), So7Matrix()))


@given(g2_elems, g2_elems, g2_elems)
def test_form_invariant_and_bracket_closed(x, y, z):
    assert model_form(bracket(z, x), y) + model_form(x, bracket(z, y)) == 0
    assert model_form(x, y) == model_form(y, x)
    assert in_g2(bracket(x, y))
    if x:
        assert model_form(x, x) > 0


@given(g2_elems, g2_elems)
def test_sff_symmetric_on_h(a, b):
    d = g2_decomposition()
    x, y = d.h.project(a), d.h.project(b)
    hxy = second_fundamental_form(x, y)
    assert hxy == second_fundamental_form(y, x)
    assert d.N_aL.contains(hxy)
