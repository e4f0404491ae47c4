from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wolfcheck.g2_model import So7Matrix, model_form
from wolfcheck.linalg import Subspace, rank

KEYS = [(i, j) for i in range(1, 8) for j in range(i + 1, 8)]
small = st.integers(-3, 3)
matrices = st.lists(st.tuples(st.sampled_from(KEYS), small), max_size=6).map(
    lambda items: So7Matrix({k: c for k, c in items})
)


def e(i, j, c=1):
    return So7Matrix({(i, j): c})


def test_membership_and_dimension():
    sp = Subspace([e(1, 2), e(1, 3), e(1, 2) + e(1, 3)])
    assert sp.dim == 2
    assert sp.contains(e(1, 2) * 5 - e(1, 3))
    assert e(2, 3) not in sp
    assert rank([e(1, 2), e(1, 2) * 2]) == 1


def test_projection_needs_form():
    with pytest.raises(ValueError):
        Subspace([e(1, 2)]).project(e(1, 2))


def test_complement_requires_containment():
    a = Subspace([e(1, 2)], form=model_form)
    b = Subspace([e(1, 3)], form=model_form)
    with pytest.raises(ValueError):
        a.orthogonal_complement(b)


def test_indefinite_form_detected():
    sp = Subspace([e(1, 2)], form=lambda x, y: -model_form(x, y))
    with pytest.raises(ValueError):
        sp.orthogonal_basis()


@given(st.lists(matrices, min_size=1, max_size=5), matrices)
def test_projection_properties(vectors, x):
    sp = Subspace(vectors, form=model_form)
    p = sp.project(x)
    assert sp.contains(p)
    # the residual is orthogonal to the span, and projecting twice changes nothing
    for b in sp.basis:
        assert model_form(x - p, b) == 0
    assert sp.project(p) == p


@given(st.lists(matrices, min_size=1, max_size=6))
def test_complement_splits_ambient(vectors):
    ambient = Subspace([e(*k) for k in KEYS], form=model_form)
    sp = Subspace(vectors, form=model_form)
    comp = sp.orthogonal_complement(ambient)
    assert sp.dim + comp.dim == 21
    assert sp.is_orthogonal_to(comp)
    assert sp.span_with(comp).same_span(ambient)


@given(st.lists(matrices, max_size=6), st.randoms(use_true_random=False))
def test_span_independent_of_order(vectors, rnd):
    shuffled = list(vectors)
    rnd.shuffle(shuffled)
    assert Subspace(vectors).same_span(Subspace(shuffled))


def test_exact_rational_entries():
    sp = Subspace([e(1, 2, Fraction(1, 3)) + e(1, 3, Fraction(2, 7))], form=model_form)
    assert sp.contains(e(1, 2, 7) + e(1, 3, 6))
