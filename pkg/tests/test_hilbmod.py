"""Tests for Gram-matrix objects, morphisms and their adjoints."""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbcat.errors import (
    NotHermitianError,
    NotPositiveDefiniteError,
    RingMismatchError,
    ShapeMismatchError,
    SingularGramError,
)
from hilbcat.hilbmod import (
    HMorphism,
    adjoint,
    apply,
    hom_module,
    inner_product,
    make_morphism,
    make_object,
    make_vector,
    point,
    points,
    standard_object,
    vector_of,
)
from hilbcat.linalg import Matrix
from hilbcat.scalars import BOOL, GAUSS, INT, RAT

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def test_object_validation():
    with pytest.raises(NotHermitianError):
        make_object(RAT, 2, [[1, 2], [3, 1]])
    with pytest.raises(NotPositiveDefiniteError):
        make_object(RAT, 2, [[1, 2], [2, 1]])
    with pytest.raises(SingularGramError):
        make_object(INT, 2, [[1, 2], [2, 4]])
    with pytest.raises(SingularGramError):
        make_object(BOOL, 2, [[1, 1], [1, 1]])
    with pytest.raises(ShapeMismatchError):
        make_object(RAT, 3, [[1, 0], [0, 1]])
    with pytest.raises(NotHermitianError):
        make_object(GAUSS, 1, [[(1, 1)]])
    assert make_object(BOOL, 2, [[0, 1], [1, 0]]).dim == 2


def test_morphism_shape_and_ring():
    x = standard_object(RAT, 2)
    with pytest.raises(ShapeMismatchError):
        make_morphism(x, x, [[1, 0]])
    with pytest.raises(RingMismatchError):
        HMorphism(x, standard_object(GAUSS, 2), Matrix.identity(RAT, 2))


def test_adjoint_on_weighted_object():
    x = make_object(RAT, 2, [[1, 0], [0, 2]])
    f = make_morphism(x, x, [[1, 1], [0, 1]])
    assert adjoint(f).mat == Matrix.from_rows(RAT, [[1, 0], [Fraction(1, 2), 1]])
    assert adjoint(adjoint(f)) == f


def test_gaussian_inner_product_is_sesquilinear():
    x = standard_object(GAUSS, 1)
    v = make_vector(x, [(0, 1)])
    w = make_vector(x, [1])
    assert inner_product(x, v, w) == GAUSS.scalar(0, -1)
    assert inner_product(x, w, v) == GAUSS.scalar(0, 1)


@given(small, small, small, small)
def test_adjoint_relation(a, b, c, d):
    x = make_object(RAT, 2, [[2, 1], [1, 1]])
    y = make_object(RAT, 1, [[3]])
    f = make_morphism(x, y, [[a, b]])
    v = make_vector(x, [c, d])
    w = make_vector(y, [a + d])
    assert inner_product(y, apply(f, v), w) == inner_product(x, v, apply(adjoint(f), w))


def test_points_and_vectors():
    x = make_object(RAT, 2, [[1, 0], [0, 3]])
    e1, e2 = points(x)
    assert vector_of(e2).coords == Matrix.column(RAT, [0, 1])
    assert (adjoint(e2).mat @ e2.mat)[0, 0] == RAT.scalar(3)
    with pytest.raises(ShapeMismatchError):
        vector_of(make_morphism(x, x, [[1, 0], [0, 1]]))
    assert point(x, [1, 1]).dom.dim == 1


def test_hom_module_witness():
    x = make_object(GAUSS, 2, [[2, (0, 1)], [(0, -1), 2]])
    module = hom_module(x)
    assert module.object.gram == x.gram
    assert module.witness_equations() == (True, True, True)
