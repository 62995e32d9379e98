"""Tests for the hom-embedding, extension of scalars, non-fullness and bounds."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbcat.dagcat import compose, dagger, is_dagger_mono, is_dagger_epi, kernel
from hilbcat.errors import BoundPreconditionError, RingMismatchError, ShapeMismatchError
from hilbcat.functors import (
    SHIPPED_MONOIDS,
    Bound,
    HomEmbedding,
    bound_holds_at,
    check_hom,
    extend_mor,
    extend_object,
    extend_preserves_kernels,
    extension_from_name,
    find_bound,
    full_preimage,
    hom_embed,
    hom_embed_mor,
    is_bound,
    monoidal_naturality_holds,
    monoidal_witness,
    non_fullness_demo,
    rational_sqrt_ceiling,
    threshold_monoid,
    trivial_monoid,
    verify_bound_preserved,
)
from hilbcat.hilbmod import make_morphism, make_object, standard_object
from hilbcat.linalg import Matrix
from hilbcat.scalars import GAUSS, QSQRT2, RAT, SHIPPED_HOMS


def weighted():
    return make_object(RAT, 2, [[2, 1], [1, 1]])


def test_hom_embedding_on_morphisms():
    x = weighted()
    f = make_morphism(x, x, [[1, 2], [0, 1]])
    image = hom_embed_mor(f)
    assert image.mat == f.mat
    assert image.dom == hom_embed(x).object
    assert full_preimage(image, x, x) == f


def test_hom_embedding_checks_ring():
    functor = HomEmbedding(RAT)
    assert functor.on_object(weighted()).gram == weighted().gram
    with pytest.raises(RingMismatchError):
        functor.on_object(standard_object(GAUSS, 1))


def test_full_preimage_requires_hom_modules():
    x = weighted()
    phi = hom_embed_mor(make_morphism(x, x, [[1, 0], [0, 1]]))
    with pytest.raises(ShapeMismatchError):
        full_preimage(phi, standard_object(RAT, 2), x)


def test_monoidal_witness_is_identity_matrix():
    x = weighted()
    y = make_object(RAT, 1, [[3]])
    phi = monoidal_witness(x, y)
    assert phi.mat.is_identity()
    assert is_dagger_mono(phi) and is_dagger_epi(phi)


def test_monoidal_naturality():
    x = weighted()
    y = standard_object(RAT, 1)
    f = make_morphism(x, y, [[1, -1]])
    g = make_morphism(y, x, [[2], [Fraction(1, 3)]])
    assert monoidal_naturality_holds(f, g)


@pytest.mark.parametrize("name", sorted(SHIPPED_HOMS))
def test_shipped_homs_are_injective_homomorphisms(name):
    assert check_hom(SHIPPED_HOMS[name], samples=20).passed
    assert not extension_from_name(name).is_full


def test_extension_preserves_structure():
    ext = extension_from_name("q-to-qi")
    x = weighted()
    f = make_morphism(x, x, [[1, 1], [1, 1]])
    image = extend_mor(ext, f)
    assert image.ring == GAUSS
    assert extend_object(ext, x).gram == Matrix.from_rows(GAUSS, [[2, 1], [1, 1]])
    assert extend_mor(ext, dagger(f)) == dagger(image)
    phi = extend_preserves_kernels(ext, f)
    assert is_dagger_mono(phi) and is_dagger_epi(phi)
    assert compose(kernel(image), phi) == extend_mor(ext, kernel(f))
    with pytest.raises(RingMismatchError):
        extend_object(ext, standard_object(GAUSS, 1))


def test_non_fullness_on_booleans():
    report = non_fullness_demo()
    assert report.monoid == "bool"
    assert report.candidates == 4
    assert report.homomorphisms == 2
    assert report.witness_found
    assert report.to_dict()["swap"][1] == ["(0,1)", "(1,0)"]


def test_non_fullness_needs_two_elements():
    report = non_fullness_demo(trivial_monoid())
    assert report.preimages == (("0",),)
    assert not report.witness_found
    assert non_fullness_demo(threshold_monoid()).candidates == 27
    assert set(SHIPPED_MONOIDS) == {"bool", "trivial", "threshold3"}


def test_rational_sqrt_ceiling():
    assert rational_sqrt_ceiling(Fraction(4, 9), 8) == Fraction(2, 3)
    assert rational_sqrt_ceiling(Fraction(2), 4) == Fraction(23, 16)
    with pytest.raises(ValueError):
        rational_sqrt_ceiling(Fraction(-1), 4)


def test_bound_of_scalar_map():
    x = standard_object(RAT, 1)
    f = make_morphism(x, x, [[2]])
    bound = find_bound(f)
    assert bound.value == RAT.scalar(2)
    assert is_bound(bound, f)
    assert not is_bound(Bound(RAT.one()), f)
    assert not bound_holds_at(Bound(RAT.one()), f, Matrix.column(RAT, [1]))


def test_bound_preserved_along_extension():
    ext = extension_from_name("q-to-qsqrt2")
    x = weighted()
    f = make_morphism(x, x, [[1, 2], [3, -1]])
    assert verify_bound_preserved(ext, find_bound(f), f)
    with pytest.raises(BoundPreconditionError):
        verify_bound_preserved(ext, Bound(RAT.zero()), f)


def test_bound_over_quadratic_field():
    x = standard_object(QSQRT2, 2)
    f = make_morphism(x, x, [[(1, 1), 0], [0, 1]])
    assert is_bound(find_bound(f), f)


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2),
    st.lists(st.integers(-4, 4), min_size=2, max_size=2),
)
def test_found_bound_holds_pointwise(rows, coords):
    x = weighted()
    f = make_morphism(x, x, rows)
    assert bound_holds_at(find_bound(f), f, Matrix.column(RAT, coords))
