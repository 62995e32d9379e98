"""Tests for composition, biproducts, tensors, kernels and factorizations."""
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbcat.dagcat import (
    FactorizationKind,
    add,
    biproduct,
    cokernel,
    compose,
    connecting_iso,
    dagger,
    equalizer,
    factor,
    factor_both_orders,
    factorization_sequence,
    hexagon_holds,
    identity,
    is_dagger_epi,
    is_dagger_iso,
    is_dagger_mono,
    is_epi,
    is_mono,
    kernel,
    n_fold_diagonal,
    n_fold_object,
    pentagon_holds,
    scalar_mul,
    scalar_multiple,
    subobject,
    symmetry,
    symmetry_involutive,
    tensor,
    tensor_mor,
    triangle_holds,
    zero,
)
from hilbcat.errors import FactorizationMismatchError, ShapeMismatchError
from hilbcat.hilbmod import HMorphism, make_morphism, make_object, standard_object
from hilbcat.linalg import Matrix, PivotOrder, rank
from hilbcat.scalars import GAUSS, RAT

entries = st.integers(min_value=-2, max_value=2)


@st.composite
def weighted_objects(draw, max_dim=3):
    dim = draw(st.integers(min_value=1, max_value=max_dim))
    weights = draw(st.lists(st.integers(min_value=1, max_value=3), min_size=dim, max_size=dim))
    return make_object(RAT, dim, Matrix.diagonal(RAT, weights))


@st.composite
def morphisms(draw):
    dom = draw(weighted_objects())
    cod = draw(weighted_objects())
    rows = draw(st.lists(st.lists(entries, min_size=dom.dim, max_size=dom.dim), min_size=cod.dim, max_size=cod.dim))
    return make_morphism(dom, cod, rows)


def test_kernel_of_sum_map():
    f = make_morphism(standard_object(RAT, 2), standard_object(RAT, 1), [[1, 1]])
    k = kernel(f)
    spanned = subobject(f.dom, Matrix.column(RAT, [1, -1]))
    phi = compose(dagger(spanned), k)
    assert is_dagger_iso(phi)
    assert compose(spanned, phi) == k
    assert k.dom.gram == Matrix.from_rows(RAT, [[2]])
    assert is_dagger_mono(k)
    assert compose(f, k) == zero(k.dom, f.cod)
    # the two scan orders give kernels that differ by a sign
    reverse = kernel(f, PivotOrder.REVERSE)
    assert reverse.mat == Matrix.from_rows(RAT, [[1], [-1]])
    assert compose(dagger(reverse), k).mat == Matrix.from_rows(RAT, [[-1]])


def test_kernel_of_mono_is_zero():
    f = make_morphism(standard_object(RAT, 1), standard_object(RAT, 2), [[1], [2]])
    assert kernel(f).dom.dim == 0
    assert is_mono(f) and not is_epi(f)


def test_factor_projection():
    x = standard_object(RAT, 2)
    f = make_morphism(x, x, [[1, 0], [0, 0]])
    fact = factor(f)
    assert fact.epi.mat == Matrix.from_rows(RAT, [[1, 0]])
    assert fact.mono.mat == Matrix.from_rows(RAT, [[1], [0]])
    polar = factor(f, FactorizationKind.POLAR)
    assert polar.middle.mat == Matrix.from_rows(RAT, [[1]])
    assert len(factorization_sequence(polar)) == 3
    assert polar.is_valid()


def test_connecting_iso_between_scan_orders():
    x = standard_object(RAT, 2)
    f = make_morphism(x, x, [[1, 2], [2, 4]])
    first, second = factor_both_orders(f, FactorizationKind.DAGGER_EPI_MONO)
    phi = connecting_iso(first, second)
    assert phi.mat == Matrix.from_rows(RAT, [[Fraction(1, 2)]])
    assert compose(phi, first.epi) == second.epi


def test_connecting_iso_rejects_mismatches():
    x = standard_object(RAT, 2)
    f = make_morphism(x, x, [[1, 0], [0, 0]])
    g = make_morphism(x, x, [[0, 0], [0, 1]])
    with pytest.raises(FactorizationMismatchError):
        connecting_iso(factor(f), factor(g))
    with pytest.raises(FactorizationMismatchError):
        connecting_iso(factor(f), factor(f, FactorizationKind.POLAR))


def test_compose_checks_endpoints():
    f = make_morphism(standard_object(RAT, 2), standard_object(RAT, 1), [[1, 1]])
    with pytest.raises(ShapeMismatchError):
        compose(f, f)


def test_biproduct_laws():
    left = make_object(RAT, 1, [[2]])
    right = make_object(RAT, 2, [[1, 0], [0, 3]])
    assert all(biproduct(left, right).laws())


def test_enrichment_matches_entrywise():
    x = make_object(RAT, 2, [[2, 1], [1, 1]])
    f = make_morphism(x, x, [[1, 2], [0, 1]])
    g = make_morphism(x, x, [[0, 1], [1, 0]])
    assert add(f, g).mat == Matrix.from_rows(RAT, [[1, 3], [1, 1]])
    assert scalar_mul(RAT.scalar(3), f).mat == f.mat.scale(RAT.scalar(3))
    assert scalar_multiple(3, f) == scalar_mul(RAT.scalar(3), f)
    assert scalar_multiple(0, f) == zero(x, x)


def test_n_fold_diagonal_is_scaled_isometry():
    x = standard_object(RAT, 1)
    d = n_fold_diagonal(x, 3)
    assert d.cod == n_fold_object(x, 3)
    assert n_fold_object(x, 0).dim == 0
    assert compose(dagger(d), d).mat == Matrix.from_rows(RAT, [[3]])


def test_gaussian_tensor_dagger():
    x = make_object(GAUSS, 2, [[2, (0, 1)], [(0, -1), 2]])
    y = standard_object(GAUSS, 1)
    f = make_morphism(x, x, [[(1, 1), 0], [1, (0, -1)]])
    g = make_morphism(y, y, [[(0, 2)]])
    assert dagger(tensor_mor(f, g)) == tensor_mor(dagger(f), dagger(g))
    assert tensor(x, y).gram == x.gram


def test_coherence():
    x = make_object(RAT, 2, [[1, 0], [0, 2]])
    y = make_object(RAT, 1, [[3]])
    z = standard_object(RAT, 2)
    assert pentagon_holds(x, y, z, y)
    assert triangle_holds(x, z)
    assert hexagon_holds(x, y, z)
    assert symmetry_involutive(x, z)
    assert is_dagger_mono(symmetry(x, z)) and is_dagger_epi(symmetry(x, z))


@settings(max_examples=30, deadline=None)
@given(morphisms())
def test_dagger_laws(f):
    assert dagger(dagger(f)) == f
    assert dagger(identity(f.dom)) == identity(f.dom)
    g = make_morphism(f.cod, f.cod, [[1 if i == j else 0 for j in range(f.cod.dim)] for i in range(f.cod.dim)])
    assert dagger(compose(g, f)) == compose(dagger(f), dagger(g))


@settings(max_examples=30, deadline=None)
@given(morphisms())
def test_kernels_and_cokernels(f):
    k = kernel(f)
    c = cokernel(f)
    assert is_dagger_mono(k)
    assert is_dagger_epi(c)
    assert compose(f, k).mat.is_zero()
    assert compose(c, f).mat.is_zero()
    assert k.dom.dim == f.dom.dim - rank(f.mat)
    assert is_mono(f) == (k.dom.dim == 0)


@settings(max_examples=30, deadline=None)
@given(morphisms())
def test_equalizer_of_self_is_identity_sized(f):
    e = equalizer(f, f)
    assert e.dom.dim == f.dom.dim
    assert is_dagger_mono(e)


@settings(max_examples=25, deadline=None)
@given(morphisms(), st.sampled_from(list(FactorizationKind)))
def test_factorizations(f, kind):
    first, second = factor_both_orders(f, kind)
    assert first.is_valid()
    assert second.is_valid()
    phi = connecting_iso(first, second)
    assert is_dagger_mono(phi) and is_dagger_epi(phi)
    assert connecting_iso(first, first) == identity(phi.dom)


def test_morphism_between_different_objects_is_not_parallel():
    x = standard_object(RAT, 1)
    y = make_object(RAT, 1, [[2]])
    with pytest.raises(ShapeMismatchError):
        add(HMorphism(x, x, Matrix.identity(RAT, 1)), HMorphism(x, y, Matrix.identity(RAT, 1)))


def test_connecting_iso_rejects_corrupted_polar_triple():
    x = make_object(RAT, 2, [[1, 0], [0, 2]])
    f = make_morphism(x, x, [[1, 1], [1, 1]])
    good = factor(f, FactorizationKind.POLAR)
    flipped = replace(good, mono=HMorphism(good.mono.dom, good.mono.cod, good.mono.mat.scale(RAT.scalar(-1))))
    assert not flipped.is_valid()
    with pytest.raises(FactorizationMismatchError):
        connecting_iso(good, flipped)
    with pytest.raises(FactorizationMismatchError):
        connecting_iso(flipped, good)


def test_connecting_iso_relates_polar_middles():
    x = make_object(RAT, 2, [[1, 0], [0, 2]])
    f = make_morphism(x, x, [[1, 2], [3, 6]])
    first, second = factor_both_orders(f, FactorizationKind.POLAR)
    phi = connecting_iso(first, second)
    assert compose(phi, first.epi) == second.epi
    # a valid triple whose middle is off by a unit rescaling of the mono side
    other = replace(
        second,
        mono=HMorphism(second.mono.dom, second.mono.cod, second.mono.mat.scale(RAT.scalar(-1))),
        middle=HMorphism(second.middle.dom, second.middle.cod, second.middle.mat.scale(RAT.scalar(-1))),
    )
    assert other.is_valid()
    assert connecting_iso(first, other) == phi
