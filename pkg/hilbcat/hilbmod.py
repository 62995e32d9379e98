"""Finitely generated free Hilbert modules given by Gram matrices.

An object is a dimension plus a Hermitian Gram matrix G; the inner product
of coordinate columns x, y is x‡ᵀ G y. Morphisms are plain matrices, and the
adjoint of F: X → Y is G_X⁻¹ F‡ᵀ G_Y.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, List, Sequence, Tuple

from .errors import (
    NotHermitianError,
    NotPositiveDefiniteError,
    RingMismatchError,
    ShapeMismatchError,
    SingularGramError,
    SingularMatrixError,
)
from .linalg import Matrix, determinant, inverse, is_positive_definite
from .scalars import RAT, RingTag, Scalar, ScalarRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HObject:
    ring: ScalarRing
    dim: int
    gram: Matrix

    @cached_property
    def gram_inverse(self) -> Matrix:
        try:
            return inverse(self.gram)
        except SingularMatrixError as e:
            raise SingularGramError(f"Gram matrix of a {self.dim}-dimensional object is singular") from e

    def __str__(self) -> str:
        return f"HObject({self.ring}, dim={self.dim}, gram={self.gram})"


@dataclass(frozen=True)
class HMorphism:
    dom: HObject
    cod: HObject
    mat: Matrix

    def __post_init__(self):
        if self.dom.ring != self.cod.ring or self.mat.ring != self.dom.ring:
            raise RingMismatchError(f"morphism mixes {self.dom.ring}, {self.cod.ring} and {self.mat.ring}")
        if (self.mat.rows, self.mat.cols) != (self.cod.dim, self.dom.dim):
            raise ShapeMismatchError(
                f"matrix is {self.mat.rows}x{self.mat.cols}, expected {self.cod.dim}x{self.dom.dim}"
            )

    @property
    def ring(self) -> ScalarRing:
        return self.dom.ring

    def __str__(self) -> str:
        return f"HMorphism({self.dom.dim} -> {self.cod.dim}, {self.mat})"


@dataclass(frozen=True)
class Vector:
    object: HObject
    coords: Matrix

    def __post_init__(self):
        if (self.coords.rows, self.coords.cols) != (self.object.dim, 1):
            raise ShapeMismatchError(f"vector of length {self.coords.rows} in a {self.object.dim}-dimensional object")


def _nondegenerate(ring: ScalarRing, gram: Matrix) -> bool:
    if ring.is_field:
        return not determinant(gram).is_zero()
    if ring.tag == RingTag.BOOL:
        # a Boolean matrix is invertible iff it is a permutation matrix
        rows_ok = all(sum(1 for a in r if a) == 1 for r in gram.entries)
        cols_ok = all(sum(1 for a in gram.column_values(j) if a) == 1 for j in range(gram.cols))
        return rows_ok and cols_ok
    lifted = gram.map(lambda a: RAT.scalar(a.value), ring=RAT)
    return not determinant(lifted).is_zero()


def make_object(ring: ScalarRing, dim: int, gram: Any) -> HObject:
    """Validated object: Hermitian, positive-definite over fields, nonsingular."""
    if not isinstance(gram, Matrix):
        gram = Matrix.from_rows(ring, gram, cols=dim)
    if gram.ring != ring:
        raise RingMismatchError(f"gram over {gram.ring} for an object over {ring}")
    if (gram.rows, gram.cols) != (dim, dim):
        raise ShapeMismatchError(f"gram is {gram.rows}x{gram.cols}, expected {dim}x{dim}")
    if not gram.is_hermitian():
        raise NotHermitianError("gram matrix is not Hermitian")
    if ring.is_field and not is_positive_definite(gram):
        raise NotPositiveDefiniteError("gram matrix is not positive-definite")
    if not _nondegenerate(ring, gram):
        raise SingularGramError("gram matrix is singular")
    return HObject(ring, dim, gram)


def standard_object(ring: ScalarRing, dim: int) -> HObject:
    return HObject(ring, dim, Matrix.identity(ring, dim))


def zero_object(ring: ScalarRing) -> HObject:
    return HObject(ring, 0, Matrix.zero(ring, 0, 0))


def unit_object(ring: ScalarRing) -> HObject:
    """The monoidal unit I: the ring itself with ⟨s,t⟩ = s‡t."""
    return standard_object(ring, 1)


def make_morphism(dom: HObject, cod: HObject, rows: Sequence[Sequence[Any]]) -> HMorphism:
    return HMorphism(dom, cod, Matrix.from_rows(dom.ring, rows, cols=dom.dim))


def make_vector(obj: HObject, coords: Sequence[Any]) -> Vector:
    return Vector(obj, Matrix.column(obj.ring, coords))


def inner_product(obj: HObject, x: Vector, y: Vector) -> Scalar:
    """⟨x, y⟩ = x‡ᵀ G y, conjugate-linear in the first slot."""
    if x.object != obj or y.object != obj:
        raise ShapeMismatchError("vectors do not belong to the given object")
    return (x.coords.conj_transpose() @ obj.gram @ y.coords)[0, 0]


def adjoint(f: HMorphism) -> HMorphism:
    """The unique f† with ⟨f x, y⟩ = ⟨x, f† y⟩."""
    mat = f.dom.gram_inverse @ f.mat.conj_transpose() @ f.cod.gram
    return HMorphism(f.cod, f.dom, mat)


def apply(f: HMorphism, x: Vector) -> Vector:
    if x.object != f.dom:
        raise ShapeMismatchError("vector is not in the domain")
    return Vector(f.cod, f.mat @ x.coords)


# -- points ------------------------------------------------------------------

def point(obj: HObject, coords: Sequence[Any]) -> HMorphism:
    """The morphism I → X picking out the vector with the given coordinates."""
    return HMorphism(unit_object(obj.ring), obj, Matrix.column(obj.ring, coords))


def points(obj: HObject) -> List[HMorphism]:
    """Basis points e_i: I → X."""
    ring = obj.ring
    return [
        point(obj, [ring.one() if i == j else ring.zero() for i in range(obj.dim)])
        for j in range(obj.dim)
    ]


def vector_of(x: HMorphism) -> Vector:
    if x.dom != unit_object(x.ring):
        raise ShapeMismatchError("a point must have the unit as its domain")
    return Vector(x.cod, x.mat)


# -- representability of H(I, X) -------------------------------------------

@dataclass(frozen=True)
class HomModule:
    """H(I, X) as an object together with the dagger isomorphism to X."""

    object: HObject
    to_object: HMorphism
    from_object: HMorphism

    def witness_equations(self) -> Tuple[bool, bool, bool]:
        """(f∘g = id, g∘f = id, f† = g) for f = to_object, g = from_object."""
        f, g = self.to_object, self.from_object
        return (
            (f.mat @ g.mat).is_identity(),
            (g.mat @ f.mat).is_identity(),
            adjoint(f) == g,
        )


def hom_module(obj: HObject) -> HomModule:
    """H(I, X) with ⟨x, y⟩ = (x† ∘ y)(1), computed on the basis points."""
    ring = obj.ring
    basis = points(obj)
    gram_rows = [[(adjoint(x).mat @ y.mat)[0, 0] for y in basis] for x in basis]
    hom_obj = HObject(ring, obj.dim, Matrix.from_rows(ring, gram_rows, cols=obj.dim))
    ident = Matrix.identity(ring, obj.dim)
    module = HomModule(hom_obj, HMorphism(hom_obj, obj, ident), HMorphism(obj, hom_obj, ident))
    logger.debug("hom module of a %d-dimensional object over %s", obj.dim, ring)
    return module
