"""Dagger-categorical structure on Gram-matrix Hilbert modules.

Composition, dagger, dagger biproducts, the symmetric monoidal structure,
dagger kernels and cokernels, and the (dagger epi, mono) factorization
system with its connecting isomorphisms.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from .errors import (
    EnrichmentMismatchError,
    FactorizationMismatchError,
    RingMismatchError,
    ShapeMismatchError,
)
from .hilbmod import HMorphism, HObject, adjoint, unit_object, zero_object
from .linalg import Matrix, PivotOrder, column_basis, nullspace, rank
from .scalars import Scalar

logger = logging.getLogger(__name__)


# -- basic structure -------------------------------------------------------------

def identity(obj: HObject) -> HMorphism:
    return HMorphism(obj, obj, Matrix.identity(obj.ring, obj.dim))


def zero(dom: HObject, cod: HObject) -> HMorphism:
    if dom.ring != cod.ring:
        raise RingMismatchError(f"{dom.ring} vs {cod.ring}")
    return HMorphism(dom, cod, Matrix.zero(dom.ring, cod.dim, dom.dim))


def compose(g: HMorphism, f: HMorphism) -> HMorphism:
    """g ∘ f."""
    if f.cod != g.dom:
        raise ShapeMismatchError("codomain of the first morphism is not the domain of the second")
    return HMorphism(f.dom, g.cod, g.mat @ f.mat)


def compose_all(*morphisms: HMorphism) -> HMorphism:
    """compose_all(h, g, f) = h ∘ g ∘ f."""
    result = morphisms[-1]
    for m in reversed(morphisms[:-1]):
        result = compose(m, result)
    return result


def dagger(f: HMorphism) -> HMorphism:
    return adjoint(f)


def is_dagger_mono(f: HMorphism) -> bool:
    return compose(dagger(f), f) == identity(f.dom)


def is_dagger_epi(f: HMorphism) -> bool:
    return compose(f, dagger(f)) == identity(f.cod)


def is_dagger_iso(f: HMorphism) -> bool:
    return is_dagger_mono(f) and is_dagger_epi(f)


def is_mono(f: HMorphism) -> bool:
    """Monic iff the kernel is zero, i.e. the matrix has full column rank."""
    return rank(f.mat) == f.dom.dim if f.dom.dim else True


def is_epi(f: HMorphism) -> bool:
    return is_mono(dagger(f))


def is_iso(f: HMorphism) -> bool:
    return is_mono(f) and is_epi(f)


# -- biproducts ----------------------------------------------------------------------

@dataclass(frozen=True)
class BiproductWitness:
    object: HObject
    injections: Tuple[HMorphism, HMorphism]
    projections: Tuple[HMorphism, HMorphism]

    def laws(self) -> Tuple[bool, ...]:
        """π_i ∘ κ_j = δ_ij, κ₁π₁ + κ₂π₂ = id and π_i† = κ_i."""
        (k1, k2), (p1, p2) = self.injections, self.projections
        checks = [
            compose(p1, k1) == identity(k1.dom),
            compose(p2, k2) == identity(k2.dom),
            compose(p1, k2) == zero(k2.dom, p1.cod),
            compose(p2, k1) == zero(k1.dom, p2.cod),
            (compose(k1, p1).mat + compose(k2, p2).mat).is_identity(),
            dagger(p1) == k1,
            dagger(p2) == k2,
        ]
        return tuple(checks)


def biproduct_object(left: HObject, right: HObject) -> HObject:
    if left.ring != right.ring:
        raise RingMismatchError(f"{left.ring} vs {right.ring}")
    return HObject(left.ring, left.dim + right.dim, left.gram.block_diag(right.gram))


def biproduct(left: HObject, right: HObject) -> BiproductWitness:
    """X ⊕ Y with the block-diagonal Gram (the sum of the component inner products)."""
    obj = biproduct_object(left, right)
    ring = obj.ring
    n, m = left.dim, right.dim
    k1 = Matrix.identity(ring, n).vstack(Matrix.zero(ring, m, n))
    k2 = Matrix.zero(ring, n, m).vstack(Matrix.identity(ring, m))
    injections = (HMorphism(left, obj, k1), HMorphism(right, obj, k2))
    projections = (HMorphism(obj, left, k1.transpose()), HMorphism(obj, right, k2.transpose()))
    return BiproductWitness(obj, injections, projections)


def biproduct_mor(f: HMorphism, g: HMorphism) -> HMorphism:
    return HMorphism(biproduct_object(f.dom, g.dom), biproduct_object(f.cod, g.cod), f.mat.block_diag(g.mat))


def diagonal(obj: HObject) -> HMorphism:
    """Δ: X → X ⊕ X."""
    ident = Matrix.identity(obj.ring, obj.dim)
    return HMorphism(obj, biproduct_object(obj, obj), ident.vstack(ident))


def codiagonal(obj: HObject) -> HMorphism:
    """∇: X ⊕ X → X."""
    ident = Matrix.identity(obj.ring, obj.dim)
    return HMorphism(biproduct_object(obj, obj), obj, ident.hstack(ident))


def n_fold_object(obj: HObject, n: int) -> HObject:
    """X ⊕ ... ⊕ X (n copies, nested to the left); the zero object for n = 0."""
    result = zero_object(obj.ring)
    for i in range(n):
        result = obj if i == 0 else biproduct_object(result, obj)
    return result


def n_fold_diagonal(obj: HObject, n: int) -> HMorphism:
    if n == 0:
        return zero(obj, zero_object(obj.ring))
    result = identity(obj)
    for _ in range(n - 1):
        result = compose(biproduct_mor(result, identity(obj)), diagonal(obj))
    return result


def n_fold_codiagonal(obj: HObject, n: int) -> HMorphism:
    if n == 0:
        return zero(zero_object(obj.ring), obj)
    result = identity(obj)
    for _ in range(n - 1):
        result = compose(codiagonal(obj), biproduct_mor(result, identity(obj)))
    return result


def n_fold_biproduct_mor(f: HMorphism, n: int) -> HMorphism:
    if n == 0:
        return zero(zero_object(f.ring), zero_object(f.ring))
    result = f
    for _ in range(n - 1):
        result = biproduct_mor(result, f)
    return result


# -- monoidal structure ----------------------------------------------------------------

def tensor(left: HObject, right: HObject) -> HObject:
    """X ⊗ Y with the Kronecker Gram (⟨h⊗k, h'⊗k'⟩ = ⟨h,h'⟩·⟨k,k'⟩)."""
    if left.ring != right.ring:
        raise RingMismatchError(f"{left.ring} vs {right.ring}")
    return HObject(left.ring, left.dim * right.dim, left.gram.kron(right.gram))


def tensor_mor(f: HMorphism, g: HMorphism) -> HMorphism:
    return HMorphism(tensor(f.dom, g.dom), tensor(f.cod, g.cod), f.mat.kron(g.mat))


class CoherenceKind(str, Enum):
    ASSOCIATOR = "associator"
    LEFT_UNITOR = "left-unitor"
    RIGHT_UNITOR = "right-unitor"
    SYMMETRY = "symmetry"


def _commutation_matrix(ring, n: int, m: int) -> Matrix:
    """Sends the basis vector e_i ⊗ f_j of X⊗Y to f_j ⊗ e_i of Y⊗X."""
    size = n * m
    entries = [[ring.zero()] * size for _ in range(size)]
    for i in range(n):
        for j in range(m):
            entries[j * n + i][i * m + j] = ring.one()
    return Matrix.from_rows(ring, entries, cols=size)


def coherence_iso(kind: CoherenceKind, *objects: HObject) -> HMorphism:
    """α_{X,Y,Z}, λ_X, ρ_X or γ_{X,Y} as explicit matrices."""
    kind = CoherenceKind(kind)
    arity = {CoherenceKind.ASSOCIATOR: 3, CoherenceKind.SYMMETRY: 2}.get(kind, 1)
    if len(objects) != arity:
        raise ShapeMismatchError(f"{kind.value} takes {arity} objects, got {len(objects)}")
    if kind == CoherenceKind.ASSOCIATOR:
        x, y, z = objects
        dom, cod = tensor(tensor(x, y), z), tensor(x, tensor(y, z))
        return HMorphism(dom, cod, Matrix.identity(x.ring, dom.dim))
    if kind == CoherenceKind.SYMMETRY:
        x, y = objects
        return HMorphism(tensor(x, y), tensor(y, x), _commutation_matrix(x.ring, x.dim, y.dim))
    (x,) = objects
    unit = unit_object(x.ring)
    dom = tensor(unit, x) if kind == CoherenceKind.LEFT_UNITOR else tensor(x, unit)
    return HMorphism(dom, x, Matrix.identity(x.ring, x.dim))


def associator(x: HObject, y: HObject, z: HObject) -> HMorphism:
    return coherence_iso(CoherenceKind.ASSOCIATOR, x, y, z)


def symmetry(x: HObject, y: HObject) -> HMorphism:
    return coherence_iso(CoherenceKind.SYMMETRY, x, y)


def left_unitor(x: HObject) -> HMorphism:
    return coherence_iso(CoherenceKind.LEFT_UNITOR, x)


def right_unitor(x: HObject) -> HMorphism:
    return coherence_iso(CoherenceKind.RIGHT_UNITOR, x)


def pentagon_holds(w: HObject, x: HObject, y: HObject, z: HObject) -> bool:
    lhs = compose(associator(w, x, tensor(y, z)), associator(tensor(w, x), y, z))
    rhs = compose_all(
        tensor_mor(identity(w), associator(x, y, z)),
        associator(w, tensor(x, y), z),
        tensor_mor(associator(w, x, y), identity(z)),
    )
    return lhs == rhs


def triangle_holds(x: HObject, y: HObject) -> bool:
    unit = unit_object(x.ring)
    lhs = compose(tensor_mor(identity(x), left_unitor(y)), associator(x, unit, y))
    return lhs == tensor_mor(right_unitor(x), identity(y))


def hexagon_holds(x: HObject, y: HObject, z: HObject) -> bool:
    lhs = compose_all(associator(y, z, x), symmetry(x, tensor(y, z)), associator(x, y, z))
    rhs = compose_all(
        tensor_mor(identity(y), symmetry(x, z)),
        associator(y, x, z),
        tensor_mor(symmetry(x, y), identity(z)),
    )
    return lhs == rhs


def symmetry_involutive(x: HObject, y: HObject) -> bool:
    return compose(symmetry(y, x), symmetry(x, y)) == identity(tensor(x, y))


# -- enrichment ------------------------------------------------------------------------------

def _check_parallel(f: HMorphism, g: HMorphism):
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatchError("morphisms are not parallel")


def add(f: HMorphism, g: HMorphism) -> HMorphism:
    """f + g = ∇ ∘ (f ⊕ g) ∘ Δ, cross-checked against the entrywise sum."""
    _check_parallel(f, g)
    composite = compose_all(codiagonal(f.cod), biproduct_mor(f, g), diagonal(f.dom))
    oracle = HMorphism(f.dom, f.cod, f.mat + g.mat)
    if composite != oracle:
        raise EnrichmentMismatchError("∇∘(f⊕g)∘Δ differs from the entrywise sum")
    return composite


def scalar_morphism(s: Scalar) -> HMorphism:
    unit = unit_object(s.ring)
    return HMorphism(unit, unit, Matrix.from_rows(s.ring, [[s]]))


def scalar_mul(s: Scalar, f: HMorphism) -> HMorphism:
    """s·f = λ ∘ (s ⊗ f) ∘ λ⁻¹, cross-checked against entrywise scaling."""
    if s.ring != f.ring:
        raise RingMismatchError(f"scalar over {s.ring}, morphism over {f.ring}")
    lam_inv = dagger(left_unitor(f.dom))
    composite = compose_all(left_unitor(f.cod), tensor_mor(scalar_morphism(s), f), lam_inv)
    oracle = HMorphism(f.dom, f.cod, f.mat.scale(s))
    if composite != oracle:
        raise EnrichmentMismatchError("λ∘(s⊗f)∘λ⁻¹ differs from entrywise scaling")
    return composite


def subtract(f: HMorphism, g: HMorphism) -> HMorphism:
    _check_parallel(f, g)
    return HMorphism(f.dom, f.cod, f.mat - g.mat)


def scalar_multiple(n: int, f: HMorphism) -> HMorphism:
    """n·f = ∇ⁿ ∘ (f ⊕ ... ⊕ f) ∘ Δⁿ."""
    composite = compose_all(n_fold_codiagonal(f.cod, n), n_fold_biproduct_mor(f, n), n_fold_diagonal(f.dom, n))
    oracle = HMorphism(f.dom, f.cod, f.mat.scale(f.ring.from_int(n)))
    if composite != oracle:
        raise EnrichmentMismatchError(f"n-fold sum differs from {n}·f")
    return composite


# -- kernels --------------------------------------------------------------------------------

def subobject(obj: HObject, basis: Matrix) -> HMorphism:
    """Isometric inclusion of the span of the columns of ``basis`` with the induced Gram."""
    gram = basis.conj_transpose() @ obj.gram @ basis
    sub = HObject(obj.ring, basis.cols, gram)
    return HMorphism(sub, obj, basis)


def kernel(f: HMorphism, order: PivotOrder = PivotOrder.FORWARD) -> HMorphism:
    """Dagger kernel: the nullspace basis as an isometric inclusion."""
    return subobject(f.dom, nullspace(f.mat, order))


def cokernel(f: HMorphism, order: PivotOrder = PivotOrder.FORWARD) -> HMorphism:
    """Dagger cokernel: projection onto (im f)⊥ = ker f†, i.e. kernel(f†)†."""
    return dagger(kernel(dagger(f), order))


def equalizer(f: HMorphism, g: HMorphism, order: PivotOrder = PivotOrder.FORWARD) -> HMorphism:
    return kernel(subtract(f, g), order)


def image(f: HMorphism, order: PivotOrder = PivotOrder.FORWARD) -> HMorphism:
    """Isometric inclusion of the column space of f."""
    return subobject(f.cod, column_basis(f.mat, order))


# -- factorization ------------------------------------------------------------------------

class FactorizationKind(str, Enum):
    DAGGER_EPI_MONO = "dagger-epi-then-mono"
    EPI_DAGGER_MONO = "epi-then-dagger-mono"
    POLAR = "polar-triple"


@dataclass(frozen=True)
class Factorization:
    kind: FactorizationKind
    morphism: HMorphism
    epi: HMorphism
    mono: HMorphism
    middle: Optional[HMorphism] = None

    def composite(self) -> HMorphism:
        if self.middle is None:
            return compose(self.mono, self.epi)
        return compose_all(self.mono, self.middle, self.epi)

    def checks(self) -> dict:
        """Named verification clauses; all must be True."""
        result = {"recomposes": self.composite() == self.morphism}
        if self.kind == FactorizationKind.DAGGER_EPI_MONO:
            result["epi is dagger epi"] = is_dagger_epi(self.epi)
            result["mono is monic"] = is_mono(self.mono)
        elif self.kind == FactorizationKind.EPI_DAGGER_MONO:
            result["epi is epic"] = is_epi(self.epi)
            result["mono is dagger mono"] = is_dagger_mono(self.mono)
        else:
            result["epi is dagger epi"] = is_dagger_epi(self.epi)
            result["middle is iso"] = is_iso(self.middle)
            result["mono is dagger mono"] = is_dagger_mono(self.mono)
        return result

    def is_valid(self) -> bool:
        return all(self.checks().values())


def factor(f: HMorphism, kind: FactorizationKind = FactorizationKind.DAGGER_EPI_MONO,
           order: PivotOrder = PivotOrder.FORWARD) -> Factorization:
    kind = FactorizationKind(kind)
    if kind == FactorizationKind.DAGGER_EPI_MONO:
        # coimage (ker f)⊥ = im f†, spanned by a column basis of f†
        j = subobject(f.dom, column_basis(dagger(f).mat, order))
        e = dagger(j)
        m = compose(f, j)
        return Factorization(kind, f, e, m)
    if kind == FactorizationKind.EPI_DAGGER_MONO:
        dual = factor(dagger(f), FactorizationKind.DAGGER_EPI_MONO, order)
        return Factorization(kind, f, dagger(dual.mono), dagger(dual.epi))
    first = factor(f, FactorizationKind.DAGGER_EPI_MONO, order)
    k = image(f, order)
    middle = compose_all(dagger(k), f, dagger(first.epi))
    return Factorization(kind, f, first.epi, k, middle)


def connect_monos(m1: HMorphism, m2: HMorphism) -> HMorphism:
    """The dagger iso φ = m₂† ∘ m₁ between dagger monos with the same image."""
    if m1.cod != m2.cod:
        raise FactorizationMismatchError("dagger monos have different codomains")
    phi = compose(dagger(m2), m1)
    if compose(m2, phi) != m1 or not is_dagger_iso(phi):
        raise FactorizationMismatchError("dagger monos do not have the same image")
    return phi


def connect_epis(e1: HMorphism, e2: HMorphism) -> HMorphism:
    """The dagger iso φ = e₂ ∘ e₁† between dagger epis with the same kernel."""
    if e1.dom != e2.dom:
        raise FactorizationMismatchError("dagger epis have different domains")
    phi = compose(e2, dagger(e1))
    if compose(phi, e1) != e2 or not is_dagger_iso(phi):
        raise FactorizationMismatchError("dagger epis do not have the same kernel")
    return phi


def connecting_iso(first: Factorization, second: Factorization) -> HMorphism:
    """The unique dagger iso between two factorizations of the same morphism.

    For polar triples the iso is taken on the epi side; the mono side and the
    middle factors are checked against it.
    """
    if first.morphism != second.morphism:
        raise FactorizationMismatchError("factorizations of different morphisms")
    if first.kind != second.kind:
        raise FactorizationMismatchError(f"cannot connect {first.kind.value} with {second.kind.value}")
    for label, fact in (("first", first), ("second", second)):
        failed = [name for name, ok in fact.checks().items() if not ok]
        if failed:
            raise FactorizationMismatchError(f"{label} factorization is invalid: {', '.join(failed)}")
    if first.kind == FactorizationKind.EPI_DAGGER_MONO:
        phi = connect_monos(first.mono, second.mono)
        if compose(phi, first.epi) != second.epi:
            raise FactorizationMismatchError("connecting iso does not carry the epis onto each other")
        return phi
    phi = connect_epis(first.epi, second.epi)
    if first.kind == FactorizationKind.DAGGER_EPI_MONO:
        if compose(second.mono, phi) != first.mono:
            raise FactorizationMismatchError("connecting iso does not carry the monos onto each other")
        return phi
    phi_mono = connect_monos(first.mono, second.mono)
    if compose_all(phi_mono, first.middle, dagger(phi)) != second.middle:
        raise FactorizationMismatchError("middle factors are not related by the connecting isos")
    return phi


def factor_both_orders(f: HMorphism, kind: FactorizationKind) -> Tuple[Factorization, Factorization]:
    return factor(f, kind, PivotOrder.FORWARD), factor(f, kind, PivotOrder.REVERSE)


def factorization_sequence(fact: Factorization) -> Sequence[HMorphism]:
    """The components in application order."""
    if fact.middle is None:
        return (fact.epi, fact.mono)
    return (fact.epi, fact.middle, fact.mono)
