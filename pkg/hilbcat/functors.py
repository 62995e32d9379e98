"""Functors out of a Gram-matrix model and boundedness.

* the hom-embedding H(I, −) together with its monoidal comparison maps,
* extension of scalars along an involutive semiring monomorphism,
* the table-level demonstration that extension of scalars is not full,
* bounds M with x†g†gx ≤ M†M·x†x, decided by one exact PSD test.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import List, Optional, Sequence, Tuple

from .config import config
from .dagcat import compose, connect_monos, dagger, kernel, left_unitor, tensor, tensor_mor
from .errors import BoundPreconditionError, RingMismatchError, ShapeMismatchError
from .hilbmod import HMorphism, HObject, HomModule, hom_module, make_object, points, unit_object
from .linalg import Matrix, is_positive_semidefinite
from .scalars import (
    CheckResult,
    RingTag,
    Scalar,
    SemiringHom,
    hom_apply,
    hom_from_name,
    involute,
    leq,
)

logger = logging.getLogger(__name__)


# -- hom-embedding -------------------------------------------------------------------

def hom_embed(obj: HObject) -> HomModule:
    """H(I, X) with its dagger isomorphism to X."""
    return hom_module(obj)


def hom_embed_mor(f: HMorphism) -> HMorphism:
    """H(I, f) = f ∘ (−), read off on the basis points of the domain."""
    dom, cod = hom_embed(f.dom).object, hom_embed(f.cod).object
    columns = [compose(f, x).mat.column_values(0) for x in points(f.dom)]
    return HMorphism(dom, cod, Matrix.from_columns(f.ring, columns, cod.dim))


@dataclass(frozen=True)
class HomEmbedding:
    """H(I, −) over a fixed field, as an object map and a morphism map."""

    ring: object

    def on_object(self, obj: HObject) -> HObject:
        self._check(obj.ring)
        return hom_embed(obj).object

    def on_morphism(self, f: HMorphism) -> HMorphism:
        self._check(f.ring)
        return hom_embed_mor(f)

    def _check(self, ring):
        if ring != self.ring:
            raise RingMismatchError(f"embedding over {self.ring} applied to {ring}")


def monoidal_witness(x: HObject, y: HObject) -> HMorphism:
    """φ_{X,Y}: H(I,X) ⊗ H(I,Y) → H(I, X⊗Y), sending a ⊗ b to (a ⊗ b) ∘ λ_I⁻¹."""
    unit = unit_object(x.ring)
    split_unit = dagger(left_unitor(unit))
    dom = tensor(hom_embed(x).object, hom_embed(y).object)
    cod = hom_embed(tensor(x, y)).object
    columns = [
        compose(tensor_mor(a, b), split_unit).mat.column_values(0)
        for a, b in product(points(x), points(y))
    ]
    return HMorphism(dom, cod, Matrix.from_columns(x.ring, columns, cod.dim))


def monoidal_naturality_holds(f: HMorphism, g: HMorphism) -> bool:
    lhs = compose(monoidal_witness(f.cod, g.cod), tensor_mor(hom_embed_mor(f), hom_embed_mor(g)))
    rhs = compose(hom_embed_mor(tensor_mor(f, g)), monoidal_witness(f.dom, g.dom))
    return lhs == rhs


def full_preimage(phi: HMorphism, dom: HObject, cod: HObject) -> HMorphism:
    """The morphism X → Y whose image under H(I, −) is the module map ``phi``.

    Built from the images of the basis points: column i is Φ(e_i).
    """
    if phi.dom != hom_embed(dom).object or phi.cod != hom_embed(cod).object:
        raise ShapeMismatchError("module map does not run between the hom modules of the given objects")
    columns = [(phi.mat @ x.mat).column_values(0) for x in points(dom)]
    return HMorphism(dom, cod, Matrix.from_columns(dom.ring, columns, cod.dim))


# -- extension of scalars ----------------------------------------------------------------

def check_hom(h: SemiringHom, samples: int = 50) -> CheckResult:
    """Preservation of 0, 1, +, ·, ‡ and injectivity on an initial segment of the source."""
    src = h.source
    elements = src.elements(samples)

    def ap(s: Scalar) -> Scalar:
        return hom_apply(h, s)

    cases = 0
    if ap(src.zero()) != h.target.zero() or ap(src.one()) != h.target.one():
        return CheckResult(False, (src.zero(), src.one()), 1)
    images = {}
    for s in elements:
        image = ap(s)
        if image in images and images[image] != s:
            return CheckResult(False, (images[image], s), cases)
        images[image] = s
        if ap(involute(s)) != involute(image):
            return CheckResult(False, (s,), cases)
        for t in elements:
            cases += 1
            if ap(s + t) != ap(s) + ap(t) or ap(s * t) != ap(s) * ap(t):
                return CheckResult(False, (s, t), cases)
    return CheckResult(True, None, cases)


@dataclass(frozen=True)
class ScalarExtension:
    hom: SemiringHom

    @property
    def source(self):
        return self.hom.source

    @property
    def target(self):
        return self.hom.target

    @property
    def is_full(self) -> bool:
        # full exactly when the ring map is surjective
        return self.hom.surjective


def _map_matrix(ext: ScalarExtension, m: Matrix) -> Matrix:
    if m.ring != ext.source:
        raise RingMismatchError(f"{ext.hom.name} expects {ext.source}, got {m.ring}")
    return m.map(lambda a: hom_apply(ext.hom, a), ring=ext.target)


def extend_object(ext: ScalarExtension, obj: HObject) -> HObject:
    """S ⊗_R X: the Gram matrix mapped entrywise."""
    return make_object(ext.target, obj.dim, _map_matrix(ext, obj.gram))


def extend_mor(ext: ScalarExtension, f: HMorphism) -> HMorphism:
    return HMorphism(extend_object(ext, f.dom), extend_object(ext, f.cod), _map_matrix(ext, f.mat))


def extend_preserves_kernels(ext: ScalarExtension, g: HMorphism) -> HMorphism:
    """Dagger iso from the extended kernel of g to the kernel of the extended g."""
    return connect_monos(extend_mor(ext, kernel(g)), kernel(extend_mor(ext, g)))


# -- non-fullness ------------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteMonoid:
    name: str
    labels: Tuple[str, ...]
    add: Tuple[Tuple[int, ...], ...]
    zero: int = 0

    @property
    def size(self) -> int:
        return len(self.labels)


def boolean_monoid() -> FiniteMonoid:
    return FiniteMonoid("bool", ("0", "1"), ((0, 1), (1, 1)))


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid("trivial", ("0",), ((0,),))


def threshold_monoid(size: int = 3) -> FiniteMonoid:
    """{0, ..., size-1} under addition truncated at size-1."""
    top = size - 1
    return FiniteMonoid(
        f"threshold{size}",
        tuple(str(i) for i in range(size)),
        tuple(tuple(min(a + b, top) for b in range(size)) for a in range(size)),
    )


SHIPPED_MONOIDS = {"bool": boolean_monoid, "trivial": trivial_monoid, "threshold3": threshold_monoid}


@dataclass(frozen=True)
class NonFullnessReport:
    monoid: str
    swap: Tuple[Tuple[str, str], ...]
    candidates: int
    homomorphisms: int
    preimages: Tuple[Tuple[str, ...], ...]

    @property
    def witness_found(self) -> bool:
        """The swap on X ⊕ X has no preimage g with f*(g) = swap."""
        return not self.preimages

    def to_dict(self) -> dict:
        return {
            "monoid": self.monoid,
            "swap": [list(p) for p in self.swap],
            "candidates": self.candidates,
            "homomorphisms": self.homomorphisms,
            "preimages": [list(p) for p in self.preimages],
            "witness_found": self.witness_found,
        }


def _is_monoid_hom(mon: FiniteMonoid, g: Sequence[int]) -> bool:
    if g[mon.zero] != mon.zero:
        return False
    return all(g[mon.add[a][b]] == mon.add[g[a]][g[b]] for a, b in product(range(mon.size), repeat=2))


def non_fullness_demo(monoid: Optional[FiniteMonoid] = None) -> NonFullnessReport:
    """Look for g: X → X with (g x, g x') = (x', x) for every pair, over all functions.

    Along the inclusion of the naturals into the integers a commutative
    monoid X is sent to X ⊕ X and g to g ⊕ g; the swap of the two summands
    lies in the image only if such a g exists.
    """
    mon = monoid or boolean_monoid()
    pairs = list(product(range(mon.size), repeat=2))
    swap = {(a, b): (b, a) for a, b in pairs}
    candidates = homs = 0
    preimages: List[Tuple[str, ...]] = []
    for g in product(range(mon.size), repeat=mon.size):
        candidates += 1
        if _is_monoid_hom(mon, g):
            homs += 1
        if all((g[a], g[b]) == swap[(a, b)] for a, b in pairs):
            preimages.append(tuple(mon.labels[v] for v in g))
    report = NonFullnessReport(
        mon.name,
        tuple((f"({mon.labels[a]},{mon.labels[b]})", f"({mon.labels[b]},{mon.labels[a]})") for a, b in pairs),
        candidates,
        homs,
        tuple(preimages),
    )
    logger.info("non-fullness over %s: %d candidates, %d preimages", mon.name, candidates, len(preimages))
    return report


# -- boundedness --------------------------------------------------------------------------------

@dataclass(frozen=True)
class Bound:
    value: Scalar

    @property
    def squared(self) -> Scalar:
        return involute(self.value) * self.value


def _excess(m: Bound, g: HMorphism) -> Matrix:
    """M‡M·G_X − F‡ᵀ G_Y F; its PSD-ness is the bound condition for every x."""
    if m.value.ring != g.ring:
        raise RingMismatchError(f"bound over {m.value.ring}, morphism over {g.ring}")
    return g.dom.gram.scale(m.squared) - g.mat.conj_transpose() @ g.cod.gram @ g.mat


def is_bound(m: Bound, g: HMorphism) -> bool:
    return is_positive_semidefinite(_excess(m, g))


def bound_holds_at(m: Bound, g: HMorphism, x: Matrix) -> bool:
    """x†g†gx ≤ M†M·x†x at a single coordinate column x."""
    if m.value.ring != g.ring:
        raise RingMismatchError(f"bound over {m.value.ring}, morphism over {g.ring}")
    gx = g.mat @ x
    lhs = (gx.conj_transpose() @ g.cod.gram @ gx)[0, 0]
    rhs = m.squared * (x.conj_transpose() @ g.dom.gram @ x)[0, 0]
    return leq(lhs, rhs)


def _abs_bound(s: Scalar) -> Fraction:
    """A rational upper bound on |s| in every real or complex embedding."""
    if s.ring.tag == RingTag.GAUSS:
        return abs(s.value[0]) + abs(s.value[1])
    if s.ring.tag == RingTag.QUAD:
        root = isqrt(s.ring.d)
        if root * root < s.ring.d:
            root += 1
        return abs(s.value[0]) + abs(s.value[1]) * root
    return abs(Fraction(s.value))


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def rational_sqrt_ceiling(c: Fraction, bits: int) -> Fraction:
    """√c when c is a rational square, otherwise the next multiple of 2⁻ᵇⁱᵗˢ above √c."""
    if c < 0:
        raise ValueError("square root of a negative number")
    if _is_square(c.numerator) and _is_square(c.denominator):
        return Fraction(isqrt(c.numerator), isqrt(c.denominator))
    n = c.numerator << (2 * bits)
    r = isqrt(n // c.denominator)
    while r * r * c.denominator < n:
        r += 1
    return Fraction(r, 1 << bits)


def find_bound(g: HMorphism, steps: Optional[int] = None, precision_bits: Optional[int] = None) -> Bound:
    """Some M with is_bound(M, g).

    Starts from a row-sum bound c on the eigenvalues of G_X⁻¹ F‡ᵀ G_Y F,
    tightens c by rational bisection on c·G_X − F‡ᵀ G_Y F ⪰ 0 and returns a
    rational M ≥ √c.
    """
    steps = config.bound_search_steps if steps is None else steps
    precision_bits = config.sqrt_precision_bits if precision_bits is None else precision_bits
    ring = g.ring
    gram_x = g.dom.gram
    energy = g.mat.conj_transpose() @ g.cod.gram @ g.mat
    weighted = g.dom.gram_inverse @ energy

    def accepts(c: Fraction) -> bool:
        return is_positive_semidefinite(gram_x.scale(ring.scalar(c)) - energy)

    hi = max((sum((_abs_bound(a) for a in row), Fraction(0)) for row in weighted.entries), default=Fraction(0))
    while not accepts(hi):
        hi = 2 * hi if hi else Fraction(1)
    lo = Fraction(0)
    for _ in range(steps):
        if hi == lo:
            break
        mid = (lo + hi) / 2
        if accepts(mid):
            hi = mid
        else:
            lo = mid
    bound = Bound(ring.scalar(rational_sqrt_ceiling(hi, precision_bits)))
    logger.debug("bound %s for a %dx%d morphism", bound.value, g.mat.rows, g.mat.cols)
    return bound


def verify_bound_preserved(ext: ScalarExtension, m: Bound, g: HMorphism) -> bool:
    """If M bounds g then the image of M bounds the extended g."""
    if not is_bound(m, g):
        raise BoundPreconditionError(f"{m.value} does not bound the given morphism")
    return is_bound(Bound(hom_apply(ext.hom, m.value)), extend_mor(ext, g))


def extension_from_name(name: str) -> ScalarExtension:
    return ScalarExtension(hom_from_name(name))
