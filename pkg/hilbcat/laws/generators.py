"""Seeded random instances: scalars, Gram matrices, objects and morphisms.

Everything is drawn from a numpy Generator, so a (seed, suite) pair fixes
every instance a suite sees.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from ..dagcat import compose_all, dagger, subobject
from ..hilbmod import HMorphism, HObject
from ..linalg import Matrix, rank
from ..scalars import RingTag, Scalar, ScalarRing

MORPHISM_MIX = (
    ("dense", 0.3),
    ("dagger-product", 0.3),
    ("rank-deficient", 0.2),
    ("structured", 0.2),
)


@dataclass
class InstanceGenerator:
    ring: ScalarRing
    seed: int = 42
    max_dim: int = 4
    entry_height: int = 5
    stream: int = 0
    rng: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        self.rng = np.random.default_rng(np.random.SeedSequence([self.seed, self.stream]))

    def for_suite(self, name: str) -> "InstanceGenerator":
        """An independent generator for one suite, unaffected by other suites' draws."""
        return InstanceGenerator(self.ring, self.seed, self.max_dim, self.entry_height, zlib.crc32(name.encode()))

    # -- scalars -------------------------------------------------------------

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]."""
        return int(self.rng.integers(low, high + 1))

    def choice(self, probability: float) -> bool:
        return bool(self.rng.random() < probability)

    def rational(self) -> Fraction:
        h = self.entry_height
        return Fraction(self.integer(-h, h), self.integer(1, h))

    def positive_rational(self) -> Fraction:
        h = self.entry_height
        return Fraction(self.integer(1, h), self.integer(1, h))

    def scalar(self) -> Scalar:
        tag, h = self.ring.tag, self.entry_height
        if tag == RingTag.BOOL:
            return self.ring.scalar(self.integer(0, 1))
        if tag == RingTag.NAT:
            return self.ring.scalar(self.integer(0, h))
        if tag == RingTag.INT:
            return self.ring.scalar(self.integer(-h, h))
        if tag == RingTag.RAT:
            return self.ring.scalar(self.rational())
        return self.ring.scalar(self.rational(), self.rational())

    def nonzero_scalar(self) -> Scalar:
        while True:
            s = self.scalar()
            if not s.is_zero():
                return s

    def scalars(self, count: int) -> Tuple[Scalar, ...]:
        return tuple(self.scalar() for _ in range(count))

    # -- matrices and objects -------------------------------------------------------

    def dim(self, low: int = 1) -> int:
        return self.integer(low, max(low, self.max_dim))

    def matrix(self, rows: int, cols: int) -> Matrix:
        return Matrix.from_rows(self.ring, [[self.scalar() for _ in range(cols)] for _ in range(rows)], cols=cols)

    def full_rank_matrix(self, rows: int, cols: int) -> Matrix:
        """rows x cols with independent columns (cols <= rows)."""
        while True:
            m = self.matrix(rows, cols)
            if rank(m) == cols:
                return m

    def gram(self, n: int) -> Matrix:
        """L D L‡ᵀ with L unit lower-triangular and D positive rational."""
        ring = self.ring
        lower = Matrix.from_rows(ring, [
            [ring.one() if i == j else (self.scalar() if j < i else ring.zero()) for j in range(n)]
            for i in range(n)
        ], cols=n)
        diag = Matrix.diagonal(ring, [ring.scalar(self.positive_rational()) for _ in range(n)])
        return lower @ diag @ lower.conj_transpose()

    def object(self, dim: Optional[int] = None) -> HObject:
        n = self.dim() if dim is None else dim
        if self.choice(0.2):
            return HObject(self.ring, n, Matrix.identity(self.ring, n))
        return HObject(self.ring, n, self.gram(n))

    def vector(self, obj: HObject) -> Matrix:
        return self.matrix(obj.dim, 1)

    def nonzero_vector(self, obj: HObject) -> Matrix:
        while True:
            x = self.vector(obj)
            if not x.is_zero():
                return x

    # -- morphisms -----------------------------------------------------------------

    def dense(self, dom: HObject, cod: HObject) -> HMorphism:
        return HMorphism(dom, cod, self.matrix(cod.dim, dom.dim))

    def dagger_mono(self, cod: Optional[HObject] = None, sub_dim: Optional[int] = None) -> HMorphism:
        """An isometric inclusion of a random subspace of ``cod``."""
        cod = cod or self.object()
        k = self.integer(0, cod.dim) if sub_dim is None else sub_dim
        return subobject(cod, self.full_rank_matrix(cod.dim, k))

    def dagger_epi(self, dom: Optional[HObject] = None, sub_dim: Optional[int] = None) -> HMorphism:
        return dagger(self.dagger_mono(dom, sub_dim))

    def rank_deficient(self, dom: HObject, cod: HObject) -> HMorphism:
        r = self.integer(0, max(0, min(dom.dim, cod.dim) - 1))
        return HMorphism(dom, cod, self.matrix(cod.dim, r) @ self.matrix(r, dom.dim))

    def structured(self, dom: HObject, cod: HObject) -> HMorphism:
        ring = self.ring
        rows = [[ring.zero()] * dom.dim for _ in range(cod.dim)]
        if self.choice(0.5):
            for i in range(min(dom.dim, cod.dim)):
                rows[i][i] = self.scalar()
        else:
            order = self.rng.permutation(max(dom.dim, cod.dim))
            for j in range(dom.dim):
                i = int(order[j])
                if i < cod.dim:
                    rows[i][j] = self.nonzero_scalar()
        return HMorphism(dom, cod, Matrix.from_rows(ring, rows, cols=dom.dim))

    def dagger_product(self, dom: HObject, cod: HObject) -> HMorphism:
        k = self.integer(0, min(dom.dim, cod.dim))
        epi = self.dagger_epi(dom, k)
        mono = self.dagger_mono(cod, k)
        return compose_all(mono, self.dense(epi.cod, mono.dom), epi)

    def morphism(self, dom: Optional[HObject] = None, cod: Optional[HObject] = None) -> HMorphism:
        dom = dom or self.object()
        cod = cod or self.object()
        roll = self.rng.random()
        kind = MORPHISM_MIX[-1][0]
        for name, weight in MORPHISM_MIX:
            if roll < weight:
                kind = name
                break
            roll -= weight
        return getattr(self, kind.replace("-", "_"))(dom, cod)

    def composable_pair(self) -> Tuple[HMorphism, HMorphism]:
        """(f, g) with g ∘ f defined."""
        f = self.morphism()
        return f, self.morphism(dom=f.cod)

    def endomorphism(self, obj: Optional[HObject] = None) -> HMorphism:
        obj = obj or self.object()
        return self.morphism(obj, obj)

    def parallel_pair(self) -> Tuple[HMorphism, HMorphism]:
        f = self.morphism()
        return f, self.morphism(f.dom, f.cod)

    def mono(self, dom: Optional[HObject] = None, cod: Optional[HObject] = None) -> HMorphism:
        """A monomorphism: full column rank, cod at least as large as dom."""
        dom = dom or self.object()
        cod = cod or self.object(self.integer(dom.dim, max(dom.dim, self.max_dim)))
        return HMorphism(dom, cod, self.full_rank_matrix(cod.dim, dom.dim))
