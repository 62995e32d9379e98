"""Finite Hilbert semimodules over the Boolean semiring, given by explicit tables.

Elements are indices into ``labels``; addition and the inner product are
lookup tables. Over 𝔹 the scalar action is forced (0·m = 0, 1·m = m), so a
semimodule is a finite join-semilattice with a bottom element plus a
𝔹-valued form.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import IllDefinedInnerProductError, InvalidSemimoduleError, NotAHomomorphismError
from .scalars import BOOL, CheckResult, Scalar

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteSemimodule:
    name: str
    labels: Tuple[str, ...]
    add: Table
    inner: Table
    zero: int = 0

    @property
    def ring(self):
        return BOOL

    @property
    def size(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(self.size)

    def plus(self, m: int, n: int) -> int:
        return self.add[m][n]

    def scale(self, s: Scalar, m: int) -> int:
        return m if s.value else self.zero

    def inner_product(self, m: int, n: int) -> Scalar:
        return BOOL.scalar(self.inner[m][n])

    def functional(self, m: int) -> Tuple[int, ...]:
        """The row ⟨m, −⟩."""
        return self.inner[m]

    def label(self, m: int) -> str:
        return self.labels[m]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __str__(self) -> str:
        return f"{self.name}({self.size} elements)"


def _first_failure(cases) -> CheckResult:
    count = 0
    for witness, ok in cases:
        count += 1
        if not ok:
            return CheckResult(False, witness, count)
    return CheckResult(True, None, count)


def semimodule_laws(mod: FiniteSemimodule) -> Dict[str, CheckResult]:
    """Commutative-monoid and 𝔹-action equations, exhaustively."""
    els = list(mod.elements())
    plus, z = mod.plus, mod.zero
    one, zero = BOOL.one(), BOOL.zero()
    scalars = (zero, one)
    return {
        "add-associative": _first_failure(
            ((m, n, k), plus(plus(m, n), k) == plus(m, plus(n, k))) for m, n, k in product(els, repeat=3)
        ),
        "add-commutative": _first_failure(((m, n), plus(m, n) == plus(n, m)) for m, n in product(els, repeat=2)),
        "add-unit": _first_failure(((m,), plus(m, z) == m) for m in els),
        "action-distributes": _first_failure(
            ((s, m, n), mod.scale(s, plus(m, n)) == plus(mod.scale(s, m), mod.scale(s, n)))
            for s in scalars for m, n in product(els, repeat=2)
        ),
        "action-additive": _first_failure(
            ((s, t, m), mod.scale(s + t, m) == plus(mod.scale(s, m), mod.scale(t, m)))
            for s, t in product(scalars, repeat=2) for m in els
        ),
        "action-multiplicative": _first_failure(
            ((s, t, m), mod.scale(s * t, m) == mod.scale(s, mod.scale(t, m)))
            for s, t in product(scalars, repeat=2) for m in els
        ),
    }


def inner_product_laws(mod: FiniteSemimodule) -> Dict[str, CheckResult]:
    """The Hilbert semimodule conditions on the form, exhaustively (strictness separately)."""
    els = list(mod.elements())
    ip = mod.inner_product
    rows = [mod.functional(m) for m in els]
    return {
        "conjugate-symmetric": _first_failure(((m, n), ip(m, n) == ip(n, m)) for m, n in product(els, repeat=2)),
        "additive": _first_failure(
            ((m, n, k), ip(m, mod.plus(n, k)) == ip(m, n) + ip(m, k)) for m, n, k in product(els, repeat=3)
        ),
        "zero-preserving": _first_failure(((m,), ip(m, mod.zero).is_zero()) for m in els),
        # every element of 𝔹 is positive, so ⟨m, m⟩ ≥ 0 is automatic
        "positive": CheckResult(True, None, len(els)),
        "nondegenerate": _first_failure(
            ((m, n), m == n or rows[m] != rows[n]) for m, n in product(els, repeat=2)
        ),
    }


def is_strict(mod: FiniteSemimodule) -> CheckResult:
    """⟨m, m⟩ = 0 implies m = 0."""
    return _first_failure(((m,), m == mod.zero or mod.inner[m][m] != 0) for m in mod.elements())


def validate(mod: FiniteSemimodule) -> FiniteSemimodule:
    for law, result in {**semimodule_laws(mod), **inner_product_laws(mod)}.items():
        if not result.passed:
            labels = tuple(mod.label(m) if isinstance(m, int) else str(m) for m in result.witness)
            raise InvalidSemimoduleError(f"{mod.name}: {law} fails at {labels}")
    return mod


def make_semimodule(name: str, labels: Sequence[str], add: Sequence[Sequence[int]],
                    inner: Sequence[Sequence[int]], zero: int = 0) -> FiniteSemimodule:
    mod = FiniteSemimodule(
        name,
        tuple(labels),
        tuple(tuple(int(v) for v in row) for row in add),
        tuple(tuple(int(v) for v in row) for row in inner),
        zero,
    )
    size = mod.size
    if len(mod.add) != size or any(len(r) != size for r in mod.add):
        raise InvalidSemimoduleError(f"{name}: addition table is not {size}x{size}")
    if len(mod.inner) != size or any(len(r) != size for r in mod.inner):
        raise InvalidSemimoduleError(f"{name}: inner-product table is not {size}x{size}")
    if any(not 0 <= v < size for r in mod.add for v in r):
        raise InvalidSemimoduleError(f"{name}: addition table leaves the carrier")
    if any(v not in (0, 1) for r in mod.inner for v in r):
        raise InvalidSemimoduleError(f"{name}: inner products must be Booleans")
    return validate(mod)


# -- shipped modules -----------------------------------------------------------

def zero_module() -> FiniteSemimodule:
    return make_semimodule("zero", ["0"], [[0]], [[0]])


def free_module(n: int) -> FiniteSemimodule:
    """𝔹ⁿ: bit vectors under join, ⟨m, n⟩ = ⋁ᵢ mᵢ ∧ nᵢ."""
    size = 1 << n
    labels = ["".join("1" if m >> (n - 1 - i) & 1 else "0" for i in range(n)) or "0" for m in range(size)]
    add = [[m | k for k in range(size)] for m in range(size)]
    inner = [[1 if m & k else 0 for k in range(size)] for m in range(size)]
    return make_semimodule("B" if n == 1 else f"B^{n}", labels, add, inner)


def scalar_module(ring=BOOL) -> FiniteSemimodule:
    """The ring as a module over itself, ⟨s, t⟩ = s‡t."""
    if ring != BOOL:
        raise InvalidSemimoduleError(f"finite semimodules are over bool, not {ring}")
    return free_module(1)


def chain3() -> FiniteSemimodule:
    """The chain 0 < a < 1 under max: nondegenerate but ⟨a, a⟩ = 0."""
    add = [[max(m, k) for k in range(3)] for m in range(3)]
    inner = [
        [0, 0, 0],
        [0, 0, 1],
        [0, 1, 1],
    ]
    return make_semimodule("chain3", ["0", "a", "1"], add, inner)


def shipped_modules() -> List[FiniteSemimodule]:
    return [zero_module(), free_module(1), free_module(2), free_module(3), chain3()]


# -- maps ------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteMap:
    source: FiniteSemimodule
    target: FiniteSemimodule
    table: Tuple[int, ...]

    def __call__(self, m: int) -> int:
        return self.table[m]

    def __str__(self) -> str:
        pairs = ", ".join(f"{self.source.label(m)}->{self.target.label(v)}" for m, v in enumerate(self.table))
        return f"{{{pairs}}}"


def make_map(source: FiniteSemimodule, target: FiniteSemimodule, table: Sequence[int]) -> FiniteMap:
    table = tuple(int(v) for v in table)
    if len(table) != source.size or any(not 0 <= v < target.size for v in table):
        raise NotAHomomorphismError("map table does not fit the carriers")
    return FiniteMap(source, target, table)


def identity_map(mod: FiniteSemimodule) -> FiniteMap:
    return FiniteMap(mod, mod, tuple(mod.elements()))


def is_homomorphism(f: FiniteMap) -> bool:
    src, tgt = f.source, f.target
    if f(src.zero) != tgt.zero:
        return False
    return all(f(src.plus(m, n)) == tgt.plus(f(m), f(n)) for m, n in product(src.elements(), repeat=2))


def find_adjoint_finite(f: FiniteMap) -> Optional[FiniteMap]:
    """The unique g with ⟨m, g n⟩ = ⟨f m, n⟩ for all m, n, or None.

    Searching point by point is exhaustive: g(n) has to be an element m'
    with ⟨−, m'⟩ equal to n ↦ ⟨f −, n⟩, and nondegeneracy leaves at most one.
    """
    if not is_homomorphism(f):
        raise NotAHomomorphismError(f"{f} does not preserve zero and addition")
    src, tgt = f.source, f.target
    table = []
    for n in tgt.elements():
        wanted = tuple(tgt.inner[f(m)][n] for m in src.elements())
        matches = [c for c in src.elements() if tuple(src.inner[m][c] for m in src.elements()) == wanted]
        if not matches:
            logger.debug("no adjoint: nothing represents <f(-), %s>", tgt.label(n))
            return None
        table.append(matches[0])
    adjoint = FiniteMap(tgt, src, tuple(table))
    if not is_homomorphism(adjoint):
        raise NotAHomomorphismError(f"adjoint of {f} does not preserve zero and addition")
    return adjoint


# -- constructions -----------------------------------------------------------------

def fsm_biproduct(left: FiniteSemimodule, right: FiniteSemimodule) -> FiniteSemimodule:
    """M ⊕ N with ⟨(m,n), (m',n')⟩ = ⟨m,m'⟩ + ⟨n,n'⟩."""
    pairs = list(product(left.elements(), right.elements()))
    index = {p: i for i, p in enumerate(pairs)}
    labels = [f"({left.label(m)},{right.label(n)})" for m, n in pairs]
    add = [[index[(left.plus(m, m2), right.plus(n, n2))] for m2, n2 in pairs] for m, n in pairs]
    inner = [[left.inner[m][m2] | right.inner[n][n2] for m2, n2 in pairs] for m, n in pairs]
    return make_semimodule(
        f"{left.name}+{right.name}", labels, add, inner, zero=index[(left.zero, right.zero)]
    )


@dataclass(frozen=True)
class TensorClass:
    """One element of the quotient: its functional on pure tensors and a representative."""

    functional: int
    representative: Tuple[int, ...]


def _bits(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def fsm_tensor_quotient(left: FiniteSemimodule, right: FiniteSemimodule) -> FiniteSemimodule:
    """M ⊗ N modulo h⊗k ∼ h'⊗k' iff ⟨h,−⟩·⟨k,−⟩ = ⟨h',−⟩·⟨k',−⟩.

    A sum of pure tensors is identified with the join of their functionals,
    encoded as a bitmask over pure-tensor positions h·|N| + k. The carrier is
    the closure of the generators under join; the inner product of two
    classes is evaluated on several representatives of each and must agree.
    """
    width = right.size
    pure = list(product(left.elements(), right.elements()))

    def functional_of(h: int, k: int) -> int:
        mask = 0
        for m, n in pure:
            if left.inner[h][m] and right.inner[k][n]:
                mask |= 1 << (m * width + n)
        return mask

    generators = [functional_of(h, k) for h, k in pure]
    classes: Dict[int, TensorClass] = {0: TensorClass(0, ())}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for p, g in enumerate(generators):
                joined = mask | g
                if joined not in classes:
                    classes[joined] = TensorClass(joined, classes[mask].representative + (p,))
                    nxt.append(joined)
        frontier = nxt

    ordered = sorted(classes.values(), key=lambda c: (bin(c.functional).count("1"), c.functional))
    position = {c.functional: i for i, c in enumerate(ordered)}

    def representatives(c: TensorClass) -> List[int]:
        maximal = 0
        for p, g in enumerate(generators):
            if g and g | c.functional == c.functional:
                maximal |= 1 << p
        reps = [maximal, sum(1 << p for p in set(c.representative))]
        reps.extend(1 << p for p, g in enumerate(generators) if g and g == c.functional)
        return reps

    reps = [representatives(c) for c in ordered]
    inner = []
    for i, c1 in enumerate(ordered):
        row = []
        for j, c2 in enumerate(ordered):
            values = {1 if c1.functional & s else 0 for s in reps[j]}
            values |= {1 if c2.functional & s else 0 for s in reps[i]}
            if len(values) != 1:
                raise IllDefinedInnerProductError(
                    f"inner product of classes {i} and {j} of {left.name} (x) {right.name} depends on representatives"
                )
            row.append(values.pop())
        inner.append(row)

    add = [[position[c1.functional | c2.functional] for c2 in ordered] for c1 in ordered]
    labels = []
    for c in ordered:
        terms = [f"{left.label(pure[p][0])}(x){right.label(pure[p][1])}" for p in c.representative]
        labels.append(" + ".join(terms) if terms else "0")
    logger.debug("tensor quotient %s (x) %s has %d classes", left.name, right.name, len(ordered))
    return make_semimodule(f"{left.name}(x){right.name}", labels, add, inner, zero=0)


SHIPPED_MODULES = {
    "zero": zero_module,
    "B": lambda: free_module(1),
    "B^2": lambda: free_module(2),
    "B^3": lambda: free_module(3),
    "chain3": chain3,
}


def module_from_name(name: str) -> FiniteSemimodule:
    try:
        return SHIPPED_MODULES[name]()
    except KeyError:
        raise InvalidSemimoduleError(f"unknown semimodule {name!r}") from None


def join_map(mod: FiniteSemimodule) -> FiniteMap:
    """M ⊕ M → M, (m, n) ↦ m + n."""
    square = fsm_biproduct(mod, mod)
    table = [mod.plus(m, n) for m, n in product(mod.elements(), mod.elements())]
    return make_map(square, mod, table)


def diagonal_map(mod: FiniteSemimodule) -> FiniteMap:
    """M → M ⊕ M, m ↦ (m, m)."""
    square = fsm_biproduct(mod, mod)
    return make_map(mod, square, [m * mod.size + m for m in mod.elements()])
