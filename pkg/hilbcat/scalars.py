"""Exact scalars over involutive commutative semirings.

Six rings are shipped: the naturals, the Boolean semiring ({0,1}, or, and),
the integers, the rationals, the Gaussian rationals Q(i) with complex
conjugation, and real quadratic fields Q(sqrt d) with the trivial involution.

Every value is kept in canonical form (reduced fractions, pairs of reduced
fractions for the two-component rings) so that equality of scalars is
syntactic equality of their values.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import floor, gcd, isqrt
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple, Union

from sympy import factorint

from .errors import (
    NoInverseError,
    NoNegationError,
    NotPositiveError,
    RingMismatchError,
    ScalarParseError,
)

logger = logging.getLogger(__name__)


class RingTag(str, Enum):
    NAT = "nat"
    BOOL = "bool"
    INT = "int"
    RAT = "rat"
    GAUSS = "gauss"
    QUAD = "qsqrt"


class InvolutionKind(str, Enum):
    TRIVIAL = "trivial"
    CONJUGATION = "conjugation"


_PAIR_TAGS = (RingTag.GAUSS, RingTag.QUAD)
_INT_TAGS = (RingTag.NAT, RingTag.BOOL, RingTag.INT)


@dataclass(frozen=True)
class ScalarRing:
    """Tagged description of an involutive commutative semiring."""

    tag: RingTag
    d: Optional[int] = None

    def __post_init__(self):
        if self.tag == RingTag.QUAD:
            if self.d is None or self.d < 2:
                raise ValueError(f"QuadExt needs a square-free d >= 2, got {self.d}")
            if any(e > 1 for e in factorint(self.d).values()):
                raise ValueError(f"{self.d} is not square-free")
        elif self.d is not None:
            raise ValueError(f"ring {self.tag.value} takes no parameter")

    @property
    def name(self) -> str:
        if self.tag == RingTag.QUAD:
            return f"qsqrt{self.d}"
        return self.tag.value

    @property
    def involution_kind(self) -> InvolutionKind:
        if self.tag == RingTag.GAUSS:
            return InvolutionKind.CONJUGATION
        return InvolutionKind.TRIVIAL

    @property
    def has_negation(self) -> bool:
        return self.tag not in (RingTag.NAT, RingTag.BOOL)

    @property
    def is_semifield(self) -> bool:
        return self.tag not in (RingTag.NAT, RingTag.INT)

    @property
    def is_field(self) -> bool:
        return self.tag in (RingTag.RAT, RingTag.GAUSS, RingTag.QUAD)

    @property
    def is_finite(self) -> bool:
        return self.tag == RingTag.BOOL

    def __str__(self) -> str:
        return self.name

    # -- construction -----------------------------------------------------

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def scalar(self, value: Any, imag: Any = 0) -> "Scalar":
        """Coerce ``value`` (int, Fraction, str, pair or Scalar) into this ring."""
        if isinstance(value, Scalar):
            if value.ring != self:
                raise RingMismatchError(f"scalar over {value.ring} used as {self}")
            return value
        if isinstance(value, str):
            return parse_scalar(self, value)
        if isinstance(value, tuple):
            value, imag = value
        if self.tag in _PAIR_TAGS:
            return Scalar(self, (Fraction(value), Fraction(imag)))
        if imag:
            raise ScalarParseError(f"ring {self} has no second component")
        if self.tag == RingTag.RAT:
            return Scalar(self, Fraction(value))
        as_fraction = Fraction(value)
        if as_fraction.denominator != 1:
            raise ScalarParseError(f"{value} is not an element of {self}")
        n = as_fraction.numerator
        if self.tag == RingTag.NAT and n < 0:
            raise ScalarParseError(f"{n} is not a natural number")
        if self.tag == RingTag.BOOL:
            if n not in (0, 1):
                raise ScalarParseError(f"{n} is not a Boolean")
        return Scalar(self, n)

    def from_int(self, n: int) -> "Scalar":
        """The image of n under the unique semiring map from the naturals (n·1)."""
        if self.tag == RingTag.BOOL:
            return self.scalar(1 if n else 0)
        return self.scalar(n)

    def elements(self, count: int) -> List["Scalar"]:
        """First ``count`` elements of a fixed enumeration by height."""
        if self.tag == RingTag.BOOL:
            return [self.scalar(0), self.scalar(1)][:count]
        if self.tag == RingTag.NAT:
            return [self.scalar(n) for n in range(count)]
        if self.tag == RingTag.INT:
            out = [self.scalar(0)]
            n = 1
            while len(out) < count:
                out.extend([self.scalar(n), self.scalar(-n)])
                n += 1
            return out[:count]
        rationals = _enumerate_rationals()
        if self.tag == RingTag.RAT:
            return [self.scalar(next(rationals)) for _ in range(count)]
        # pairs enumerated by the sum of their component indices
        base: List[Fraction] = []
        out = []
        diagonal = 0
        while len(out) < count:
            while len(base) <= diagonal:
                base.append(next(rationals))
            for i in range(diagonal + 1):
                out.append(self.scalar(base[i], base[diagonal - i]))
                if len(out) == count:
                    break
            diagonal += 1
        return out


def _enumerate_rationals() -> Iterator[Fraction]:
    yield Fraction(0)
    height = 1
    while True:
        for q in range(1, height + 1):
            for p in range(0, height + 1):
                if max(p, q) != height or gcd(p, q) != 1 or p == 0:
                    continue
                yield Fraction(p, q)
                yield Fraction(-p, q)
        height += 1


NAT = ScalarRing(RingTag.NAT)
BOOL = ScalarRing(RingTag.BOOL)
INT = ScalarRing(RingTag.INT)
RAT = ScalarRing(RingTag.RAT)
GAUSS = ScalarRing(RingTag.GAUSS)
QSQRT2 = ScalarRing(RingTag.QUAD, 2)

SHIPPED_RINGS: Tuple[ScalarRing, ...] = (NAT, BOOL, INT, RAT, GAUSS, QSQRT2)
FIELD_RINGS: Tuple[ScalarRing, ...] = (RAT, GAUSS, QSQRT2)

_RING_ALIASES = {"nat": NAT, "bool": BOOL, "int": INT, "rat": RAT, "gauss": GAUSS}


def ring_from_name(name: str) -> ScalarRing:
    """Parse ``nat``, ``bool``, ``int``, ``rat``, ``gauss`` or ``qsqrt<d>``."""
    key = name.strip().lower()
    if key in _RING_ALIASES:
        return _RING_ALIASES[key]
    match = re.fullmatch(r"qsqrt(\d+)", key)
    if match:
        return ScalarRing(RingTag.QUAD, int(match.group(1)))
    raise ValueError(f"unknown ring {name!r}")


def _check_same(a: "Scalar", b: "Scalar") -> ScalarRing:
    if not isinstance(b, Scalar):
        raise TypeError(f"expected Scalar, got {type(b).__name__}")
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    return a.ring


@dataclass(frozen=True)
class Scalar:
    """An element of a ScalarRing; ``value`` is int, Fraction or a pair of Fractions."""

    ring: ScalarRing
    value: Any

    def _coerce(self, other: Union["Scalar", int]) -> "Scalar":
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other) if other >= 0 else -self.ring.from_int(-other)
        return other

    def __add__(self, other: Union["Scalar", int]) -> "Scalar":
        other = self._coerce(other)
        ring = _check_same(self, other)
        a, b = self.value, other.value
        if ring.tag == RingTag.BOOL:
            return Scalar(ring, a | b)
        if ring.tag in _PAIR_TAGS:
            return Scalar(ring, (a[0] + b[0], a[1] + b[1]))
        return Scalar(ring, a + b)

    __radd__ = __add__

    def __mul__(self, other: Union["Scalar", int]) -> "Scalar":
        other = self._coerce(other)
        ring = _check_same(self, other)
        a, b = self.value, other.value
        if ring.tag == RingTag.BOOL:
            return Scalar(ring, a & b)
        if ring.tag == RingTag.GAUSS:
            return Scalar(ring, (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]))
        if ring.tag == RingTag.QUAD:
            return Scalar(ring, (a[0] * b[0] + ring.d * a[1] * b[1], a[0] * b[1] + a[1] * b[0]))
        return Scalar(ring, a * b)

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        if not self.ring.has_negation:
            if self.is_zero():
                return self
            raise NoNegationError(f"{self} has no additive inverse in {self.ring}")
        if self.ring.tag in _PAIR_TAGS:
            return Scalar(self.ring, (-self.value[0], -self.value[1]))
        return Scalar(self.ring, -self.value)

    def __sub__(self, other: Union["Scalar", int]) -> "Scalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "Scalar":
        return self._coerce(other) + (-self)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * invert(self._coerce(other))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        if self.ring.tag in _PAIR_TAGS:
            return self.value[0] == 0 and self.value[1] == 0
        return self.value == 0

    def is_one(self) -> bool:
        return self == self.ring.one()

    @property
    def real_part(self) -> Fraction:
        """Rational component (the whole value for one-component rings)."""
        if self.ring.tag in _PAIR_TAGS:
            return self.value[0]
        return Fraction(self.value)

    def height(self) -> int:
        """Largest absolute numerator among the components."""
        if self.ring.tag in _PAIR_TAGS:
            return max(abs(self.value[0].numerator), abs(self.value[1].numerator))
        return abs(Fraction(self.value).numerator)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({self.ring.name}, {format_scalar(self)!r})"


# -- involution, positivity, order -----------------------------------------

def involute(s: Scalar) -> Scalar:
    """The semilinear involution ‡: conjugation on Q(i), identity elsewhere."""
    if s.ring.involution_kind == InvolutionKind.CONJUGATION:
        return Scalar(s.ring, (s.value[0], -s.value[1]))
    return s


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def quad_sign(a: Fraction, b: Fraction, d: int) -> int:
    """Sign of the real number a + b·sqrt(d), decided exactly."""
    if a >= 0 and b >= 0:
        return 0 if a == 0 and b == 0 else 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a² with d·b²
    if a > 0:
        return _sign(a * a - d * b * b)
    return _sign(d * b * b - a * a)


def is_positive(s: Scalar) -> bool:
    """True iff s is a finite sum of elements t‡t (the additive closure of S⁺)."""
    tag = s.ring.tag
    if tag in (RingTag.NAT, RingTag.BOOL):
        return True
    if tag in (RingTag.INT, RingTag.RAT):
        return s.value >= 0
    if tag == RingTag.GAUSS:
        return s.value[1] == 0 and s.value[0] >= 0
    a, b = s.value
    d = s.ring.d
    # totally nonnegative: both real embeddings
    return quad_sign(a, b, d) >= 0 and quad_sign(a, -b, d) >= 0


def is_strictly_positive(s: Scalar) -> bool:
    return is_positive(s) and not s.is_zero()


def leq(r: Scalar, s: Scalar) -> bool:
    """r ≤ s iff r + p = s for some positive p."""
    ring = _check_same(r, s)
    if ring.tag == RingTag.NAT:
        return r.value <= s.value
    if ring.tag == RingTag.BOOL:
        return any((r.value | p) == s.value for p in (0, 1))
    return is_positive(s - r)


def _greedy_squares(n: int) -> List[int]:
    """Integers whose squares sum to n ≥ 0 (greedy; O(log log n) terms)."""
    terms = []
    while n > 0:
        root = isqrt(n)
        terms.append(root)
        n -= root * root
    return terms


def _rational_squares(q: Fraction) -> List[Fraction]:
    # p/q = (p·q)/q²
    return [Fraction(t, q.denominator) for t in _greedy_squares(q.numerator * q.denominator)]


def _quad_square_part(a: Fraction, b: Fraction, d: int) -> Tuple[Fraction, Fraction]:
    """x, y with 2xy = b and x² + d·y² ≤ a, for a + b·sqrt(d) totally positive."""
    target = b * b / (4 * d)  # y⁴ at the optimum
    for bits in range(0, 256):
        scale = 1 << bits
        y = Fraction(isqrt(isqrt(floor(target * scale ** 4))), scale)
        if y == 0:
            continue
        x = b / (2 * y)
        if x * x + d * y * y <= a:
            return x, y
    raise NotPositiveError(f"no square part found for {a}+{b}*sqrt({d})")


def sum_of_squares(s: Scalar) -> Tuple[Scalar, ...]:
    """Witness terms t₁..t_k with s = Σ tᵢ‡tᵢ; raises NotPositiveError otherwise."""
    if not is_positive(s):
        raise NotPositiveError(f"{s} is not a sum of elements t‡t in {s.ring}")
    ring = s.ring
    if ring.tag == RingTag.BOOL:
        return (ring.one(),) if s.value else ()
    if ring.tag in (RingTag.NAT, RingTag.INT):
        return tuple(ring.scalar(t) for t in _greedy_squares(s.value))
    if ring.tag == RingTag.RAT:
        return tuple(ring.scalar(t) for t in _rational_squares(s.value))
    a, b = s.value
    if b == 0:
        return tuple(ring.scalar(t) for t in _rational_squares(a))
    x, y = _quad_square_part(a, b, ring.d)
    rest = a - x * x - ring.d * y * y
    return (ring.scalar(x, y),) + tuple(ring.scalar(t) for t in _rational_squares(rest))


# -- structural checks -------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    """Outcome of a bounded search: pass, or the first counterexample found."""

    passed: bool
    witness: Optional[tuple] = None
    cases: int = 0


def _sample_size(budget: int, arity: int) -> int:
    return max(1, int(round(budget ** (1.0 / arity))))


def _elements(ring, budget: int, arity: int) -> list:
    count = _sample_size(budget, arity)
    return list(ring.elements(count))


def is_zerosumfree(ring, budget: int = 10_000) -> CheckResult:
    """Search pairs s, t with s + t = 0 but (s, t) ≠ (0, 0)."""
    elements = _elements(ring, budget, 2)
    zero = ring.zero()
    cases = 0
    for s in elements:
        for t in elements:
            cases += 1
            if s + t == zero and not (s == zero and t == zero):
                return CheckResult(False, (s, t), cases)
    return CheckResult(True, None, cases)


def positives_zerosumfree(ring, budget: int = 10_000) -> CheckResult:
    """Zerosumfree-ness restricted to S⁺ (sampled as elements t‡t)."""
    elements = [involute(t) * t for t in _elements(ring, budget, 2)]
    zero = ring.zero()
    cases = 0
    for s in elements:
        for t in elements:
            cases += 1
            if s + t == zero and not (s == zero and t == zero):
                return CheckResult(False, (s, t), cases)
    return CheckResult(True, None, cases)


def is_mult_cancellative(ring, budget: int = 10_000) -> CheckResult:
    """Search triples (s, r, t) with s ≠ 0, s·r = s·t and r ≠ t."""
    elements = _elements(ring, budget, 3)
    zero = ring.zero()
    cases = 0
    for s in elements:
        if s == zero:
            continue
        for r in elements:
            for t in elements:
                if r == t:
                    continue
                cases += 1
                if s * r == s * t:
                    return CheckResult(False, (s, r, t), cases)
    return CheckResult(True, None, cases)


def char_zero_check(ring: ScalarRing, n_max: int = 1000) -> CheckResult:
    """Verify n·1 ≠ 0 for 1 ≤ n ≤ n_max by repeated addition."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    one = ring.one()
    total = ring.zero()
    for n in range(1, n_max + 1):
        total = total + one
        if total.is_zero():
            return CheckResult(False, (n,), n)
    return CheckResult(True, None, n_max)


def invert(s: Scalar) -> Scalar:
    """Multiplicative inverse in a (semi)field."""
    ring = s.ring
    if not ring.is_semifield:
        raise NoInverseError(f"no inverse: {ring} is not a semifield")
    if s.is_zero():
        raise NoInverseError("no inverse: zero input")
    if ring.tag == RingTag.BOOL:
        return s
    if ring.tag == RingTag.RAT:
        return Scalar(ring, 1 / s.value)
    a, b = s.value
    if ring.tag == RingTag.GAUSS:
        norm = a * a + b * b
        return Scalar(ring, (a / norm, -b / norm))
    norm = a * a - ring.d * b * b
    return Scalar(ring, (a / norm, -b / norm))


# -- homomorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class SemiringHom:
    """An involution-preserving semiring map, applied elementwise."""

    name: str
    source: ScalarRing
    target: ScalarRing
    action: Callable[[Any], Any] = field(compare=False, repr=False)
    surjective: bool = False


def hom_apply(h: SemiringHom, s: Scalar) -> Scalar:
    if s.ring != h.source:
        raise RingMismatchError(f"{h.name} expects {h.source}, got {s.ring}")
    return h.target.scalar(h.action(s.value))


SHIPPED_HOMS: Dict[str, SemiringHom] = {
    "q-to-qi": SemiringHom("q-to-qi", RAT, GAUSS, lambda v: (v, 0)),
    "q-to-qsqrt2": SemiringHom("q-to-qsqrt2", RAT, QSQRT2, lambda v: (v, 0)),
    "nat-to-int": SemiringHom("nat-to-int", NAT, INT, lambda v: v),
}


def hom_from_name(name: str) -> SemiringHom:
    try:
        return SHIPPED_HOMS[name]
    except KeyError:
        raise ValueError(f"unknown extension {name!r}; expected one of {', '.join(SHIPPED_HOMS)}") from None


# -- serialization ------------------------------------------------------------

def _fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def format_scalar(s: Scalar) -> str:
    tag = s.ring.tag
    if tag in _INT_TAGS:
        return str(s.value)
    if tag == RingTag.RAT:
        return _fmt_fraction(s.value)
    a, b = s.value
    sign = "+" if b >= 0 else "-"
    unit = "i" if tag == RingTag.GAUSS else f"sqrt({s.ring.d})"
    return f"{_fmt_fraction(a)}{sign}{_fmt_fraction(abs(b))}*{unit}"


_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_INT_RE = re.compile(r"[+-]?\d+")
_RAT_RE = re.compile(_RATIONAL)
_PAIR_RE = re.compile(rf"(?P<re>{_RATIONAL})(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)\*(?P<unit>i|sqrt\((?P<d>\d+)\))")


def _parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(ring: ScalarRing, text: str) -> Scalar:
    """Inverse of format_scalar; also accepts a bare rational for two-component rings."""
    text = text.strip()
    tag = ring.tag
    if tag in _INT_TAGS:
        if not _INT_RE.fullmatch(text):
            raise ScalarParseError(f"{text!r} is not a {ring} scalar")
        return ring.scalar(int(text))
    if tag == RingTag.RAT:
        if not _RAT_RE.fullmatch(text):
            raise ScalarParseError(f"{text!r} is not a rational")
        return ring.scalar(_parse_fraction(text))
    if _RAT_RE.fullmatch(text):
        return ring.scalar(_parse_fraction(text), 0)
    match = _PAIR_RE.fullmatch(text)
    if not match:
        raise ScalarParseError(f"{text!r} is not a {ring} scalar")
    unit_ok = match.group("unit") == "i" if tag == RingTag.GAUSS else match.group("d") == str(ring.d)
    if not unit_ok:
        raise ScalarParseError(f"{text!r} has the wrong unit for {ring}")
    imag = _parse_fraction(match.group("im"))
    if match.group("sign") == "-":
        imag = -imag
    return ring.scalar(_parse_fraction(match.group("re")), imag)
