"""The audit catalogue: one suite per group of properties.

A suite declares which rings it applies to and on which rings it is
expected to fail. ``run_suite`` turns a suite body into an AuditReport.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Tuple

from ..dagcat import FactorizationKind, compose, kernel
from ..errors import HilbcatError, UnknownSuiteError
from ..fixtures import Fixture
from ..functors import SHIPPED_MONOIDS, Bound, find_bound
from ..hilbmod import HObject, unit_object
from ..observability import log_suite_event, metrics, tracer
from ..scalars import SHIPPED_HOMS, RingTag, ScalarRing
from ..semimodules import SHIPPED_MODULES, module_from_name
from .generators import InstanceGenerator
from .properties import ORACLE_VECTORS, SuiteContext
from .report import AuditReport, PropertyFailure, SuiteStatus

logger = logging.getLogger(__name__)

SuiteBody = Callable[[SuiteContext], None]

# pairs of finite semimodules whose tensor quotient is small enough to check exhaustively;
# B^3 (x) B^3 has 512 classes and its cubic validation takes minutes, so it is left out
TENSOR_PAIRS = (
    ("B", "B^2"), ("B^2", "B^2"), ("B^3", "B"), ("B^3", "B^2"), ("B^3", "chain3"),
    ("chain3", "B"), ("chain3", "B^2"), ("chain3", "chain3"),
)


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    body: SuiteBody
    applies: Callable[[ScalarRing], bool]
    expected_fail: FrozenSet[RingTag] = frozenset()
    scope: str = "all rings"


SUITES: Dict[str, Suite] = {}


def _all(ring: ScalarRing) -> bool:
    return True


def _fields(ring: ScalarRing) -> bool:
    return ring.is_field


def suite(name: str, description: str, applies: Callable[[ScalarRing], bool] = _all,
          expected_fail: Tuple[RingTag, ...] = (), scope: str = "all rings") -> Callable[[SuiteBody], SuiteBody]:
    def register(body: SuiteBody) -> SuiteBody:
        SUITES[name] = Suite(name, description, body, applies, frozenset(expected_fail), scope)
        return body

    return register


def _homs_from(ring: ScalarRing) -> Tuple[str, ...]:
    return tuple(name for name, h in SHIPPED_HOMS.items() if h.source == ring)


def _small_object(gen: InstanceGenerator) -> HObject:
    return gen.object(gen.integer(1, min(2, gen.max_dim)))


# -- scalars ------------------------------------------------------------------------------

@suite("scalar-laws", "commutative semiring, involution and order axioms on sampled scalars")
def scalar_laws(ctx: SuiteContext) -> None:
    gen, ring = ctx.gen, ctx.ring
    homs = _homs_from(ring)
    for _ in range(ctx.samples):
        r, s, t = gen.scalars(3)
        ctx.check("add-associative", r, s, t)
        ctx.check("add-commutative", r, s)
        ctx.check("add-unit", s)
        ctx.check("mul-associative", r, s, t)
        ctx.check("mul-commutative", r, s)
        ctx.check("mul-unit", s)
        ctx.check("distributive", r, s, t)
        ctx.check("zero-absorbs", s)
        ctx.check("involution-involutive", s)
        ctx.check("involution-additive", r, s)
        ctx.check("involution-multiplicative", r, s)
        ctx.check("norm-positive", s)
        ctx.check("leq-reflexive", s)
        ctx.check("leq-transitive", r, s, t)
        ctx.check("leq-compatible", r, s, t)
        ctx.check("sum-of-squares", s)
        if ring.tag != RingTag.QUAD:
            ctx.check("leq-matches-order", r, s)
        for name in homs:
            ctx.check("hom-monotone", name, r, s)


@suite("scalar-flags", "zerosumfree, positives zerosumfree, cancellative and negation flags")
def scalar_flags(ctx: SuiteContext) -> None:
    ring = ctx.ring
    ctx.check("zerosumfree-flag", ring, 10_000)
    ctx.check("positives-zerosumfree", ring, 10_000)
    ctx.check("mult-cancellative", ring, 10_000)
    ctx.check("negation-flag", ring)


@suite("semifield", "every nonzero scalar is invertible",
       expected_fail=(RingTag.NAT, RingTag.INT))
def semifield(ctx: SuiteContext) -> None:
    ctx.check("invertible", ctx.ring.from_int(2))
    for _ in range(ctx.samples):
        ctx.check("invertible", ctx.gen.nonzero_scalar())


@suite("field", "additive inverses and inverses of nonzero scalars",
       expected_fail=(RingTag.NAT, RingTag.BOOL, RingTag.INT))
def field(ctx: SuiteContext) -> None:
    ctx.check("field-element", ctx.ring.from_int(2))
    for _ in range(ctx.samples):
        ctx.check("field-element", ctx.gen.scalar())


@suite("char-zero", "n·1 never vanishes; n-fold (co)diagonals of the unit")
def char_zero(ctx: SuiteContext) -> None:
    ring, gen = ctx.ring, ctx.gen
    ctx.check("char-zero", ring, 1000)
    if not ring.is_field:
        ctx.note(f"diagonal checks need a Gram model; {ring} is checked on scalars only")
        return
    unit = unit_object(ring)
    for n in range(1, min(ctx.samples, 8) + 1):
        ctx.check("n-fold-diagonal", unit, n)
    for _ in range(ctx.samples):
        ctx.check("scalar-multiple", gen.morphism(), gen.integer(0, 5))


@suite("simple-generator", "scalars are zero or invertible; I is simple and separates morphisms",
       applies=lambda ring: ring.is_semifield, scope="semifields")
def simple_generator(ctx: SuiteContext) -> None:
    ring, gen = ctx.ring, ctx.gen
    for _ in range(ctx.samples):
        ctx.check("scalar-dichotomy", gen.scalar())
    if not ring.is_field:
        ctx.note(f"generator check skipped: no Gram model over {ring}")
        return
    unit = unit_object(ring)
    for _ in range(ctx.samples):
        ctx.check("unit-subobjects", gen.dagger_mono(unit))
        ctx.check("unit-separates", *gen.parallel_pair())
        obj = gen.object()
        ctx.check("unit-point", obj, list(gen.vector(obj).column_values(0)))


# -- dagger structure ----------------------------------------------------------------------

@suite("dagger-laws", "dagger functor, adjoint identity, inner product and enrichment", applies=_fields,
       scope="fields")
def dagger_laws(ctx: SuiteContext) -> None:
    gen = ctx.gen
    for _ in range(ctx.samples):
        f, g = gen.composable_pair()
        ctx.check("dagger-involutive", f)
        ctx.check("dagger-contravariant", f, g)
        ctx.check("dagger-identity", f.dom)
        ctx.check("adjoint-identity", f, gen.vector(f.dom), gen.vector(f.cod))
        x, y = gen.vector(f.dom), gen.vector(f.dom)
        ctx.check("inner-symmetric", f.dom, x, y)
        ctx.check("inner-positive", f.dom, x)
        p, q = gen.parallel_pair()
        ctx.check("add-enrichment", p, q)
        ctx.check("scalar-enrichment", gen.scalar(), p)
        ctx.check("scalar-unit", p)
        ctx.check("composition-bilinear", p, q, gen.morphism(dom=p.cod))


@suite("pre-hilbert-axiom", "dagger kernels, cokernels and equalizers; dagger monos are kernels",
       applies=_fields, scope="fields")
def pre_hilbert_axiom(ctx: SuiteContext) -> None:
    gen = ctx.gen
    for _ in range(ctx.samples):
        ctx.check("dagger-mono-is-kernel", gen.dagger_mono())
        f = gen.morphism()
        ctx.check("kernel-is-dagger-mono", f)
        ctx.check("cokernel-is-dagger-epi", f)
        if gen.choice(0.5):
            k = kernel(f)
            h = compose(k, gen.morphism(cod=k.dom))
        else:
            h = gen.morphism(cod=f.dom)
        ctx.check("kernel-universal", f, h)
        ctx.check("equalizer", *gen.parallel_pair())


@suite("epi-dagger-iso", "epic dagger monos, monic dagger epis and dagger epi cancellation",
       applies=_fields, scope="fields")
def epi_dagger_iso(ctx: SuiteContext) -> None:
    gen = ctx.gen
    for _ in range(ctx.samples):
        obj = gen.object()
        full = gen.choice(0.5)
        ctx.check("epic-dagger-mono-is-iso", gen.dagger_mono(obj, obj.dim if full else None))
        ctx.check("monic-dagger-epi-is-iso", gen.dagger_epi(obj, obj.dim if full else None))
        f = gen.dagger_epi()
        g = gen.dagger_epi(f.cod) if gen.choice(0.5) else gen.morphism(dom=f.cod)
        ctx.check("dagger-epi-cancellation", f, g)


@suite("mono-kernel", "a morphism is monic exactly when its kernel is zero", applies=_fields, scope="fields")
def mono_kernel(ctx: SuiteContext) -> None:
    gen = ctx.gen
    for _ in range(ctx.samples):
        f = gen.mono() if gen.choice(0.5) else gen.morphism()
        ctx.check("mono-iff-trivial-kernel", f)
        ctx.check("rank-nullity", f)


@suite("factorization", "every morphism factors in each of the three shapes", applies=_fields, scope="fields")
def factorization(ctx: SuiteContext) -> None:
    for _ in range(ctx.samples):
        f = ctx.gen.morphism()
        for kind in FactorizationKind:
            ctx.check("factorization-valid", f, kind.value)


@suite("factorization-uniqueness", "factorizations from both pivot orders are connected by a dagger iso",
       applies=_fields, scope="fields")
def factorization_uniqueness(ctx: SuiteContext) -> None:
    for _ in range(ctx.samples):
        f = ctx.gen.morphism()
        for kind in FactorizationKind:
            ctx.check("factorizations-connect", f, kind.value)
            ctx.check("self-connection", f, kind.value)


# -- products ---------------------------------------------------------------------------------

@suite("biproducts", "dagger biproduct equations, block Gram matrices and functoriality",
       applies=_fields, scope="fields")
def biproducts(ctx: SuiteContext) -> None:
    gen = ctx.gen
    for _ in range(ctx.samples):
        x, y = gen.object(), gen.object()
        ctx.check("biproduct-laws", x, y)
        ctx.check("biproduct-gram", x, y)
        ctx.check("biproduct-dagger", gen.morphism(), gen.morphism())
        f1, g1 = gen.composable_pair()
        f2, g2 = gen.composable_pair()
        ctx.check("biproduct-functorial", f1, g1, f2, g2)


@suite("monoidal", "Kronecker tensor, dagger coherence isos, pentagon, triangle and hexagon",
       applies=_fields, scope="fields")
def monoidal(ctx: SuiteContext) -> None:
    gen = ctx.gen
    for _ in range(ctx.samples):
        w, x, y, z = (_small_object(gen) for _ in range(4))
        ctx.check("tensor-gram", x, y)
        ctx.check("tensor-dagger", gen.morphism(w, x), gen.morphism(y, z))
        ctx.check("tensor-functorial", gen.morphism(w, x), gen.morphism(x, y), gen.morphism(y, z), gen.morphism(z, w))
        ctx.check("coherence-dagger-iso", x, y, z)
        ctx.check("pentagon", w, x, y, z)
        ctx.check("triangle", x, y)
        ctx.check("hexagon", x, y, z)
        ctx.check("symmetry-involutive", x, y)


@suite("semimodules", "finite Boolean semimodules, their tensor quotients and Gram-level constructions")
def semimodules(ctx: SuiteContext) -> None:
    for name in SHIPPED_MODULES:
        ctx.check("fsm-axioms", name)
        ctx.check("fsm-strictness", name)
        ctx.check("fsm-identity-adjoint", name)
        ctx.check("fsm-tensor-unit", name)
        if module_from_name(name).size <= 4:
            ctx.check("fsm-join-adjoint", name)
    ctx.check("fsm-scalar-module")
    for left, right in TENSOR_PAIRS:
        ctx.check("fsm-biproduct", left, right)
        ctx.check("fsm-tensor-well-defined", left, right)
    if not ctx.ring.is_field:
        return
    gen = ctx.gen
    for _ in range(ctx.samples):
        x, y = gen.object(), gen.object()
        ctx.check("biproduct-gram", x, y)
        ctx.check("tensor-gram", x, y)


# -- functors -----------------------------------------------------------------------------------

@suite("hom-embedding", "H(I, −) preserves the dagger structure, kernels and tensors", applies=_fields,
       scope="fields")
def hom_embedding(ctx: SuiteContext) -> None:
    gen = ctx.gen
    for _ in range(ctx.samples):
        f, g = gen.composable_pair()
        ctx.check("hom-embed-witness", f.dom)
        ctx.check("hom-embed-identity", f.dom)
        ctx.check("hom-embed-composition", f, g)
        ctx.check("hom-embed-dagger", f)
        ctx.check("hom-embed-biproduct", f, g)
        ctx.check("hom-embed-kernel", f)
        ctx.check("hom-embed-equalizer", *gen.parallel_pair())
        x, y = _small_object(gen), _small_object(gen)
        ctx.check("monoidal-witness", x, y)
        ctx.check("monoidal-naturality", gen.morphism(x, y), gen.morphism(y, x))


@suite("fullness", "every module map between hom modules comes from a morphism", applies=_fields,
       scope="fields")
def fullness(ctx: SuiteContext) -> None:
    for _ in range(ctx.samples):
        ctx.check("full-preimage", ctx.gen.morphism())


@suite("extension", "extension of scalars along the shipped ring monomorphisms",
       applies=lambda ring: bool(_homs_from(ring)) and ring.is_field, scope="sources of shipped extensions")
def extension(ctx: SuiteContext) -> None:
    gen = ctx.gen
    homs = _homs_from(ctx.ring)
    for name in homs:
        ctx.check("extension-hom-laws", name)
        ctx.check("extension-unit", name)
    for _ in range(ctx.samples):
        f, g = gen.composable_pair()
        p = gen.morphism(f.dom, f.cod)
        x, y = gen.object(), gen.object()
        small_f = gen.morphism(_small_object(gen), _small_object(gen))
        small_g = gen.morphism(_small_object(gen), _small_object(gen))
        for name in homs:
            ctx.check("extension-composition", name, f, g)
            ctx.check("extension-dagger", name, f)
            ctx.check("extension-faithful", name, f, p)
            ctx.check("extension-biproduct", name, x, y)
            ctx.check("extension-tensor", name, small_f, small_g)
            ctx.check("extension-kernels", name, f)


@suite("non-fullness", "the summand swap on X ⊕ X has no preimage along naturals to integers")
def non_fullness(ctx: SuiteContext) -> None:
    for name in SHIPPED_MONOIDS:
        ctx.check("swap-not-in-image", name)


@suite("boundedness", "found bounds pass the PSD test and every sampled vector", applies=_fields,
       scope="fields")
def boundedness(ctx: SuiteContext) -> None:
    gen, ring = ctx.gen, ctx.ring
    homs = _homs_from(ring)
    half = ring.scalar(Fraction(1, 2))
    for _ in range(ctx.samples):
        f = gen.morphism()
        ctx.check("found-bound-valid", f)
        bound = find_bound(f)
        xs = [gen.vector(f.dom) for _ in range(ctx.oracle_vectors)]
        ctx.check("bound-oracle-agreement", bound, f, xs)
        ctx.check("bound-oracle-agreement", Bound(bound.value * half), f, xs)
        for name in homs:
            ctx.check("bound-preserved", name, f)


SUITE_NAMES: Tuple[str, ...] = tuple(SUITES)


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuiteError(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}") from None


def _status(failed: bool, expected_fail: bool) -> SuiteStatus:
    if failed:
        return SuiteStatus.EXPECTED_FAIL if expected_fail else SuiteStatus.FAIL
    return SuiteStatus.UNEXPECTED_PASS if expected_fail else SuiteStatus.PASS


def run_suite(name: str, ring: ScalarRing, gen: InstanceGenerator, samples: int,
              oracle_vectors: int = ORACLE_VECTORS) -> AuditReport:
    """Run one suite on ``ring`` with a generator derived from ``gen`` and the suite name.

    Each run leaves a ``suite.<name>`` trace with one span per checked property.
    """
    entry = get_suite(name)
    if not entry.applies(ring):
        log_suite_event(logger, "skipped", name, ring=ring.name)
        return AuditReport(name, ring.name, gen.seed, 0, status=SuiteStatus.SKIPPED,
                           note=f"applies to {entry.scope}, not {ring}")
    ctx = SuiteContext(ring, gen.for_suite(name), samples, oracle_vectors=oracle_vectors)
    trace_id = tracer.start_trace(f"suite.{name}", {"ring": ring.name, "samples": samples})
    log_suite_event(logger, "started", name, ring=ring.name, trace_id=trace_id)
    start = time.time()
    try:
        entry.body(ctx)
    except HilbcatError as e:
        logger.error("suite %s aborted on %s: %s", name, ring, e)
        ctx.failed_cases += 1
        ctx.failures.append(PropertyFailure("suite-aborted", None, f"{type(e).__name__}: {e}"))
    duration_ms = (time.time() - start) * 1000
    for property_id, timing in ctx.timings.items():
        tracer.add_span(trace_id, property_id, timing.elapsed_ms,
                        {"cases": timing.cases, "failures": timing.failures})
    tracer.end_trace(trace_id)

    expected = ring.tag in entry.expected_fail
    status = _status(bool(ctx.failures), expected)
    if status == SuiteStatus.UNEXPECTED_PASS:
        ctx.note(f"expected to fail on {ring}")
    tags = {"suite": name}
    metrics.histogram("suite.duration_ms", duration_ms, tags)
    metrics.increment("suite.cases", ctx.cases, tags)
    metrics.increment("suite.failures", ctx.failed_cases, tags)
    metrics.increment(f"suite.{status.value}")
    log_suite_event(logger, "finished", name, ring=ring.name, cases=ctx.cases,
                    failures=len(ctx.failures), duration_ms=round(duration_ms, 1))
    return AuditReport(
        suite=name,
        ring=ring.name,
        seed=gen.seed,
        cases_run=ctx.cases,
        failures=tuple(ctx.failures),
        status=status,
        note="; ".join(ctx.notes),
        properties=tuple(ctx.properties),
    )


FIXTURE_SUITE = "fixture"


def run_fixture_suite(fixture: Fixture, seed: int) -> AuditReport:
    """Check the morphism-level properties on every morphism of a loaded fixture."""
    rings = {f.ring for f in fixture.morphisms.values()} | {x.ring for x in fixture.objects.values()}
    ring_name = ",".join(sorted(r.name for r in rings)) or "none"
    ctx = SuiteContext(next(iter(rings)) if len(rings) == 1 else None, None, 0)
    for obj in fixture.objects.values():
        if obj.ring.is_field:
            ctx.check("hom-embed-witness", obj)
            ctx.check("dagger-identity", obj)
    for name, f in fixture.morphisms.items():
        if not f.ring.is_field:
            ctx.note(f"{name} is over {f.ring}; no dagger to check")
            continue
        ctx.check("dagger-involutive", f)
        ctx.check("kernel-is-dagger-mono", f)
        ctx.check("cokernel-is-dagger-epi", f)
        ctx.check("mono-iff-trivial-kernel", f)
        for kind in FactorizationKind:
            ctx.check("factorization-valid", f, kind.value)
            ctx.check("factorizations-connect", f, kind.value)
        ctx.check("hom-embed-dagger", f)
        ctx.check("full-preimage", f)
        ctx.check("found-bound-valid", f)
    log_suite_event(logger, "finished", FIXTURE_SUITE, ring=ring_name, cases=ctx.cases, failures=len(ctx.failures))
    return AuditReport(
        suite=FIXTURE_SUITE,
        ring=ring_name,
        seed=seed,
        cases_run=ctx.cases,
        failures=tuple(ctx.failures),
        status=SuiteStatus.FAIL if ctx.failures else SuiteStatus.PASS,
        note="; ".join(ctx.notes),
        properties=tuple(ctx.properties),
    )
