"""
Demo script for hilbcat.

This demo walks through:
1. Objects and the dagger on a weighted Gram matrix
2. Kernels, cokernels and the three factorizations
3. Extension of scalars and the non-fullness search
4. An asynchronous property audit with streamed reports
5. Observability (Logging, Tracing, Metrics)

Usage:
    python create_sample_fixtures.py   # optional, fills input/
    python demo.py

    # Results will be saved to output/ folder:
    # - output/logs/    - Log files
    # - output/reports/ - audit.json and audit.txt
"""

import asyncio
import json
import sys
import time
from pathlib import Path

# Add repo root to path
repo_root = Path(__file__).resolve().parent
if str(repo_root) not in sys.path:
    sys.path.insert(0, str(repo_root))

from hilbcat.config import AuditConfiguration
from hilbcat.dagcat import FactorizationKind, cokernel, dagger, factor, kernel
from hilbcat.functors import extend_mor, extension_from_name, find_bound, non_fullness_demo
from hilbcat.hilbmod import make_morphism, make_object
from hilbcat.laws import SuiteRunner, write_reports
from hilbcat.laws.report import render_text
from hilbcat.observability import log_suite_event, metrics, setup_logging, tracer
from hilbcat.paths import REPORTS_DIR, ensure_directories, list_input_files
from hilbcat.scalars import RAT, format_scalar
from hilbcat.tools import factor_fixture


def show(label, f):
    rows = [[format_scalar(a) for a in row] for row in f.mat.entries]
    print(f"  {label}: {f.dom.dim} -> {f.cod.dim} {rows}")


def demo_dagger():
    print("\n" + "=" * 80)
    print("DEMO 1: Objects and the dagger")
    print("=" * 80)

    x = make_object(RAT, 2, [[1, 0], [0, 2]])
    f = make_morphism(x, x, [[0, 1], [0, 0]])
    show("f", f)
    show("dagger(f)", dagger(f))
    print(f"  dagger(dagger(f)) == f: {dagger(dagger(f)) == f}")


def demo_factorization():
    print("\n" + "=" * 80)
    print("DEMO 2: Kernels, cokernels and factorizations")
    print("=" * 80)

    x = make_object(RAT, 2, [[1, 0], [0, 2]])
    y = make_object(RAT, 1, [[1]])
    total = make_morphism(x, y, [[1, 1]])
    show("sum", total)
    show("kernel(sum)", kernel(total))
    show("cokernel(dagger(sum))", cokernel(dagger(total)))

    for kind in FactorizationKind:
        fact = factor(total, kind)
        status = "ok" if all(fact.checks().values()) else "FAILED"
        print(f"  [{kind.value}] epi {fact.epi.dom.dim}->{fact.epi.cod.dim}, "
              f"mono {fact.mono.dom.dim}->{fact.mono.cod.dim}: {status}")

    inputs = list_input_files()
    if inputs:
        print(f"\n📂 Factoring {inputs[0].name} from input/...")
        result = factor_fixture(str(inputs[0]))
        for line in result.get("transcript", [result.get("error")]):
            print(f"  {line}")


def demo_functors():
    print("\n" + "=" * 80)
    print("DEMO 3: Extension of scalars and non-fullness")
    print("=" * 80)

    ext = extension_from_name("q-to-qsqrt2")
    x = make_object(RAT, 2, [[2, 1], [1, 1]])
    f = make_morphism(x, x, [[1, 2], [3, -1]])
    bound = find_bound(f)
    show("f", f)
    show(f"f along {ext.hom.name}", extend_mor(ext, f))
    print(f"  bound for f: {format_scalar(bound.value)}")

    report = non_fullness_demo()
    print(f"\n🔍 Summand swap over the {report.monoid} monoid:")
    print(json.dumps(report.to_dict(), indent=2))


async def demo_audit(logger):
    print("\n" + "=" * 80)
    print("DEMO 4: Property audit")
    print("=" * 80)

    settings = AuditConfiguration(
        ring="rat",
        suites=("dagger-laws", "mono-kernel", "factorization", "semifield"),
        samples=10,
        jobs=2,
    )
    runner = SuiteRunner(settings)
    reports = []
    trace_id = tracer.start_trace("demo_audit", metadata={"ring": settings.ring})
    last = time.perf_counter()
    async for event in runner.run_async():
        if event.is_final_response():
            reports = event.reports
        else:
            now = time.perf_counter()
            tracer.add_span(trace_id, event.report.suite, (now - last) * 1000, {"cases": event.report.cases_run})
            last = now
            log_suite_event(logger, "suite_complete", event.report.suite, status=event.report.status.value)
            metrics.increment("suites.completed")
            metrics.histogram("suite.cases", event.report.cases_run)
    print(render_text(reports), end="")
    for path in write_reports(reports, REPORTS_DIR, {"ring": settings.ring, "seed": settings.seed}):
        print(f"  wrote {path}")
    return tracer.end_trace(trace_id)


def demo_observability(trace_data):
    print("\n" + "=" * 80)
    print("DEMO 5: Observability (Tracing, Metrics)")
    print("=" * 80)

    print(f"\n📊 Trace Data:\n{json.dumps(trace_data, indent=2)}")
    print(f"\n📈 Metrics:\n{json.dumps(metrics.get_metrics(), indent=2)}")
    metrics.reset()


async def main():
    """Run all demos."""
    print("\n" + "=" * 80)
    print("HILBCAT DEMO")
    print("=" * 80)

    ensure_directories()
    logger = setup_logging(level="INFO", structured=False, log_file="demo_run.log")

    try:
        demo_dagger()
        demo_factorization()
        demo_functors()
        trace_data = await demo_audit(logger)
        demo_observability(trace_data)

        print("\n" + "=" * 80)
        print("✅ ALL DEMOS COMPLETED SUCCESSFULLY!")
        print("=" * 80)
        print(f"\n📊 Check the output/ folder for:")
        print(f"   - Reports: output/reports/")
        print(f"   - Logs: output/logs/demo_run.log")

    except KeyboardInterrupt:
        print("\n\n⚠️  Demo interrupted by user")
    except Exception as e:
        print(f"\n\n❌ Error during demo: {e}")
        import traceback
        traceback.print_exc()


if __name__ == "__main__":
    asyncio.run(main())
