"""Command implementations behind the CLI.

Each command returns a plain dict; failures come back as ``{"error": ...}``
instead of raising, so the front end only has to map them to exit codes.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .dagcat import FactorizationKind, connecting_iso, dagger, factor, factor_both_orders
from .errors import FactorizationMismatchError, HilbcatError
from .fixtures import Fixture, load_fixture, save_fixture
from .functors import (
    SHIPPED_MONOIDS,
    extend_mor,
    extend_object,
    extension_from_name,
    find_bound,
    non_fullness_demo,
    verify_bound_preserved,
)
from .paths import get_output_path

logger = logging.getLogger(__name__)


def _transcript_line(label: str, checks: Dict[str, bool]) -> str:
    marks = ", ".join(f"{name}={'ok' if ok else 'FAILED'}" for name, ok in checks.items())
    return f"{label}: {marks}"


def _write_transcript(lines: List[str], filename: str, out_dir: Optional[Union[str, Path]]) -> Path:
    path = get_output_path(filename, base=out_dir)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def factor_fixture(input_path: str, out_dir: Optional[Union[str, Path]] = None) -> dict:
    """
    Factor every morphism of a fixture in all three shapes.

    Args:
        input_path: Fixture file (relative to input/ or absolute)
        out_dir: Directory for the results (default: output/)

    Returns:
        Dictionary with the written files and the verification transcript, or error message
    """
    try:
        fixture = load_fixture(input_path)
    except HilbcatError as e:
        return {"error": f"Failed to load fixture: {e}"}
    if not fixture.morphisms:
        return {"error": f"No morphisms in {input_path}"}

    result = Fixture()
    transcript: List[str] = []
    all_valid = True
    try:
        for name, f in fixture.morphisms.items():
            if not f.ring.is_field:
                return {"error": f"morphism {name} is over {f.ring}; factorization needs a field"}
            for kind in FactorizationKind:
                fact = factor(f, kind)
                checks = fact.checks()
                first, second = factor_both_orders(f, kind)
                try:
                    connecting_iso(first, second)
                    checks["pivot orders connected"] = True
                except FactorizationMismatchError as e:
                    logger.warning("%s [%s]: %s", name, kind.value, e)
                    checks["pivot orders connected"] = False
                all_valid = all_valid and all(checks.values())
                transcript.append(_transcript_line(f"{name} [{kind.value}]", checks))
                result.add_morphism(f"{name}.{kind.value}.epi", fact.epi)
                if fact.middle is not None:
                    result.add_morphism(f"{name}.{kind.value}.middle", fact.middle)
                result.add_morphism(f"{name}.{kind.value}.mono", fact.mono)
    except HilbcatError as e:
        return {"error": f"Factorization failed: {e}"}

    stem = Path(input_path).stem
    fixture_path = save_fixture(result, get_output_path(f"{stem}.factor.json", base=out_dir))
    transcript_path = _write_transcript(transcript, f"{stem}.factor.txt", out_dir)
    logger.info("factored %d morphisms from %s", len(fixture.morphisms), input_path)
    return {
        "morphisms": list(fixture.morphisms),
        "valid": all_valid,
        "transcript": transcript,
        "files": [str(fixture_path), str(transcript_path)],
    }


def extend_fixture(hom_name: str, input_path: str, out_dir: Optional[Union[str, Path]] = None,
                   field_only: bool = False) -> dict:
    """
    Extend a fixture's scalars along a named ring monomorphism.

    Args:
        hom_name: "q-to-qi", "q-to-qsqrt2" or "nat-to-int"
        input_path: Fixture over the source ring
        out_dir: Directory for the results (default: output/)
        field_only: Refuse extensions whose target is not a field

    Returns:
        Dictionary with the written files and the dagger-preservation transcript, or error message
    """
    try:
        ext = extension_from_name(hom_name)
    except ValueError as e:
        return {"error": str(e)}
    if field_only and not ext.target.is_field:
        return {"error": f"{hom_name} lands in {ext.target}, which is not a field"}
    try:
        fixture = load_fixture(input_path)
    except HilbcatError as e:
        return {"error": f"Failed to load fixture: {e}"}

    result = Fixture()
    transcript: List[str] = []
    try:
        for name, obj in fixture.objects.items():
            result.objects[name] = extend_object(ext, obj)
        for name, f in fixture.morphisms.items():
            image = extend_mor(ext, f)
            result.morphisms[name] = image
            if not ext.source.is_field:
                transcript.append(f"{name}: extended (no dagger over {ext.source})")
                continue
            checks = {"dagger preserved": extend_mor(ext, dagger(f)) == dagger(image)}
            checks["bound preserved"] = verify_bound_preserved(ext, find_bound(f), f)
            transcript.append(_transcript_line(name, checks))
    except HilbcatError as e:
        return {"error": f"Extension failed: {e}"}

    stem = Path(input_path).stem
    fixture_path = save_fixture(result, get_output_path(f"{stem}.{hom_name}.json", base=out_dir))
    transcript_path = _write_transcript(transcript, f"{stem}.{hom_name}.txt", out_dir)
    return {
        "extension": hom_name,
        "source": ext.source.name,
        "target": ext.target.name,
        "full": ext.is_full,
        "transcript": transcript,
        "files": [str(fixture_path), str(transcript_path)],
    }


def demo_non_fullness(monoid: str = "bool") -> Dict[str, Any]:
    """Run the summand-swap search on a shipped monoid and return its report."""
    if monoid not in SHIPPED_MONOIDS:
        return {"error": f"unknown monoid {monoid!r}; expected one of {', '.join(SHIPPED_MONOIDS)}"}
    return non_fullness_demo(SHIPPED_MONOIDS[monoid]()).to_dict()


def format_result(result: dict) -> str:
    return json.dumps(result, indent=2, sort_keys=True)
