#!/usr/bin/env python3
"""
Create sample fixtures for trying out hilbcat.

Writes a few small objects and morphisms as JSON into the input/ folder so
``hilbcat factor`` and ``hilbcat extend`` have something to work on.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from hilbcat.fixtures import Fixture, save_fixture
from hilbcat.hilbmod import make_morphism, make_object
from hilbcat.paths import ensure_directories, get_input_path
from hilbcat.scalars import GAUSS, QSQRT2, RAT


def projection_fixture() -> Fixture:
    """A rank-one projection on a weighted plane, plus its sum map."""
    x = make_object(RAT, 2, [[1, 0], [0, 2]])
    y = make_object(RAT, 1, [[1]])
    fixture = Fixture()
    fixture.objects["X"] = x
    fixture.objects["Y"] = y
    fixture.add_morphism("proj", make_morphism(x, x, [[1, 0], [0, 0]]))
    fixture.add_morphism("sum", make_morphism(x, y, [[1, 1]]))
    return fixture


def gaussian_fixture() -> Fixture:
    """A Hermitian Gram matrix over Q(i) and a rank-one map."""
    x = make_object(GAUSS, 2, [[2, (1, 1)], [(1, -1), 2]])
    fixture = Fixture()
    fixture.objects["H"] = x
    fixture.add_morphism("f", make_morphism(x, x, [[1, (0, 1)], [(0, -1), 1]]))
    return fixture


def quadratic_fixture() -> Fixture:
    x = make_object(QSQRT2, 2, [[(3, 2), 0], [0, 1]])
    fixture = Fixture()
    fixture.objects["Q"] = x
    fixture.add_morphism("g", make_morphism(x, x, [[(1, 1), 1], [0, 0]]))
    return fixture


SAMPLE_FIXTURES = {
    "projection.json": projection_fixture,
    "gaussian.json": gaussian_fixture,
    "quadratic.json": quadratic_fixture,
}


def main():
    ensure_directories()
    print("Creating sample fixtures...")
    for filename, build in SAMPLE_FIXTURES.items():
        path = save_fixture(build(), get_input_path(filename))
        print(f"  ✅ {path}")
    print("\nTry:")
    print("  hilbcat factor projection.json")
    print("  hilbcat extend q-to-qi projection.json")


if __name__ == "__main__":
    main()
