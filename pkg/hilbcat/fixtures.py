"""JSON fixtures for objects and morphisms, and witness encoding.

Scalars are always strings in their ring's serialization, so a fixture
round-trips exactly:

    {
      "objects": {"X": {"ring": "rat", "dim": 2, "gram": [["1/1", "0/1"], ["0/1", "2/1"]]}},
      "morphisms": {"f": {"dom": "X", "cod": "X", "mat": [["1/1", "1/1"], ["0/1", "1/1"]]}}
    }
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Union

from .errors import FixtureParseError, HilbcatError
from .functors import Bound
from .hilbmod import HMorphism, HObject, make_object
from .linalg import Matrix
from .paths import resolve_input
from .scalars import Scalar, ScalarRing, format_scalar, parse_scalar, ring_from_name


@dataclass
class Fixture:
    objects: Dict[str, HObject] = field(default_factory=dict)
    morphisms: Dict[str, HMorphism] = field(default_factory=dict)

    def object_name(self, obj: HObject) -> str:
        for name, candidate in self.objects.items():
            if candidate == obj:
                return name
        name = f"X{len(self.objects)}"
        while name in self.objects:
            name += "_"
        self.objects[name] = obj
        return name

    def add_morphism(self, name: str, f: HMorphism) -> None:
        self.object_name(f.dom)
        self.object_name(f.cod)
        self.morphisms[name] = f


def _require(data: Any, kind: type, position: str):
    if not isinstance(data, kind):
        raise FixtureParseError(f"expected {kind.__name__}, got {type(data).__name__}", position)
    return data


def _parse_rows(ring: ScalarRing, rows: Any, n_rows: int, n_cols: int, position: str) -> Matrix:
    _require(rows, list, position)
    if len(rows) != n_rows:
        raise FixtureParseError(f"expected {n_rows} rows, got {len(rows)}", position)
    parsed = []
    for i, row in enumerate(rows):
        _require(row, list, f"{position}[{i}]")
        if len(row) != n_cols:
            raise FixtureParseError(f"expected {n_cols} entries, got {len(row)}", f"{position}[{i}]")
        out = []
        for j, entry in enumerate(row):
            where = f"{position}[{i}][{j}]"
            _require(entry, str, where)
            try:
                out.append(parse_scalar(ring, entry))
            except HilbcatError as e:
                raise FixtureParseError(str(e), where) from e
        parsed.append(out)
    return Matrix.from_rows(ring, parsed, cols=n_cols)


def _parse_object(data: Any, position: str) -> HObject:
    _require(data, dict, position)
    for key in ("ring", "dim", "gram"):
        if key not in data:
            raise FixtureParseError(f"missing key {key!r}", position)
    try:
        ring = ring_from_name(_require(data["ring"], str, f"{position}.ring"))
    except ValueError as e:
        raise FixtureParseError(str(e), f"{position}.ring") from e
    dim = _require(data["dim"], int, f"{position}.dim")
    if dim < 0:
        raise FixtureParseError("dimension must be nonnegative", f"{position}.dim")
    gram = _parse_rows(ring, data["gram"], dim, dim, f"{position}.gram")
    try:
        return make_object(ring, dim, gram)
    except HilbcatError as e:
        raise FixtureParseError(str(e), position) from e


def _parse_morphism(data: Any, objects: Dict[str, HObject], position: str) -> HMorphism:
    _require(data, dict, position)
    for key in ("dom", "cod", "mat"):
        if key not in data:
            raise FixtureParseError(f"missing key {key!r}", position)
    ends = []
    for key in ("dom", "cod"):
        ref = _require(data[key], str, f"{position}.{key}")
        if ref not in objects:
            raise FixtureParseError(f"unknown object {ref!r}", f"{position}.{key}")
        ends.append(objects[ref])
    dom, cod = ends
    if dom.ring != cod.ring:
        raise FixtureParseError(f"domain over {dom.ring}, codomain over {cod.ring}", position)
    mat = _parse_rows(dom.ring, data["mat"], cod.dim, dom.dim, f"{position}.mat")
    return HMorphism(dom, cod, mat)


def fixture_from_dict(data: Any) -> Fixture:
    _require(data, dict, "$")
    fixture = Fixture()
    for name, obj in _require(data.get("objects", {}), dict, "objects").items():
        fixture.objects[name] = _parse_object(obj, f"objects.{name}")
    for name, mor in _require(data.get("morphisms", {}), dict, "morphisms").items():
        fixture.morphisms[name] = _parse_morphism(mor, fixture.objects, f"morphisms.{name}")
    return fixture


def parse_fixture(text: str) -> Fixture:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FixtureParseError(e.msg, f"line {e.lineno} column {e.colno}") from e
    return fixture_from_dict(data)


def load_fixture(file_path: Union[str, Path]) -> Fixture:
    path = resolve_input(file_path)
    if not path.exists():
        raise FixtureParseError(f"file not found: {file_path}")
    return parse_fixture(path.read_text(encoding="utf-8"))


def matrix_rows(m: Matrix) -> List[List[str]]:
    return [[format_scalar(a) for a in row] for row in m.entries]


def object_to_dict(obj: HObject) -> dict:
    return {"ring": obj.ring.name, "dim": obj.dim, "gram": matrix_rows(obj.gram)}


def fixture_to_dict(fixture: Fixture) -> dict:
    morphisms = {}
    for name, f in fixture.morphisms.items():
        morphisms[name] = {
            "dom": fixture.object_name(f.dom),
            "cod": fixture.object_name(f.cod),
            "mat": matrix_rows(f.mat),
        }
    return {
        "objects": {name: object_to_dict(obj) for name, obj in fixture.objects.items()},
        "morphisms": morphisms,
    }


def dump_fixture(fixture: Fixture) -> str:
    return json.dumps(fixture_to_dict(fixture), indent=2) + "\n"


def save_fixture(fixture: Fixture, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_fixture(fixture), encoding="utf-8")
    return path


# -- witnesses -------------------------------------------------------------------------------

def encode_value(value: Any) -> Any:
    """JSON form of a property argument; decode_value inverts it."""
    if isinstance(value, Scalar):
        return {"scalar": format_scalar(value), "ring": value.ring.name}
    if isinstance(value, Matrix):
        return {"matrix": matrix_rows(value), "ring": value.ring.name, "cols": value.cols}
    if isinstance(value, HObject):
        return {"object": object_to_dict(value)}
    if isinstance(value, HMorphism):
        return {
            "morphism": {
                "dom": object_to_dict(value.dom),
                "cod": object_to_dict(value.cod),
                "mat": matrix_rows(value.mat),
            }
        }
    if isinstance(value, ScalarRing):
        return {"ring": value.name}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Bound):
        return {"bound": encode_value(value.value)}
    return {"repr": repr(value)}


def decode_value(data: Any) -> Any:
    if isinstance(data, list):
        return [decode_value(v) for v in data]
    if not isinstance(data, dict):
        return data
    if "scalar" in data:
        return parse_scalar(ring_from_name(data["ring"]), data["scalar"])
    if "matrix" in data:
        ring = ring_from_name(data["ring"])
        return _parse_rows(ring, data["matrix"], len(data["matrix"]), data["cols"], "matrix")
    if "object" in data:
        return _parse_object(data["object"], "object")
    if "morphism" in data:
        body = data["morphism"]
        dom = _parse_object(body["dom"], "morphism.dom")
        cod = _parse_object(body["cod"], "morphism.cod")
        return HMorphism(dom, cod, _parse_rows(dom.ring, body["mat"], cod.dim, dom.dim, "morphism.mat"))
    if "bound" in data:
        return Bound(decode_value(data["bound"]))
    if set(data) == {"ring"}:
        return ring_from_name(data["ring"])
    raise FixtureParseError(f"cannot decode witness {data!r}")
