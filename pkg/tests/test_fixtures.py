"""Tests for fixture parsing, dumping and witness encoding."""
import json

import pytest

from hilbcat.errors import FixtureParseError
from hilbcat.fixtures import (
    Fixture,
    decode_value,
    dump_fixture,
    encode_value,
    load_fixture,
    parse_fixture,
    save_fixture,
)
from hilbcat.functors import Bound
from hilbcat.hilbmod import make_morphism, make_object
from hilbcat.linalg import Matrix
from hilbcat.scalars import GAUSS, QSQRT2, RAT

WEIGHTED = {
    "objects": {"X": {"ring": "rat", "dim": 2, "gram": [["1/1", "0/1"], ["0/1", "2/1"]]}},
    "morphisms": {"f": {"dom": "X", "cod": "X", "mat": [["1/1", "1/1"], ["0/1", "1/1"]]}},
}


def test_parse_weighted_fixture():
    fixture = parse_fixture(json.dumps(WEIGHTED))
    x = fixture.objects["X"]
    assert x.gram == Matrix.diagonal(RAT, [1, 2])
    assert fixture.morphisms["f"].dom == x


def test_dump_is_canonical():
    text = dump_fixture(parse_fixture(json.dumps(WEIGHTED)))
    assert json.loads(text) == WEIGHTED
    assert dump_fixture(parse_fixture(text)) == text


@pytest.mark.parametrize(
    "mutate, position",
    [
        (lambda d: d["objects"]["X"]["gram"][1].__setitem__(1, "x"), "objects.X.gram[1][1]"),
        (lambda d: d["objects"]["X"].pop("dim"), "objects.X"),
        (lambda d: d["objects"]["X"].__setitem__("ring", "reals"), "objects.X.ring"),
        (lambda d: d["morphisms"]["f"].__setitem__("cod", "Y"), "morphisms.f.cod"),
        (lambda d: d["morphisms"]["f"]["mat"].pop(), "morphisms.f.mat"),
        (lambda d: d["objects"]["X"]["gram"][0].__setitem__(0, "-1/1"), "objects.X"),
    ],
)
def test_parse_errors_carry_position(mutate, position):
    data = json.loads(json.dumps(WEIGHTED))
    mutate(data)
    with pytest.raises(FixtureParseError) as info:
        parse_fixture(json.dumps(data))
    assert info.value.position == position


def test_json_syntax_error():
    with pytest.raises(FixtureParseError) as info:
        parse_fixture("{")
    assert info.value.position.startswith("line 1")


def test_missing_file():
    with pytest.raises(FixtureParseError):
        load_fixture("/nonexistent/fixture.json")


def test_save_and_load(tmp_path):
    x = make_object(GAUSS, 1, [[2]])
    fixture = Fixture()
    fixture.add_morphism("g", make_morphism(x, x, [[(1, -1)]]))
    path = save_fixture(fixture, tmp_path / "nested" / "g.json")
    loaded = load_fixture(path)
    assert loaded.morphisms["g"] == fixture.morphisms["g"]
    assert list(loaded.objects) == ["X0"]


def test_witness_encoding():
    x = make_object(QSQRT2, 1, [[(3, 2)]])
    f = make_morphism(x, x, [[(1, 1)]])
    values = [f, x, QSQRT2.scalar(1, -1), RAT, "B^2", 3, Bound(RAT.scalar(2))]
    encoded = encode_value(values)
    assert json.loads(json.dumps(encoded)) == encoded
    assert decode_value(encoded) == values
    with pytest.raises(FixtureParseError):
        decode_value({"unknown": 1})
