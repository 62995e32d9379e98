"""Tests for finite Boolean semimodules, their maps, biproducts and tensors."""
import pytest

from hilbcat.errors import InvalidSemimoduleError, NotAHomomorphismError
from hilbcat.scalars import BOOL, RAT
from hilbcat.semimodules import (
    SHIPPED_MODULES,
    chain3,
    diagonal_map,
    find_adjoint_finite,
    free_module,
    fsm_biproduct,
    fsm_tensor_quotient,
    identity_map,
    inner_product_laws,
    is_homomorphism,
    is_strict,
    join_map,
    make_map,
    make_semimodule,
    module_from_name,
    scalar_module,
    semimodule_laws,
    shipped_modules,
    zero_module,
)


def test_free_module_layout():
    b2 = free_module(2)
    assert b2.name == "B^2"
    assert b2.labels == ("00", "01", "10", "11")
    assert b2.plus(1, 2) == 3
    assert b2.inner_product(3, 1) == BOOL.one()
    assert b2.inner_product(1, 2) == BOOL.zero()
    assert free_module(1).name == "B"


@pytest.mark.parametrize("mod", shipped_modules(), ids=lambda m: m.name)
def test_shipped_modules_satisfy_laws(mod):
    assert all(r.passed for r in semimodule_laws(mod).values())
    assert all(r.passed for r in inner_product_laws(mod).values())


def test_chain_is_not_strict():
    mod = chain3()
    result = is_strict(mod)
    assert not result.passed
    assert result.witness == (mod.index("a"),)
    assert is_strict(free_module(3)).passed
    assert is_strict(zero_module()).passed


def test_invalid_tables():
    with pytest.raises(InvalidSemimoduleError):
        # both nonzero rows of the form agree
        make_semimodule("degenerate", ["0", "x"], [[0, 1], [1, 1]], [[0, 0], [0, 0]])
    with pytest.raises(InvalidSemimoduleError):
        make_semimodule("outside", ["0", "x"], [[0, 2], [2, 1]], [[0, 0], [0, 1]])
    with pytest.raises(InvalidSemimoduleError):
        make_semimodule("not-boolean", ["0", "x"], [[0, 1], [1, 1]], [[0, 0], [0, 2]])
    with pytest.raises(InvalidSemimoduleError):
        module_from_name("B^9")


def test_names_resolve():
    assert set(SHIPPED_MODULES) == {"zero", "B", "B^2", "B^3", "chain3"}
    assert module_from_name("chain3") == chain3()


def test_maps():
    b = free_module(1)
    with pytest.raises(NotAHomomorphismError):
        make_map(b, b, [0, 5])
    constant = make_map(b, b, [1, 1])
    assert not is_homomorphism(constant)
    with pytest.raises(NotAHomomorphismError):
        find_adjoint_finite(constant)
    assert find_adjoint_finite(identity_map(chain3())) == identity_map(chain3())


@pytest.mark.parametrize("name", ["B", "B^2", "chain3"])
def test_join_adjoint_is_diagonal(name):
    mod = module_from_name(name)
    assert find_adjoint_finite(join_map(mod)) == diagonal_map(mod)
    assert is_homomorphism(find_adjoint_finite(join_map(mod)))


def test_adjoint_must_be_a_homomorphism(monkeypatch):
    f = identity_map(chain3())
    monkeypatch.setattr("hilbcat.semimodules.is_homomorphism", lambda g: g is f)
    with pytest.raises(NotAHomomorphismError, match="adjoint"):
        find_adjoint_finite(f)


def test_scalar_module_is_the_unit():
    unit = scalar_module()
    assert unit == free_module(1)
    assert is_strict(unit).passed
    assert fsm_tensor_quotient(unit, chain3()).size == 3
    with pytest.raises(InvalidSemimoduleError):
        scalar_module(RAT)


def test_biproduct():
    square = fsm_biproduct(free_module(1), chain3())
    assert square.size == 6
    assert square.labels[0] == "(0,0)"
    assert not is_strict(square).passed
    assert is_strict(fsm_biproduct(free_module(1), free_module(2))).passed


@pytest.mark.parametrize("name, size", [("zero", 1), ("B", 2), ("B^2", 4), ("chain3", 3)])
def test_tensor_with_unit(name, size):
    quotient = fsm_tensor_quotient(free_module(1), module_from_name(name))
    assert quotient.size == size
    assert quotient.labels[0] == "0"


def test_tensor_of_free_modules():
    quotient = fsm_tensor_quotient(free_module(2), free_module(2))
    assert quotient.size == 16
    assert quotient.name == "B^2(x)B^2"
    assert is_strict(quotient).passed
    assert fsm_tensor_quotient(free_module(3), free_module(2)).size == 64


def test_tensor_of_chains_is_a_semimodule():
    quotient = fsm_tensor_quotient(chain3(), chain3())
    assert all(r.passed for r in inner_product_laws(quotient).values())
