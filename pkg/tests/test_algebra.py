from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from treehopf.algebra import (
    Element,
    Tensor,
    counit,
    elem_add,
    elem_mul,
    elem_scale,
    elem_sum,
    homogeneous_part,
    parse_scalar,
    render_scalar,
    tensor_mul,
    tensor_of,
)
from treehopf.forest import parse_forest, weight

from conftest import elements, forests

E = Element.parse
ONE = Element.of(())


def test_add_and_scale():
    x = E("*[*]")
    assert elem_add(x, Element()) == x
    assert not elem_scale(0, x)
    assert not elem_add(x, elem_scale(-1, x))


def test_zero_coefficients_are_never_stored():
    x = Element({parse_forest("*"): 0, parse_forest("* *"): Fraction(2, 2)})
    assert x.terms == {parse_forest("* *"): 1}
    assert isinstance(x.coeff(parse_forest("* *")), int)


def test_mul_is_concatenation_and_noncommutative():
    assert elem_mul(E("*"), E("*[*]")) == E("* *[*]")
    assert elem_mul(E("*[*]"), E("*")) == E("*[*] *")
    assert elem_mul(E("*[*]"), E("*")) != elem_mul(E("*"), E("*[*]"))
    x = E("*") * 3 + E("*[*]")
    assert elem_mul(ONE, x) == x == elem_mul(x, ONE)


def test_counit_examples():
    assert counit(ONE) == 1
    assert counit(E("*[*]")) == 0
    assert counit(ONE * 3 + E("* *") * 2) == 3


def test_homogeneous_part_examples():
    x = ONE + E("*") + E("* *")
    assert homogeneous_part(x, 1) == E("*")
    assert elem_sum(homogeneous_part(x, n) for n in range(3)) == x
    assert not homogeneous_part(E("*[*]"), 3)


def test_tensor_mul_examples():
    x, y = E("*[*]"), E("* *")
    assert tensor_mul(tensor_of(x, ONE), tensor_of(ONE, y)) == tensor_of(x, y)
    a = tensor_of(E("*") + x, y)
    assert tensor_mul(tensor_of(ONE, ONE), a) == a
    assert tensor_mul(tensor_of(E("*"), E("*")), tensor_of(E("*"), ONE)) == tensor_of(
        E("* *"), E("*")
    )


def test_tensor_arity_mismatch():
    with pytest.raises(ValueError):
        tensor_mul(Tensor.pure(()), Tensor.pure((), ()))


def test_json_and_rendering():
    x = ONE * 3 + E("* *") * Fraction(-1, 2)
    assert x.to_json() == {
        "terms": [{"coeff": "3", "forest": "1"}, {"coeff": "-1/2", "forest": "* *"}]
    }
    assert x.render() == "3·1 - 1/2·* *"
    assert Element().render() == "0"
    assert tensor_of(E("*"), ONE).to_json() == {
        "arity": 2,
        "terms": [{"coeff": "1", "factors": ["*", "1"]}],
    }


def test_scalar_text():
    assert parse_scalar("4/2") == 2 and isinstance(parse_scalar("4/2"), int)
    assert render_scalar(Fraction(-3, 6)) == "-1/2"


@given(elements(), elements(), elements())
def test_mul_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert ONE * a == a == a * ONE


@given(elements(), elements())
def test_counit_is_multiplicative(a, b):
    assert counit(a * b) == counit(a) * counit(b)


@given(forests(4), forests(4))
def test_weight_additive(f, g):
    assert weight(f + g) == weight(f) + weight(g)
