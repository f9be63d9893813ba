from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given

from treehopf.algebra import Element, Tensor, tensor_of
from treehopf.checks import bplus_cocycle, coassociative, counital, delta_left, delta_right, multiplicative
from treehopf.forest import enumerate_forests, enumerate_trees, parse_forest, weight
from treehopf.hopf import (
    admissible_cuts,
    antipode_check,
    antipode_cuts,
    antipode_recursive,
    coproduct,
    coproduct_forest,
    cut_count,
    deg_p,
    is_primitive,
    left_admissible_cuts,
    reduced_coproduct,
    reduced_coproduct_iter,
)
from treehopf.pairing import dual

from conftest import TWO, elements, forests

ABCD = ["a", "b", "c", "d"]
P = parse_forest
E = Element.parse
ONE = Element.of(())


def fig(text):
    return P(text, ABCD)


def test_cuts_of_single_vertex_and_chain():
    assert Counter(admissible_cuts(P("*"))) == Counter([((), P("*")), (P("*"), ())])
    f = P("*[*]")
    assert Counter(admissible_cuts(f)) == Counter([((), f), (f, ()), (P("*"), P("*"))])


def test_cuts_of_decorated_four_vertex_tree():
    t = fig("a[b[c d]]")
    expected = [
        ((), t),
        (fig("c"), fig("a[b[d]]")),
        (fig("d"), fig("a[b[c]]")),
        (fig("c d"), fig("a[b]")),
        (fig("b[c d]"), fig("a")),
        (t, ()),
    ]
    assert Counter(admissible_cuts(t)) == Counter(expected)


def test_cuts_keep_multiplicities():
    cuts = Counter(admissible_cuts(P("*[* *]")))
    assert cuts[(P("*"), P("*[*]"))] == 2


def test_coproduct_examples():
    assert coproduct(E("*")) == tensor_of(E("*"), ONE) + tensor_of(ONE, E("*"))
    assert coproduct(E("*[*]")) == (
        tensor_of(E("*[*]"), ONE) + tensor_of(ONE, E("*[*]")) + tensor_of(E("*"), E("*"))
    )
    assert coproduct(ONE) == tensor_of(ONE, ONE)
    assert len(coproduct(Element.of(fig("a[b[c d]]")))) == 6


def test_reduced_coproduct_examples():
    assert not reduced_coproduct_iter(E("*"), 1)
    assert reduced_coproduct_iter(E("* *"), 1) == Tensor.pure(P("*"), P("*"), c=2)
    assert reduced_coproduct_iter(E("* * *"), 2) == Tensor.pure(P("*"), P("*"), P("*"), c=6)


@pytest.mark.parametrize("n", range(1, 6))
def test_iterated_reduced_coproduct_vanishes_at_weight(n):
    for f in enumerate_forests(n):
        assert not reduced_coproduct_iter(Element.of(f), n)


def test_deg_p_examples():
    assert deg_p(ONE) == 0
    # The cherry needs three reductions: its second reduced coproduct is 2·•⊗•⊗•.
    assert reduced_coproduct_iter(E("*[* *]"), 2) == Tensor.pure(P("*"), P("*"), P("*"), c=2)
    assert deg_p(E("*[* *]")) == 3
    assert deg_p(E("* *")) == 2
    assert deg_p(E("*")) == 1
    with pytest.raises(ValueError):
        deg_p(Element())


def test_deg_p_additive_on_forest_pairs():
    fs = [f for n in range(4) for f in enumerate_forests(n)]
    for f, g in itertools.product(fs, repeat=2):
        assert deg_p(Element.of(f + g)) == deg_p(Element.of(f)) + deg_p(Element.of(g))


@given(elements(2), elements(2))
def test_deg_p_additive_on_mixed_elements(x, y):
    if x and y:
        assert deg_p(x * y) == deg_p(x) + deg_p(y)


def test_antipode_examples():
    assert antipode_recursive(E("*")) == -E("*")
    assert antipode_recursive(E("*[*]")) == E("* *") - E("*[*]")
    expected = (
        -Element.of(fig("a[b[c d]]"))
        + Element.of(fig("d a[b[c]]"))
        + Element.of(fig("c a[b[d]]"))
        + Element.of(fig("b[c d] a"))
        - Element.of(fig("d c a[b]"))
        - Element.of(fig("d b[c] a"))
        - Element.of(fig("c b[d] a"))
        + Element.of(fig("d c b a"))
    )
    assert antipode_recursive(Element.of(fig("a[b[c d]]"))) == expected
    assert antipode_cuts(fig("a[b[c d]]")) == expected


def test_antipode_cuts_examples():
    assert antipode_cuts(P("*")) == -E("*")
    assert antipode_cuts(P("*[*]")) == E("* *") - E("*[*]")
    assert antipode_cuts(P("* *")) == E("* *")


@pytest.mark.parametrize("n", range(6))
def test_antipode_algorithms_agree_and_satisfy_axiom(n):
    decor = TWO if n <= 3 else ("*",)
    for f in enumerate_forests(n, decor):
        x = Element.of(f)
        assert antipode_cuts(f) == antipode_recursive(x)
        eps = ONE if not f else Element()
        assert antipode_check(x) == (eps, eps)
        assert antipode_check(x, lambda y: antipode_cuts(y)) == (eps, eps)


@given(forests(4), forests(4))
def test_antipode_is_antimorphism(f, g):
    lhs = antipode_recursive(Element.of(f + g))
    assert lhs == antipode_recursive(Element.of(g)) * antipode_recursive(Element.of(f))


def test_left_admissible_cuts_examples():
    f = P("*[*]")
    assert Counter(left_admissible_cuts(f)) == Counter([((), f), (f, ())])
    g = P("*[* *]")
    assert Counter(left_admissible_cuts(g)) == Counter([((), g), (g, ()), (P("*"), P("*[*]"))])
    assert Counter(left_admissible_cuts(P("*"))) == Counter([((), P("*")), (P("*"), ())])


def test_cut_count_examples():
    assert cut_count(P("*"), P("*[*]"), P("*[* *]")) == 2
    assert cut_count(P("*"), P("*[*]"), P("*[*[*]]")) == 1
    assert cut_count(P("*"), P("*"), P("*[*]"), left_only=True) == 0


@pytest.mark.parametrize("n", range(6))
def test_coalgebra_axioms(n):
    for f in enumerate_forests(n):
        assert coassociative(f)
        assert counital(f)
        assert bplus_cocycle(f, "*")


def test_bplus_cocycle_decorated():
    for n in range(4):
        for f in enumerate_forests(n, TWO):
            for d in TWO:
                assert bplus_cocycle(f, d)


def test_coproduct_multiplicative():
    fs = [f for n in range(5) for f in enumerate_forests(n)]
    for f, g in itertools.product(fs, repeat=2):
        if weight(f) + weight(g) <= 5:
            assert multiplicative(f, g)


@given(elements(3), elements(3))
def test_coproduct_algebra_morphism_on_elements(x, y):
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


@given(forests(4))
def test_left_iteration_matches_right_iteration(f):
    d = coproduct_forest(f)
    assert delta_left(d) == delta_right(d)


@pytest.mark.parametrize("n", [2, 3])
def test_iterated_coproduct_of_primitive_products(n):
    prims = [dual((t,)) for w in (1, 2) for t in enumerate_trees(w)]
    for ps in itertools.product(prims, repeat=n):
        prod = ONE
        for p in ps:
            prod = prod * p
        expected = Tensor(n)
        for perm in itertools.permutations(ps):
            expected = expected + tensor_of(*perm)
        assert reduced_coproduct_iter(prod, n - 1) == expected


def test_is_primitive():
    assert is_primitive(E("*"))
    assert is_primitive(dual(P("*[*]")))
    assert not is_primitive(E("*[*]"))
