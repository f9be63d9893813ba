from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from treehopf.algebra import Element
from treehopf.checks import dual_bplus, dual_deconcatenation
from treehopf.forest import Tree, enumerate_forests, enumerate_trees, gamma, mirror, parse_forest
from treehopf.golden import GRAM, GRAM_INVERSE
from treehopf.hopf import antipode_recursive, coproduct, reduced_coproduct
from treehopf.pairing import (
    bareiss_inverse,
    determinant,
    dual,
    dual_basis,
    dual_pair_check,
    e_to_forest,
    forest_to_e,
    gram_inverse,
    gram_matrix,
    mirror_by_maximum,
    mirror_diagnostics,
    nullspace,
    pair,
    pair_combinatorial,
    pair_forests,
    rank,
    rref,
    unimodular_inverse,
)

from conftest import TWO, elements, forests

P = parse_forest
E = Element.parse


def test_pair_examples():
    assert pair(E("*"), E("*")) == 1
    assert pair(E("* *"), E("* *")) == 2
    assert pair(E("*[*]"), E("*[*]")) == 0
    assert pair(E("* * *"), E("* * *")) == 6
    assert pair(E("*"), E("* *")) == 0
    assert pair(Element.of(()), E("*") + Element.of(()) * 5) == 5


def test_pair_combinatorial_examples():
    assert pair_combinatorial(P("* *"), P("* *")) == 2
    assert pair_combinatorial(P("*[*]"), P("*[*]")) == 0
    assert pair_combinatorial(P("*"), P("* *")) == 0


@pytest.mark.parametrize("decor", [("*",), TWO])
@pytest.mark.parametrize("n", range(1, 5))
def test_pairing_algorithms_agree(decor, n):
    fs = enumerate_forests(n, decor)
    for f, g in itertools.product(fs, repeat=2):
        assert pair_forests(f, g) == pair_combinatorial(f, g)


@given(elements(3), elements(3))
def test_pairing_symmetric(x, y):
    assert pair(x, y) == pair(y, x)


@given(forests(3), forests(3))
def test_pairing_homogeneous(f, g):
    if len(f) and sum(t.weight for t in f) != sum(t.weight for t in g):
        assert pair_forests(f, g) == 0


@given(forests(2), forests(2), forests(4))
def test_pairing_hopf_compatible(f1, f2, g):
    lhs = pair_forests(f1 + f2, g)
    rhs = sum(c * pair_forests(f1, a) * pair_forests(f2, b) for (a, b), c in coproduct(Element.of(g)).terms.items())
    assert lhs == rhs


@given(forests(4), forests(4))
def test_antipode_self_adjoint(f, g):
    assert pair(antipode_recursive(Element.of(f)), Element.of(g)) == pair(
        Element.of(f), antipode_recursive(Element.of(g))
    )


@pytest.mark.parametrize("n", range(1, 5))
def test_gram_tables(n):
    assert gram_matrix(n)[1] == GRAM[n]


@pytest.mark.parametrize("n", range(1, 4))
def test_inverse_gram_tables(n):
    assert gram_inverse(n)[1] == GRAM_INVERSE[n]


def test_gram_examples():
    assert gram_matrix(1)[1] == [[1]]
    assert gram_matrix(2)[1] == [[2, 1], [1, 0]]


@pytest.mark.parametrize("n,decor", [(n, ("*",)) for n in range(1, 6)] + [(n, TWO) for n in (1, 2, 3)])
def test_gram_inverse_is_integral_inverse(n, decor):
    basis, a = gram_matrix(n, decor)
    _, p = gram_inverse(n, decor)
    r = len(basis)
    assert all(a[i][j] == a[j][i] for i in range(r) for j in range(r))
    assert all(x >= 0 for row in a for x in row)
    for i in range(r):
        for j in range(r):
            assert sum(a[i][k] * p[k][j] for k in range(r)) == (i == j)
    assert determinant(a) in (1, -1)


def test_bareiss_on_small_matrices():
    assert bareiss_inverse([[2, 1], [1, 0]]) == (-1, [[0, -1], [-1, 2]])
    assert unimodular_inverse([[1, 1], [0, 1]]) == [[1, -1], [0, 1]]
    with pytest.raises(ArithmeticError):
        unimodular_inverse([[2, 0], [0, 1]])
    assert determinant([[1, 2], [3, 4]]) == -2


def test_dual_basis_examples():
    assert dual(P("*[*]")) == E("* *") - E("*[*]") * 2
    assert dual(P("* *[*]")) == E("* *[*]") - E("*[* *]") - E("*[*[*]]")
    assert dual(P("*")) == E("*")
    assert dual(()) == Element.of(())


@pytest.mark.parametrize("n", range(1, 5))
def test_dual_basis_is_dual(n):
    assert dual_pair_check(n)
    basis = dual_basis(n)
    for f, e in basis.items():
        assert all(isinstance(c, int) for c in e.terms.values())


def test_dual_basis_is_dual_decorated():
    assert dual_pair_check(3, TWO)


@pytest.mark.parametrize("n", range(1, 5))
def test_mirror_diagnostics(n):
    report = mirror_diagnostics(n)
    assert report.unimodular and report.triangular
    assert report.det in (1, -1)
    if n == 2:
        assert report.det == -1


@pytest.mark.parametrize("n", range(1, 6))
def test_forest_pairs_to_one_with_its_mirror(n):
    for f in enumerate_forests(n):
        assert pair_forests(f, mirror(f)) == 1
        assert mirror_by_maximum(f) == mirror(f)


@pytest.mark.parametrize("n", range(6))
def test_dual_deconcatenation(n):
    for f in enumerate_forests(n):
        assert dual_deconcatenation(f)


@pytest.mark.parametrize("n", range(1, 6))
def test_dual_trees_are_primitive(n):
    for t in enumerate_trees(n):
        assert not reduced_coproduct(dual((t,)))


@pytest.mark.parametrize("n", range(4))
def test_bplus_on_dual_basis(n):
    for f in enumerate_forests(n, TWO):
        for d in TWO:
            assert dual_bplus(f, d)


@pytest.mark.parametrize("n", range(1, 5))
def test_gamma_is_adjoint_of_bplus(n):
    # (B⁺_d(F'), G) = (F', γ_d(G)) on forest pairs.
    for g in enumerate_forests(n, TWO):
        for f in enumerate_forests(n - 1, TWO):
            for d in TWO:
                gg = gamma(g, d)
                rhs = 0 if gg is None else pair_forests(f, gg)
                assert pair_forests((Tree(d, f),), g) == rhs


@given(elements(3))
def test_e_basis_round_trip(x):
    assert e_to_forest(forest_to_e(x)) == x


def test_rref_rank_nullspace():
    a = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    rows, pivots = rref(a)
    assert pivots == [0, 1]
    assert rows[:2] == [[1, 0, 1], [0, 1, 1]]
    assert rank(a) == 2
    (v,) = nullspace(a)
    assert all(sum(Fraction(r[i]) * v[i] for i in range(3)) == 0 for r in a)
    assert nullspace([[1, 0], [0, 1]]) == []
