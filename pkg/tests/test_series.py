from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treehopf.forest import catalan, enumerate_forests, enumerate_trees
from treehopf.golden import TAU
from treehopf.hopf import reduced_coproduct
from treehopf.series import (
    PowerSeries,
    dims,
    forest_series,
    one,
    primitive_rank,
    primitive_space,
    tau,
    tree_series,
    tv_series,
    tv_series_from,
)

X = PowerSeries.of([0, 1], 12)


def test_tau_examples():
    assert tau(4) == 5
    assert tau(13) == 208012
    assert tau(1) == 1
    with pytest.raises(ValueError):
        tau(0)


def test_tau_table_and_recurrence():
    assert tuple(tau(k) for k in range(1, 25)) == TAU
    for k in range(2, 25):
        assert tau(k) == sum(tau(i) * tau(k - i) for i in range(1, k))


def test_dims_examples():
    assert dims(4, 1) == (14, 5)
    assert dims(2, 2)[0] == 8
    assert dims(1, 1) == (1, 1)


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("d", [1, 2])
def test_dims_match_enumeration(n, d):
    decor = ("*",) if d == 1 else ("a", "b")
    assert dims(n, d) == (len(enumerate_forests(n, decor)), len(enumerate_trees(n, decor)))


def test_tree_series_quadratic_identity():
    t = tree_series(12)
    assert t * t - t + X == PowerSeries.of([], 12)
    assert list(t.coeffs[1:]) == list(TAU[:12])


@pytest.mark.parametrize("d", [1, 2, 3])
def test_forest_series_counts(d):
    r = forest_series(8, d)
    assert list(r.coeffs) == [catalan(n) * d**n for n in range(9)]


def test_forest_series_via_tensor_coalgebra():
    for d in (1, 2):
        tv = tv_series_from(tree_series(8).scale_var(d))
        assert list(tv.r.coeffs) == [catalan(n) * d**n for n in range(9)]


def test_single_generator_tensor_coalgebra():
    tv = tv_series([0, 1], 6)
    assert [[int(c) for c in row] for row in tv.h] == [
        [1 if n == m else 0 for m in range(7)] for n in range(7)
    ]
    assert tv.h_m[2] == PowerSeries.of([0, 0, 1], 6)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_tensor_coalgebra_bigraded_counts(grades):
    dims_v = [0] + grades
    order = 6
    tv = tv_series(dims_v, order)
    # h[n][m] counts words of length m and weight n: the coefficient of X^n in P^m.
    for m in range(order + 1):
        for n in range(order + 1):
            assert tv.h[n][m] == tv.h_m[m][n]
    for n in range(order + 1):
        assert sum(tv.h[n]) == tv.r[n]


def test_tv_rejects_degree_zero():
    with pytest.raises(ValueError):
        tv_series([1, 1], 3)


def test_power_series_arithmetic():
    a = PowerSeries.of([1, 2, 3], 4)
    assert a.order == 4 and a[5] == 0
    inv = a.reciprocal()
    assert a * inv == one(4)
    assert (a * Fraction(1, 2))[1] == 1
    assert a**2 == a * a
    assert a.scale_var(2).coeffs[:3] == (1, 4, 12)
    with pytest.raises(ZeroDivisionError):
        PowerSeries.of([0, 1], 3).reciprocal()
    assert a.to_json() == {"order": 4, "coeffs": ["1", "2", "3", "0", "0"]}


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("decor", [("*",), ("a", "b")])
def test_primitive_rank(n, decor):
    report = primitive_rank(n, decor)
    assert report.ok
    assert report.kernel_dim == len(decor) ** n * tau(n)


def test_primitive_space_vectors_are_primitive():
    for x in primitive_space(3):
        assert x and not reduced_coproduct(x)
