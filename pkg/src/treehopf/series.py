"""Truncated power series with exact coefficients, the Catalan-type counts of trees and
forests, and the bigraded Hilbert series of a tensor coalgebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra import Element, Scalar, normalize, render_scalar
from .forest import catalan, enumerate_forests, enumerate_trees
from .hopf import reduced_coproduct
from .pairing import dual, nullspace, rank


def tau(k: int) -> int:
    """Number of planar rooted trees with k vertices: (2k−2)!/(k!(k−1)!)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    num = factorial(2 * k - 2)
    den = factorial(k) * factorial(k - 1)
    q, r = divmod(num, den)
    assert r == 0
    return q


def dims(n: int, d: int = 1) -> tuple[int, int]:
    """(r_n, p_n): dimension of the weight-n component and of its primitives."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return catalan(n) * d**n, tau(n) * d**n


@dataclass(frozen=True)
class PowerSeries:
    """Σ_{i ≤ order} coeffs[i] X^i, exact up to ``order``."""

    coeffs: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(normalize(Fraction(c)) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs: Sequence[Scalar], order: int) -> PowerSeries:
        c = list(coeffs[: order + 1])
        return cls(tuple(c + [0] * (order + 1 - len(c))))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i <= self.order else 0

    def _check(self, other: PowerSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = self._check(other)
        return PowerSeries(tuple(self[i] + other[i] for i in range(n + 1)))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        n = self._check(other)
        return PowerSeries(tuple(self[i] - other[i] for i in range(n + 1)))

    def __mul__(self, other: PowerSeries | Scalar) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return PowerSeries(tuple(other * c for c in self.coeffs))
        n = self._check(other)
        return PowerSeries(
            tuple(sum(self[i] * other[k - i] for i in range(k + 1)) for k in range(n + 1))
        )

    __rmul__ = __mul__

    def __pow__(self, m: int) -> PowerSeries:
        out = PowerSeries.of([1], self.order)
        for _ in range(m):
            out = out * self
        return out

    def reciprocal(self) -> PowerSeries:
        if self[0] == 0:
            raise ZeroDivisionError("constant term is zero")
        inv: list[Fraction] = [Fraction(1) / Fraction(self[0])]
        for k in range(1, self.order + 1):
            s = sum(Fraction(self[i]) * inv[k - i] for i in range(1, k + 1))
            inv.append(-s * inv[0])
        return PowerSeries(tuple(inv))

    def scale_var(self, d: Scalar) -> PowerSeries:
        """f(X) ↦ f(dX)."""
        return PowerSeries(tuple(c * Fraction(d) ** i for i, c in enumerate(self.coeffs)))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [render_scalar(c) for c in self.coeffs]}


def one(order: int) -> PowerSeries:
    return PowerSeries.of([1], order)


def tree_series(order: int) -> PowerSeries:
    """T(X) = Σ τ_k X^k, from T = X + T² solved coefficient by coefficient."""
    t = [0] * (order + 1)
    if order >= 1:
        t[1] = 1
    for k in range(2, order + 1):
        t[k] = sum(t[i] * t[k - i] for i in range(1, k))
    return PowerSeries(tuple(t))


def forest_series(order: int, d: int = 1) -> PowerSeries:
    """R(X) = 1/(1 − T(DX))."""
    return (one(order) - tree_series(order).scale_var(d)).reciprocal()


@dataclass(frozen=True)
class TVSeries:
    r: PowerSeries
    h_m: tuple[PowerSeries, ...]
    h: tuple[tuple[Scalar, ...], ...]  # h[n][m]: coefficient of X^n Y^m

    def to_json(self) -> dict:
        return {
            "R": self.r.to_json(),
            "H_m": [s.to_json() for s in self.h_m],
            "H": [[render_scalar(c) for c in row] for row in self.h],
        }


def _bi_mul(a, b, n_max: int, m_max: int):
    out = [[Fraction(0)] * (m_max + 1) for _ in range(n_max + 1)]
    for i1 in range(n_max + 1):
        for j1 in range(m_max + 1):
            if a[i1][j1] == 0:
                continue
            for i2 in range(n_max + 1 - i1):
                for j2 in range(m_max + 1 - j1):
                    out[i1 + i2][j1 + j2] += a[i1][j1] * b[i2][j2]
    return out


def _bi_reciprocal(a, n_max: int, m_max: int):
    """Inverse of a bivariate series with a[0][0] ≠ 0, by the usual triangular recursion."""
    inv = [[Fraction(0)] * (m_max + 1) for _ in range(n_max + 1)]
    c0 = Fraction(a[0][0])
    for total in range(n_max + m_max + 1):
        for i in range(min(total, n_max) + 1):
            j = total - i
            if j > m_max:
                continue
            if i == 0 and j == 0:
                inv[0][0] = 1 / c0
                continue
            s = Fraction(0)
            for i1 in range(i + 1):
                for j1 in range(j + 1):
                    if (i1 or j1) and a[i1][j1]:
                        s += a[i1][j1] * inv[i - i1][j - j1]
            inv[i][j] = -s / c0
    return inv


def tv_series(grade_dims: Sequence[int], order: int) -> TVSeries:
    """Series of T(V) with dim V_i = grade_dims[i] (grade_dims[0] must be 0)."""
    if grade_dims and grade_dims[0] != 0:
        raise ValueError("V must have no component of degree 0")
    p = PowerSeries.of(list(grade_dims), order)
    return tv_series_from(p)


def tv_series_from(p: PowerSeries) -> TVSeries:
    order = p.order
    if p[0] != 0:
        raise ValueError("P(0) must vanish")
    r = (one(order) - p).reciprocal()
    h_m = tuple(p**m for m in range(order + 1))
    # H(X,Y) = R / ((1 − Y)R + Y), expanded as a bivariate series.
    num = [[r[i] if j == 0 else 0 for j in range(order + 1)] for i in range(order + 1)]
    # The denominator is R + Y(1 − R).
    den = [[0] * (order + 1) for _ in range(order + 1)]
    for i in range(order + 1):
        den[i][0] = r[i]
        if order >= 1:
            den[i][1] = (1 if i == 0 else 0) - r[i]
    h = _bi_mul(num, _bi_reciprocal(den, order, order), order, order)
    return TVSeries(r, h_m, tuple(tuple(normalize(c) for c in row) for row in h))


# -- primitive dimension by exact linear algebra --------------------------------------


def primitive_space(n: int, decor: Sequence[str] = ("*",)) -> list[Element]:
    """A basis of ker Δ̃ on the weight-n component."""
    basis = enumerate_forests(n, decor)
    columns = [reduced_coproduct(Element.of(f)) for f in basis]
    keys = sorted({k for col in columns for k in col.terms}, key=repr)
    matrix = [[col.terms.get(k, 0) for col in columns] for k in keys]
    if not matrix:
        matrix = [[0] * len(basis)]
    return [Element({f: c for f, c in zip(basis, vec) if c}) for vec in nullspace(matrix)]


@dataclass(frozen=True)
class PrimitiveReport:
    n: int
    kernel_dim: int
    tree_count: int
    trees_independent: bool
    trees_span_kernel: bool

    @property
    def ok(self) -> bool:
        return (
            self.kernel_dim == self.tree_count
            and self.trees_independent
            and self.trees_span_kernel
        )


def primitive_rank(n: int, decor: Sequence[str] = ("*",)) -> PrimitiveReport:
    """Compare ker Δ̃ in weight n with the span of the e_t over trees of weight n."""
    basis = enumerate_forests(n, decor)
    kernel = primitive_space(n, decor)
    ets = [dual((t,), decor) for t in enumerate_trees(n, decor)]

    def row(x: Element) -> list[Scalar]:
        return [x.coeff(f) for f in basis]

    et_rows = [row(x) for x in ets]
    r_e = rank(et_rows)
    r_all = rank(et_rows + [row(x) for x in kernel])
    all_primitive = all(not reduced_coproduct(x) for x in ets)
    return PrimitiveReport(
        n,
        len(kernel),
        len(ets),
        r_e == len(ets),
        all_primitive and r_all == r_e == len(kernel),
    )
