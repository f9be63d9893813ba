"""The Hopf pairing on forests, Gram matrices, exact inversion and the dual basis e_F."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

from .algebra import Element, Scalar, normalize
from .forest import (
    DEFAULT_DECOR,
    Forest,
    check_cap,
    enumerate_forests,
    forest_key,
    gamma,
    ge_gauche,
    ge_haut,
    mirror,
    vertex_decorations,
    weight,
)
from .hopf import _forest_cuts

IntMatrix = list[list[int]]


# -- the pairing -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _pair(f: Forest, g: Forest) -> int:
    if weight(f) != weight(g):
        return 0
    if not f:
        return 1
    if len(f) == 1:
        t = f[0]
        h = gamma(g, t.d)
        return 0 if h is None else _pair(t.children, h)
    first, rest = f[:1], f[1:]
    w = first[0].weight
    total = 0
    for p, r in _forest_cuts(g, False):
        if weight(p) == w:
            total += _pair(first, p) * _pair(rest, r)
    return total


def pair_forests(f: Forest, g: Forest) -> int:
    return _pair(f, g)


def pair(x: Element, y: Element) -> Scalar:
    total: Scalar = 0
    for f, c in x.terms.items():
        for g, d in y.terms.items():
            v = _pair(f, g)
            if v:
                total += c * d * v
    return total


def pair_combinatorial(f: Forest, g: Forest) -> int:
    """Count decoration-preserving bijections som(F) → som(G) compatible with the vertex orders."""
    n = weight(f)
    if n != weight(g):
        return 0
    if n == 0:
        return 1
    df, dg = vertex_decorations(f), vertex_decorations(g)
    if sorted(df) != sorted(dg):
        return 0
    haut_f = [[ge_haut(f, x, y) for y in range(n)] for x in range(n)]
    gauche_f = [[ge_gauche(f, x, y) for y in range(n)] for x in range(n)]
    haut_g = [[ge_haut(g, x, y) for y in range(n)] for x in range(n)]
    gauche_g = [[ge_gauche(g, x, y) for y in range(n)] for x in range(n)]
    image = [-1] * n
    used = [False] * n
    count = 0

    def consistent(x: int) -> bool:
        fx = image[x]
        for y in range(x):
            fy = image[y]
            if haut_f[x][y] and not gauche_g[fx][fy]:
                return False
            if haut_f[y][x] and not gauche_g[fy][fx]:
                return False
            if haut_g[fx][fy] and not gauche_f[x][y]:
                return False
            if haut_g[fy][fx] and not gauche_f[y][x]:
                return False
        return True

    def extend(x: int) -> None:
        nonlocal count
        if x == n:
            count += 1
            return
        for v in range(n):
            if used[v] or dg[v] != df[x]:
                continue
            image[x] = v
            if consistent(x):
                used[v] = True
                extend(x + 1)
                used[v] = False
        image[x] = -1

    extend(0)
    return count


# -- exact integer linear algebra ----------------------------------------------------


def bareiss_inverse(a: IntMatrix) -> tuple[int, IntMatrix]:
    """Fraction-free Gauss-Jordan elimination.

    Returns ``(det, adj)`` with ``adj`` the adjugate, so ``a^{-1} = adj / det``.
    Every intermediate division is exact; this is asserted.
    """
    n = len(a)
    m = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    prev = 1
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0, [[0] * n for _ in range(n)]
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(n):
            if i == k:
                continue
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(2 * n):
                num = pk * row_i[j] - mik * row_k[j]
                q, r = divmod(num, prev)
                assert r == 0, "inexact division in fraction-free elimination"
                row_i[j] = q
        prev = pk
    # Now the left block is prev·I for the row-permuted matrix.
    det = sign * prev
    adj = [[sign * m[i][n + j] for j in range(n)] for i in range(n)]
    return det, adj


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    det, adj = bareiss_inverse(a)
    if det not in (1, -1):
        raise ArithmeticError(f"matrix is not unimodular (det = {det})")
    return [[x * det for x in row] for row in adj]


def determinant(a: IntMatrix) -> int:
    return bareiss_inverse(a)[0]


# -- Gram matrices and the dual basis ------------------------------------------------


@dataclass(frozen=True)
class GramData:
    basis: tuple[Forest, ...]
    gram: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[int, ...], ...]
    det: int


@lru_cache(maxsize=None)
def _gram(n: int, decor: tuple[str, ...]) -> GramData:
    basis = tuple(enumerate_forests(n, decor))
    check_cap(len(basis) ** 2, f"Gram matrix of weight {n}")
    a = [[_pair(f, g) for g in basis] for f in basis]
    # The pairing vanishes unless the decoration multisets agree, so invert block by block.
    blocks: dict[tuple[str, ...], list[int]] = defaultdict(list)
    for i, f in enumerate(basis):
        blocks[tuple(sorted(vertex_decorations(f)))].append(i)
    size = len(basis)
    inv_rows = [[0] * size for _ in range(size)]
    det = 1
    for idx in blocks.values():
        block = [[a[i][j] for j in idx] for i in idx]
        d, adj = bareiss_inverse(block)
        if d not in (1, -1):
            raise ArithmeticError(f"Gram matrix of weight {n} has det {d * det}")
        det *= d
        for bi, i in enumerate(idx):
            for bj, j in enumerate(idx):
                inv_rows[i][j] = adj[bi][bj] * d
    inv = tuple(tuple(r) for r in inv_rows)
    return GramData(basis, tuple(tuple(r) for r in a), inv, det)


def gram_matrix(n: int, decor: Sequence[str] = DEFAULT_DECOR) -> tuple[list[Forest], IntMatrix]:
    g = _gram(n, tuple(decor))
    return list(g.basis), [list(r) for r in g.gram]


def gram_inverse(n: int, decor: Sequence[str] = DEFAULT_DECOR) -> tuple[list[Forest], IntMatrix]:
    g = _gram(n, tuple(decor))
    return list(g.basis), [list(r) for r in g.inverse]


@lru_cache(maxsize=None)
def _dual_basis(n: int, decor: tuple[str, ...]) -> dict[Forest, Element]:
    g = _gram(n, decor)
    out: dict[Forest, Element] = {}
    for j, fj in enumerate(g.basis):
        out[fj] = Element({fi: g.inverse[i][j] for i, fi in enumerate(g.basis)})
    return out


def dual_basis(n: int, decor: Sequence[str] = DEFAULT_DECOR) -> dict[Forest, Element]:
    """e_F for every forest of weight ``n``, read off the columns of the inverse Gram matrix."""
    return dict(_dual_basis(n, tuple(decor)))


def _decor_of(f: Forest, decor: Sequence[str] | None) -> tuple[str, ...]:
    if decor is not None:
        return tuple(decor)
    used = sorted(set(vertex_decorations(f)))
    return tuple(used) if used else DEFAULT_DECOR


def dual(f: Forest, decor: Sequence[str] | None = None) -> Element:
    """The dual basis element e_F in the forest basis."""
    if not f:
        return Element({(): 1})
    return _dual_basis(weight(f), _decor_of(f, decor))[f]


def e_to_forest(x: Element, decor: Sequence[str] | None = None) -> Element:
    """Expand an element written in the e-basis into the forest basis."""
    acc: dict[Forest, Scalar] = defaultdict(int)
    for f, c in x.terms.items():
        for g, d in dual(f, decor).terms.items():
            acc[g] += c * d
    return Element(acc)


def forest_to_e(x: Element, decor: Sequence[str] | None = None) -> Element:
    """Coordinates of ``x`` in the e-basis: the coefficient of e_F is (x, F)."""
    weights = {weight(f) for f in x.terms}
    dec = tuple(decor) if decor is not None else _decor_of(
        tuple(t for f in x.terms for t in f), None
    )
    acc: dict[Forest, Scalar] = {}
    for n in weights:
        for f in ([()] if n == 0 else enumerate_forests(n, dec)):
            v = pair(x, Element.of(f))
            if v:
                acc[f] = v
    return Element(acc)


def dual_pair_check(n: int, decor: Sequence[str] = DEFAULT_DECOR) -> bool:
    basis = enumerate_forests(n, decor)
    duals = dual_basis(n, decor)
    return all(
        pair(duals[f], Element.of(g)) == (1 if f == g else 0) for f in basis for g in basis
    )


@dataclass(frozen=True)
class MirrorReport:
    det: int
    unimodular: bool
    triangular: bool
    perm_sign: int


def mirror_diagnostics(n: int, decor: Sequence[str] = DEFAULT_DECOR) -> MirrorReport:
    """Check that B = A·M is lower unitriangular when the basis is sorted by mirror images."""
    dt = tuple(decor)
    basis = sorted(enumerate_forests(n, dt), key=lambda f: forest_key(mirror(f), dt))
    a = [[_pair(f, g) for g in basis] for f in basis]
    index = {f: i for i, f in enumerate(basis)}
    # M[i][j] = δ(F_i, m(F_j)); B[i][j] = (F_i, m(F_j)).
    perm = [index[mirror(f)] for f in basis]
    b = [[a[i][perm[j]] for j in range(len(basis))] for i in range(len(basis))]
    r = len(basis)
    tri = all(b[i][i] == 1 for i in range(r)) and all(
        b[i][j] == 0 for i in range(r) for j in range(i + 1, r)
    )
    det = determinant(a)
    return MirrorReport(det, det in (1, -1), tri, _perm_sign(perm))


def _perm_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def mirror_by_maximum(f: Forest, decor: Sequence[str] | None = None) -> Forest:
    """m(F) as the largest G with (F, G) ≠ 0 (oracle for the recursive mirror)."""
    dec = _decor_of(f, decor)
    best = None
    for g in enumerate_forests(weight(f), dec):
        if _pair(f, g):
            best = g
    assert best is not None
    return best


# -- exact rational elimination ------------------------------------------------------


def _integral_row(row: Sequence[Scalar]) -> list[int]:
    den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * den) for x in row]


def _primitive_row(row: list[int]) -> list[int]:
    g = gcd(*row)
    return [x // g for x in row] if g > 1 else row


def rref(a: Sequence[Sequence[Scalar]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns.

    Elimination runs on integer rows kept primitive by their gcd; rows are divided by
    their pivots only at the end.
    """
    m = [_integral_row(row) for row in a]
    rows, cols = len(m), len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pk = m[r][c]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = _primitive_row([pk * x - f * y for x, y in zip(m[i], m[r])])
        pivots.append(c)
        r += 1
    out = [[Fraction(x, m[i][p]) for x in m[i]] for i, p in enumerate(pivots)]
    out.extend([Fraction(0)] * cols for _ in range(rows - len(pivots)))
    return out, pivots


def rank(a: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(a)[1]) if a else 0


def nullspace(a: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    """A basis of {x : a·x = 0}, one vector per free column."""
    m, pivots = rref(a)
    cols = len(a[0]) if a else 0
    out: list[list[Scalar]] = []
    for free in (c for c in range(cols) if c not in pivots):
        vec: list[Scalar] = [0] * cols
        vec[free] = 1
        for i, p in enumerate(pivots):
            vec[p] = normalize(-m[i][free])
        out.append(vec)
    return out
