"""Sums of all forests (u_n) and all trees (v_n), the closed forms for their
reduced coproducts, and the change of variables u_n ↦ z_n."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, Literal, Mapping

from .algebra import Element, Scalar, Tensor, normalize, render_combination, render_scalar
from .forest import Forest, Tree, enumerate_forests, enumerate_trees
from .frabetti import reduced_coproduct_fr
from .hopf import coproduct, reduced_coproduct

Letter = tuple[str, int]  # ("u", n) or ("v", n)
Word = tuple[Letter, ...]


@lru_cache(maxsize=None)
def _u(n: int) -> Element:
    if n == 0:
        return Element({(): 1})
    return Element({f: 1 for f in enumerate_forests(n)})


@lru_cache(maxsize=None)
def _v(n: int) -> Element:
    return Element({(t,): 1 for t in enumerate_trees(n)})


def u(n: int) -> Element:
    """Sum of all undecorated forests of weight ``n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _u(n)


def v(n: int) -> Element:
    """Sum of all undecorated trees of weight ``n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _v(n)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


@dataclass
class VPolynomial:
    """Linear combination of ordered words in the letters u_n, v_n."""

    terms: dict[Word, Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {w: normalize(c) for w, c in self.terms.items() if c != 0}

    def __add__(self, other: VPolynomial) -> VPolynomial:
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return VPolynomial(acc)

    def __mul__(self, other: VPolynomial | Scalar) -> VPolynomial:
        if not isinstance(other, VPolynomial):
            return VPolynomial({w: other * c for w, c in self.terms.items()})
        acc: dict[Word, Scalar] = defaultdict(int)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                acc[w1 + w2] += c1 * c2
        return VPolynomial(acc)

    __rmul__ = __mul__

    def evaluate(self) -> Element:
        acc: dict[Forest, Scalar] = defaultdict(int)
        for w, c in self.terms.items():
            for f, d in evaluate_word(w).terms.items():
                acc[f] += c * d
        return Element(acc)

    def substitute(self, images: Mapping[Letter, Element]) -> Element:
        """Algebra morphism sending each letter to the given element."""
        acc: dict[Forest, Scalar] = defaultdict(int)
        for w, c in self.terms.items():
            cur = Element({(): 1})
            for letter in w:
                cur = cur * images[letter]
            for f, d in cur.terms.items():
                acc[f] += c * d
        return Element(acc)

    def render(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: (sum(n for _, n in kv[0]), kv[0]))
        return render_combination([(render_word(w), c) for w, c in items])

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": render_scalar(c), "word": [[k, n] for k, n in w]}
                for w, c in sorted(self.terms.items())
            ]
        }


def render_word(w: Word) -> str:
    return "1" if not w else "·".join(f"{k}{n}" for k, n in w)


def letter(kind: str, n: int) -> VPolynomial:
    return VPolynomial({((kind, n),): 1})


def evaluate_word(w: Word) -> Element:
    cur = Element({(): 1})
    for kind, n in w:
        cur = cur * (u(n) if kind == "u" else v(n))
    return cur


# -- the four closed forms ------------------------------------------------------------

VTensor = dict[tuple[Word, Word], Scalar]


def cm_coproduct_formula(kind: Literal["u", "v"], which: Literal["delta", "fr"], n: int) -> VTensor:
    """Closed-form reduced coproduct of u_n or v_n as v-words ⊗ (u or v) letters."""
    out: VTensor = defaultdict(int)
    for k in range(1, n):
        for comp in compositions(k):
            l = len(comp)
            if which == "delta":
                top = 2 * n - 2 * k + l - (2 if kind == "v" else 0)
            else:
                top = n - k + l - (2 if kind == "v" else 0)
            c = comb(top, l) if top >= 0 else 0
            if c:
                out[(tuple(("v", a) for a in comp), ((kind, n - k),))] += c
    return dict(out)


def evaluate_vtensor(t: Mapping[tuple[Word, Word], Scalar]) -> Tensor:
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for (w1, w2), c in t.items():
        left, right = evaluate_word(w1), evaluate_word(w2)
        for f, a in left.terms.items():
            for g, b in right.terms.items():
                acc[(f, g)] += c * a * b
    return Tensor(2, acc)


def render_vtensor(t: Mapping[tuple[Word, Word], Scalar]) -> str:
    items = sorted(t.items())
    return render_combination([(f"{render_word(a)} ⊗ {render_word(b)}", c) for (a, b), c in items])


def brute_reduced(kind: Literal["u", "v"], which: Literal["delta", "fr"], n: int) -> Tensor:
    x = u(n) if kind == "u" else v(n)
    return reduced_coproduct(x) if which == "delta" else reduced_coproduct_fr(x)


# -- decomposition into u-words ------------------------------------------------------


def chain(n: int) -> Tree:
    t = Tree("*")
    for _ in range(n - 1):
        t = Tree("*", (t,))
    return t


def _chain_forest(comp: tuple[int, ...]) -> Forest:
    return tuple(chain(a) for a in comp)


def _coarsenings(comp: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], int]]:
    """Compositions obtained by merging adjacent parts, with the number of merges."""
    if not comp:
        yield (), 0
        return
    gaps = len(comp) - 1
    for mask in product((0, 1), repeat=gaps):
        parts = [comp[0]]
        for a, merge in zip(comp[1:], mask):
            if merge:
                parts[-1] += a
            else:
                parts.append(a)
        yield tuple(parts), sum(mask)


def to_u_polynomial(x: Element) -> VPolynomial:
    """Write ``x`` as a combination of u-words; raises if ``x`` is outside the subalgebra."""
    weights = {sum(t.weight for t in f) for f in x.terms}
    acc: dict[Word, Scalar] = defaultdict(int)
    for n in weights:
        # [c_b] U_a = 1 iff a is a coarsening of b; invert over the composition lattice.
        for a in compositions(n):
            for b, merges in _coarsenings(a):
                cb = x.coeff(_chain_forest(b))
                if cb:
                    acc[tuple(("u", p) for p in a)] += cb * (-1) ** merges
    poly = VPolynomial(dict(acc))
    if poly.evaluate() != x:
        raise ValueError("element is not in the subalgebra generated by the u_n")
    return poly


def tensor_to_u(t: Tensor) -> VTensor:
    """Two-sided version of :func:`to_u_polynomial` for tensors of arity 2."""
    by_left: dict[Forest, dict[Forest, Scalar]] = defaultdict(dict)
    for (f, g), c in t.terms.items():
        by_left[f][g] = c
    # Decompose the right factors first, then the left coefficients of each u-word.
    right_parts: dict[Word, dict[Forest, Scalar]] = defaultdict(lambda: defaultdict(int))
    for f, row in by_left.items():
        poly = to_u_polynomial(Element(row))
        for w, c in poly.terms.items():
            right_parts[w][f] += c
    out: VTensor = {}
    for w2, col in right_parts.items():
        poly = to_u_polynomial(Element(col))
        for w1, c in poly.terms.items():
            out[(w1, w2)] = c
    if evaluate_vtensor(out) != t:
        raise ValueError("tensor is not in the subalgebra generated by the u_n")
    return out


# -- z_n, w_n and the morphism u_n ↦ z_n ---------------------------------------------


@lru_cache(maxsize=None)
def z_poly(n: int) -> VPolynomial:
    out = letter("u", n) * 2
    for k in range(1, n):
        out = out + letter("u", k) * letter("u", n - k)
    return out


@lru_cache(maxsize=None)
def w_poly(n: int) -> VPolynomial:
    half = Fraction(1, 2)
    out = letter("u", n) * half
    for i in range(1, n):
        out = out + (w_poly(i) * w_poly(n - i)) * (-half)
    return out


def z(n: int) -> Element:
    return z_poly(n).evaluate()


def w(n: int) -> Element:
    return w_poly(n).evaluate()


def phi(poly: VPolynomial) -> Element:
    """Apply the algebra morphism u_n ↦ z_n to a u-word polynomial."""
    images = {}
    for word in poly.terms:
        for kind, n in word:
            if kind != "u":
                raise ValueError("phi is applied to u-words only")
            images[(kind, n)] = z(n)
    return poly.substitute(images)


def phi_tensor(t: VTensor) -> Tensor:
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for (w1, w2), c in t.items():
        left = phi(VPolynomial({w1: 1}))
        right = phi(VPolynomial({w2: 1}))
        for f, a in left.terms.items():
            for g, b in right.terms.items():
                acc[(f, g)] += c * a * b
    return Tensor(2, acc)


@dataclass(frozen=True)
class PhiReport:
    n: int
    inverse_ok: bool
    coproduct_ok: bool

    @property
    def ok(self) -> bool:
        return self.inverse_ok and self.coproduct_ok


def phi_check(n_max: int) -> list[PhiReport]:
    """For each n: Φ(w_n) = u_n and Δ(Φ(u_n)) = (Φ⊗Φ)(Δ_Fr(u_n)), fully expanded."""
    from .frabetti import coproduct_fr_cuts

    out: list[PhiReport] = []
    for n in range(1, n_max + 1):
        inv = phi(w_poly(n)) == u(n)
        lhs = coproduct(z(n))
        rhs = phi_tensor(tensor_to_u(coproduct_fr_cuts(u(n))))
        out.append(PhiReport(n, inv, lhs == rhs))
    return out


def u_to_v(poly: VPolynomial) -> VPolynomial:
    """Rewrite u-letters through u_n = Σ over compositions of n of v_{a1}…v_{al}."""
    out = VPolynomial()
    for word, c in poly.terms.items():
        cur = VPolynomial({(): c})
        for kind, n in word:
            if kind == "u":
                cur = cur * VPolynomial({tuple(("v", a) for a in comp): 1 for comp in compositions(n)})
            else:
                cur = cur * letter(kind, n)
        out = out + cur
    return out


def closure_check(kind: Literal["u", "v"], n: int) -> VTensor:
    """Δ̃ of u_n or v_n written as v-word ⊗ v-word; raises if it leaves the subalgebra."""
    acc: VTensor = defaultdict(int)
    for (w1, w2), c in tensor_to_u(brute_reduced(kind, "delta", n)).items():
        for a, ca in u_to_v(VPolynomial({w1: 1})).terms.items():
            for b, cb in u_to_v(VPolynomial({w2: 1})).terms.items():
                acc[(a, b)] += c * ca * cb
    return {k: c for k, c in acc.items() if c}


def sqrt_identity(n: int) -> bool:
    """Weight-n component of (1 + Σ w_k)² = 1 + Σ u_k."""
    lhs = w(n) * 2
    for i in range(1, n):
        lhs = lhs + w(i) * w(n - i)
    return lhs == u(n)
