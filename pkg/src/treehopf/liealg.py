"""Primitive Lie algebra: angles and graftings, brackets, cut counts, the ⊤ product
on the dual basis and bialgebra endomorphisms built from primitives."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Mapping, Sequence

from .algebra import Element, Scalar, Tensor, tensor_map
from .forest import (
    Forest,
    Tree,
    check_cap,
    enumerate_forests,
    enumerate_trees,
    infer_decor,
    weight,
)
from .hopf import _forest_cuts, coproduct, cut_count, reduced_coproduct
from .pairing import e_to_forest, forest_to_e

EBasis = dict[Tree, int]


@dataclass(frozen=True, order=True)
class Angle:
    vertex: int
    slot: int
    leftmost: bool = False


def angles(t: Tree) -> list[Angle]:
    """Angles of ``t`` swept left to right; slot ``i`` sits just left of child ``i``."""
    out: list[Angle] = []
    counter = 0

    def sweep(node: Tree) -> None:
        nonlocal counter
        v = counter
        counter += 1
        for i, c in enumerate(node.children):
            out.append(Angle(v, i, i == 0))
            sweep(c)
        out.append(Angle(v, len(node.children), not node.children))

    sweep(t)
    return out


@dataclass(frozen=True)
class Grafting:
    target: Tree
    scions: Forest
    slots: tuple[Angle, ...]

    def __post_init__(self) -> None:
        if len(self.slots) != len(self.scions):
            raise ValueError("one angle per scion is required")
        order = angles(self.target)
        pos = {(a.vertex, a.slot): i for i, a in enumerate(order)}
        idx = [pos.get((a.vertex, a.slot)) for a in self.slots]
        if any(i is None for i in idx):
            raise ValueError("angle not in target")
        if any(a > b for a, b in zip(idx, idx[1:])):
            raise ValueError("angles must be weakly increasing")


def graft(g: Grafting) -> Tree:
    """Graft the scions at their angles; equal angles keep scion order left to right."""
    placed: dict[tuple[int, int], list[Tree]] = defaultdict(list)
    for scion, a in zip(g.scions, g.slots):
        placed[(a.vertex, a.slot)].append(scion)
    counter = 0

    def build(node: Tree) -> Tree:
        nonlocal counter
        v = counter
        counter += 1
        kids: list[Tree] = []
        for i, c in enumerate(node.children):
            kids.extend(placed.get((v, i), ()))
            kids.append(build(c))
        kids.extend(placed.get((v, len(node.children)), ()))
        return Tree(node.d, tuple(kids))

    return build(g.target)


def graftings(f: Forest, t: Tree, avoid_leftmost: bool = False) -> list[Grafting]:
    """All weakly increasing angle sequences for the trees of ``f`` on ``t``."""
    angs = [a for a in angles(t) if not (avoid_leftmost and a.leftmost)]
    check_cap(comb(len(f) + len(angs) - 1, len(f)) if angs else 1, "graftings")
    return [Grafting(t, f, combo) for combo in combinations_with_replacement(angs, len(f))]


# -- cut counts and brackets ---------------------------------------------------------


def _trees_like(*trees: Tree) -> list[Tree]:
    decor = infer_decor((t,) for t in trees)
    return enumerate_trees(sum(t.weight for t in trees), decor)


def bracket_cuts(t1: Tree, t2: Tree) -> EBasis:
    """Structure constants of [e_t1, e_t2] from elementary cut counts."""
    out: EBasis = {}
    for t in _trees_like(t1, t2):
        c = cut_count((t1,), (t2,), (t,)) - cut_count((t2,), (t1,), (t,))
        if c:
            out[t] = c
    return out


def bracket_graft(t1: Tree, t2: Tree) -> EBasis:
    """[e_t1, e_t2] as graftings of t2 on t1 minus graftings of t1 on t2."""
    acc: Counter[Tree] = Counter()
    for g in graftings((t1,), t2):
        acc[graft(g)] += 1
    for g in graftings((t2,), t1):
        acc[graft(g)] -= 1
    return {t: c for t, c in acc.items() if c}


def bracket_lin(x: Mapping[Tree, Scalar], y: Mapping[Tree, Scalar], method=bracket_cuts) -> dict:
    """Bilinear extension of a bracket on e-basis tree combinations."""
    acc: dict[Tree, Scalar] = defaultdict(int)
    for a, ca in x.items():
        for b, cb in y.items():
            for t, c in method(a, b).items():
                acc[t] += ca * cb * c
    return {t: c for t, c in acc.items() if c}


def jacobi(t1: Tree, t2: Tree, t3: Tree, method=bracket_cuts) -> dict:
    """[[t1,t2],t3] + [[t2,t3],t1] + [[t3,t1],t2]; empty when Jacobi holds."""
    acc: dict[Tree, Scalar] = defaultdict(int)
    for a, b, c in ((t1, t2, t3), (t2, t3, t1), (t3, t1, t2)):
        for t, v in bracket_lin(method(a, b), {c: 1}, method).items():
            acc[t] += v
    return {t: v for t, v in acc.items() if v}


def counting_sums(f: Forest, t: Tree) -> tuple[int, int]:
    """(Σ_t' n(F,t;t'), Σ_t' n_G(F,t;t')) by brute force over trees t'."""
    decor = infer_decor([f, (t,)])
    total = left = 0
    for tp in enumerate_trees(weight(f) + t.weight, decor):
        total += cut_count(f, (t,), (tp,))
        left += cut_count(f, (t,), (tp,), left_only=True)
    return total, left


def counting_closed_form(f: Forest, t: Tree) -> tuple[int, int]:
    m, n = len(f), t.weight
    return comb(2 * n + m - 2, m), comb(n + m - 2, m) if n + m - 2 >= 0 else 0


def forest_counting_sums(f: Forest, g: Forest) -> tuple[int, int]:
    """(Σ_H n(F,G;H), Σ_H n_G(F,G;H)) by brute force over forests H."""
    decor = infer_decor([f, g])
    total = left = 0
    for h in enumerate_forests(weight(f) + weight(g), decor):
        total += cut_count(f, g, h)
        left += cut_count(f, g, h, left_only=True)
    return total, left


def forest_counting_closed_form(f: Forest, g: Forest) -> tuple[int, int]:
    m, n = len(f), weight(g)
    return comb(2 * n + m, m), comb(n + m, m)


# -- the ⊤ product -------------------------------------------------------------------


def top_product(x: Element, trees: Sequence[Tree]) -> Element:
    """x ⊤ e_{t1} ⊤ … ⊤ e_{tn} for ``x`` given in the e-basis; result in the e-basis."""
    suffix = tuple(trees)
    return Element({f + suffix: c for f, c in x.terms.items()})


def top(x: Element, y: Element) -> Element:
    """x ⊤ y for elements in the forest basis (e_F ⊤ e_G = e_FG)."""
    xe, ye = forest_to_e(x), forest_to_e(y)
    acc: dict[Forest, Scalar] = defaultdict(int)
    for f, c in xe.terms.items():
        for g, d in ye.terms.items():
            acc[f + g] += c * d
    return e_to_forest(Element(acc))


def endo_from_primitives(
    prims: Mapping[Tree, Element], max_weight: int, decor: Sequence[str] = ("*",)
) -> dict[Forest, Element]:
    """Tabulate the algebra endomorphism Φ with Φ(t) = Σ Φ(t')⊤P_{t''} + P_t on forests."""
    for n in range(1, max_weight + 1):
        for t in enumerate_trees(n, decor):
            if t not in prims:
                raise KeyError(f"missing primitive for tree {t}")
            p = prims[t]
            if reduced_coproduct(p) or p.terms.get(()):
                raise ValueError(f"P_t for {t} is not primitive")
    table: dict[Forest, Element] = {(): Element({(): 1})}
    tree_img: dict[Tree, Element] = {}
    for n in range(1, max_weight + 1):
        for t in enumerate_trees(n, decor):
            img = prims[t]
            for (p, r), c in reduced_coproduct(Element.of(t)).terms.items():
                # Trunks of tree cuts are single trees.
                img = img + top(table[p], prims[r[0]]) * c
            tree_img[t] = img
        for f in enumerate_forests(n, decor):
            if len(f) == 1:
                table[f] = tree_img[f[0]]
            else:
                out = Element({(): 1})
                for t in f:
                    out = out * tree_img[t]
                table[f] = out
    return table


def endo_is_bialgebra_map(table: Mapping[Forest, Element]) -> bool:
    """Check Δ∘Φ = (Φ⊗Φ)∘Δ and ε∘Φ = ε on every tabulated forest."""

    def phi(f: Forest) -> Element:
        return table[f]

    for f, img in table.items():
        lhs = coproduct(img)
        rhs = tensor_map(coproduct(Element.of(f)), [phi, phi])
        if lhs != rhs:
            return False
        if img.terms.get((), 0) != (1 if not f else 0):
            return False
    return True


def cut_multiset(f: Forest, t: Tree, left_only: bool = False) -> Counter[Tree]:
    """Trees t' weighted by n(F,t;t') (or n_G): the cut side of the grafting bijection."""
    decor = infer_decor([f, (t,)])
    out: Counter[Tree] = Counter()
    for tp in enumerate_trees(weight(f) + t.weight, decor):
        for p, r in _forest_cuts((tp,), left_only):
            if p == f and r == (t,):
                out[tp] += 1
    return out
