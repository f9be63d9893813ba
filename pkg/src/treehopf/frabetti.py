"""Planar binary trees, their bijection with undecorated forests, and the second
coproduct on forests obtained by transport (recursively and via left-admissible cuts)."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .algebra import Element, Scalar, Tensor
from .forest import Forest, Tree, UNIT
from .hopf import _forest_cuts


@dataclass(frozen=True)
class Leaf:
    def __str__(self) -> str:
        return "|"


@dataclass(frozen=True)
class Node:
    left: BinaryTree
    right: BinaryTree

    def __str__(self) -> str:
        return f"({self.left}^{self.right})"


BinaryTree = Union[Leaf, Node]
LEAF = Leaf()


def degree(b: BinaryTree) -> int:
    if isinstance(b, Leaf):
        return 0
    return 1 + degree(b.left) + degree(b.right)


def vee(left: BinaryTree, right: BinaryTree) -> Node:
    return Node(left, right)


def parse_binary(text: str) -> BinaryTree:
    pos = 0

    def parse() -> BinaryTree:
        nonlocal pos
        if text.startswith("|", pos):
            pos += 1
            return LEAF
        if not text.startswith("(", pos):
            raise ValueError(f"expected '|' or '(' at position {pos}")
        pos += 1
        left = parse()
        if not text.startswith("^", pos):
            raise ValueError(f"expected '^' at position {pos}")
        pos += 1
        right = parse()
        if not text.startswith(")", pos):
            raise ValueError(f"expected ')' at position {pos}")
        pos += 1
        return Node(left, right)

    out = parse()
    if pos != len(text):
        raise ValueError(f"trailing input at position {pos}")
    return out


def render_binary(b: BinaryTree) -> str:
    return str(b)


def enumerate_binary(n: int) -> list[BinaryTree]:
    if n == 0:
        return [LEAF]
    return [
        Node(left, right)
        for k in range(n)
        for left in enumerate_binary(k)
        for right in enumerate_binary(n - 1 - k)
    ]


def binary_product(s: BinaryTree, t: BinaryTree) -> BinaryTree:
    """Graft ``t`` on the leftmost leaf of ``s``."""
    if isinstance(s, Leaf):
        return t
    return Node(binary_product(s.left, t), s.right)


def binary_to_forest(b: BinaryTree) -> Forest:
    """f(|) = 1 and f(l ∨ r) = B+(f(r)) f(l)."""
    if isinstance(b, Leaf):
        return UNIT
    return (Tree("*", binary_to_forest(b.right)),) + binary_to_forest(b.left)


def forest_to_binary(f: Forest) -> BinaryTree:
    """g(1) = | and g(tF) = g(F) ∨ g(B^-(t))."""
    if not f:
        return LEAF
    return Node(forest_to_binary(f[1:]), forest_to_binary(f[0].children))


# -- the transported coproduct ------------------------------------------------------


def _tensor_product(a: dict, b: dict) -> dict:
    acc: dict[tuple[Forest, Forest], Scalar] = defaultdict(int)
    for (p1, r1), c1 in a.items():
        for (p2, r2), c2 in b.items():
            acc[(p1 + p2, r1 + r2)] += c1 * c2
    return acc


@lru_cache(maxsize=None)
def _fr_rec(f: Forest) -> dict:
    if not f:
        return {(UNIT, UNIT): 1}
    if len(f) > 1:
        return _tensor_product(_fr_rec(f[:1]), _fr_rec(f[1:]))
    inner = f[0].children
    d = f[0].d
    acc: dict[tuple[Forest, Forest], Scalar] = defaultdict(int)
    acc[(f, UNIT)] += 1
    for (p, r), c in _fr_rec(inner).items():
        acc[(p, (Tree(d, r),))] += c
    if inner:
        head = (Tree(d, inner[0].children),)
        for (p, r), c in _fr_rec(inner[1:]).items():
            acc[(head + p, (Tree(d, r),))] -= c
    return {k: v for k, v in acc.items() if v}


def coproduct_fr_recursive(x: Element) -> Tensor:
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for f, c in x.terms.items():
        for k, d in _fr_rec(f).items():
            acc[k] += c * d
    return Tensor(2, acc)


def coproduct_fr_cuts(f: Forest | Element) -> Tensor:
    """Sum of P^c ⊗ R^c over left-admissible cuts (empty and total included)."""
    items = f.terms.items() if isinstance(f, Element) else [(f, 1)]
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for g, c in items:
        for p, r in _forest_cuts(g, True):
            acc[(p, r)] += c
    return Tensor(2, acc)


def reduced_coproduct_fr(x: Element) -> Tensor:
    full = coproduct_fr_cuts(x)
    acc = dict(full.terms)
    for f, c in x.terms.items():
        for k in ((UNIT, f), (f, UNIT)):
            acc[k] = acc.get(k, 0) - c
    return Tensor(2, acc)
