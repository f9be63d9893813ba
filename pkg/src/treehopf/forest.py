"""Planar decorated rooted trees and forests.

A forest is a plain tuple of :class:`Tree` values; the empty tuple is the
unit forest ``1``.  Vertices are addressed by their preorder rank (trees left
to right, root first, then subtrees left to right).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache
from math import comb
from typing import Iterable, Sequence

DEFAULT_DECOR: tuple[str, ...] = ("*",)
DEFAULT_CAP = 10**6
CAP_ENV = "TREEHOPF_MAX_ITEMS"

_TOKEN = re.compile(r"[A-Za-z0-9_*]+")


class ParseError(ValueError):
    """Malformed forest text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class ResourceCapError(RuntimeError):
    """A computation would exceed the configured item cap."""


def item_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


def check_cap(count: int, what: str) -> None:
    cap = item_cap()
    if count > cap:
        raise ResourceCapError(f"{what}: {count} items exceeds cap {cap} (set {CAP_ENV})")


@dataclass(frozen=True)
class Tree:
    d: str
    children: tuple[Tree, ...] = ()
    weight: int = field(init=False, compare=False, repr=False)
    _hash: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight", 1 + sum(c.weight for c in self.children))
        object.__setattr__(self, "_hash", hash((self.d, self.children)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return render_tree(self)


Forest = tuple[Tree, ...]
UNIT: Forest = ()


def leaf(d: str = "*") -> Tree:
    return Tree(d)


# -- text and JSON encodings ---------------------------------------------------


def parse_forest(text: str, decor: Sequence[str] | None = None) -> Forest:
    """Parse ``forest := "1" | tree (" " tree)*``; ``tree := DECOR ("[" forest "]")?``."""
    allowed = None if decor is None else set(decor)
    pos = 0

    def parse_seq() -> Forest:
        nonlocal pos
        trees = [parse_tree()]
        while pos < len(text) and text[pos] == " ":
            pos += 1
            trees.append(parse_tree())
        return tuple(trees)

    def parse_tree() -> Tree:
        nonlocal pos
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("expected decoration", pos)
        tok = m.group(0)
        if allowed is not None and tok not in allowed:
            raise ParseError(f"unknown decoration {tok!r}", pos)
        pos = m.end()
        if pos < len(text) and text[pos] == "[":
            pos += 1
            kids = parse_seq()
            if pos >= len(text) or text[pos] != "]":
                raise ParseError("expected ']'", pos)
            pos += 1
            return Tree(tok, kids)
        return Tree(tok)

    if text == "1":
        return UNIT
    if not text:
        raise ParseError("empty input", 0)
    out = parse_seq()
    if pos != len(text):
        raise ParseError("unexpected character", pos)
    return out


def parse_tree(text: str, decor: Sequence[str] | None = None) -> Tree:
    f = parse_forest(text, decor)
    if len(f) != 1:
        raise ParseError("expected a single tree", 0)
    return f[0]


def render_tree(t: Tree) -> str:
    if not t.children:
        return t.d
    return t.d + "[" + " ".join(render_tree(c) for c in t.children) + "]"


def render_forest(f: Forest) -> str:
    if not f:
        return "1"
    return " ".join(render_tree(t) for t in f)


def tree_to_json(t: Tree) -> dict:
    return {"d": t.d, "children": [tree_to_json(c) for c in t.children]}


def forest_to_json(f: Forest) -> list:
    return [tree_to_json(t) for t in f]


def forest_from_json(data: list) -> Forest:
    def build(node: dict) -> Tree:
        return Tree(node["d"], tuple(build(c) for c in node.get("children", [])))

    return tuple(build(n) for n in data)


# -- structural maps ------------------------------------------------------------


def weight(f: Forest) -> int:
    return sum(t.weight for t in f)


def bplus(f: Forest, d: str = "*", decor: Sequence[str] | None = None) -> Tree:
    if decor is not None and d not in decor:
        raise ValueError(f"decoration {d!r} not in {list(decor)}")
    return Tree(d, tuple(f))


def bminus(t: Tree) -> Forest:
    return t.children


def gamma(f: Forest, d: str = "*") -> Forest | None:
    """Strip a trailing single vertex decorated ``d``; ``None`` stands for zero."""
    if f and f[-1].d == d and not f[-1].children:
        return f[:-1]
    return None


def mirror(f: Forest) -> Forest:
    """The involution m on forests of a fixed weight."""
    return _mirror(f)


@lru_cache(maxsize=None)
def _mirror(f: Forest) -> Forest:
    if not f:
        return UNIT
    if len(f) == 1:
        t = f[0]
        return _mirror(t.children) + (Tree(t.d),)
    last = f[-1]
    if not last.children:
        return (Tree(last.d, _mirror(f[:-1])),)
    return _mirror(last.children) + (Tree(last.d, _mirror(f[:-1])),)


# -- the total order on forests -------------------------------------------------


@lru_cache(maxsize=None)
def _tree_key(t: Tree, decor: tuple[str, ...]) -> tuple:
    return (t.weight, 1, decor.index(t.d), _forest_key(t.children, decor))


@lru_cache(maxsize=None)
def _forest_key(f: Forest, decor: tuple[str, ...]) -> tuple:
    if len(f) == 1:
        return _tree_key(f[0], decor)
    return (weight(f), 0, tuple(_tree_key(t, decor) for t in reversed(f)))


def forest_key(f: Forest, decor: Sequence[str] = DEFAULT_DECOR) -> tuple:
    """Sort key realising the total order on forests (ascending)."""
    return _forest_key(f, tuple(decor))


def compare_forests(f: Forest, g: Forest, decor: Sequence[str] = DEFAULT_DECOR) -> int:
    """Return -1, 0 or 1 as ``f`` is smaller than, equal to or greater than ``g``."""
    kf, kg = forest_key(f, decor), forest_key(g, decor)
    return (kf > kg) - (kf < kg)


def compare_forests_direct(f: Forest, g: Forest, decor: Sequence[str] = DEFAULT_DECOR) -> int:
    """Clause-by-clause comparison, kept as an oracle for :func:`forest_key`."""
    if f == g:
        return 0
    wf, wg = weight(f), weight(g)
    if wf != wg:
        return 1 if wf > wg else -1
    n, m = len(f), len(g)
    if n == 1 and m >= 2:
        return 1
    if m == 1 and n >= 2:
        return -1
    if n == 1 and m == 1:
        rf, rg = decor.index(f[0].d), decor.index(g[0].d)
        if rf != rg:
            return 1 if rf > rg else -1
        return compare_forests_direct(f[0].children, g[0].children, decor)
    for a, b in zip(reversed(f), reversed(g)):
        if a != b:
            return compare_forests_direct((a,), (b,), decor)
    raise AssertionError("distinct forests of equal weight share a suffix")


def infer_decor(fs: Iterable[Forest]) -> tuple[str, ...]:
    """Decorations occurring in ``fs`` in sorted order (used when none is configured)."""
    found: set[str] = set()
    for f in fs:
        found.update(vertex_decorations(f))
    return tuple(sorted(found)) or DEFAULT_DECOR


def sort_forests(fs: Iterable[Forest], decor: Sequence[str] = DEFAULT_DECOR) -> list[Forest]:
    dt = tuple(decor)
    return sorted(fs, key=lambda f: _forest_key(f, dt))


# -- enumeration -----------------------------------------------------------------


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _trees(n: int, decor: tuple[str, ...]) -> tuple[Tree, ...]:
    return tuple(Tree(d, f) for d in decor for f in _forests(n - 1, decor))


@lru_cache(maxsize=None)
def _forests(n: int, decor: tuple[str, ...]) -> tuple[Forest, ...]:
    if n == 0:
        return (UNIT,)
    out: list[Forest] = []
    for k in range(1, n + 1):
        for t in _trees(k, decor):
            for rest in _forests(n - k, decor):
                out.append((t,) + rest)
    return tuple(out)


def enumerate_trees(n: int, decor: Sequence[str] = DEFAULT_DECOR) -> list[Tree]:
    """All trees of weight ``n`` in ascending order."""
    if n < 1:
        raise ValueError("tree weight must be at least 1")
    dt = tuple(decor)
    check_cap(len(dt) ** n * catalan(n - 1), f"trees of weight {n}")
    return [f[0] for f in sort_forests(((t,) for t in _trees(n, dt)), dt)]


def enumerate_forests(n: int, decor: Sequence[str] = DEFAULT_DECOR) -> list[Forest]:
    """All forests of weight ``n`` in ascending order."""
    if n < 0:
        raise ValueError("forest weight must be non-negative")
    dt = tuple(decor)
    check_cap(len(dt) ** n * catalan(n), f"forests of weight {n}")
    return sort_forests(_forests(n, dt), dt)


# -- vertices and the three vertex orders ---------------------------------------


@lru_cache(maxsize=None)
def vertex_paths(f: Forest) -> tuple[tuple[int, ...], ...]:
    """Address of every vertex in preorder: tree index followed by child indices."""
    out: list[tuple[int, ...]] = []

    def walk(t: Tree, path: tuple[int, ...]) -> None:
        out.append(path)
        for i, c in enumerate(t.children):
            walk(c, path + (i,))

    for i, t in enumerate(f):
        walk(t, (i,))
    return tuple(out)


@lru_cache(maxsize=None)
def vertex_parents(f: Forest) -> tuple[int, ...]:
    """Preorder rank of each vertex's parent, ``-1`` for roots."""
    paths = vertex_paths(f)
    index = {p: i for i, p in enumerate(paths)}
    return tuple(index[p[:-1]] if len(p) > 1 else -1 for p in paths)


def _check_ref(f: Forest, x: int) -> None:
    if not 0 <= x < weight(f):
        raise IndexError(f"vertex {x} out of range for forest of weight {weight(f)}")


def ge_haut(f: Forest, x: int, y: int) -> bool:
    """True iff ``y`` is an ancestor of ``x`` or ``x`` itself."""
    _check_ref(f, x)
    _check_ref(f, y)
    px, py = vertex_paths(f)[x], vertex_paths(f)[y]
    return px[: len(py)] == py


def _gauche(px: tuple[int, ...], py: tuple[int, ...]) -> bool:
    if px == py:
        return True
    if px[0] != py[0]:
        return px[0] < py[0]
    if len(px) == 1 or len(py) == 1:
        return False
    return _gauche(px[1:], py[1:])


def ge_gauche(f: Forest, x: int, y: int) -> bool:
    """Left-to-right order: vertices of an earlier tree dominate; roots are incomparable below."""
    _check_ref(f, x)
    _check_ref(f, y)
    paths = vertex_paths(f)
    return _gauche(paths[x], paths[y])


def ge_tot(f: Forest, x: int, y: int) -> bool:
    return ge_haut(f, x, y) or ge_gauche(f, y, x)


def tot_order(f: Forest) -> list[int]:
    """Vertices sorted ascending for the total order built from the two partial orders."""

    def cmp(x: int, y: int) -> int:
        if x == y:
            return 0
        return 1 if ge_tot(f, x, y) else -1

    return sorted(range(weight(f)), key=cmp_to_key(cmp))


def vertex_decorations(f: Forest) -> tuple[str, ...]:
    out: list[str] = []

    def walk(t: Tree) -> None:
        out.append(t.d)
        for c in t.children:
            walk(c)

    for t in f:
        walk(t)
    return tuple(out)
