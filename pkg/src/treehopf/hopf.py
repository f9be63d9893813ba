"""Coproduct, reduced coproducts, deg_p and the two antipode algorithms."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebra import Element, Scalar, Tensor, elem_mul
from .forest import Forest, Tree, UNIT, check_cap, tot_order, vertex_parents, weight


@dataclass(frozen=True)
class Cut:
    """A set of cut edges; each edge is named by the preorder rank of its child vertex.

    ``total`` marks, per tree, the formal total cut (which severs no edge).
    """

    forest: Forest
    edges: frozenset[int]
    total: tuple[bool, ...]

    @property
    def n_c(self) -> int:
        return len(self.edges)


# -- admissible cuts -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _tree_cuts(t: Tree, left_only: bool) -> tuple[tuple[Forest, Tree], ...]:
    """Non-total admissible cuts of ``t`` as (pruned forest, trunk) pairs, empty cut first."""
    options: list[list[tuple[Forest, Tree | None]]] = []
    for i, c in enumerate(t.children):
        opts: list[tuple[Forest, Tree | None]] = [(p, r) for p, r in _tree_cuts(c, left_only)]
        if not (left_only and i == 0):
            opts.append(((c,), None))
        options.append(opts)
    out: list[tuple[Forest, Tree]] = []
    for choice in product(*options):
        pruned: Forest = ()
        kept: list[Tree] = []
        for p, r in choice:
            pruned += p
            if r is not None:
                kept.append(r)
        out.append((pruned, Tree(t.d, tuple(kept))))
    return tuple(out)


@lru_cache(maxsize=None)
def _forest_cuts(f: Forest, left_only: bool) -> tuple[tuple[Forest, Forest], ...]:
    per_tree: list[list[tuple[Forest, Forest]]] = []
    total = 1
    for t in f:
        opts = [(p, (r,)) for p, r in _tree_cuts(t, left_only)]
        opts.append(((t,), UNIT))
        per_tree.append(opts)
        total *= len(opts)
    check_cap(total, "admissible cuts")
    out: list[tuple[Forest, Forest]] = []
    for choice in product(*per_tree):
        p: Forest = ()
        r: Forest = ()
        for cp, cr in choice:
            p += cp
            r += cr
        out.append((p, r))
    return tuple(out)


def admissible_cuts(f: Forest) -> list[tuple[Forest, Forest]]:
    """All (P^c, R^c) over Ad(F), empty and total cuts included, with multiplicity."""
    return list(_forest_cuts(f, False))


def left_admissible_cuts(f: Forest) -> list[tuple[Forest, Forest]]:
    """Admissible cuts that never sever the leftmost edge below a vertex."""
    return list(_forest_cuts(f, True))


def admissible_edge_sets(f: Forest) -> list[frozenset[int]]:
    """Brute force: edge subsets meeting every root path at most once (oracle for cuts)."""
    parents = vertex_parents(f)
    edges = [v for v, p in enumerate(parents) if p >= 0]
    out: list[frozenset[int]] = []
    for mask in range(1 << len(edges)):
        chosen = frozenset(e for i, e in enumerate(edges) if mask >> i & 1)
        ok = True
        for v in chosen:
            a = parents[v]
            while a >= 0:
                if a in chosen:
                    ok = False
                    break
                a = parents[a]
            if not ok:
                break
        if ok:
            out.append(chosen)
    return out


def components(f: Forest, edges: frozenset[int]) -> list[tuple[int, Tree]]:
    """Connected components after removing ``edges``, as (root rank, tree), in preorder."""
    parents = vertex_parents(f)
    n = len(parents)
    kids: dict[int, list[int]] = defaultdict(list)
    for v in range(n):
        p = parents[v]
        if p >= 0 and v not in edges:
            kids[p].append(v)
    decs: list[str] = []

    def collect(t: Tree) -> None:
        decs.append(t.d)
        for c in t.children:
            collect(c)

    for t in f:
        collect(t)

    def build(v: int) -> Tree:
        return Tree(decs[v], tuple(build(c) for c in kids[v]))

    roots = [v for v in range(n) if parents[v] < 0 or v in edges]
    return [(r, build(r)) for r in roots]


# -- coproducts ------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _coproduct_forest(f: Forest) -> Tensor:
    return Tensor.from_pairs(2, (((p, r), 1) for p, r in _forest_cuts(f, False)))


def coproduct_forest(f: Forest) -> Tensor:
    return _coproduct_forest(f)


def coproduct(x: Element) -> Tensor:
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for f, c in x.terms.items():
        for k, d in _coproduct_forest(f).terms.items():
            acc[k] += c * d
    return Tensor(2, acc)


@lru_cache(maxsize=None)
def _reduced_forest(f: Forest) -> Tensor:
    full = dict(_coproduct_forest(f).terms)
    if f:
        for k in ((UNIT, f), (f, UNIT)):
            full[k] = full.get(k, 0) - 1
    else:
        # The unit is group-like, so its reduced coproduct is -1⊗1.
        full[(UNIT, UNIT)] = full.get((UNIT, UNIT), 0) - 2
    return Tensor(2, full)


def reduced_coproduct(x: Element) -> Tensor:
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for f, c in x.terms.items():
        for k, d in _reduced_forest(f).terms.items():
            acc[k] += c * d
    return Tensor(2, acc)


def reduced_coproduct_iter(x: Element, k: int) -> Tensor:
    """The k-fold reduced coproduct, iterated on the leftmost factor."""
    if k < 1:
        raise ValueError("k must be at least 1")
    cur = reduced_coproduct(x)
    for arity in range(3, k + 2):
        acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
        for key, c in cur.terms.items():
            for (a, b), d in _reduced_forest(key[0]).terms.items():
                acc[(a, b) + key[1:]] += c * d
        cur = Tensor(arity, acc)
    return cur


def rho(x: Element) -> Element:
    """Projection killing the weight-zero component."""
    return Element({f: c for f, c in x.terms.items() if f})


def deg_p(x: Element) -> int:
    if not x:
        raise ValueError("deg_p is undefined for the zero element")
    y = rho(x)
    if not y:
        return 0
    n = 1
    while reduced_coproduct_iter(y, n):
        n += 1
    return n


# -- antipodes -------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _antipode_tree(t: Tree) -> Element:
    acc: dict[Forest, Scalar] = defaultdict(int)
    acc[(t,)] -= 1
    for p, r in _tree_cuts(t, False)[1:]:
        # Nontrivial cuts: pruned part nonempty, trunk is a single tree.
        for g, c in _antipode_forest(p).terms.items():
            acc[g + (r,)] -= c
    return Element(acc)


@lru_cache(maxsize=None)
def _antipode_forest(f: Forest) -> Element:
    out = Element({UNIT: 1})
    for t in f:
        out = elem_mul(_antipode_tree(t), out)
    return out


def antipode_recursive(x: Element) -> Element:
    acc: dict[Forest, Scalar] = defaultdict(int)
    for f, c in x.terms.items():
        for g, d in _antipode_forest(f).terms.items():
            acc[g] += c * d
    return Element(acc)


@lru_cache(maxsize=None)
def _antipode_cuts(f: Forest) -> Element:
    parents = vertex_parents(f)
    edges = [v for v, p in enumerate(parents) if p >= 0]
    check_cap(1 << len(edges), "edge subsets")
    rank = {v: i for i, v in enumerate(tot_order(f))}
    sign_m = -1 if len(f) % 2 else 1
    acc: dict[Forest, Scalar] = defaultdict(int)
    for mask in range(1 << len(edges)):
        chosen = frozenset(e for i, e in enumerate(edges) if mask >> i & 1)
        comps = components(f, chosen)
        comps.sort(key=lambda rc: rank[rc[0]], reverse=True)
        word = tuple(t for _, t in comps)
        acc[word] += sign_m * (-1 if len(chosen) % 2 else 1)
    return Element(acc)


def antipode_cuts(f: Forest | Element) -> Element:
    """Signed sum over all edge subsets, components ordered by descending vertex order."""
    if isinstance(f, Element):
        acc: dict[Forest, Scalar] = defaultdict(int)
        for g, c in f.terms.items():
            for h, d in _antipode_cuts(g).terms.items():
                acc[h] += c * d
        return Element(acc)
    return _antipode_cuts(f)


def antipode_check(x: Element, s=antipode_recursive) -> tuple[Element, Element]:
    """Return m(S⊗Id)Δ(x) and m(Id⊗S)Δ(x); both equal ε(x)1 for an antipode."""
    left: dict[Forest, Scalar] = defaultdict(int)
    right: dict[Forest, Scalar] = defaultdict(int)
    for (p, r), c in coproduct(x).terms.items():
        for g, d in s(Element.of(p)).terms.items():
            left[g + r] += c * d
        for g, d in s(Element.of(r)).terms.items():
            right[p + g] += c * d
    return Element(left), Element(right)


def is_primitive(x: Element) -> bool:
    return not reduced_coproduct(x) and not x.terms.get(UNIT)


def cut_count(f: Forest, g: Forest, h: Forest, left_only: bool = False) -> int:
    """Number of (left-)admissible cuts c of h with P^c(h) = f and R^c(h) = g."""
    if weight(f) + weight(g) != weight(h):
        return 0
    return sum(1 for p, r in _forest_cuts(h, left_only) if p == f and r == g)
