"""Unordered rooted forests: canonical forms, the projection ϖ from planar forests,
the induced coproduct and antipode, the e-bar basis, its bracket, and the grafting
average ⊤̄.

A canonical tree is an ordinary :class:`Tree` whose children are sorted by
:func:`rtree_key`; a canonical forest is a tuple of canonical trees sorted the same
way. Combinations of canonical forests reuse :class:`Element`.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .algebra import Element, Scalar, Tensor
from .forest import Forest, Tree, check_cap, enumerate_forests, enumerate_trees, infer_decor, weight
from .hopf import _forest_cuts, antipode_recursive, coproduct_forest
from .pairing import dual

RTree = Tree
RForest = Forest


def rtree_key(t: Tree) -> tuple:
    """Total order on canonical trees: weight, root decoration, then sorted children."""
    return (t.weight, t.d, tuple(rtree_key(c) for c in t.children))


@lru_cache(maxsize=None)
def canonical_tree(t: Tree) -> RTree:
    kids = sorted((canonical_tree(c) for c in t.children), key=rtree_key)
    return Tree(t.d, tuple(kids))


def project(f: Forest) -> RForest:
    """ϖ: forget the planar embedding."""
    return tuple(sorted((canonical_tree(t) for t in f), key=rtree_key))


def project_elem(x: Element) -> Element:
    acc: dict[Forest, Scalar] = defaultdict(int)
    for f, c in x.terms.items():
        acc[project(f)] += c
    return Element(acc)


def project_tensor(t: Tensor) -> Tensor:
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for k, c in t.terms.items():
        acc[tuple(project(f) for f in k)] += c
    return Tensor(t.arity, acc)


def _distinct_orders(items: tuple[Tree, ...]) -> set[tuple[Tree, ...]]:
    return set(permutations(items))


@lru_cache(maxsize=None)
def _lifts_tree(t: RTree) -> tuple[Tree, ...]:
    return tuple(Tree(t.d, kids) for kids in _lifts_forest(t.children))


@lru_cache(maxsize=None)
def _lifts_forest(f: RForest) -> tuple[Forest, ...]:
    out: set[Forest] = set()
    for order in _distinct_orders(f):
        for combo in product(*(_lifts_tree(t) for t in order)):
            out.add(tuple(combo))
    return tuple(sorted(out, key=lambda g: tuple(rtree_key(t) for t in g)))


def lifts(f: RForest) -> list[Forest]:
    """The fiber ϖ^{-1}(F̄): every planar forest projecting to ``f``."""
    f = project(f)
    return list(_lifts_forest(f))


def enumerate_rtrees(n: int, decor=("*",)) -> list[RTree]:
    return sorted({canonical_tree(t) for t in enumerate_trees(n, decor)}, key=rtree_key)


def enumerate_rforests(n: int, decor=("*",)) -> list[RForest]:
    return sorted(
        {project(f) for f in enumerate_forests(n, decor)},
        key=lambda g: (weight(g), tuple(rtree_key(t) for t in g)),
    )


# -- coproduct and antipode ----------------------------------------------------------


def coproduct_r(f: RForest, lift: Forest | None = None) -> Tensor:
    """(ϖ⊗ϖ)∘Δ on a planar lift (the canonical representative by default)."""
    return project_tensor(coproduct_forest(project(f) if lift is None else lift))


def coproduct_r_direct(f: RForest) -> Tensor:
    """Admissible cuts on the unordered forest, with edges individuated."""
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for p, r in _forest_cuts(project(f), False):
        acc[(project(p), project(r))] += 1
    return Tensor(2, acc)


def antipode_r(f: RForest) -> Element:
    return project_elem(antipode_recursive(Element.of(project(f))))


# -- the e-bar basis and its bracket -------------------------------------------------


def ebar(f: RForest) -> Element:
    """ē_F̄ = Σ of e_F' over the fiber of F̄, in the planar forest basis."""
    fiber = lifts(f)
    check_cap(len(fiber), "fiber")
    acc: dict[Forest, Scalar] = defaultdict(int)
    for g in fiber:
        for h, c in dual(g).terms.items():
            acc[h] += c
    return Element(acc)


def elementary_cut_count(a: RTree, b: RTree, t: RTree) -> int:
    """Number of single edges of ``t`` whose cut leaves pruned part ā and trunk b̄."""
    count = 0
    for p, r in _forest_cuts((t,), False):
        if len(p) == 1 and project(p) == (a,) and project(r) == (b,):
            count += 1
    return count


def bracket_r(t1: RTree, t2: RTree) -> dict[RTree, int]:
    """[ē_t̄1, ē_t̄2] = Σ_t̄ (n(t̄1,t̄2;t̄) − n(t̄2,t̄1;t̄)) ē_t̄."""
    t1, t2 = canonical_tree(t1), canonical_tree(t2)
    decor = infer_decor([(t1, t2)])
    out: dict[RTree, int] = {}
    for t in enumerate_rtrees(t1.weight + t2.weight, decor):
        c = elementary_cut_count(t1, t2, t) - elementary_cut_count(t2, t1, t)
        if c:
            out[t] = c
    return out


def bracket_projected(t1: RTree, t2: RTree) -> dict[RTree, int]:
    """Σ of planar brackets over both fibers, read back on ē; raises if not fiber-constant."""
    from .liealg import bracket_cuts

    acc: Counter[Tree] = Counter()
    for a in lifts((t1,)):
        for b in lifts((t2,)):
            acc.update(bracket_cuts(a[0], b[0]))
    decor = infer_decor([(t1, t2)])
    out: dict[RTree, int] = {}
    for key in enumerate_rtrees(t1.weight + t2.weight, decor):
        values = {acc.get(t[0], 0) for t in lifts((key,))}
        if len(values) != 1:
            raise ValueError(f"coefficient not constant on the fiber of {key}")
        c = values.pop()
        if c:
            out[key] = c
    return out


# -- the grafting average ------------------------------------------------------------


def graft_on_vertices(f: Forest, g: Forest) -> list[RForest]:
    """For each vertex s of g (preorder), ϖ of g with all trees of f grafted on s."""
    out: list[RForest] = []
    total = weight(g)
    for s in range(total):
        counter = 0

        def build(node: Tree) -> Tree:
            nonlocal counter
            here = counter
            counter += 1
            kids = tuple(build(c) for c in node.children)
            if here == s:
                kids = kids + tuple(f)
            return Tree(node.d, kids)

        out.append(project(tuple(build(t) for t in g)))
    return out


def graft_average(f: RForest, g: RForest) -> Element:
    """F̄ ⊤̄ Ḡ = (1/weight(Ḡ)) Σ_{s ∈ som(Ḡ)} (graft F̄ on s); zero when Ḡ = 1."""
    if not g:
        return Element()
    scale = Fraction(1, weight(g))
    acc: dict[Forest, Scalar] = defaultdict(int)
    for h in graft_on_vertices(f, g):
        acc[h] += scale
    return Element(acc)


def graft_average_lin(x: Element, y: Element) -> Element:
    acc: dict[Forest, Scalar] = defaultdict(int)
    for f, c in x.terms.items():
        for g, d in y.terms.items():
            for h, e in graft_average(f, g).terms.items():
                acc[h] += c * d * e
    return Element(acc)


def coproduct_r_elem(x: Element) -> Tensor:
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for f, c in x.terms.items():
        for k, d in coproduct_r(f).terms.items():
            acc[k] += c * d
    return Tensor(2, acc)


def graft_cocycle_holds(p: Element, x: Element) -> bool:
    """For Δ_R-primitive p, L(x) = x ⊤̄ p satisfies Δ_R L = L ⊗ 1 + (Id ⊗ L)Δ_R."""
    lx = graft_average_lin(x, p)
    lhs = coproduct_r_elem(lx)
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for f, c in lx.terms.items():
        acc[(f, ())] += c
    for (a, b), c in coproduct_r_elem(x).terms.items():
        for h, d in graft_average_lin(Element.of(b), p).terms.items():
            acc[(a, h)] += c * d
    return lhs == Tensor(2, acc)
