"""Invariant suite shared by ``treehopf selfcheck``.

Every check takes the maximum weight ``w`` and returns ``True`` on success. Checks
whose natural range is smaller than ``w`` cap themselves (noted per check).
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterator

from .algebra import Element, Scalar, Tensor
from .cm import brute_reduced, cm_coproduct_formula, closure_check, evaluate_vtensor, phi_check, sqrt_identity
from .forest import (
    Forest,
    Tree,
    bplus,
    catalan,
    compare_forests,
    compare_forests_direct,
    enumerate_forests,
    enumerate_trees,
    mirror,
    parse_forest,
    render_forest,
    weight,
)
from .frabetti import (
    binary_to_forest,
    coproduct_fr_cuts,
    coproduct_fr_recursive,
    enumerate_binary,
    forest_to_binary,
)
from .golden import GRAM, GRAM_INVERSE, TAU
from .hopf import (
    antipode_check,
    antipode_cuts,
    antipode_recursive,
    coproduct,
    coproduct_forest,
    deg_p,
    reduced_coproduct,
)
from .liealg import (
    bracket_cuts,
    bracket_graft,
    counting_closed_form,
    counting_sums,
    forest_counting_closed_form,
    forest_counting_sums,
    jacobi,
)
from .nonplanar import (
    antipode_r,
    bracket_projected,
    bracket_r,
    coproduct_r,
    enumerate_rtrees,
    graft_average,
    lifts,
    project,
    project_elem,
    project_tensor,
)
from .pairing import (
    dual,
    gram_inverse,
    gram_matrix,
    mirror_by_maximum,
    mirror_diagnostics,
    pair_combinatorial,
    pair_forests,
)
from .series import dims, primitive_rank, tau, tree_series, PowerSeries
from .shuffle import (
    antipode_generic,
    antipode_star,
    deconcat,
    hpr_antipode,
    shuffle,
    shuffle_lin,
    words_up_to,
    Words,
)

Check = Callable[[int], bool]
TWO = ("a", "b")

FR_EXAMPLE_TREE = "*[* *[*[* *]] *]"
FR_EXAMPLE_TERMS = (
    ("*", "*[* *[*[* *]]]"),
    ("*[*[* *]]", "*[* *]"),
    ("*", "*[* *[*[*]] *]"),
    ("*[*[* *]] *", "*[*]"),
    ("* *", "*[* *[*[*]]]"),
    (FR_EXAMPLE_TREE, "1"),
    ("1", FR_EXAMPLE_TREE),
)


def forests_upto(w: int, decor=("*",)) -> Iterator[Forest]:
    for n in range(w + 1):
        yield from enumerate_forests(n, decor)


# -- tensor helpers --------------------------------------------------------------------


def delta_left(t: Tensor) -> Tensor:
    """(Δ ⊗ Id) on an arity-2 tensor."""
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for (a, b), c in t.terms.items():
        for (p, r), d in coproduct_forest(a).terms.items():
            acc[(p, r, b)] += c * d
    return Tensor(3, acc)


def delta_right(t: Tensor) -> Tensor:
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for (a, b), c in t.terms.items():
        for (p, r), d in coproduct_forest(b).terms.items():
            acc[(a, p, r)] += c * d
    return Tensor(3, acc)


def coassociative(f: Forest) -> bool:
    d = coproduct_forest(f)
    return delta_left(d) == delta_right(d)


def counital(f: Forest) -> bool:
    d = coproduct_forest(f)
    left = Element.from_pairs((r, c) for (p, r), c in d.terms.items() if not p)
    right = Element.from_pairs((p, c) for (p, r), c in d.terms.items() if not r)
    return left == right == Element.of(f)


def multiplicative(f: Forest, g: Forest) -> bool:
    return coproduct_forest(f + g) == coproduct_forest(f) * coproduct_forest(g)


def bplus_cocycle(f: Forest, d: str) -> bool:
    """Δ(B⁺_d(F)) = B⁺_d(F) ⊗ 1 + (Id ⊗ B⁺_d)Δ(F)."""
    t = (bplus(f, d),)
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    acc[(t, ())] += 1
    for (p, r), c in coproduct_forest(f).terms.items():
        acc[(p, (bplus(r, d),))] += c
    return coproduct_forest(t) == Tensor(2, acc)


def dual_deconcatenation(f: Forest) -> bool:
    """Δ(e_{t1…tn}) = Σ_i e_{t1…ti} ⊗ e_{t(i+1)…tn}."""
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for i in range(len(f) + 1):
        for a, c in dual(f[:i]).terms.items():
            for b, d in dual(f[i:]).terms.items():
                acc[(a, b)] += c * d
    return coproduct(dual(f)) == Tensor(2, acc)


def dual_bplus(f: Forest, d: str) -> bool:
    """B⁺_d(e_F) = e_{F •_d}."""
    img = Element.from_pairs(((bplus(g, d),), c) for g, c in dual(f).terms.items())
    return img == dual(f + (Tree(d),))


# -- the suite -------------------------------------------------------------------------


def _forest_checks() -> list[tuple[str, Check]]:
    def counts(w: int) -> bool:
        return all(
            len(enumerate_trees(n, dec)) == len(dec) ** n * TAU[n - 1]
            and len(enumerate_forests(n, dec)) == len(dec) ** n * catalan(n)
            for n in range(1, w + 1)
            for dec in (("*",), TWO)
        )

    def roundtrip(w: int) -> bool:
        return all(parse_forest(render_forest(f)) == f for f in forests_upto(w, TWO))

    def order(w: int) -> bool:
        for n in range(1, w + 1):
            fs = enumerate_forests(n, TWO)
            for i, f in enumerate(fs):
                for g in fs[i:]:
                    if compare_forests(f, g, TWO) != compare_forests_direct(f, g, TWO):
                        return False
        return True

    def mirrors(w: int) -> bool:
        return all(
            mirror(mirror(f)) == f and mirror_by_maximum(f) == mirror(f)
            for f in forests_upto(w)
            if f
        )

    return [
        ("forest: counts D^n τ_n, D^n C_n", counts),
        ("forest: parse/render round trip", roundtrip),
        ("forest: order = clause oracle", order),
        ("forest: mirror involution = max partner", mirrors),
    ]


def _hopf_checks() -> list[tuple[str, Check]]:
    def antipodes(w: int) -> bool:
        for f in forests_upto(w, TWO if w <= 3 else ("*",)):
            x = Element.of(f)
            s = antipode_recursive(x)
            if antipode_cuts(f) != s:
                return False
            eps = Element({(): 1}) if not f else Element()
            if antipode_check(x) != (eps, eps):
                return False
        return True

    def coalgebra(w: int) -> bool:
        fs = list(forests_upto(w))
        return all(coassociative(f) and counital(f) and bplus_cocycle(f, "*") for f in fs) and all(
            multiplicative(f, g) for f in fs for g in fs if weight(f) + weight(g) <= w
        )

    def degp(w: int) -> bool:
        fs = list(forests_upto(min(w, 3)))
        return all(
            deg_p(Element.of(f + g)) == deg_p(Element.of(f)) + deg_p(Element.of(g))
            for f in fs
            for g in fs
        )

    return [
        ("hopf: antipode cuts = recursive, axiom", antipodes),
        ("hopf: coassoc, counit, mult, B+ cocycle", coalgebra),
        ("hopf: deg_p additive (weight ≤ 3)", degp),
    ]


def _pairing_checks() -> list[tuple[str, Check]]:
    def oracle(w: int) -> bool:
        for dec in (("*",), TWO):
            for n in range(1, w + 1):
                fs = enumerate_forests(n, dec)
                for f in fs:
                    for g in fs:
                        if pair_forests(f, g) != pair_combinatorial(f, g):
                            return False
        return True

    def reference_tables(w: int) -> bool:
        # The printed weight-4 inverse has a misprint, so only the Gram side is compared there.
        for n in range(1, min(w, 4) + 1):
            if gram_matrix(n)[1] != GRAM[n]:
                return False
            if n < 4 and gram_inverse(n)[1] != GRAM_INVERSE[n]:
                return False
        return True

    def inverse(w: int) -> bool:
        for n in range(1, w + 1):
            _, a = gram_matrix(n)
            _, p = gram_inverse(n)
            r = len(a)
            for i in range(r):
                for j in range(r):
                    if sum(a[i][k] * p[k][j] for k in range(r)) != (i == j):
                        return False
        return True

    def duals(w: int) -> bool:
        for f in forests_upto(w):
            if not dual_deconcatenation(f) or (weight(f) < w and not dual_bplus(f, "*")):
                return False
            for g in enumerate_forests(weight(f)):
                if pair_forests(f, g) != pair_forests(g, f):
                    return False
        for n in range(1, w + 1):
            for t in enumerate_trees(n):
                if reduced_coproduct(dual((t,))):
                    return False
        return True

    def triangular(w: int) -> bool:
        return all(mirror_diagnostics(n).triangular for n in range(1, w + 1))

    return [
        ("pairing: recursive = combinatorial", oracle),
        ("pairing: reference Gram tables", reference_tables),
        ("pairing: A·P = I, unimodular", inverse),
        ("pairing: dual basis laws, symmetry", duals),
        ("pairing: mirror-sorted triangularity", triangular),
    ]


def _liealg_checks() -> list[tuple[str, Check]]:
    def brackets(w: int) -> bool:
        for dec, top in ((("*",), w), (TWO, min(w, 4))):
            for a in range(1, top):
                for b in range(1, top - a + 1):
                    for t1 in enumerate_trees(a, dec):
                        for t2 in enumerate_trees(b, dec):
                            if bracket_cuts(t1, t2) != bracket_graft(t1, t2):
                                return False
        return True

    def jacobis(w: int) -> bool:
        top = min(w, 5)
        trees = [t for n in range(1, top) for t in enumerate_trees(n)]
        return all(
            not jacobi(a, b, c)
            for a in trees
            for b in trees
            for c in trees
            if a.weight + b.weight + c.weight <= top
        )

    def counting(w: int) -> bool:
        for f in forests_upto(w - 1):
            for n in range(1, w - weight(f) + 1):
                for t in enumerate_trees(n):
                    if f and counting_sums(f, t) != counting_closed_form(f, t):
                        return False
                for g in enumerate_forests(n):
                    if forest_counting_sums(f, g) != forest_counting_closed_form(f, g):
                        return False
        return True

    return [
        ("liealg: bracket cuts = graftings", brackets),
        ("liealg: Jacobi", jacobis),
        ("liealg: counting identities", counting),
    ]


def _frabetti_checks() -> list[tuple[str, Check]]:
    def coproducts(w: int) -> bool:
        return all(
            coproduct_fr_cuts(f) == coproduct_fr_recursive(Element.of(f)) for f in forests_upto(w)
        )

    def bijection(w: int) -> bool:
        return all(
            forest_to_binary(binary_to_forest(b)) == b for n in range(w + 1) for b in enumerate_binary(n)
        ) and all(binary_to_forest(forest_to_binary(f)) == f for f in forests_upto(w))

    def worked_example(_: int) -> bool:
        expected = Tensor.from_pairs(
            2, (((parse_forest(a), parse_forest(b)), 1) for a, b in FR_EXAMPLE_TERMS)
        )
        return coproduct_fr_cuts(parse_forest(FR_EXAMPLE_TREE)) == expected

    return [
        ("frabetti: cuts = recursion", coproducts),
        ("frabetti: f, g mutually inverse", bijection),
        ("frabetti: worked weight-7 example", worked_example),
    ]


def _cm_checks() -> list[tuple[str, Check]]:
    def formulas(w: int) -> bool:
        return all(
            evaluate_vtensor(cm_coproduct_formula(kind, which, n)) == brute_reduced(kind, which, n)
            for n in range(1, w + 1)
            for kind in ("u", "v")
            for which in ("delta", "fr")
        )

    def closure(w: int) -> bool:
        for n in range(1, w + 1):
            for kind in ("u", "v"):
                closure_check(kind, n)
        return True

    def phi(w: int) -> bool:
        return all(r.ok for r in phi_check(w)) and all(sqrt_identity(n) for n in range(1, w + 1))

    return [
        ("cm: four closed-form coproducts", formulas),
        ("cm: subalgebra closure", closure),
        ("cm: Φ(w_n) = u_n, Φ Hopf, square root", phi),
    ]


def _shuffle_checks() -> list[tuple[str, Check]]:
    def axioms(w: int) -> bool:
        words = words_up_to("abc", w)
        for x in words:
            if antipode_generic(shuffle_lin, x) != antipode_star(x):
                return False
            # m(S ⊗ Id)Δ = ε.
            total = Words()
            for (a, b), c in deconcat(x).items():
                total = total + shuffle_lin(antipode_star(a), Words.of(b)) * c
            if total != (Words.of(()) if not x else Words()):
                return False
        short = [x for x in words if len(x) <= max(1, w // 2)]
        for x in short:
            for y in short:
                lhs = _deconcat_words(shuffle(x, y))
                rhs: dict = defaultdict(int)
                for (a1, b1), c1 in deconcat(x).items():
                    for (a2, b2), c2 in deconcat(y).items():
                        for s, d in shuffle(a1, a2).terms.items():
                            for t, e in shuffle(b1, b2).terms.items():
                                rhs[(s, t)] += c1 * c2 * d * e
                if lhs != {k: v for k, v in rhs.items() if v}:
                    return False
        return True

    def hpr(w: int) -> bool:
        return all(hpr_antipode(f) == antipode_recursive(dual(f)) for f in forests_upto(w) if f)

    return [
        ("shuffle: Hopf axioms, S_* = subset antipode", axioms),
        ("shuffle: subset antipode on e-words", hpr),
    ]


def _deconcat_words(x: Words) -> dict:
    acc: dict = defaultdict(int)
    for w, c in x.terms.items():
        for k, d in deconcat(w).items():
            acc[k] += c * d
    return {k: v for k, v in acc.items() if v}


def _nonplanar_checks() -> list[tuple[str, Check]]:
    def morphism(w: int) -> bool:
        for f in forests_upto(w):
            if project_tensor(coproduct_forest(f)) != coproduct_r(project(f)):
                return False
            if project_elem(antipode_recursive(Element.of(f))) != antipode_r(project(f)):
                return False
        return True

    def lift_independence(w: int) -> bool:
        for f in forests_upto(w):
            g = project(f)
            if any(coproduct_r(g, lift) != coproduct_r(g) for lift in lifts(g)):
                return False
        return True

    def brackets(w: int) -> bool:
        for a in range(1, w):
            for b in range(1, w - a + 1):
                for t1 in enumerate_rtrees(a):
                    for t2 in enumerate_rtrees(b):
                        if bracket_r(t1, t2) != bracket_projected(t1, t2):
                            return False
        return True

    def worked_example(_: int) -> bool:
        return graft_average_examples_ok()

    return [
        ("nonplanar: ϖ is a Hopf morphism", morphism),
        ("nonplanar: coproduct independent of lift", lift_independence),
        ("nonplanar: bracket = projected bracket", brackets),
        ("nonplanar: grafting-average examples", worked_example),
    ]


GRAFT_AVERAGE_EXAMPLES = (
    ("*[*]", "*[* *]", {"*[*[*[*]] *]": (2, 3), "*[*[*] * *]": (1, 3)}),
    ("* *", "*[*[*]]", {"*[*[*] * *]": (1, 3), "*[*[* * *]]": (1, 3), "*[*[*[* *]]]": (1, 3)}),
    ("*[*]", "* *", {"*[*[*]] *": (1, 1)}),
)


def graft_average_examples_ok() -> bool:
    from fractions import Fraction

    for f, g, expected in GRAFT_AVERAGE_EXAMPLES:
        want = Element(
            {project(parse_forest(k)): Fraction(a, b) for k, (a, b) in expected.items()}
        )
        if graft_average(project(parse_forest(f)), project(parse_forest(g))) != want:
            return False
    return graft_average(project(parse_forest("*")), ()) == Element()


def _series_checks() -> list[tuple[str, Check]]:
    def taus(_: int) -> bool:
        ok = all(tau(k) == TAU[k - 1] for k in range(1, 25))
        ok &= all(tau(k) == sum(tau(i) * tau(k - i) for i in range(1, k)) for k in range(2, 25))
        t = tree_series(12)
        return ok and (t * t - t + PowerSeries.of([0, 1], 12)) == PowerSeries.of([], 12)

    def dimensions(w: int) -> bool:
        return all(
            dims(n, d) == (len(enumerate_forests(n, dec)), len(enumerate_trees(n, dec)))
            for n in range(1, w + 1)
            for d, dec in ((1, ("*",)), (2, TWO))
        )

    def primitives(w: int) -> bool:
        return all(primitive_rank(n).ok for n in range(1, min(w, 4) + 1))

    return [
        ("series: τ table, recurrence, T = X + T²", taus),
        ("series: dims match enumeration", dimensions),
        ("series: primitive rank = τ_n", primitives),
    ]


def suite() -> list[tuple[str, Check]]:
    return (
        _forest_checks()
        + _hopf_checks()
        + _pairing_checks()
        + _liealg_checks()
        + _frabetti_checks()
        + _cm_checks()
        + _shuffle_checks()
        + _nonplanar_checks()
        + _series_checks()
    )


def run_suite(max_weight: int) -> list[tuple[str, bool, str]]:
    """Run every check; an exception counts as a failure and is summarized."""
    out: list[tuple[str, bool, str]] = []
    for name, check in suite():
        try:
            ok, note = bool(check(max_weight)), ""
        except Exception as exc:  # reported, not raised: the table must be complete
            ok, note = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, note))
    return out
