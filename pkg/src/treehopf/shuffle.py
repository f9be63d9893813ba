"""The tensor coalgebra T(V) on a graded generator set: deconcatenation, the shuffle
product, the reversal antipode, the subset antipode for an arbitrary compatible
product, and the 1-cocycles L_u."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence, TypeVar

from .algebra import Element, Scalar, elem_mul, normalize, render_combination, render_scalar
from .forest import Forest
from .pairing import dual, nullspace

Word = tuple[str, ...]
EMPTY: Word = ()


@dataclass(frozen=True)
class Generator:
    name: str
    grade: int = 1

    def __post_init__(self) -> None:
        if self.grade < 1:
            raise ValueError("generator grades must be positive")


def word_weight(w: Word, grades: Mapping[str, int]) -> int:
    return sum(grades[a] for a in w)


class Words:
    """Finite linear combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        self.terms: dict[Word, Scalar] = {
            w: normalize(c) for w, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def of(cls, w: Iterable[str], c: Scalar = 1) -> Words:
        return cls({tuple(w): c})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Words):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Words) -> Words:
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return Words(acc)

    def __sub__(self, other: Words) -> Words:
        return self + other * -1

    def __mul__(self, c: Scalar) -> Words:
        return Words({w: c * v for w, v in self.terms.items()})

    __rmul__ = __mul__

    def render(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return render_combination([(render_word(w), c) for w, c in items])

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": render_scalar(c), "word": list(w)}
                for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
            ]
        }

    def __repr__(self) -> str:
        return f"Words({self.render()})"


def render_word(w: Word) -> str:
    return "ε" if not w else "".join(w) if all(len(a) == 1 for a in w) else "⊤".join(w)


def parse_word(text: str) -> Word:
    """Letters are single characters unless separated by '⊤' or ','; 'ε' or '' is empty."""
    text = text.strip()
    if text in ("", "ε", "1"):
        return EMPTY
    for sep in ("⊤", ","):
        if sep in text:
            return tuple(a.strip() for a in text.split(sep))
    return tuple(text)


# -- coproduct, product, antipode ---------------------------------------------------

WordTensor = dict[tuple[Word, Word], Scalar]


def deconcat(w: Word) -> WordTensor:
    return {(w[:k], w[k:]): 1 for k in range(len(w) + 1)}


def deconcat_lin(x: Words) -> WordTensor:
    acc: WordTensor = defaultdict(int)
    for w, c in x.terms.items():
        for k in range(len(w) + 1):
            acc[(w[:k], w[k:])] += c
    return {k: v for k, v in acc.items() if v}


def _shuffles(x: Word, y: Word) -> Iterable[Word]:
    n = len(x) + len(y)
    for pos in combinations(range(n), len(x)):
        out: list[str] = []
        ix = iy = 0
        chosen = set(pos)
        for i in range(n):
            if i in chosen:
                out.append(x[ix])
                ix += 1
            else:
                out.append(y[iy])
                iy += 1
        yield tuple(out)


def shuffle(x: Word, y: Word) -> Words:
    acc: dict[Word, int] = defaultdict(int)
    for w in _shuffles(x, y):
        acc[w] += 1
    return Words(acc)


def shuffle_lin(x: Words, y: Words) -> Words:
    acc: dict[Word, Scalar] = defaultdict(int)
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for w in _shuffles(a, b):
                acc[w] += ca * cb
    return Words(acc)


def antipode_star(w: Word) -> Words:
    return Words({tuple(reversed(w)): (-1) ** len(w)})


def antipode_star_lin(x: Words) -> Words:
    acc: dict[Word, Scalar] = defaultdict(int)
    for w, c in x.terms.items():
        acc[tuple(reversed(w))] += c * (-1) ** len(w)
    return Words(acc)


X = TypeVar("X")


def antipode_generic(
    product: Callable[[X, X], X],
    w: Sequence,
    embed: Callable[[tuple], X] | None = None,
) -> X:
    """S(p1⊤…⊤pn) = −Σ_{c ⊆ {1..n−1}} (−1)^|c| (p1⊤…⊤pn)_c.

    ``(…)_c`` replaces the i-th ⊤ by ``product`` for i in c. ``embed`` maps a run of
    letters joined by ⊤ into the target space (default: a :class:`Words` element).
    The target space must support ``+`` and multiplication by scalars.
    """
    emb = embed if embed is not None else (lambda run: Words.of(run))
    w = tuple(w)
    n = len(w)
    if n == 0:
        return emb(())
    total = None
    for r in range(n):
        for c in combinations(range(1, n), r):
            cuts = (0,) + c + (n,)
            term = emb(w[cuts[0] : cuts[1]])
            for a, b in zip(cuts[1:], cuts[2:]):
                term = product(term, emb(w[a:b]))
            term = term * (-(-1) ** r)
            total = term if total is None else total + term
    return total


def cocycle_lu(u: Callable[[Word], Words], w: Word) -> Words:
    """L_u(1) = u(1); L_u(v1…vn) = Σ_j v1…vj ⊤ u(v_{j+1}…vn) + v1…vn ⊤ u(1) + u(v1…vn)."""
    out = u(w)
    if not w:
        return out
    for j in range(1, len(w) + 1):
        tail = u(w[j:])
        out = out + Words({w[:j] + t: c for t, c in tail.terms.items()})
    return out


def cocycle_lu_lin(u: Callable[[Word], Words], x: Words) -> Words:
    out = Words()
    for w, c in x.terms.items():
        out = out + cocycle_lu(u, w) * c
    return out


def is_cocycle(u: Callable[[Word], Words], x: Words) -> bool:
    """Δ(L_u(x)) = L_u(x) ⊗ 1 + (Id ⊗ L_u)Δ(x)."""
    lx = cocycle_lu_lin(u, x)
    lhs = deconcat_lin(lx)
    rhs: WordTensor = defaultdict(int)
    for w, c in lx.terms.items():
        rhs[(w, EMPTY)] += c
    for (a, b), c in deconcat_lin(x).items():
        for t, d in cocycle_lu(u, b).terms.items():
            rhs[(a, t)] += c * d
    return lhs == {k: v for k, v in rhs.items() if v}


def words_up_to(alphabet: Sequence[str], max_len: int) -> list[Word]:
    out: list[Word] = [EMPTY]
    layer: list[Word] = [EMPTY]
    for _ in range(max_len):
        layer = [w + (a,) for w in layer for a in alphabet]
        out.extend(layer)
    return out


def hpr_antipode(f: Forest) -> Element:
    """Subset antipode on the e-word e_{t1}⊤…⊤e_{tn}, with runs embedded as e_{t_i…t_j}."""
    return antipode_generic(elem_mul, f, embed=lambda run: dual(run))


def primitive_words(alphabet: Sequence[str], max_len: int) -> list[Words]:
    """Basis of {x : deconcat(x) = x⊗ε + ε⊗x} among words of length 1..max_len."""
    support = [w for w in words_up_to(alphabet, max_len) if w]
    rows: dict[tuple[Word, Word], dict[int, int]] = defaultdict(dict)
    for j, w in enumerate(support):
        for k in range(1, len(w)):
            rows[(w[:k], w[k:])][j] = 1
    matrix = [[row.get(j, 0) for j in range(len(support))] for row in rows.values()]
    if not matrix:
        matrix = [[0] * len(support)]
    return [
        Words({support[j]: c for j, c in enumerate(vec) if c})
        for vec in nullspace(matrix)
    ]
