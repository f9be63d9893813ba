"""Sparse linear combinations of forests and of tuples of forests.

Coefficients are Python ints or :class:`fractions.Fraction`; integral
fractions are stored as ints so that integer elements stay integer.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .forest import Forest, Tree, forest_key, infer_decor, parse_forest, render_forest, weight

Scalar = Union[int, Fraction]


def normalize(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def parse_scalar(text: str) -> Scalar:
    return normalize(Fraction(text))


def render_scalar(c: Scalar) -> str:
    return str(normalize(c))


def _clean(terms: Mapping) -> dict:
    return {k: normalize(v) for k, v in terms.items() if v != 0}


class Element:
    """Finite linear combination of forests; never stores zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Forest, Scalar] | None = None):
        self.terms: dict[Forest, Scalar] = _clean(terms or {})

    @classmethod
    def of(cls, f: Forest | Tree, c: Scalar = 1) -> Element:
        if isinstance(f, Tree):
            f = (f,)
        return cls({f: c})

    @classmethod
    def parse(cls, text: str, decor: Sequence[str] | None = None) -> Element:
        return cls.of(parse_forest(text, decor))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Forest, Scalar]]) -> Element:
        acc: dict[Forest, Scalar] = defaultdict(int)
        for f, c in pairs:
            acc[f] += c
        return cls(acc)

    def __iter__(self) -> Iterator[tuple[Forest, Scalar]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def coeff(self, f: Forest) -> Scalar:
        return self.terms.get(f, 0)

    def __add__(self, other: Element) -> Element:
        return elem_add(self, other)

    def __sub__(self, other: Element) -> Element:
        return elem_add(self, elem_scale(-1, other))

    def __neg__(self) -> Element:
        return elem_scale(-1, self)

    def __mul__(self, other: Element | Scalar) -> Element:
        if isinstance(other, Element):
            return elem_mul(self, other)
        return elem_scale(other, self)

    def __rmul__(self, c: Scalar) -> Element:
        return elem_scale(c, self)

    def sorted_terms(self, decor: Sequence[str] | None = None) -> list[tuple[Forest, Scalar]]:
        if decor is None:
            decor = infer_decor(self.terms)
        return sorted(self.terms.items(), key=lambda kv: forest_key(kv[0], decor))

    def render(self, decor: Sequence[str] | None = None) -> str:
        return render_combination(
            [(render_forest(f), c) for f, c in self.sorted_terms(decor)]
        )

    def to_json(self, decor: Sequence[str] | None = None) -> dict:
        return {
            "terms": [
                {"coeff": render_scalar(c), "forest": render_forest(f)}
                for f, c in self.sorted_terms(decor)
            ]
        }

    def __repr__(self) -> str:
        return f"Element({self.render()})"


def render_combination(items: Sequence[tuple[str, Scalar]]) -> str:
    if not items:
        return "0"
    parts: list[str] = []
    for i, (label, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = label if mag == 1 else f"{render_scalar(mag)}·{label}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


ZERO = Element()
ONE = Element({(): 1})


def elem_add(a: Element, b: Element) -> Element:
    acc = dict(a.terms)
    for f, c in b.terms.items():
        acc[f] = acc.get(f, 0) + c
    return Element(acc)


def elem_scale(c: Scalar, a: Element) -> Element:
    if c == 0:
        return ZERO
    return Element({f: c * v for f, v in a.terms.items()})


def elem_mul(a: Element, b: Element) -> Element:
    """Bilinear extension of forest concatenation."""
    acc: dict[Forest, Scalar] = defaultdict(int)
    for f, c in a.terms.items():
        for g, d in b.terms.items():
            acc[f + g] += c * d
    return Element(acc)


def elem_sum(items: Iterable[Element]) -> Element:
    acc: dict[Forest, Scalar] = defaultdict(int)
    for x in items:
        for f, c in x.terms.items():
            acc[f] += c
    return Element(acc)


def counit(a: Element) -> Scalar:
    return a.terms.get((), 0)


def homogeneous_part(a: Element, n: int) -> Element:
    return Element({f: c for f, c in a.terms.items() if weight(f) == n})


def linear_map(fn: Callable[[Forest], Element]) -> Callable[[Element], Element]:
    """Extend a map on forests linearly to elements."""

    def apply(x: Element) -> Element:
        acc: dict[Forest, Scalar] = defaultdict(int)
        for f, c in x.terms.items():
            for g, d in fn(f).terms.items():
                acc[g] += c * d
        return Element(acc)

    return apply


class Tensor:
    """Linear combination of ``arity``-tuples of forests."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple[Forest, ...], Scalar] | None = None):
        if arity < 1:
            raise ValueError("tensor arity must be positive")
        self.arity = arity
        self.terms: dict[tuple[Forest, ...], Scalar] = _clean(terms or {})
        for k in self.terms:
            if len(k) != arity:
                raise ValueError(f"tensor key of length {len(k)} in arity {arity}")

    @classmethod
    def from_pairs(cls, arity: int, pairs: Iterable[tuple[tuple[Forest, ...], Scalar]]) -> Tensor:
        acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
        for k, c in pairs:
            acc[k] += c
        return cls(arity, acc)

    @classmethod
    def pure(cls, *factors: Forest, c: Scalar = 1) -> Tensor:
        return cls(len(factors), {tuple(factors): c})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Tensor):
            if not self.terms and not other.terms:
                return True
            return self.arity == other.arity and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __add__(self, other: Tensor) -> Tensor:
        _same_arity(self, other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return Tensor(self.arity, acc)

    def __sub__(self, other: Tensor) -> Tensor:
        return self + other.scale(-1)

    def __neg__(self) -> Tensor:
        return self.scale(-1)

    def scale(self, c: Scalar) -> Tensor:
        if c == 0:
            return Tensor(self.arity)
        return Tensor(self.arity, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: Tensor) -> Tensor:
        return tensor_mul(self, other)

    def sorted_terms(self, decor: Sequence[str] | None = None) -> list:
        if decor is None:
            decor = infer_decor(f for k in self.terms for f in k)
        return sorted(
            self.terms.items(), key=lambda kv: tuple(forest_key(f, decor) for f in kv[0])
        )

    def render(self, decor: Sequence[str] | None = None) -> str:
        return render_combination(
            [
                ("(" + " ⊗ ".join(render_forest(f) for f in k) + ")", c)
                for k, c in self.sorted_terms(decor)
            ]
        )

    def to_json(self, decor: Sequence[str] | None = None) -> dict:
        return {
            "arity": self.arity,
            "terms": [
                {"coeff": render_scalar(c), "factors": [render_forest(f) for f in k]}
                for k, c in self.sorted_terms(decor)
            ],
        }

    def __repr__(self) -> str:
        return f"Tensor({self.render()})"


def _same_arity(a: Tensor, b: Tensor) -> None:
    if a.arity != b.arity and a.terms and b.terms:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")


def tensor_mul(a: Tensor, b: Tensor) -> Tensor:
    """Componentwise concatenation product of two tensors of equal arity."""
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            acc[tuple(x + y for x, y in zip(k1, k2))] += c1 * c2
    return Tensor(a.arity, acc)


def tensor_of(*xs: Element) -> Tensor:
    """Tensor product of elements."""
    acc: dict[tuple[Forest, ...], Scalar] = {(): 1}
    for x in xs:
        nxt: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
        for k, c in acc.items():
            for f, d in x.terms.items():
                nxt[k + (f,)] += c * d
        acc = nxt
    return Tensor(len(xs), acc)


def tensor_map(t: Tensor, fns: Sequence[Callable[[Forest], Element]]) -> Tensor:
    """Apply one linear map per tensor factor (given on forests)."""
    if len(fns) != t.arity:
        raise ValueError("one map per factor required")
    acc: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
    for k, c in t.terms.items():
        partial: dict[tuple[Forest, ...], Scalar] = {(): c}
        for f, fn in zip(k, fns):
            nxt: dict[tuple[Forest, ...], Scalar] = defaultdict(int)
            img = fn(f).terms
            for pk, pc in partial.items():
                for g, d in img.items():
                    nxt[pk + (g,)] += pc * d
            partial = nxt
        for pk, pc in partial.items():
            acc[pk] += pc
    return Tensor(t.arity, acc)


def tensor_contract(t: Tensor) -> Element:
    """Multiply the factors of every term together (the iterated product m)."""
    acc: dict[Forest, Scalar] = defaultdict(int)
    for k, c in t.terms.items():
        f: Forest = ()
        for g in k:
            f = f + g
        acc[f] += c
    return Element(acc)
