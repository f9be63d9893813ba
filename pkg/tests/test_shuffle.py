from __future__ import annotations

from collections import defaultdict

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treehopf.algebra import elem_mul
from treehopf.forest import enumerate_forests
from treehopf.hopf import antipode_recursive
from treehopf.pairing import dual
from treehopf.shuffle import (
    EMPTY,
    Generator,
    Words,
    antipode_generic,
    antipode_star,
    antipode_star_lin,
    cocycle_lu,
    deconcat,
    deconcat_lin,
    hpr_antipode,
    is_cocycle,
    parse_word,
    primitive_words,
    render_word,
    shuffle,
    shuffle_lin,
    word_weight,
    words_up_to,
)

W = parse_word
ALPHABET = "abc"
WORDS4 = words_up_to(ALPHABET, 4)
short_words = st.sampled_from(words_up_to(ALPHABET, 2))
words3 = st.sampled_from(words_up_to(ALPHABET, 3))


def lin(*pairs):
    acc = defaultdict(int)
    for text, c in pairs:
        acc[W(text)] += c
    return Words(acc)


def test_word_text():
    assert W("") == W("ε") == W("1") == EMPTY
    assert W("ab") == ("a", "b")
    assert W("x1⊤y2") == W("x1,y2") == ("x1", "y2")
    assert render_word(EMPTY) == "ε" and render_word(("a", "b")) == "ab"


def test_generators_and_weight():
    assert word_weight(W("aab"), {"a": 1, "b": 3}) == 5
    with pytest.raises(ValueError):
        Generator("a", 0)


def test_deconcat_examples():
    assert deconcat(EMPTY) == {(EMPTY, EMPTY): 1}
    assert deconcat(W("a")) == {(W("a"), EMPTY): 1, (EMPTY, W("a")): 1}
    assert deconcat(W("ab")) == {(W("ab"), EMPTY): 1, (W("a"), W("b")): 1, (EMPTY, W("ab")): 1}


def test_shuffle_examples():
    assert shuffle(W("a"), W("b")) == lin(("ab", 1), ("ba", 1))
    assert shuffle(W("ab"), W("c")) == lin(("abc", 1), ("acb", 1), ("cab", 1))
    assert shuffle(EMPTY, W("ab")) == Words.of(W("ab"))
    assert shuffle(W("a"), W("a")) == lin(("aa", 2))


def test_antipode_star_examples():
    assert antipode_star(EMPTY) == Words.of(EMPTY)
    assert antipode_star(W("ab")) == Words.of(W("ba"))
    assert antipode_star(W("abc")) == Words.of(W("cba"), -1)


def test_generic_antipode_examples():
    assert antipode_generic(shuffle_lin, W("a")) == Words.of(W("a"), -1)
    assert antipode_generic(shuffle_lin, W("ab")) == Words.of(W("ba"))


@given(words3, words3)
def test_shuffle_commutative(x, y):
    assert shuffle(x, y) == shuffle(y, x)


@given(short_words, short_words, short_words)
def test_shuffle_associative(x, y, z):
    assert shuffle_lin(shuffle(x, y), Words.of(z)) == shuffle_lin(Words.of(x), shuffle(y, z))


def _tensor_shuffle(t1, t2):
    acc = defaultdict(int)
    for (a1, b1), c1 in t1.items():
        for (a2, b2), c2 in t2.items():
            for s, d in shuffle(a1, a2).terms.items():
                for t, e in shuffle(b1, b2).terms.items():
                    acc[(s, t)] += c1 * c2 * d * e
    return {k: v for k, v in acc.items() if v}


@given(short_words, short_words)
def test_deconcat_is_shuffle_morphism(x, y):
    assert deconcat_lin(shuffle(x, y)) == _tensor_shuffle(deconcat(x), deconcat(y))


@pytest.mark.parametrize("x", WORDS4, ids=render_word)
def test_coalgebra_and_antipode_axioms(x):
    d = deconcat(x)
    left = defaultdict(int)
    right = defaultdict(int)
    for (a, b), c in d.items():
        for (p, q), e in deconcat(a).items():
            left[(p, q, b)] += c * e
        for (p, q), e in deconcat(b).items():
            right[(a, p, q)] += c * e
    assert left == right
    assert sum(c for (a, b), c in d.items() if not a and b == x) == 1
    assert sum(c for (a, b), c in d.items() if not b and a == x) == 1
    eps = Words.of(EMPTY) if not x else Words()
    total_l, total_r = Words(), Words()
    for (a, b), c in d.items():
        total_l = total_l + shuffle_lin(antipode_star(a), Words.of(b)) * c
        total_r = total_r + shuffle_lin(Words.of(a), antipode_star(b)) * c
    assert total_l == eps and total_r == eps
    assert antipode_generic(shuffle_lin, x) == antipode_star(x)


def test_antipode_star_linear():
    assert antipode_star_lin(lin(("ab", 2), ("c", 1))) == lin(("ba", 2), ("c", -1))


@pytest.mark.parametrize("n", range(1, 5))
def test_generic_antipode_on_dual_words(n):
    for f in enumerate_forests(n):
        assert hpr_antipode(f) == antipode_recursive(dual(f))
        assert antipode_generic(elem_mul, f, embed=dual) == hpr_antipode(f)


def test_cocycle_examples():
    assert cocycle_lu(lambda w: Words(), W("abc")) == Words()

    def append(w):
        return Words.of(W("g")) if not w else Words()

    def swap(w):
        return Words.of(W("b")) if w == W("a") else Words()

    assert cocycle_lu(append, W("ab")) == Words.of(W("abg"))
    assert cocycle_lu(swap, W("a")) == Words.of(W("b"))
    assert cocycle_lu(swap, W("ca")) == Words.of(W("cb"))


sparse_hooks = st.dictionaries(
    st.sampled_from(words_up_to(ALPHABET, 3)),
    st.dictionaries(st.sampled_from(["a", "b", "c"]), st.integers(-2, 2), max_size=2),
    max_size=4,
)


@given(sparse_hooks, words3)
def test_cocycle_identity_on_random_hooks(table, x):
    def u(w):
        return Words({(g,): c for g, c in table.get(w, {}).items()})

    assert is_cocycle(u, Words.of(x))


def test_primitives_are_generators():
    basis = primitive_words(ALPHABET, 3)
    assert sorted(b.render() for b in basis) == ["a", "b", "c"]


def test_words_json():
    assert lin(("ab", 2)).to_json() == {"terms": [{"coeff": "2", "word": ["a", "b"]}]}
