from __future__ import annotations

import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import a_words, sigma_words, tree_list, words
from schemas import random_rewrite
from parenbraid.ld_structure import ev, special_thompson_of_length
from parenbraid.normal_forms import (
    NotSpecialError,
    decompose_positive,
    fraction_form,
    is_pure,
    parse_special_thompson,
    shifted_product,
    special_decomposition_F,
    split_special,
    zs_split,
)
from parenbraid.reversing import word_problem
from parenbraid.text import parse_tree, parse_word
from parenbraid.trees import labels, skeleton, vine
from parenbraid.words import A, EMPTY, Word, invert, shift, sigma

W, T = parse_word, parse_tree


def test_zs_split_examples():
    p = zs_split(W("a1 s1"))
    assert (p.braid, p.thompson) == (W("s2 s1"), W("a2"))
    assert zs_split(W("s1 s3 s2")).thompson == EMPTY
    p = zs_split(W("a2 s1"))
    assert (p.braid, p.thompson) == (W("s1 s2"), W("a1"))
    with pytest.raises(ValueError):
        zs_split(W("s1^-1"))


def test_fraction_form_examples():
    fr = fraction_form(W("a1^-1 s3^-1 s1 a1"))
    assert (fr.num, fr.den) == (W("s3 a1"), W("s1 a1"))
    assert (fr.f, fr.beta, fr.gamma, fr.g) == (W("a1"), W("s3"), W("s1"), W("a1"))
    fr = fraction_form(W("s2 a1 s1"))
    assert (fr.num, fr.den) == (EMPTY, W("s2 a1 s1"))
    fr = fraction_form(W("s1 a1 s1^-1"))
    assert (fr.num, fr.den) == (W("s1 s2"), W("s2 a2"))


def test_parse_special_thompson_examples():
    assert parse_special_thompson(W("a1 a1")) == T("((..).)")
    assert parse_special_thompson(W("a4 a3 a2 a1")) == vine(4)
    assert parse_special_thompson(W("a2")) is None
    with pytest.raises(ValueError):
        parse_special_thompson(W("s1"))


def test_parse_special_thompson_round_trip():
    for t in tree_list(9):
        assert parse_special_thompson(ev(t)) == t


def test_special_thompson_counts_are_catalan():
    for n in range(0, 7):
        assert len(special_thompson_of_length(n)) == comb(2 * n, n) // (n + 1)


def test_special_decomposition_F_examples():
    assert special_decomposition_F(W("a2")).factors == (EMPTY, W("a1"))
    assert special_decomposition_F(W("a2 a1")).factors == (W("a2 a1"),)
    assert special_decomposition_F(W("a1 a2")).factors == (W("a1"), W("a1"))


def test_decompose_positive_examples():
    assert decompose_positive(W("s1")).factors == (W("s1"),)
    assert decompose_positive(W("a1")).factors == (W("a1"),)
    d = decompose_positive(W("s1 a1"))
    assert len(d.factors) == 1 and word_problem(d.factors[0], W("s1 a1"))
    with pytest.raises(ValueError):
        decompose_positive(W("a1^-1"))


def test_split_special_examples():
    assert split_special(W("s1 a1")) == ((W("s1"), EMPTY), W("a1"))
    assert split_special(W("a1")) == ((EMPTY, EMPTY), W("a1"))
    braids, h = split_special(W("a1 s2 s1 a2^-1"))
    assert braids == (W("s3 s2 s1"),) and h == EMPTY
    with pytest.raises(NotSpecialError):
        split_special(W("a2"))
    with pytest.raises(NotSpecialError):
        split_special(W("s1 s1 s2^-1"))


def test_is_pure_examples():
    assert not is_pure(W("s1"))
    assert is_pure(W("s1 s1"))
    assert not is_pure(W("a1"))
    assert is_pure(W(""))


@given(words(max_len=7, max_index=3, positive=True), st.randoms(use_true_random=False))
def test_zs_split_is_unique(w, rng):
    p = zs_split(w)
    assert word_problem(p.braid + p.thompson, w)
    q = zs_split(random_rewrite(w, rng))
    assert word_problem(p.braid, q.braid) and word_problem(p.thompson, q.thompson)


@given(words(max_len=7, max_index=3))
def test_fraction_form_reassembles(w):
    fr = fraction_form(w)
    assert word_problem(invert(fr.num) + fr.den, w)
    assert word_problem(invert(fr.f) + invert(fr.beta) + fr.gamma + fr.g, w)


@given(a_words(max_len=7, max_index=4, positive=True), st.randoms(use_true_random=False))
def test_special_decomposition_F_laws(f, rng):
    d = special_decomposition_F(f)
    assert word_problem(d.reassemble(), f)
    assert all(parse_special_thompson(h) is not None for h in d.factors)
    again = special_decomposition_F(random_rewrite(f, rng))
    assert len(again.factors) == len(d.factors)
    assert all(word_problem(x, y) for x, y in zip(again.factors, d.factors))


@given(words(max_len=6, max_index=3, positive=True))
def test_decompose_positive_laws(w):
    d = decompose_positive(w)
    assert word_problem(d.reassemble(), w)
    assert word_problem(d.reassemble_split(), w)
    for z, t in zip(d.factors, d.trees):
        assert word_problem(shifted_product(labels(t)) + ev(skeleton(t)), z)
    if all(x.family == A for x in w):
        for z in d.factors:
            braids, h = split_special(z)
            assert word_problem(shifted_product(braids) + h, z)


@given(words(max_len=6, max_index=3))
def test_fraction_parts_decompose(w):
    fr = fraction_form(w)
    num, den = decompose_positive(fr.num), decompose_positive(fr.den)
    assert word_problem(invert(num.reassemble()) + den.reassemble(), w)


@given(a_words(max_len=4, max_index=3, positive=True), st.integers(1, 3), st.integers(0, 2))
def test_conjugated_pure_braids_are_pure(f, i, k):
    beta = shift(Word((sigma(i), sigma(i))), k)
    assert is_pure(invert(f) + beta + f)


@given(sigma_words(max_len=6, max_index=3))
def test_pure_braids_have_trivial_permutation(b):
    from parenbraid.words import strand_image

    trivial = all(strand_image(b, k) == k for k in range(1, 6))
    assert is_pure(b) == trivial


def test_zs_split_rejects_the_other_order_only_semantically():
    rng = random.Random(3)
    for _ in range(50):
        w = Word(rng.choice([sigma(1), sigma(2)]) for _ in range(4)) + W("a1")
        p = zs_split(w)
        assert word_problem(p.word(), w)
