from __future__ import annotations

import random

from hypothesis import given
from hypothesis import strategies as st

from conftest import words
from schemas import relation_instances
from parenbraid.artin import (
    C,
    ONE,
    FWord,
    act_F_coloured,
    aut_apply,
    aut_apply_colouring,
    fgen_word,
    generator_image,
    generators_up_to,
    is_special_fword,
    natural_colour,
    natural_colouring,
    node_colours,
    nontriviality_witness,
)
from parenbraid.reversing import word_problem
from parenbraid.text import parse_fword, parse_word
from parenbraid.trees import act_tree, grow_to, labels, minimal_input_tree, nodes, vine
from parenbraid.words import Letter, Word, a, sigma

W, X = parse_word, parse_fword


def x(*s: int) -> FWord:
    return fgen_word(s)


def test_fword_is_reduced():
    assert x(1) * x(1).inverse() == ONE
    assert str(X("x(1) x(2,1)^-1")) == "x(1) x(2,1)^-1"
    assert X("x(2) x(1)^-1 x(1) x(2)^-1") == ONE


def test_natural_colour_examples():
    assert natural_colour((2, 1, 1)) == x(2, 1)
    assert natural_colour((2, 1, 2)) == X("x(2,1,1)^-1 x(2,1)")
    assert natural_colour((4,)) == X("x(3)^-1 x(2)^-1 x(1)^-1")
    assert natural_colour((1,)) == ONE


def test_node_colours_are_coherent():
    t = natural_colouring(vine(4))
    colours = node_colours(t)
    for addr, c in colours.items():
        assert c == natural_colour(addr)


def test_act_F_coloured_examples():
    t = natural_colouring(vine(3))
    out = act_F_coloured(t, W("s1"))
    # the block that was second moves to the front, conjugated by the colour passing over it
    assert labels(out)[:2] == [X("x(1) x(2) x(1)^-1"), x(1)]
    glued = act_F_coloured(t, W("a2"))
    assert labels(glued) == labels(t)


def test_worked_value():
    assert aut_apply(W("a2 s1"), x(1)) == X("x(1) x(2) x(3) x(1)^-1")
    assert aut_apply_colouring(W("a2 s1"), x(1)) == X("x(1) x(2) x(3) x(1)^-1")


def test_sigma_images():
    for i in range(1, 4):
        for s in [(), (1,), (2, 3)]:
            assert aut_apply(Word((sigma(i),)), x(i, *s)) == x(i) * x(i + 1, *s) * x(i).inverse()
            assert aut_apply(Word((sigma(i),)), x(i + 1, *s)) == x(i, *s)
            for j in range(1, 6):
                if j not in (i, i + 1):
                    assert generator_image(sigma(i), (j,) + s) == x(j, *s)


def test_a_images():
    for i in range(1, 4):
        assert aut_apply(Word((a(i),)), x(i)) == x(i) * x(i + 1)
        assert generator_image(a(i, -1), (i + 1,)) == x(i, 1).inverse() * x(i)


def test_c_images():
    for i in range(1, 4):
        assert generator_image(Letter(C, i, 1), (i,)) == x(i).inverse()
        for j in range(1, 3):
            for s in [(), (2,)]:
                assert generator_image(Letter(C, i, 1), (i + j,) + s) == x(i, j, *s)
        # the inverse letter undoes the letter
        for g in generators_up_to(2, 4):
            img = generator_image(Letter(C, i, 1), g)
            back = FWord(
                l for h, e in img for l in (generator_image(Letter(C, i, -1), h) if e > 0 else generator_image(Letter(C, i, -1), h).inverse())
            )
            assert back == fgen_word(g)


def test_generator_formulas_match_the_colouring_engine():
    for g in [sigma(i, e) for i in (1, 2, 3) for e in (1, -1)] + [a(i, e) for i in (1, 2, 3) for e in (1, -1)]:
        for s in generators_up_to(3, 5):
            assert aut_apply(Word((g,)), fgen_word(s)) == aut_apply_colouring(Word((g,)), fgen_word(s))


def test_identity_word():
    u = X("x(1) x(2,1)^-1 x(3)")
    assert aut_apply(W(""), u) == u


def test_special_fword_examples():
    assert is_special_fword(X("x(1)^-1"))
    assert is_special_fword(X("x(1) x(2)^-1 x(2,1)"))
    assert not is_special_fword(X("x(1)"))
    assert not is_special_fword(X("x(1)^-1 x(2)"))


def test_witness_examples():
    for depth in (1, 2, 3):
        assert nontriviality_witness(W("a1 s2 a1^-1 s3^-1"), depth) is None
    assert nontriviality_witness(W("s1"), 1) == (1,)
    assert nontriviality_witness(W("a1"), 1) == (1,)


def test_relations_induce_equal_automorphisms():
    gens = [fgen_word(s) for s in generators_up_to(3, 5)]
    for _, lhs, rhs in relation_instances(4, 1):
        if max(lhs.max_index, rhs.max_index) > 4:
            continue
        assert all(aut_apply(lhs, g) == aut_apply(rhs, g) for g in gens)


@given(words(max_len=8, max_index=3), st.integers(0, 10**6))
def test_both_paths_agree(w, seed):
    rng = random.Random(seed)
    s = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
    assert aut_apply(w, fgen_word(s)) == aut_apply_colouring(w, fgen_word(s))


@given(words(max_len=6, max_index=3))
def test_natural_colours_map_to_actual_colours(w):
    t = minimal_input_tree(w)
    final = node_colours(act_F_coloured(natural_colouring(t), w))
    assert set(final) == {adr for adr, _ in nodes(act_tree(t, w))}
    for addr, c in final.items():
        assert aut_apply(w, natural_colour(addr)) == c


@given(words(max_len=6, max_index=3), words(max_len=6, max_index=3))
def test_automorphisms_compose(u, v):
    g = x(1) * x(2, 1).inverse() * x(3)
    assert aut_apply(u + v, g) == aut_apply(u, aut_apply(v, g))


def _random_fword(rng: random.Random, n: int) -> FWord:
    return FWord((tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 3))), rng.choice((1, -1))) for _ in range(n))


def test_negative_suffix_survives_crossings():
    rng = random.Random(4)
    for _ in range(300):
        i = rng.randint(1, 3)
        u = _random_fword(rng, rng.randint(0, 4)) * x(i).inverse()
        if not u or u[-1] != ((i,), -1):
            continue
        for g in [sigma(i)] + [sigma(j, e) for j in (i + 1, i + 2) for e in (1, -1)]:
            img = aut_apply(Word((g,)), u)
            assert img and img[-1] == ((i,), -1)


def test_special_fwords_stay_special():
    rng = random.Random(9)
    for _ in range(300):
        s = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 2)))
        tail = FWord((s + (rng.randint(1, 3),), 1) for _ in range(rng.randint(0, 2)))
        u = _random_fword(rng, rng.randint(0, 3)) * fgen_word(s, -1) * tail
        if not is_special_fword(u):
            continue
        for k in (1, 2, 3):
            assert is_special_fword(aut_apply(Word((a(k, -1),)), u))


@given(words(max_len=8, max_index=3))
def test_faithfulness_against_word_problem(w):
    assert (nontriviality_witness(w, 3) is None) == word_problem(w)


def test_grow_to_gives_nodes_for_generators():
    t = grow_to(vine(1), (2, 1, 1))
    assert (2, 1, 1) in node_colours(natural_colouring(t))
