"""Computations in the group of parenthesized braids."""

from __future__ import annotations

from .artin import FWord, aut_apply, aut_apply_colouring, fgen_word, generator_image, nontriviality_witness
from .diagram import layout, render_diagram
from .ld_structure import BRAID, act_coloured, bracket, circ, enumerate_special, ev, ev_star
from .normal_forms import decompose_positive, fraction_form, is_pure, split_special, zs_split
from .ordering import cmp, cmp_B, cmp_F, cmp_plus, conj_by_a, order_via_colouring, tree_cmp
from .reversing import cube_condition, gcd, left_lcm, left_reverse, right_lcm, right_reverse, word_problem
from .text import ParseError, parse_fword, parse_tree, parse_word
from .trees import LEAF, PartialActionError, Tree, act_tree, dec, minimal_input_tree, vine
from .words import EMPTY, Letter, Word, a, invert, shift, sigma

__version__ = "0.1.0"

__all__ = [
    "BRAID",
    "EMPTY",
    "FWord",
    "LEAF",
    "Letter",
    "ParseError",
    "PartialActionError",
    "Tree",
    "Word",
    "a",
    "act_coloured",
    "act_tree",
    "aut_apply",
    "aut_apply_colouring",
    "bracket",
    "circ",
    "cmp",
    "cmp_B",
    "cmp_F",
    "cmp_plus",
    "conj_by_a",
    "cube_condition",
    "dec",
    "decompose_positive",
    "enumerate_special",
    "ev",
    "ev_star",
    "fgen_word",
    "fraction_form",
    "gcd",
    "generator_image",
    "invert",
    "is_pure",
    "layout",
    "left_lcm",
    "left_reverse",
    "minimal_input_tree",
    "nontriviality_witness",
    "order_via_colouring",
    "parse_fword",
    "parse_tree",
    "parse_word",
    "render_diagram",
    "right_lcm",
    "right_reverse",
    "shift",
    "sigma",
    "split_special",
    "tree_cmp",
    "vine",
    "word_problem",
    "zs_split",
]
