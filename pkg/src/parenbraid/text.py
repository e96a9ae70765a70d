"""Parsing and printing of the text formats used on the command line."""

from __future__ import annotations

import re

from .artin import FWord, fgen_word
from .trees import LEAF, Tree
from .words import A, SIGMA, Letter, Word

_TOKEN = re.compile(r"([sSaA])(\d+)(\^-1)?$")


class ParseError(ValueError):
    pass


def parse_word(text: str) -> Word:
    """Parse ``"s1 a2^-1 S3"``; tokens split on whitespace or ``.``, uppercase means inverse."""
    text = text.strip()
    if text in ("", "1"):
        return Word()
    letters = []
    for tok in re.split(r"[\s.]+", text):
        if not tok:
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad letter {tok!r}")
        fam, idx, inv = m.groups()
        i = int(idx)
        if i < 1:
            raise ParseError(f"letter index must be >= 1 in {tok!r}")
        sign = -1 if fam.isupper() else 1
        if inv:
            sign = -sign
        letters.append(Letter(SIGMA if fam.lower() == "s" else A, i, sign))
    return Word(letters)


def parse_tree(text: str) -> Tree:
    """Parse ``"."`` or ``"(" tree tree ")"``, whitespace ignored."""
    s = "".join(text.split())
    pos = 0

    def go() -> Tree:
        nonlocal pos
        if pos >= len(s):
            raise ParseError("unexpected end of tree")
        c = s[pos]
        pos += 1
        if c == ".":
            return LEAF
        if c != "(":
            raise ParseError(f"unexpected {c!r} in tree")
        left = go()
        right = go()
        if pos >= len(s) or s[pos] != ")":
            raise ParseError("missing ')' in tree")
        pos += 1
        return Tree(left, right)

    t = go()
    if pos != len(s):
        raise ParseError("trailing characters after tree")
    return t


def format_position(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


_FGEN = re.compile(r"x\((\d+(?:,\d+)*)\)(\^-1)?$")


def parse_fword(text: str) -> FWord:
    text = text.strip()
    if text in ("", "1"):
        return FWord()
    out = FWord()
    for tok in text.split():
        m = _FGEN.match(tok)
        if not m:
            raise ParseError(f"bad free generator {tok!r}")
        s = tuple(int(x) for x in m.group(1).split(","))
        if any(x < 1 for x in s):
            raise ParseError(f"generator entries must be >= 1 in {tok!r}")
        out = out * fgen_word(s, -1 if m.group(2) else 1)
    return out
