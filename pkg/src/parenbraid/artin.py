"""The faithful action of parenthesized braids on the free group F on generators x_s.

Generators are indexed by nonempty sequences ``s`` of positive integers.  The
automorphism attached to a word ``w`` sends the natural colour of each node of
``t • w`` to the colour that node actually carries after acting on the
naturally coloured ``t``.  Maps compose so that ``aut(w1 w2) = aut(w1) ∘ aut(w2)``:
to apply ``aut(w)`` the letters are substituted from the last one to the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .ld_structure import act_coloured
from .trees import Tree, act_tree, grow_to, labels, minimal_input_tree, nodes, relabel
from .words import A, SIGMA, Letter, Word, invert

FGen = tuple[int, ...]
FLetter = tuple[FGen, int]
C = "c"


class FWord(tuple):
    """A freely reduced word in the generators x_s."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[FLetter] = ()):
        out: list[FLetter] = []
        for g, e in letters:
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
            else:
                out.append((tuple(g), e))
        return super().__new__(cls, out)

    def __mul__(self, other: FWord) -> FWord:
        return FWord(tuple(self) + tuple(other))

    def inverse(self) -> FWord:
        return FWord((g, -e) for g, e in reversed(self))

    def __str__(self) -> str:
        if not self:
            return "1"
        return " ".join(format_fgen(g) + ("" if e > 0 else "^-1") for g, e in self)

    def __repr__(self) -> str:
        return f"FWord({str(self)!r})"


ONE = FWord()


def format_fgen(s: FGen) -> str:
    return "x(" + ",".join(map(str, s)) + ")"


def fgen_word(s: Iterable[int], e: int = 1) -> FWord:
    s = tuple(s)
    if not s or any(x < 1 for x in s):
        raise ValueError(f"not a generator index: {s}")
    return FWord(((s, e),))


def fmul(*ws: FWord) -> FWord:
    out: list[FLetter] = []
    for w in ws:
        out.extend(w)
    return FWord(out)


def _x(*s: int) -> FWord:
    return fgen_word(s)


def _conj(g: FWord, h: FWord) -> FWord:
    return fmul(g, h, g.inverse())


# natural colourings


def natural_colour(addr: Iterable[int]) -> FWord:
    """Colour ``x_{s,k-1}^-1 ... x_{s,1}^-1 x_s`` of the node at address ``(s, k)``."""
    addr = tuple(addr)
    s, k = addr[:-1], addr[-1]
    parts = [fgen_word(s + (j,), -1) for j in range(k - 1, 0, -1)]
    if s:
        parts.append(fgen_word(s))
    return fmul(*parts)


@dataclass(frozen=True)
class FreeGroupColours:
    """Free group elements with ``x[y] = x y x^-1`` and ``x∘y = x y``."""

    is_rack: bool = True

    def bracket(self, x: FWord, y: FWord) -> FWord:
        return fmul(x, y, x.inverse())

    def unbracket(self, x: FWord, z: FWord) -> FWord:
        return fmul(x.inverse(), z, x)

    def circ(self, x: FWord, y: FWord) -> FWord:
        return fmul(x, y)

    def eq(self, x: FWord, y: FWord) -> bool:
        return x == y


FREE = FreeGroupColours()


def natural_colouring(t: Tree) -> Tree:
    """Leaf colours of the natural colouring; inner colours are products (see ``node_colours``)."""
    return relabel(t, [natural_colour(adr) for adr, s in nodes(t) if s.is_leaf])


def node_colours(t: Tree) -> dict[tuple[int, ...], FWord]:
    """Colour of every node of a leaf-coloured tree, computed as the product of its leaves."""
    return {adr: fmul(*labels(s)) for adr, s in nodes(t)}


def act_F_coloured(t: Tree, w: Iterable[Letter]) -> Tree:
    return act_coloured(t, w, FREE)


# generator images


def generator_image(g: Letter, s: Iterable[int]) -> FWord:
    """Image of ``x_s`` under the automorphism of a single letter.

    ``g`` may be ``s_i^{+-1}``, ``a_i^{+-1}`` or the extra letter ``c_i^{+-1}``
    (family ``"c"``).
    """
    s = tuple(s)
    i, j, rest = g.index, s[0], s[1:]
    same = fgen_word(s)
    if g.family == SIGMA:
        if j == i:
            if g.sign > 0:
                return _conj(_x(i), fgen_word((i + 1,) + rest))
            return fgen_word((i + 1,) + rest)
        if j == i + 1:
            if g.sign > 0:
                return fgen_word((i,) + rest)
            return _conj(_x(i + 1).inverse(), fgen_word((i,) + rest))
        return same
    if g.family == A:
        if j < i:
            return same
        if g.sign > 0:
            if j > i:
                return fgen_word((j + 1,) + rest)
            if not rest:
                return fmul(_x(i), _x(i + 1))
            if rest[0] == 1:
                return fgen_word((i,) + rest[1:])
            return fgen_word((i + 1, rest[0] - 1) + rest[1:])
        if j > i + 1:
            return fgen_word((j - 1,) + rest)
        if j == i:
            return fgen_word((i, 1) + rest)
        if not rest:
            return fmul(_x(i, 1).inverse(), _x(i))
        return fgen_word((i, rest[0] + 1) + rest[1:])
    if g.family == C:
        if j < i:
            return same
        if s == (i,):
            return _x(i).inverse()
        if g.sign > 0:
            if j == i:
                return _conj(_x(i), fgen_word((i + rest[0],) + rest[1:]))
            return fgen_word((i, j - i) + rest)
        if j == i:
            return fgen_word((i + rest[0],) + rest[1:])
        return _conj(_x(i), fgen_word((i, j - i) + rest))
    raise ValueError(f"unknown letter family {g.family!r}")


def substitute(u: FWord, image) -> FWord:
    out: list[FLetter] = []
    for gen, e in u:
        img = image(gen)
        out.extend(img if e > 0 else img.inverse())
    return FWord(out)


def aut_apply(w: Iterable[Letter], u: FWord) -> FWord:
    """Image of ``u`` under the automorphism of ``w`` (per-letter formulas)."""
    for x in reversed(tuple(w)):
        u = substitute(u, lambda s, x=x: generator_image(x, s))
    return u


def aut_apply_colouring(w: Iterable[Letter], u: FWord) -> FWord:
    """Same as ``aut_apply``, computed by acting on a naturally coloured tree."""
    w = Word(w)
    target = act_tree(minimal_input_tree(w), w)
    for gen, _ in u:
        target = grow_to(target, gen + (1,))
    source = act_tree(target, invert(w))
    final = node_colours(act_F_coloured(natural_colouring(source), w))
    return substitute(u, lambda s: final[s + (1,)])


def is_special_fword(u: FWord) -> bool:
    """True iff ``u`` ends with ``x_s^-1`` followed by positive letters ``x_{s,...}`` below ``s``."""
    letters = tuple(u)
    for p in range(len(letters) - 1, -1, -1):
        gen, e = letters[p]
        if e < 0:
            return all(f > 0 and len(g) > len(gen) and g[: len(gen)] == gen for g, f in letters[p + 1 :])
    return False


def generators_up_to(depth: int, bound: int) -> list[FGen]:
    out = []
    for n in range(1, depth + 1):
        out.extend(product(range(1, bound + 1), repeat=n))
    return out


def nontriviality_witness(w: Iterable[Letter], depth: int, bound: Optional[int] = None) -> Optional[FGen]:
    """A generator moved by the automorphism of ``w``, searching ``|s| <= depth``.

    Entries range over ``1..bound`` (default: largest letter index plus 2).
    """
    w = Word(w)
    bound = bound or w.max_index + 2
    for s in generators_up_to(depth, bound):
        x = fgen_word(s)
        if aut_apply(w, x) != x:
            return s
    return None
