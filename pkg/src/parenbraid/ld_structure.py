"""Self-distributive colour structures acting on coloured trees, and their evaluation.

A coloured tree is a :class:`~parenbraid.trees.Tree` whose leaves carry
colours as labels.  On a positive crossing the block passing under has each
colour ``y`` replaced by ``x_1[x_2[...x_p[y]]]`` where ``x_1..x_p`` are the
colours of the block passing over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Protocol

from .reversing import word_problem
from .trees import Tree, act_tree, all_trees, dec, labels, map_labels
from .words import EMPTY, Letter, Word, a, invert, shift, sigma


class ColourStructure(Protocol):
    is_rack: bool

    def bracket(self, x, y): ...

    def eq(self, x, y) -> bool: ...


@dataclass(frozen=True)
class BraidColours:
    """Parenthesized braid words with ``x[y] = x ∂y s1 ∂x^-1`` and ``x∘y = x ∂y a1``."""

    is_rack: bool = False
    unit: Word = EMPTY

    def bracket(self, x: Word, y: Word) -> Word:
        return bracket(x, y)

    def circ(self, x: Word, y: Word) -> Word:
        return circ(x, y)

    def eq(self, x: Word, y: Word) -> bool:
        return word_problem(x, y)


@dataclass(frozen=True)
class ConjugationRack:
    """Permutations of ``range(n)`` (as tuples) with ``x[y] = x y x^-1`` and ``x∘y = x y``."""

    n: int
    is_rack: bool = True

    def compose(self, x: tuple, y: tuple) -> tuple:
        # (x y)(k) = x(y(k))
        return tuple(x[y[k]] for k in range(self.n))

    def inverse(self, x: tuple) -> tuple:
        out = [0] * self.n
        for k, v in enumerate(x):
            out[v] = k
        return tuple(out)

    def bracket(self, x: tuple, y: tuple) -> tuple:
        return self.compose(self.compose(x, y), self.inverse(x))

    def unbracket(self, x: tuple, z: tuple) -> tuple:
        return self.compose(self.compose(self.inverse(x), z), x)

    def circ(self, x: tuple, y: tuple) -> tuple:
        return self.compose(x, y)

    def eq(self, x, y) -> bool:
        return x == y


@dataclass(frozen=True)
class TrivialColours:
    """Colours ride along with their strands: ``x[y] = y``.  Used for strand tracking."""

    is_rack: bool = True

    def bracket(self, x, y):
        return y

    def unbracket(self, x, z):
        return z

    def eq(self, x, y) -> bool:
        return x == y


BRAID = BraidColours()
TRIVIAL = TrivialColours()


def bracket(x: Iterable[Letter], y: Iterable[Letter]) -> Word:
    x, y = Word(x), Word(y)
    return x + shift(y) + Word((sigma(1),)) + shift(invert(x))


def circ(x: Iterable[Letter], y: Iterable[Letter]) -> Word:
    x, y = Word(x), Word(y)
    return x + shift(y) + Word((a(1),))


# coloured trees


def coloured(t: Tree, colour: Any = EMPTY) -> Tree:
    """Colour every leaf of ``t`` with ``colour``."""
    return map_labels(t, lambda _: colour)


def tree_bracket(over: Tree, under: Tree, S) -> Tree:
    xs = labels(over)

    def hit(y):
        for x in reversed(xs):
            y = S.bracket(x, y)
        return y

    return map_labels(under, hit)


def tree_unbracket(over: Tree, under: Tree, S) -> Tree:
    xs = labels(over)

    def hit(y):
        for x in xs:
            y = S.unbracket(x, y)
        return y

    return map_labels(under, hit)


def act_coloured(t: Tree, w: Iterable[Letter], S=BRAID) -> Tree:
    """Act on a coloured tree; inverse crossings need a rack."""

    def cross(over, under):
        return tree_bracket(over, under, S)

    def uncross(over, under):
        return tree_unbracket(over, under, S)

    return act_tree(t, w, cross, uncross if S.is_rack else None)


def _colour_word(c) -> Word:
    return EMPTY if c is None else c


def ev(t: Tree) -> Word:
    """Evaluate with ``ev(leaf_x) = x`` and ``ev(t t') = ev(t)∘ev(t')``; bare leaves count as 1."""
    if t.is_leaf:
        return _colour_word(t.label)
    return circ(ev(t.left), ev(t.right))


def ev_star(t: Tree) -> Word:
    factors, _ = dec(t)
    out = EMPTY
    for k, f in enumerate(factors):
        out = out + shift(ev(f), k)
    return out


# special elements

MODES = ("bracketOnly", "circOnly", "both")
DEPTH_CAP = 4


@dataclass
class SpecialEnumeration:
    elements: list[Word] = field(default_factory=list)
    terms: list[str] = field(default_factory=list)
    collisions: list[tuple[str, str]] = field(default_factory=list)


def _fingerprint(w: Word):
    from .artin import aut_apply, fgen_word

    return tuple(aut_apply(w, fgen_word(s)) for s in ((1,), (2,), (3,), (1, 1), (1, 2)))


def enumerate_special(depth: int, mode: str = "both", cap: int = DEPTH_CAP) -> SpecialEnumeration:
    """Elements of the closure of {1} reachable with at most ``depth`` levels of operations.

    Level 1 is ``{1}``; level ``d+1`` adds ``x[y]`` and/or ``x∘y`` for ``x, y`` of level ``d``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if depth < 1:
        raise ValueError("depth must be positive")
    if depth > cap:
        raise ValueError(f"depth {depth} exceeds the cap {cap}")
    out = SpecialEnumeration()
    buckets: dict[Any, list[int]] = {}
    seen: set[str] = set()

    def add(w: Word, term: str) -> None:
        if term in seen:
            return
        seen.add(term)
        key = _fingerprint(w)
        for k in buckets.get(key, []):
            if word_problem(out.elements[k], w):
                out.collisions.append((term, out.terms[k]))
                return
        buckets.setdefault(key, []).append(len(out.elements))
        out.elements.append(w)
        out.terms.append(term)

    add(EMPTY, "1")
    for _ in range(depth - 1):
        level = list(zip(out.elements, out.terms))
        for x, tx in level:
            for y, ty in level:
                if mode in ("bracketOnly", "both"):
                    add(bracket(x, y), f"{_par(tx)}[{ty}]")
                if mode in ("circOnly", "both"):
                    add(circ(x, y), f"{_par(tx)}∘{_par(ty)}")
    return out


def _par(term: str) -> str:
    return term if term == "1" else f"({term})"


def special_thompson_of_length(n: int) -> list[Word]:
    """Distinct special Thompson elements of length ``n`` (from all trees with ``n + 1`` leaves)."""
    found: list[Word] = []
    for t in all_trees(n + 1):
        f = ev(t)
        if not any(word_problem(f, g) for g in found):
            found.append(f)
    return found
