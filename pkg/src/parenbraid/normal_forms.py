"""Splittings and decompositions of parenthesized braids."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .ld_structure import BRAID, act_coloured, coloured, ev
from .reversing import left_reverse, word_problem
from .trees import PartialActionError, Tree, act_tree, dec, labels, minimal_input_tree, relabel, size, skeleton, vine
from .words import A, EMPTY, SIGMA, Letter, Word, a, double_strand, shift, strand_end


class NotSpecialError(ValueError):
    pass


@dataclass(frozen=True)
class ZSPair:
    braid: Word
    thompson: Word

    def word(self) -> Word:
        return self.braid + self.thompson


def _require_positive(w: Word) -> None:
    if not w.is_positive:
        raise ValueError(f"expected a positive word, got {w}")


def zs_split(w: Iterable[Letter]) -> ZSPair:
    """Split a positive word as (braid word)(a-word), moving a-letters to the right."""
    w = Word(w)
    _require_positive(w)
    braid: list[Letter] = []
    thompson: list[Letter] = []
    for x in w:
        if x.family == A:
            thompson.append(x)
            continue
        # push the crossing left through the a-letters already collected
        cur: Word = Word((x,))
        moved = []
        for y in reversed(thompson):
            moved.append(a(strand_end(cur, y.index)))
            cur = double_strand(cur, y.index)
        thompson = moved[::-1]
        braid.extend(cur)
    return ZSPair(Word(braid), Word(thompson))


@dataclass(frozen=True)
class FractionForm:
    """``w = num^-1 den`` with ``num = beta f`` and ``den = gamma g``, so ``w = f^-1 beta^-1 gamma g``."""

    num: Word
    den: Word
    f: Word
    beta: Word
    gamma: Word
    g: Word


def fraction_form(w: Iterable[Letter]) -> FractionForm:
    num, den, _ = left_reverse(w)
    p, q = zs_split(num), zs_split(den)
    return FractionForm(num, den, p.thompson, p.braid, q.braid, q.thompson)


@dataclass(frozen=True)
class SpecialDecomposition:
    """Factors ``z_1..z_p`` with the element equal to ``z_1 ∂z_2 ... ∂^{p-1} z_p``."""

    factors: tuple[Word, ...]
    braids: tuple[Word, ...] = ()
    thompson: tuple[Word, ...] = ()
    trees: tuple[Tree, ...] = field(default=(), compare=False)

    def reassemble(self) -> Word:
        return shifted_product(self.factors)

    def reassemble_split(self) -> Word:
        """The refined form ``b_1 ∂b_2 ... ∂^{n-1} b_n h_1 ∂h_2 ...``."""
        return shifted_product(self.braids) + shifted_product(self.thompson)

    def annotation(self) -> dict:
        return {"braids": [str(b) for b in self.braids], "thompson": [str(h) for h in self.thompson]}


def shifted_product(ws: Iterable[Iterable[Letter]]) -> Word:
    out = EMPTY
    for k, z in enumerate(ws):
        out = out + shift(z, k)
    return out


def _vine_for(w: Word) -> Tree:
    return vine(w.max_index + len(w) + 1)


def _is_unit_leaf(t: Tree) -> bool:
    return t.is_leaf and (t.label is None or not t.label or word_problem(t.label, EMPTY))


def _trim(factors: list[Tree]) -> list[Tree]:
    while factors and _is_unit_leaf(factors[-1]):
        factors.pop()
    return factors


def parse_special_thompson(f: Iterable[Letter]) -> Optional[Tree]:
    """Tree ``t`` with ``ev(t) = f`` if the positive a-word ``f`` is special, else None."""
    f = Word(f)
    if not (f.is_a_word and f.is_positive):
        raise ValueError(f"expected a positive a-word, got {f}")
    factors, _ = dec(act_tree(_vine_for(f), f))
    if all(t.is_leaf for t in factors[1:]):
        return factors[0]
    return None


def special_decomposition_F(f: Iterable[Letter]) -> SpecialDecomposition:
    f = Word(f)
    if not (f.is_a_word and f.is_positive):
        raise ValueError(f"expected a positive a-word, got {f}")
    factors = _trim(dec(act_tree(_vine_for(f), f))[0])
    hs = tuple(ev(t) for t in factors)
    return SpecialDecomposition(hs, thompson=hs, trees=tuple(factors))


def decompose_positive(w: Iterable[Letter]) -> SpecialDecomposition:
    """Decompose a positive word into special parenthesized braids."""
    w = Word(w)
    _require_positive(w)
    start = coloured(_vine_for(w), EMPTY)
    factors = _trim(dec(act_coloured(start, w, BRAID))[0])
    braids = tuple(c for t in factors for c in labels(t))
    thompson = tuple(ev(skeleton(t)) for t in factors)
    return SpecialDecomposition(tuple(ev(t) for t in factors), braids, thompson, tuple(factors))


def split_special(z: Iterable[Letter]) -> tuple[tuple[Word, ...], Word]:
    """Return ``(b_1..b_n, h)`` with ``z = b_1 ∂b_2 ... ∂^{n-1} b_n h``."""
    z = Word(z)
    if any(x.family == SIGMA and x.sign < 0 for x in z):
        # braid colours have no inverse bracket: fall back to a positive representative
        num, den, _ = left_reverse(z)
        if num:
            raise NotSpecialError(f"{z} has inverse crossings and no positive representative")
        z = den
    try:
        out = act_coloured(coloured(_vine_for(z), EMPTY), z, BRAID)
    except PartialActionError as exc:
        raise NotSpecialError(str(exc)) from exc
    factors, _ = dec(out)
    if not factors or not all(_is_unit_leaf(t) for t in factors[1:]):
        raise NotSpecialError(f"{z} does not pass the vine test")
    t = factors[0]
    return tuple(labels(t)), ev(skeleton(t))


def is_pure(w: Iterable[Letter]) -> bool:
    """True iff the element fixes its tree and every strand."""
    w = Word(w)
    t = minimal_input_tree(w)
    n = size(t)
    out = act_tree(relabel(t, range(n)), w)
    return skeleton(out) == t and labels(out) == list(range(n))
