"""Letters and words, with the strand bookkeeping used throughout the package.

A word is a finite sequence of letters ``s_i^{+-1}`` (braid crossings) and
``a_i^{+-1}`` (block rescalings).  Words are plain immutable values; equality
of the elements they represent is decided in :mod:`parenbraid.reversing`.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional

SIGMA = "s"
A = "a"


class Letter(NamedTuple):
    family: str
    index: int
    sign: int = 1

    def inverse(self) -> Letter:
        return Letter(self.family, self.index, -self.sign)

    @property
    def positive(self) -> bool:
        return self.sign > 0

    def shifted(self, d: int = 1) -> Letter:
        return Letter(self.family, self.index + d, self.sign)

    def __str__(self) -> str:
        base = f"{self.family}{self.index}"
        return base if self.sign > 0 else base + "^-1"


def sigma(i: int, sign: int = 1) -> Letter:
    if i < 1:
        raise ValueError(f"letter index must be >= 1, got {i}")
    return Letter(SIGMA, i, sign)


def a(i: int, sign: int = 1) -> Letter:
    if i < 1:
        raise ValueError(f"letter index must be >= 1, got {i}")
    return Letter(A, i, sign)


class Word(tuple):
    """An immutable sequence of letters; the empty word denotes 1."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, letters)

    def __getitem__(self, item):
        got = tuple.__getitem__(self, item)
        return Word(got) if isinstance(item, slice) else got

    def __add__(self, other) -> Word:
        return Word(tuple.__add__(self, tuple(other)))

    def __radd__(self, other) -> Word:
        return Word(tuple(other) + tuple(self))

    __mul__ = __add__

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        return " ".join(map(str, self)) if self else "1"

    @property
    def is_positive(self) -> bool:
        return all(x.sign > 0 for x in self)

    @property
    def is_sigma_word(self) -> bool:
        return all(x.family == SIGMA for x in self)

    @property
    def is_a_word(self) -> bool:
        return all(x.family == A for x in self)

    @property
    def max_index(self) -> int:
        return max((x.index for x in self), default=0)

    def inverse(self) -> Word:
        return invert(self)


EMPTY = Word()


def word(*letters: Letter) -> Word:
    return Word(letters)


def invert(w: Iterable[Letter]) -> Word:
    return Word(x.inverse() for x in reversed(tuple(w)))


def shift(w: Iterable[Letter], d: int = 1) -> Word:
    """Apply the index-raising endomorphism ``d`` times."""
    if d < 0:
        raise ValueError("shift amount must be nonnegative")
    return Word(Letter(x.family, x.index + d, x.sign) for x in w)


def free_reduce(w: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for x in w:
        if out and out[-1] == x.inverse():
            out.pop()
        else:
            out.append(x)
    return Word(out)


def _require_sigma(w: Iterable[Letter]) -> None:
    for x in w:
        if x.family != SIGMA:
            raise ValueError(f"expected a braid word, found letter {x}")


def strand_image(w: Iterable[Letter], k: int) -> int:
    """Return ``w[k]``: the initial position of the strand ending at ``k``."""
    letters = tuple(w)
    _require_sigma(letters)
    for x in reversed(letters):
        k = _transpose(x.index, k)
    return k


def strand_end(w: Iterable[Letter], k: int) -> int:
    """Return ``w^{-1}[k]``: the final position of the strand starting at ``k``."""
    letters = tuple(w)
    _require_sigma(letters)
    for x in letters:
        k = _transpose(x.index, k)
    return k


def _transpose(i: int, k: int) -> int:
    if k == i:
        return i + 1
    if k == i + 1:
        return i
    return k


def _double_letter(i: int, k: int) -> tuple[Letter, ...]:
    if k < i:
        return (sigma(i + 1),)
    if k == i:
        return (sigma(i + 1), sigma(i))
    if k == i + 1:
        return (sigma(i), sigma(i + 1))
    return (sigma(i),)


def double_strand(w: Iterable[Letter], k: int) -> Word:
    """Return ``db_k(w)``, the braid word obtained by doubling the strand starting at ``k``."""
    letters = tuple(w)
    _require_sigma(letters)
    out: list[Letter] = []
    for x in letters:
        if x.sign > 0:
            out.extend(_double_letter(x.index, k))
        else:
            # db_k(s_i^-1) is the inverse of db_{s_i[k]}(s_i)
            out.extend(y.inverse() for y in reversed(_double_letter(x.index, _transpose(x.index, k))))
        k = _transpose(x.index, k)
    return Word(out)


def lambda_weight(w: Iterable[Letter]) -> int:
    """Homogeneity weight of a positive word (invariant under the defining relations)."""
    letters = tuple(w)
    if any(x.sign < 0 for x in letters):
        raise ValueError("lambda_weight needs a positive word")
    slots = [1] * (max((x.index for x in letters), default=0) + 2)
    total = 0
    for x in letters:
        i = x.index - 1
        while len(slots) < i + 2:
            slots.append(1)
        if x.family == A:
            total += 1
            slots[i : i + 2] = [slots[i] + slots[i + 1]]
        else:
            total += slots[i] * slots[i + 1]
            slots[i], slots[i + 1] = slots[i + 1], slots[i]
    return total


def is_sigma_positive(w: Iterable[Letter]) -> Optional[int]:
    """Return ``i`` if ``w`` is s_i-positive (s_i present, no s_i^-1, no s_j for j < i)."""
    idx = [x for x in w if x.family == SIGMA]
    if not idx:
        return None
    i = min(x.index for x in idx)
    if any(x.index == i and x.sign < 0 for x in idx):
        return None
    return i


def _rank(x: Letter) -> int:
    if x.family == SIGMA:
        return 1
    return 0 if x.sign < 0 else 2


def is_tidy(w: Iterable[Letter]) -> bool:
    ranks = [_rank(x) for x in w]
    return all(p <= q for p, q in zip(ranks, ranks[1:]))


def _swap_out_of_place(x: Letter, y: Letter) -> list[Letter]:
    """Rewrite an out-of-place pair ``x y`` into an equivalent word."""
    if x.family == A and y.family == SIGMA:
        # a_k b = db_k(b) a_{b^-1[k]}
        return list(double_strand((y,), x.index)) + [a(_transpose(y.index, x.index))]
    if x.family == SIGMA and y.family == A:
        # b a_k^-1 = (a_k b^-1)^-1
        return list(invert(_swap_out_of_place(y.inverse(), x.inverse())))
    # a_k a_j^-1 from the left relation of F
    k, j = x.index, y.index
    if k == j:
        return []
    if k > j:
        return [a(j, -1), a(k + 1)]
    return [a(j + 1, -1), a(k)]


def make_tidy(w: Iterable[Letter]) -> Word:
    """Return an equivalent word of the form (a^-1 letters)(s letters)(a letters).

    Out-of-place pairs are rewritten leftmost first.  The braid block is then
    put in left fraction form when that keeps it s_i-positive; otherwise it is
    only freely reduced.
    """
    cur = list(w)
    i = 0
    while i < len(cur) - 1:
        if _rank(cur[i]) > _rank(cur[i + 1]):
            cur[i : i + 2] = _swap_out_of_place(cur[i], cur[i + 1])
            i = max(i - 1, 0)
        else:
            i += 1
    lo = next((p for p, x in enumerate(cur) if _rank(x) > 0), len(cur))
    hi = next((p for p, x in enumerate(cur) if _rank(x) > 1), len(cur))
    block = free_reduce(cur[lo:hi])
    from .reversing import left_reverse

    num, den, _ = left_reverse(block)
    fraction = invert(num) + den
    if is_sigma_positive(fraction) == is_sigma_positive(block) or is_sigma_positive(block) is None:
        block = fraction
    return free_reduce(Word(cur[:lo]) + block + Word(cur[hi:]))
