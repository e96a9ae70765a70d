"""The linear orders, from trees up to parenthesized braids."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .ld_structure import BRAID, act_coloured, coloured
from .normal_forms import special_decomposition_F, zs_split
from .reversing import left_lcm, left_reverse
from .trees import LEAF, Tree, act_tree, dyads, labels, minimal_input_tree, skeleton, union
from .words import (
    EMPTY,
    Letter,
    Word,
    a,
    double_strand,
    invert,
    sigma,
)

LESS, EQUAL, GREATER = "less", "equal", "greater"
_OUTCOME = {-1: LESS, 0: EQUAL, 1: GREATER}


@dataclass(frozen=True)
class Comparison:
    outcome: str
    certificate: Optional[Word] = None

    @property
    def sign(self) -> int:
        return {LESS: -1, EQUAL: 0, GREATER: 1}[self.outcome]

    def flipped(self) -> Comparison:
        return Comparison(_OUTCOME[-self.sign], self.certificate)

    def to_dict(self) -> dict:
        out = {"outcome": self.outcome}
        if self.certificate is not None:
            out["certificate"] = str(self.certificate)
        return out


def _cmp(sign: int) -> Comparison:
    return Comparison(_OUTCOME[(sign > 0) - (sign < 0)])


# trees


def tree_cmp(t: Tree, t2: Tree) -> Comparison:
    """``t`` is smaller when its dyadic sequence comes later lexicographically."""
    d1, d2 = dyads(t), dyads(t2)
    for x, y in zip(d1, d2):
        if x != y:
            return _cmp(1 if x < y else -1)
    return _cmp(0)


def tree_cmp_recursive(t: Tree, t2: Tree) -> Comparison:
    if t.is_leaf or t2.is_leaf:
        return _cmp((not t.is_leaf) - (not t2.is_leaf))
    first = tree_cmp_recursive(t.left, t2.left)
    return first if first.sign else tree_cmp_recursive(t.right, t2.right)


# piecewise linear maps


@dataclass(frozen=True)
class PLMap:
    """Increasing PL homeomorphism of [0, 1] given by matching breakpoints ``xs -> ys``."""

    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]

    @classmethod
    def from_points(cls, xs: Iterable, ys: Iterable) -> PLMap:
        xs, ys = [Fraction(x) for x in xs], [Fraction(y) for y in ys]
        kx, ky = [xs[0]], [ys[0]]
        for p in range(1, len(xs)):
            if len(kx) >= 2:
                s_old = (ky[-1] - ky[-2]) / (kx[-1] - kx[-2])
                if (ys[p] - ky[-1]) / (xs[p] - kx[-1]) == s_old:
                    kx[-1], ky[-1] = xs[p], ys[p]
                    continue
            kx.append(xs[p])
            ky.append(ys[p])
        return cls(tuple(kx), tuple(ky))

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        return self.xs

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple((self.ys[p + 1] - self.ys[p]) / (self.xs[p + 1] - self.xs[p]) for p in range(len(self.xs) - 1))

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        for p in range(len(self.xs) - 1):
            if self.xs[p] <= x <= self.xs[p + 1]:
                return self.ys[p] + (x - self.xs[p]) * (self.ys[p + 1] - self.ys[p]) / (self.xs[p + 1] - self.xs[p])
        raise ValueError(f"{x} outside [0, 1]")

    def inverse(self) -> PLMap:
        return PLMap(self.ys, self.xs)

    def then(self, other: PLMap) -> PLMap:
        """The map ``other ∘ self``."""
        pts = sorted(set(self.xs) | {self.inverse()(y) for y in other.xs})
        return PLMap.from_points(pts, [other(self(x)) for x in pts])

    def is_identity(self) -> bool:
        return self.xs == self.ys


IDENTITY = PLMap((Fraction(0), Fraction(1)), (Fraction(0), Fraction(1)))


def _require_a_word(*ws: Word) -> None:
    for w in ws:
        if not w.is_a_word:
            raise ValueError(f"expected an a-word, got {w}")


def homeo_of(f: Iterable[Letter]) -> PLMap:
    """The dyadic PL map of an a-word: ``Dyad(t)`` onto ``Dyad(t • f)``."""
    f = Word(f)
    _require_a_word(f)
    t = minimal_input_tree(f)
    return PLMap.from_points(dyads(t), dyads(act_tree(t, f)))


def cmp_F_derivative(f: Iterable[Letter], f2: Iterable[Letter]) -> Comparison:
    f, f2 = Word(f), Word(f2)
    _require_a_word(f, f2)
    for s in homeo_of(invert(f) + f2).slopes:
        if s != 1:
            return _cmp(-1 if s < 1 else 1)
    return _cmp(0)


def cmp_F_special(f: Iterable[Letter], f2: Iterable[Letter]) -> Comparison:
    """Lexicographic comparison of special decompositions (positive a-words)."""
    t1 = list(special_decomposition_F(f).trees)
    t2 = list(special_decomposition_F(f2).trees)
    n = max(len(t1), len(t2))
    t1 += [LEAF] * (n - len(t1))
    t2 += [LEAF] * (n - len(t2))
    for x, y in zip(t1, t2):
        c = tree_cmp(x, y)
        if c.sign:
            return c
    return _cmp(0)


def cmp_F(f: Iterable[Letter], f2: Iterable[Letter]) -> Comparison:
    f, f2 = Word(f), Word(f2)
    _require_a_word(f, f2)
    if f.is_positive and f2.is_positive:
        return cmp_F_special(f, f2)
    return cmp_F_derivative(f, f2)


# braids: handle reduction


class HandleBudgetExceeded(RuntimeError):
    pass


def _find_handle(w: list[int], start: int) -> Optional[tuple[int, int]]:
    for j in range(start, len(w)):
        i = abs(w[j])
        for k in range(j - 1, -1, -1):
            m = abs(w[k])
            if m < i:
                break
            if m == i:
                if w[k] == -w[j]:
                    return k, j
                break
    return None


def handle_reduce(b: Iterable[Letter], budget: int = 10**6) -> Word:
    """Reduce a braid word until it has no handle; the result is empty, s_i-positive or s_i-negative."""
    b = Word(b)
    if not b.is_sigma_word:
        raise ValueError(f"expected a braid word, got {b}")
    w = [x.index * x.sign for x in b]
    start = 0
    for _ in range(budget):
        found = _find_handle(w, start)
        if found is None:
            return Word(sigma(abs(x), 1 if x > 0 else -1) for x in w)
        k, j = found
        e, i = (1 if w[k] > 0 else -1), abs(w[k])
        inner = []
        for x in w[k + 1 : j]:
            if abs(x) == i + 1:
                d = 1 if x > 0 else -1
                inner += [-e * (i + 1), d * i, e * (i + 1)]
            else:
                inner.append(x)
        w[k : j + 1] = inner
        start = k
    raise HandleBudgetExceeded(f"handle reduction gave up after {budget} steps")


def braid_sign(b: Iterable[Letter]) -> int:
    """+1 if ``b`` is s-positive, -1 if s-negative, 0 if trivial."""
    r = handle_reduce(b)
    if not r:
        return 0
    i = min(x.index for x in r)
    return next(x.sign for x in r if x.index == i)


def cmp_B(b: Iterable[Letter], b2: Iterable[Letter]) -> Comparison:
    b, b2 = Word(b), Word(b2)
    for w in (b, b2):
        if not w.is_sigma_word:
            raise ValueError(f"expected a braid word, got {w}")
    return _cmp(-braid_sign(invert(b) + b2))


# parenthesized braids


def cmp_plus(x: Iterable[Letter], x2: Iterable[Letter]) -> Comparison:
    p, q = zs_split(x), zs_split(x2)
    first = cmp_B(p.braid, q.braid)
    return first if first.sign else cmp_F(p.thompson, q.thompson)


def cmp(x: Iterable[Letter], x2: Iterable[Letter]) -> Comparison:
    """Compare two elements; non-F differences come with a tidy s_i-positive certificate.

    The certificate represents ``smaller^-1 · larger``.
    """
    x, x2 = Word(x), Word(x2)
    u, v, _ = left_reverse(invert(x) + x2)
    p, q = zs_split(u), zs_split(v)
    middle = invert(p.braid) + q.braid
    s = braid_sign(middle)
    if s == 0:
        return cmp_F(p.thompson, q.thompson)
    pos = handle_reduce(middle if s > 0 else invert(middle))
    if s > 0:
        cert = invert(p.thompson) + pos + q.thompson
    else:
        cert = invert(q.thompson) + pos + p.thompson
    return Comparison(LESS if s > 0 else GREATER, cert)


def conj_by_a(k: int, i: int, p: int) -> tuple[int, int, int]:
    """Return ``(e, i', k')`` with ``a_k D a_k^-1 = a_{k'}^-e D' a_{k'}^e``.

    Here ``D = db_i^p db_{i+1}^p(s_i)`` (``p + 1`` strands over ``p + 1`` strands)
    and ``D'`` is the same shape at index ``i'`` with ``p + e`` doublings.
    """
    if min(k, i) < 1 or p < 0:
        raise ValueError("indices must be positive and p non-negative")
    if i <= k <= i + p:
        return 1, i, k + p + 2
    if i + p + 1 <= k <= i + 2 * p + 1:
        return 1, i, k - p - 1
    if k < i:
        return 0, i + 1, k
    return 0, i, k


def conj_by_a_word(k: int, i: int, p: int) -> Word:
    """The right-hand side ``a_{k'}^-e D' a_{k'}^e`` of ``conj_by_a``."""
    e, i2, k2 = conj_by_a(k, i, p)
    return Word((a(k2, -1),) * e) + _doubled_crossing(i2, p + e) + Word((a(k2),) * e)


def _doubled_crossing(i: int, p: int) -> Word:
    w = Word((sigma(i),))
    for _ in range(p):
        w = double_strand(w, i + 1)
    for _ in range(p):
        w = double_strand(w, i)
    return w


def colourings_for(w: Iterable[Letter], w2: Iterable[Letter]) -> tuple[Tree, Tree]:
    """Coloured trees ``t • w`` and ``t • w2`` for a common special-braid coloured source ``t``.

    Both words are left-reversed to ``u^-1 v``; a left common multiple ``c u = c2 u2``
    gives ``t = T • c u`` with ``t • w = T • c v`` for a trivially coloured tree ``T``.
    """
    u, v, _ = left_reverse(w)
    u2, v2, _ = left_reverse(w2)
    c, c2 = left_lcm(u, u2)
    base = union(minimal_input_tree(c + v), minimal_input_tree(c2 + v2))
    base = coloured(union(base, union(minimal_input_tree(c + u), minimal_input_tree(c2 + u2))), EMPTY)
    return act_coloured(base, c + v, BRAID), act_coloured(base, c2 + v2, BRAID)


def order_via_colouring(w: Iterable[Letter], w2: Iterable[Letter]) -> Comparison:
    t1, t2 = colourings_for(w, w2)
    for x, y in zip(labels(t1), labels(t2)):
        c = cmp_B(x, y)
        if c.sign:
            return c
    return tree_cmp(skeleton(t1), skeleton(t2))
