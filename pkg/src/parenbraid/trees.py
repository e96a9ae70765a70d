"""Binary trees with their dyadic positions, and the action of words on them.

Leaves may carry a label.  The action moves subtrees around without looking
at labels, except that a crossing may rewrite the labels of the strand block
passing under (see ``act_tree``); this is how coloured trees are handled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Optional

from .words import A, Letter

Position = tuple[int, ...]
Address = tuple[int, ...]


@dataclass(frozen=True)
class Tree:
    left: Optional[Tree] = None
    right: Optional[Tree] = None
    label: Any = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __str__(self) -> str:
        if self.is_leaf:
            return "."
        return f"({self.left}{self.right})"

    def __repr__(self) -> str:
        return f"Tree({str(self)!r})"


LEAF = Tree()


def leaf(label: Any = None) -> Tree:
    return LEAF if label is None else Tree(label=label)


def node(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def vine(n: int) -> Tree:
    """Right vine with ``n + 1`` leaves."""
    return from_dec([LEAF] * n)


def size(t: Tree) -> int:
    """Number of leaves."""
    return 1 if t.is_leaf else size(t.left) + size(t.right)


def leaves(t: Tree) -> list[Tree]:
    out: list[Tree] = []
    stack = [t]
    while stack:
        cur = stack.pop()
        if cur.is_leaf:
            out.append(cur)
        else:
            stack.append(cur.right)
            stack.append(cur.left)
    return out


def labels(t: Tree) -> list:
    return [x.label for x in leaves(t)]


def skeleton(t: Tree) -> Tree:
    if t.is_leaf:
        return LEAF
    return Tree(skeleton(t.left), skeleton(t.right))


def relabel(t: Tree, values: Iterable) -> Tree:
    it = iter(values)

    def go(s: Tree) -> Tree:
        if s.is_leaf:
            return Tree(label=next(it))
        left = go(s.left)
        return Tree(left, go(s.right))

    return go(t)


def map_labels(t: Tree, fn: Callable[[Any], Any]) -> Tree:
    if t.is_leaf:
        return Tree(label=fn(t.label))
    return Tree(map_labels(t.left, fn), map_labels(t.right, fn))


def all_trees(n: int) -> Iterator[Tree]:
    """All trees with ``n`` leaves."""
    if n == 1:
        yield LEAF
        return
    for k in range(1, n):
        for left in all_trees(k):
            for right in all_trees(n - k):
                yield Tree(left, right)


# right decompositions


def dec(t: Tree) -> tuple[list[Tree], Tree]:
    """Return the factors ``(t_1, ..., t_n)`` with ``t = t_1(t_2(...(t_n x)))`` and the final leaf ``x``."""
    factors = []
    while not t.is_leaf:
        factors.append(t.left)
        t = t.right
    return factors, t


def from_dec(factors: Iterable[Tree], tail: Tree = LEAF) -> Tree:
    out = tail
    for f in reversed(list(factors)):
        out = Tree(f, out)
    return out


# the action


class PartialActionError(ValueError):
    """The action of a letter on a tree is undefined.

    ``position`` is 1-based.  ``leaf_label`` is the label of the leaf that must
    be expanded for the step to become defined.
    """

    def __init__(self, position: int, letter: Letter, reason: str, leaf_label: Any = None):
        super().__init__(f"action undefined at letter {position} ({letter}): {reason}")
        self.position = position
        self.letter = letter
        self.leaf_label = leaf_label


Crossing = Callable[[Tree, Tree], Tree]


def act_tree(
    t: Tree,
    w: Iterable[Letter],
    cross: Optional[Crossing] = None,
    uncross: Optional[Crossing] = None,
) -> Tree:
    """Act on ``t`` by the letters of ``w`` from left to right.

    ``cross(ti, tj)`` returns the block ``tj`` as it emerges from passing under
    ``ti`` on a positive crossing; ``uncross`` undoes it.  By default labels are
    carried along unchanged.
    """
    factors, tail = dec(t)
    for pos, x in enumerate(w, start=1):
        i = x.index - 1
        if x.family == A and x.sign < 0:
            if len(factors) <= i:
                raise PartialActionError(pos, x, "too few factors", tail.label)
            f = factors[i]
            if f.is_leaf:
                raise PartialActionError(pos, x, "factor is a leaf", f.label)
            factors[i : i + 1] = [f.left, f.right]
            continue
        if len(factors) <= i + 1:
            raise PartialActionError(pos, x, "too few factors", tail.label)
        left, right = factors[i], factors[i + 1]
        if x.family == A:
            factors[i : i + 2] = [Tree(left, right)]
        elif x.sign > 0:
            factors[i : i + 2] = [cross(left, right) if cross else right, left]
        else:
            if cross and uncross is None:
                raise ValueError("inverse crossing needs an inverse colour operation")
            factors[i : i + 2] = [right, uncross(right, left) if uncross else left]
    return from_dec(factors, tail)


def minimal_input_tree(w: Iterable[Letter]) -> Tree:
    """Smallest tree (by node set) on which ``w`` acts."""
    w = tuple(w)
    t = LEAF
    while True:
        labelled = relabel(t, range(size(t)))
        try:
            act_tree(labelled, w)
            return t
        except PartialActionError as exc:
            t = split_leaf(t, exc.leaf_label)


def split_leaf(t: Tree, k: int) -> Tree:
    """Replace the ``k``-th leaf (0-based, left to right) by a caret."""
    counter = [0]

    def go(s: Tree) -> Tree:
        if s.is_leaf:
            hit = counter[0] == k
            counter[0] += 1
            return Tree(LEAF, LEAF) if hit else s
        left = go(s.left)
        return Tree(left, go(s.right))

    return go(t)


# positions and dyadics


def position_to_dyadic(s: Iterable[int]) -> Fraction:
    s = tuple(s)
    if not s or s[0] < 1 or any(x < 0 for x in s):
        raise ValueError(f"not a position: {s}")
    bits = "1" * (s[0] - 1) + "".join("0" + "1" * x for x in s[1:])
    return Fraction(int(bits, 2), 2 ** len(bits)) if bits else Fraction(0)


def dyadic_to_position(d: Fraction) -> Position:
    d = Fraction(d)
    if not 0 <= d < 1 or d.denominator & (d.denominator - 1):
        raise ValueError(f"not a dyadic number in [0, 1): {d}")
    e = d.denominator.bit_length() - 1
    bits = format(d.numerator, "b").zfill(e) if e else ""
    head = len(bits) - len(bits.lstrip("1"))
    rest = bits[head + 1 :] if head < len(bits) else None
    if rest is None:
        return (head + 1,)
    return (head + 1,) + tuple(len(run) for run in rest.split("0"))


def dyads(t: Tree) -> list[Fraction]:
    if t.is_leaf:
        return [Fraction(0), Fraction(1)]
    half = Fraction(1, 2)
    return [x * half for x in dyads(t.left)] + [half + x * half for x in dyads(t.right)[1:]]


def tree_positions(t: Tree) -> tuple[list[Fraction], list[Position]]:
    d = dyads(t)
    return d, [dyadic_to_position(x) for x in d[:-2]]


def tree_from_dyads(d: Iterable[Fraction]) -> Tree:
    d = sorted(set(Fraction(x) for x in d))
    if not d or d[0] != 0 or d[-1] != 1:
        raise ValueError("dyadic set must contain 0 and 1")
    if len(d) == 2:
        return LEAF
    half = Fraction(1, 2)
    if half not in d:
        raise ValueError("dyadic set is not realized by a tree")
    return Tree(tree_from_dyads(2 * x for x in d if x <= half), tree_from_dyads(2 * x - 1 for x in d if x >= half))


def tree_from_positions(positions: Iterable[Iterable[int]]) -> Tree:
    ps = {tuple(p) for p in positions}
    n = max((p[0] for p in ps if len(p) == 1), default=0)
    d = {position_to_dyadic(p) for p in ps} | {position_to_dyadic((n + 1,)), Fraction(1)}
    t = tree_from_dyads(d)
    if set(tree_positions(t)[1]) != ps:
        raise ValueError("position set is not realized by a tree")
    return t


# addresses


def _nodes(t: Tree, addr: Address) -> Iterator[tuple[Address, Tree]]:
    yield addr, t
    if not t.is_leaf:
        yield from _nodes(t.left, addr + (1,))
        yield from _nodes(t.right, addr[:-1] + (addr[-1] + 1,))


def nodes(t: Tree) -> list[tuple[Address, Tree]]:
    """All nodes with their addresses, in prefix order."""
    return list(_nodes(t, (1,)))


def addresses(t: Tree) -> set[Address]:
    return {adr for adr, _ in _nodes(t, (1,))}


def leaf_addresses(t: Tree) -> list[Address]:
    return [adr for adr, s in _nodes(t, (1,)) if s.is_leaf]


def includes(big: Tree, small: Tree) -> bool:
    """Node-set inclusion ``small ⊆ big``."""
    return addresses(small) <= addresses(big)


def _moves(addr: Address) -> list[str]:
    if not addr or any(x < 1 for x in addr):
        raise ValueError(f"not an address: {addr}")
    out = ["R"] * (addr[0] - 1)
    for x in addr[1:]:
        out += ["L"] + ["R"] * (x - 1)
    return out


def subtree_at(t: Tree, addr: Address) -> Optional[Tree]:
    for m in _moves(addr):
        if t.is_leaf:
            return None
        t = t.left if m == "L" else t.right
    return t


def grow_to(t: Tree, addr: Address) -> Tree:
    """Smallest tree containing ``t`` and a node at ``addr``."""

    def go(s: Tree, moves: list[str]) -> Tree:
        if not moves:
            return s
        if s.is_leaf:
            s = Tree(LEAF, LEAF)
        if moves[0] == "L":
            return Tree(go(s.left, moves[1:]), s.right)
        return Tree(s.left, go(s.right, moves[1:]))

    return go(t, _moves(addr))


def union(t1: Tree, t2: Tree) -> Tree:
    if t1.is_leaf:
        return t2
    if t2.is_leaf:
        return t1
    return Tree(union(t1.left, t2.left), union(t1.right, t2.right))
