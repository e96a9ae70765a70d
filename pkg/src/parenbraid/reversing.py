"""Subword reversing for the presentation of parenthesized braids.

Left reversing replaces ``x y^-1`` by ``v^-1 u`` whenever ``v x = u y`` is a
defining relation; right reversing replaces ``x^-1 y`` by ``v u^-1`` whenever
``x v = y u`` is one.  Both rewrite the leftmost reducible pair.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .words import A, EMPTY, SIGMA, Letter, Word, a, invert, sigma

DEFAULT_BUDGET = 10**5


def default_budget() -> int:
    raw = os.environ.get("PARENBRAID_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    def __init__(self, steps: int):
        super().__init__(f"right reversing gave up after {steps} steps")
        self.steps = steps


def _w(*letters: Letter) -> Word:
    return Word(letters)


@lru_cache(maxsize=None)
def left_relation(x: Letter, y: Letter) -> tuple[Word, Word]:
    """Return ``(v, u)`` with ``v x = u y`` a defining relation, for positive letters."""
    if x == y:
        return EMPTY, EMPTY
    fx, i, fy, j = x.family, x.index, y.family, y.index
    if fx == SIGMA and fy == SIGMA:
        if abs(i - j) >= 2:
            return _w(y), _w(x)
        return _w(x, y), _w(y, x)
    if fx == A and fy == A:
        if i > j:
            return _w(a(j)), _w(a(i + 1))
        return _w(a(j + 1)), _w(a(i))
    if fx == A:
        v, u = left_relation(y, x)
        return u, v
    # x = s_i, y = a_j
    if j >= i + 2:
        return _w(y), _w(x)
    if j == i + 1:
        return _w(a(i)), _w(sigma(i + 1), sigma(i))
    if j == i:
        return _w(a(i + 1)), _w(sigma(i), sigma(i + 1))
    return _w(y), _w(sigma(i + 1))


@lru_cache(maxsize=None)
def right_relation(x: Letter, y: Letter) -> Optional[tuple[Word, Word]]:
    """Return ``(v, u)`` with ``x v = y u`` a defining relation, or None."""
    if x == y:
        return EMPTY, EMPTY
    fx, i, fy, j = x.family, x.index, y.family, y.index
    if fx == SIGMA and fy == SIGMA:
        if abs(i - j) >= 2:
            return _w(y), _w(x)
        return _w(y, x), _w(x, y)
    if fx == A and fy == A:
        if j >= i + 2:
            return _w(a(j - 1)), _w(x)
        if i >= j + 2:
            return _w(y), _w(a(i - 1))
        return None
    if fx == A:
        found = right_relation(y, x)
        return None if found is None else (found[1], found[0])
    # x = s_k, y = a_m
    k, m = i, j
    if m >= k + 2:
        return _w(y), _w(x)
    if m == k + 1:
        return _w(sigma(k + 1), a(k)), _w(x)
    if m == k:
        return None
    if m == k - 1:
        return _w(sigma(k - 1), a(k)), _w(sigma(k - 1))
    return _w(y), _w(sigma(k - 1))


@dataclass(frozen=True)
class Step:
    position: int
    pair: tuple[Letter, Letter]
    replacement: Word


@dataclass
class Trace:
    side: str
    start: Word
    steps: list[Step] = field(default_factory=list)

    def replay(self) -> Word:
        cur = list(self.start)
        for st in self.steps:
            cur[st.position : st.position + 2] = list(st.replacement)
        return Word(cur)

    def to_json(self) -> str:
        doc = {
            "schema": 1,
            "side": self.side,
            "start": str(self.start),
            "steps": [
                {"position": st.position, "pair": [str(x) for x in st.pair], "replacement": str(st.replacement)}
                for st in self.steps
            ],
            "grid": [_grid_edge(self.side, st) for st in self.steps],
        }
        return json.dumps(doc, indent=2, sort_keys=True)


def _grid_edge(side: str, st: Step) -> dict:
    x, y = st.pair
    if side == "left":
        x, y = x, y.inverse()
        v = [z.inverse() for z in st.replacement if z.sign < 0][::-1]
        u = [z for z in st.replacement if z.sign > 0]
    else:
        x, y = x.inverse(), y
        v = [z for z in st.replacement if z.sign > 0]
        u = [z.inverse() for z in st.replacement if z.sign < 0][::-1]
    return {"x": str(x), "y": str(y), "v": str(Word(v)), "u": str(Word(u))}


def _split_signs(letters: list[Letter]) -> tuple[Word, Word]:
    neg = [x for x in letters if x.sign < 0]
    pos = [x for x in letters if x.sign > 0]
    return invert(neg), Word(pos)


def left_reverse(w: Iterable[Letter], trace: bool = False) -> tuple[Word, Word, Optional[Trace]]:
    """Left-reverse ``w`` to ``u^-1 v``; returns ``(u, v, trace)``."""
    start = Word(w)
    tr = Trace("left", start) if trace else None
    done: list[Letter] = []
    todo = list(reversed(start))
    while todo:
        y = todo.pop()
        if y.sign > 0 or not done or done[-1].sign < 0:
            done.append(y)
            continue
        x = done.pop()
        v, u = left_relation(x, y.inverse())
        rep = invert(v) + u
        if tr is not None:
            tr.steps.append(Step(len(done), (x, y), rep))
        todo.extend(reversed(rep))
    neg, pos = _split_signs(done)
    return neg, pos, tr


@dataclass(frozen=True)
class Outcome:
    kind: str  # "done" | "stuck" | "budget"
    numerator: Optional[Word] = None
    denominator: Optional[Word] = None
    stuck_pair: Optional[tuple[Letter, Letter]] = None
    position: Optional[int] = None
    steps: int = 0
    trace: Optional[Trace] = None

    @property
    def done(self) -> bool:
        return self.kind == "done"

    def result(self) -> Word:
        if not self.done:
            raise ValueError(f"reversing did not finish ({self.kind})")
        return self.numerator + invert(self.denominator)


def right_reverse(w: Iterable[Letter], budget: Optional[int] = None, trace: bool = False) -> Outcome:
    """Right-reverse ``w`` towards ``v u^-1`` with ``v, u`` positive."""
    budget = default_budget() if budget is None else budget
    start = Word(w)
    tr = Trace("right", start) if trace else None
    done: list[Letter] = []
    todo = list(reversed(start))
    steps = 0
    while todo:
        y = todo.pop()
        if y.sign < 0 or not done or done[-1].sign > 0:
            done.append(y)
            continue
        x = done[-1]
        rel = right_relation(x.inverse(), y)
        if rel is None:
            return Outcome("stuck", stuck_pair=(x, y), position=len(done) - 1, steps=steps, trace=tr)
        if steps >= budget:
            return Outcome("budget", steps=steps, trace=tr)
        done.pop()
        steps += 1
        v, u = rel
        rep = v + invert(u)
        if tr is not None:
            tr.steps.append(Step(len(done), (x, y), rep))
        todo.extend(reversed(rep))
    pos = Word(x for x in done if x.sign > 0)
    den = invert(x for x in done if x.sign < 0)
    return Outcome("done", numerator=pos, denominator=den, steps=steps, trace=tr)


@lru_cache(maxsize=65536)
def _equal(w1: Word, w2: Word) -> bool:
    u, v, _ = left_reverse(w1 + invert(w2))
    u2, v2, _ = left_reverse(v + invert(u))
    return not u2 and not v2


def word_problem(w1: Iterable[Letter], w2: Iterable[Letter] = EMPTY) -> bool:
    """Decide whether two words represent the same element."""
    return _equal(Word(w1), Word(w2))


def _require_positive(*ws: Word) -> None:
    for w in ws:
        if not w.is_positive:
            raise ValueError(f"expected a positive word, got {w}")


def left_lcm(u: Iterable[Letter], v: Iterable[Letter]) -> tuple[Word, Word]:
    """Return ``(u', v')`` with ``u' u = v' v`` the least common left multiple."""
    u, v = Word(u), Word(v)
    _require_positive(u, v)
    cu, cv, _ = left_reverse(u + invert(v))
    return cu, cv


def right_lcm(u: Iterable[Letter], v: Iterable[Letter], budget: Optional[int] = None) -> Optional[tuple[Word, Word]]:
    """Return ``(u', v')`` with ``u u' = v v'`` the least common right multiple.

    None means there is no common right multiple; BudgetExceeded means the
    question was left open.
    """
    u, v = Word(u), Word(v)
    _require_positive(u, v)
    out = right_reverse(invert(u) + v, budget)
    if out.kind == "stuck":
        return None
    if out.kind == "budget":
        raise BudgetExceeded(out.steps)
    return out.numerator, out.denominator


def left_quotient(x: Iterable[Letter], w: Iterable[Letter], budget: Optional[int] = None) -> Optional[Word]:
    """Return ``q`` with ``w = x q`` if ``x`` left-divides ``w`` (positive words)."""
    out = right_reverse(invert(x) + Word(w), budget)
    if out.kind == "budget":
        raise BudgetExceeded(out.steps)
    if out.kind == "done" and not out.denominator:
        return out.numerator
    return None


def right_quotient(w: Iterable[Letter], x: Iterable[Letter]) -> Optional[Word]:
    """Return ``q`` with ``w = q x`` if ``x`` right-divides ``w`` (positive words)."""
    c, q, _ = left_reverse(Word(w) + invert(x))
    return q if not c else None


def _candidate_letters(*ws: Word) -> list[Letter]:
    bound = max(max(w.max_index for w in ws), 1) + max(len(w) for w in ws) + 1
    return [sigma(i) for i in range(1, bound + 1)] + [a(i) for i in range(1, bound + 1)]


def gcd(side: str, u: Iterable[Letter], v: Iterable[Letter]) -> Word:
    """Greatest common left (or right) divisor of two positive words."""
    u, v = Word(u), Word(v)
    _require_positive(u, v)
    common: list[Letter] = []
    while u and v:
        for x in _candidate_letters(u, v):
            if side == "left":
                qu, qv = left_quotient((x,), u), left_quotient((x,), v)
            else:
                qu, qv = right_quotient(u, (x,)), right_quotient(v, (x,))
            if qu is not None and qv is not None:
                common.append(x)
                u, v = qu, qv
                break
        else:
            break
    return Word(common) if side == "left" else Word(reversed(common))


@dataclass(frozen=True)
class CubeResult:
    holds: Optional[bool]
    first: object
    second: object = None


def cube_condition(side: str, x: Letter, y: Letter, z: Letter, budget: Optional[int] = None) -> CubeResult:
    """Check the cube condition on a triple of positive letters.

    ``holds`` is None when the right variant ran out of budget.
    """
    if side == "left":
        u1, v1, _ = left_reverse(Word((x, y.inverse(), y, z.inverse())))
        # u1 x = v1 z must be detected by reversing (u1 x)(v1 z)^-1 to the empty word
        c, d, _ = left_reverse(u1 + Word((x, z.inverse())) + invert(v1))
        return CubeResult(not c and not d, (u1, v1), (c, d))
    first = right_reverse(Word((x.inverse(), y, y.inverse(), z)), budget)
    if first.kind == "stuck":
        return CubeResult(True, first)
    if first.kind == "budget":
        return CubeResult(None, first)
    v, u = first.numerator, first.denominator
    second = right_reverse(invert(v) + Word((x.inverse(), z)) + u, budget)
    if second.kind == "budget":
        return CubeResult(None, first, second)
    ok = second.kind == "done" and not second.numerator and not second.denominator
    return CubeResult(ok, first, second)
