"""Braid diagrams of a word acting on a tree, rendered as SVG or ASCII.

Strands start at the dyadic positions of the tree (every leaf except the
last one).  Row ``r`` shows the positions after ``r`` letters; a crossing row
exchanges two blocks of strands and an ``a`` row rescales them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .trees import Tree, act_tree, dec, dyads, labels, relabel, size
from .words import A, Letter, Word

WIDTH = 800
MARGIN = 40
ROW = 40
HALO = 6
FORMATS = ("svg", "ascii")


@dataclass(frozen=True)
class Crossing:
    row: int
    over: tuple[int, ...]
    under: tuple[int, ...]


@dataclass(frozen=True)
class DiagramLayout:
    """``rows[r][k]`` is the x-coordinate of strand ``k`` after ``r`` letters."""

    word: Word
    rows: tuple[tuple[Fraction, ...], ...]
    crossings: tuple[Crossing, ...]

    @property
    def strands(self) -> int:
        return len(self.rows[0])


def _block_labels(t: Tree, i: int) -> tuple[int, ...]:
    factors, _ = dec(t)
    return tuple(labels(factors[i - 1]))


def layout(t: Tree, w: Iterable[Letter]) -> DiagramLayout:
    """Positions of every strand on every row; raises PartialActionError when undefined."""
    w = Word(w)
    n = size(t)
    cur = relabel(t, range(n))
    act_tree(cur, w)  # fail before doing any work when the action is undefined

    def xs(s: Tree) -> tuple[Fraction, ...]:
        where = dict(zip(labels(s), dyads(s)))
        return tuple(where[k] for k in range(n - 1))

    rows = [xs(cur)]
    crossings = []
    for r, x in enumerate(w):
        if x.family != A:
            hi, lo = _block_labels(cur, x.index), _block_labels(cur, x.index + 1)
            over, under = (hi, lo) if x.sign > 0 else (lo, hi)
            crossings.append(Crossing(r, _strands(over, n), _strands(under, n)))
        cur = act_tree(cur, (x,))
        rows.append(xs(cur))
    return DiagramLayout(w, tuple(rows), tuple(crossings))


def _strands(block: tuple[int, ...], n: int) -> tuple[int, ...]:
    return tuple(k for k in block if k < n - 1)


def render_diagram(t: Tree, w: Iterable[Letter], fmt: str = "svg") -> bytes:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    lay = layout(t, w)
    text = render_svg(lay) if fmt == "svg" else render_ascii(lay)
    return text.encode("utf-8")


# svg


def _num(v: Fraction) -> str:
    # dyadic coordinates scaled by 720 are exact decimals
    s = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return s or "0"


def _px(d: Fraction) -> Fraction:
    return MARGIN + (WIDTH - 2 * MARGIN) * d


def _py(r: int) -> Fraction:
    return Fraction(MARGIN + ROW * r)


def _line(x1, y1, x2, y2, stroke: str, width: int, extra: str = "") -> str:
    return (
        f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
        f'stroke="{stroke}" stroke-width="{width}"{extra}/>'
    )


def render_svg(lay: DiagramLayout) -> str:
    height = ROW * len(lay.word) + 2 * MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}">',
        f'<rect x="0.5" y="0.5" width="{WIDTH - 1}" height="{height - 1}" fill="white" stroke="black"/>',
    ]
    over_rows = {c.row: c for c in lay.crossings}
    for r, x in enumerate(lay.word):
        y0, y1 = _py(r), _py(r + 1)
        if x.family == A:
            mid = (y0 + y1) / 2
            out.append(_line(_px(Fraction(0)), mid, _px(Fraction(1)), mid, "grey", 1, ' stroke-dasharray="4 4"'))
        out.append(
            f'<text x="{WIDTH - MARGIN + 6}" y="{_num((y0 + y1) / 2 + 4)}" font-size="12" '
            f'font-family="monospace" fill="grey">{x}</text>'
        )
        over = set(over_rows[r].over) if r in over_rows else set()
        segs = [(k, lay.rows[r][k], lay.rows[r + 1][k]) for k in range(lay.strands)]
        for k, a0, a1 in segs:
            if k not in over:
                out.append(_line(_px(a0), y0, _px(a1), y1, "black", 2))
        for k, a0, a1 in segs:
            if k in over:
                out.append(_line(_px(a0), y0, _px(a1), y1, "white", HALO))
                out.append(_line(_px(a0), y0, _px(a1), y1, "black", 2))
    if not lay.word:
        for k in range(lay.strands):
            d = _px(lay.rows[0][k])
            out.append(_line(d, _py(0), d, _py(0) + ROW / 2, "black", 2))
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ascii


def render_ascii(lay: DiagramLayout) -> str:
    """Monospaced drawing; columns are the ranks of the x-coordinates that occur."""
    values = sorted({v for row in lay.rows for v in row})
    col = {v: 2 * k for k, v in enumerate(values)}
    width = max(1, 2 * len(values) - 1)
    lines = []

    def rail(row: tuple[Fraction, ...]) -> str:
        cells = [" "] * width
        for v in row:
            cells[col[v]] = "|"
        return "".join(cells)

    over_rows = {c.row: set(c.over) for c in lay.crossings}
    lines.append(rail(lay.rows[0]))
    for r, x in enumerate(lay.word):
        start = [col[v] for v in lay.rows[r]]
        end = [col[v] for v in lay.rows[r + 1]]
        steps = max([abs(e - s) for s, e in zip(start, end)] + [2]) - 1
        over = over_rows.get(r, set())
        for h in range(1, steps + 1):
            cells = [" "] * width
            # under strands first so the over strands overwrite them
            for k in sorted(range(lay.strands), key=lambda k: k in over):
                s, e = start[k], end[k]
                p = s + round(Fraction((e - s) * h, steps + 1))
                cells[p] = "|" if e == s else ("\\" if e > s else "/")
            tag = f"  {x}" if h == 1 else ""
            lines.append(("".join(cells) + tag).rstrip())
        lines.append(rail(lay.rows[r + 1]))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def final_positions(t: Tree, w: Iterable[Letter]) -> list[Fraction]:
    """Sorted x-coordinates of the last row."""
    return sorted(layout(t, w).rows[-1])

