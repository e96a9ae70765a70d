"""The defining relations written out by hand, independent of the lookup tables."""

from __future__ import annotations

from parenbraid.words import Word, a, sigma


def _w(*xs):
    return Word(xs)


def relation_instances(max_i: int = 3, reach: int = 5) -> list[tuple[str, Word, Word]]:
    """All relation instances with ``1 <= i <= max_i`` and ``1 <= j <= i + reach``."""
    out = []
    for i in range(1, max_i + 1):
        for j in range(1, i + reach + 1):
            if abs(i - j) >= 2:
                out.append(("ss-far", _w(sigma(i), sigma(j)), _w(sigma(j), sigma(i))))
            if abs(i - j) == 1:
                out.append(("ss-near", _w(sigma(i), sigma(j), sigma(i)), _w(sigma(j), sigma(i), sigma(j))))
            if j < i:
                out.append(("aa", _w(a(j), a(i)), _w(a(i + 1), a(j))))
                out.append(("as-below", _w(a(j), sigma(i)), _w(sigma(i + 1), a(j))))
            if j >= i + 2:
                out.append(("as-above", _w(a(j), sigma(i)), _w(sigma(i), a(j))))
            if j == i + 1:
                out.append(("as-next", _w(a(i), sigma(i)), _w(sigma(i + 1), sigma(i), a(i + 1))))
            if j == i:
                out.append(("as-same", _w(a(i + 1), sigma(i)), _w(sigma(i), sigma(i + 1), a(i))))
    return out


SCHEMAS = ("ss-far", "ss-near", "aa", "as-below", "as-above", "as-next", "as-same")


def _find(w: Word, pattern: Word) -> list[int]:
    n = len(pattern)
    return [p for p in range(len(w) - n + 1) if w[p : p + n] == pattern]


def rewrites(w: Word, max_i: int = 4) -> list[Word]:
    """Every word obtained from ``w`` by one application of a defining relation (either direction)."""
    out = []
    for _, lhs, rhs in relation_instances(max_i, max_i + 2):
        for src, dst in ((lhs, rhs), (rhs, lhs)):
            for p in _find(w, src):
                out.append(w[:p] + dst + w[p + len(src) :])
    return out


def random_rewrite(w: Word, rng, steps: int = 3) -> Word:
    for _ in range(steps):
        options = rewrites(w)
        if not options:
            break
        w = rng.choice(options)
    return w
