"""Command line interface.

Exit codes: 0 on success (including negative answers to yes/no questions),
1 when a tree action is undefined, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Optional, Sequence

from .artin import aut_apply
from .diagram import FORMATS, render_diagram
from .ld_structure import DEPTH_CAP, MODES, enumerate_special
from .normal_forms import SpecialDecomposition, decompose_positive, fraction_form, is_pure, zs_split
from .ordering import EQUAL, GREATER, LESS, cmp
from .reversing import cube_condition, left_reverse, right_reverse, word_problem
from .text import ParseError, parse_fword, parse_tree, parse_word
from .trees import PartialActionError, act_tree
from .words import A, SIGMA, Letter, Word

SCHEMA = 1
SYMBOL = {LESS: "<", EQUAL: "=", GREATER: ">"}


def write_atomic(path: str, data: bytes) -> None:
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".parenbraid-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump(doc: dict) -> str:
    return json.dumps({"schema": SCHEMA, **doc}, indent=2, sort_keys=True)


def _decomposition(d: SpecialDecomposition) -> dict:
    return {"factors": [str(z) for z in d.factors], "annotation": d.annotation()}


# subcommands


def cmd_eq(args) -> str:
    w1, w2 = parse_word(args.w1), parse_word(args.w2)
    same = word_problem(w1, w2)
    if args.json:
        return _dump({"equal": same})
    return "equal" if same else "not equal"


def cmd_cmp(args) -> str:
    res = cmp(parse_word(args.w1), parse_word(args.w2))
    if args.json:
        return _dump(res.to_dict())
    out = SYMBOL[res.outcome]
    if res.certificate is not None:
        out += f"\ncertificate: {res.certificate}"
    return out


def cmd_nf(args) -> str:
    w = parse_word(args.word)
    fr = fraction_form(w)
    doc = {
        "word": str(w),
        "fraction": {
            "numerator": str(fr.num),
            "denominator": str(fr.den),
            "f": str(fr.f),
            "beta": str(fr.beta),
            "gamma": str(fr.gamma),
            "g": str(fr.g),
        },
    }
    if w.is_positive:
        zs = zs_split(w)
        doc["zs"] = {"braid": str(zs.braid), "thompson": str(zs.thompson)}
        doc["special"] = _decomposition(decompose_positive(w))
    else:
        doc["special"] = {
            "numerator": _decomposition(decompose_positive(fr.num)),
            "denominator": _decomposition(decompose_positive(fr.den)),
        }
    return _dump(doc)


def cmd_reverse(args) -> str:
    w = parse_word(args.word)
    if args.side == "left":
        u, v, tr = left_reverse(w, trace=True)
        doc = {"side": "left", "kind": "done", "numerator": str(u), "denominator": str(v), "steps": len(tr.steps)}
        text = f"{_inv(u)} {v}".strip() if u else str(v)
    else:
        res = right_reverse(w, trace=True)
        tr = res.trace
        doc = {"side": "right", "kind": res.kind, "steps": res.steps}
        if res.done:
            doc.update(numerator=str(res.numerator), denominator=str(res.denominator))
            text = str(res.result())
        elif res.kind == "stuck":
            doc.update(pair=[str(x) for x in res.stuck_pair], position=res.position)
            text = f"stuck at {res.stuck_pair[0]} {res.stuck_pair[1]} (position {res.position})"
        else:
            text = f"budget exhausted after {res.steps} steps"
    if args.trace:
        write_atomic(args.trace, tr.to_json().encode("utf-8") + b"\n")
    if args.json:
        return _dump(doc)
    return f"{text}\nsteps: {doc['steps']}"


def _inv(u: Word) -> str:
    return " ".join(str(x) for x in u.inverse())


def cmd_act(args) -> str:
    out = act_tree(parse_tree(args.tree), parse_word(args.word))
    return _dump({"tree": str(out)}) if args.json else str(out)


def cmd_aut(args) -> str:
    img = aut_apply(parse_word(args.word), parse_fword(args.on))
    return _dump({"image": str(img)}) if args.json else str(img)


def cmd_draw(args) -> Optional[str]:
    data = render_diagram(parse_tree(args.tree), parse_word(args.word), args.format)
    if args.output in (None, "-"):
        return data.decode("utf-8").rstrip("\n")
    write_atomic(args.output, data)
    return None


def _letters(n: int) -> list[Letter]:
    return [Letter(f, i, 1) for f in (SIGMA, A) for i in range(1, n + 1)]


def cmd_cube(args) -> str:
    letters = _letters(args.max_index)
    total = held = undecided = 0
    failures = []
    for x in letters:
        for y in letters:
            for z in letters:
                total += 1
                res = cube_condition(args.side, x, y, z)
                if res.holds is None:
                    undecided += 1
                elif res.holds:
                    held += 1
                else:
                    failures.append(f"{x} {y} {z}")
    if args.json:
        return _dump(
            {"side": args.side, "triples": total, "holds": held, "undecided": undecided, "failures": failures}
        )
    lines = [f"{args.side} cube condition: {held}/{total} triples hold"]
    if undecided:
        lines.append(f"undecided: {undecided}")
    lines += [f"fails: {f}" for f in failures]
    return "\n".join(lines)


def cmd_pure(args) -> str:
    res = is_pure(parse_word(args.word))
    if args.json:
        return _dump({"pure": res})
    return "pure" if res else "not pure"


def cmd_special(args) -> str:
    en = enumerate_special(args.enumerate, args.mode)
    if args.json:
        return _dump(
            {
                "depth": args.enumerate,
                "mode": args.mode,
                "elements": [{"term": t, "word": str(w)} for t, w in zip(en.terms, en.elements)],
                "collisions": [list(c) for c in en.collisions],
            }
        )
    lines = [f"{t} = {w}" for t, w in zip(en.terms, en.elements)]
    lines += [f"collision: {p} = {q}" for p, q in en.collisions]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parenbraid", description="Compute with parenthesized braids.")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eq", help="decide whether two words are equal")
    s.add_argument("w1")
    s.add_argument("w2")
    s.set_defaults(fn=cmd_eq)

    s = sub.add_parser("cmp", help="compare two words in the linear order")
    s.add_argument("w1")
    s.add_argument("w2")
    s.set_defaults(fn=cmd_cmp)

    s = sub.add_parser("nf", help="fraction, splitting and special decompositions as JSON")
    s.add_argument("word")
    s.set_defaults(fn=cmd_nf)

    s = sub.add_parser("reverse", help="left or right reversing")
    s.add_argument("--side", choices=("left", "right"), default="left")
    s.add_argument("--trace", metavar="FILE", help="write the trace as JSON")
    s.add_argument("word")
    s.set_defaults(fn=cmd_reverse)

    s = sub.add_parser("act", help="act on a tree")
    s.add_argument("--tree", required=True)
    s.add_argument("word")
    s.set_defaults(fn=cmd_act)

    s = sub.add_parser("aut", help="apply the free group automorphism of a word")
    s.add_argument("word")
    s.add_argument("--on", required=True, metavar="XWORD", help='e.g. "x(1) x(2,1)^-1"')
    s.set_defaults(fn=cmd_aut)

    s = sub.add_parser("draw", help="render a diagram")
    s.add_argument("--tree", required=True)
    s.add_argument("--format", choices=FORMATS, default="svg")
    s.add_argument("-o", "--output", help="output file (default: stdout)")
    s.add_argument("word")
    s.set_defaults(fn=cmd_draw)

    s = sub.add_parser("cube", help="check the cube condition on all letter triples")
    s.add_argument("--side", choices=("left", "right"), default="left")
    s.add_argument("--max-index", type=int, default=3)
    s.set_defaults(fn=cmd_cube)

    s = sub.add_parser("pure", help="decide purity")
    s.add_argument("word")
    s.set_defaults(fn=cmd_pure)

    s = sub.add_parser("special", help="enumerate special elements")
    s.add_argument("--enumerate", type=int, required=True, metavar="DEPTH", help=f"depth, at most {DEPTH_CAP}")
    s.add_argument("--mode", choices=MODES, default="both")
    s.set_defaults(fn=cmd_special)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.fn(args)
    except PartialActionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if out is not None:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
