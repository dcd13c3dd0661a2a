"""Command-line front end.

Inputs are files (``-`` reads stdin).  A polytope file may also carry
``"colors"`` and ``"rank"`` keys; ``color`` emits such a bundle so that
``gen | color - | present - | h1 -`` works as a pipeline.

Exit codes: 0 success, 1 invalid input, 2 internal/post-check failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import charmap, cover, morse, polytope
from .pi1 import (
    CapExceeded,
    PostCheckError,
    abelianization,
    count_homs,
    minimal_presentation,
    parse_presentation,
    target_group,
)
from .pi1.presentation import PresentationError

METHODS = ("cw", "wu-yu", "minimal")
INPUT_ERRORS = (polytope.PolytopeError, charmap.CharMapError, morse.OrderError,
                PresentationError, OSError, ValueError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


class Inputs:
    """Polytope plus optional colors/order, resolved from files or a bundle."""

    def __init__(self, args):
        self.text = _read(args.polytope)
        self.P = polytope.parse_polytope(self.text)
        bundle = json.loads(self.text)
        self.digests = {"polytope": _digest(json.dumps(self.P.to_dict(), sort_keys=True))}
        self.colors = None
        colors_path = getattr(args, "colors", None)
        if colors_path:
            self.colors = charmap.parse_charmap(_read(colors_path))
        elif "colors" in bundle:
            self.colors = charmap.parse_charmap(json.dumps({"colors": bundle["colors"]}))
        if self.colors is not None:
            self.digests["colors"] = _digest(json.dumps(list(self.colors)))
        self._order = None
        order_path = getattr(args, "order", None)
        if order_path:
            self._order = morse.parse_order(self.P, _read(order_path))
        elif "rank" in bundle:
            self._order = morse.order_from_rank(self.P, bundle["rank"])

    def need_colors(self):
        if self.colors is None:
            raise charmap.CharMapError("no characteristic map: pass --colors or pipe through 'color'")
        problems = charmap.validate_charmap(self.P, self.colors)
        if problems:
            raise charmap.CharMapError("; ".join(problems))
        return self.colors

    @property
    def order(self):
        if self._order is None:
            self._order = morse.default_order(self.P)
        self.digests["order"] = _digest(json.dumps(list(self._order.rank)))
        return self._order


def _presentation(inp, method, simplify=False):
    colors = inp.need_colors()
    cert = None
    if method == "cw":
        pres = cover.cw_presentation(inp.P, colors, order=inp.order)
    elif method == "wu-yu":
        pres = cover.wu_yu_presentation(inp.P, colors, inp.order.by_rank[0])
    else:
        res = minimal_presentation(inp.P, colors, inp.order)
        pres, cert = res.presentation, res.certificate
    capped = False
    if simplify:
        s = cover.simplify(pres)
        pres, capped = s.presentation, not s.complete
    return pres, cert, capped


def _hom_counts(pres, targets, cap):
    out = {}
    for name in targets:
        try:
            out[name] = count_homs(pres, target_group(name), cap)
        except CapExceeded:
            out[name] = None
    return out


def _base_report(inp):
    P = inp.P
    rep = {
        "f_vector": list(polytope.f_vector(P)),
        "h_vector": list(polytope.h_vector(P)),
        "belts": {"3": len(polytope.find_belts(P, 3)), "4": len(polytope.find_belts(P, 4))},
        "flag": polytope.is_flag(P),
        "pogorelov": polytope.is_pogorelov(P),
        "genus": cover.heegaard_report(P).to_dict(),
    }
    if inp.colors is not None and not charmap.validate_charmap(P, inp.colors):
        rep["orientable"] = charmap.is_orientable(P, inp.colors)
    return rep


def cmd_gen(args, out):
    P = polytope.build(args.shape)
    for v in args.truncate or []:
        P = polytope.truncate_vertex(P, v)
    text = P.to_json()
    return {"polytope": P.to_dict()}, text


def cmd_validate(args, out):
    inp = Inputs(args)
    rep = _base_report(inp)
    lines = ["polytope ok: f = %s" % (tuple(rep["f_vector"]),)]
    if inp.colors is not None:
        problems = charmap.validate_charmap(inp.P, inp.colors)
        if problems:
            raise charmap.CharMapError("; ".join(problems))
        lines.append("colors ok: %s" % ("orientable" if rep["orientable"] else "nonorientable"))
    if inp._order is not None:
        lines.append("order ok")
        inp.order
    rep["inputs"] = inp.digests
    return rep, "\n".join(lines)


def cmd_fvector(args, out):
    inp = Inputs(args)
    rep = _base_report(inp)
    rep["inputs"] = inp.digests
    return rep, "f = %s\nh = %s" % (tuple(rep["f_vector"]), tuple(rep["h_vector"]))


def cmd_belts(args, out):
    inp = Inputs(args)
    belts = polytope.find_belts(inp.P, args.k)
    rep = _base_report(inp)
    rep["inputs"] = inp.digests
    rep["belt_list"] = [list(b) for b in belts]
    text = "%d %d-belt(s)" % (len(belts), args.k)
    if belts:
        text += "\n" + "\n".join(" ".join(map(str, b)) for b in belts)
    return rep, text


def cmd_color(args, out):
    inp = Inputs(args)
    palette = charmap.LINEAR_PALETTE if args.linear else charmap.ORIENTABLE_PALETTE
    colors = charmap.find_coloring(inp.P, palette)
    if colors is None:
        raise charmap.CharMapError("no proper coloring with palette %s" % (palette,))
    bundle = inp.P.to_dict()
    bundle["colors"] = list(colors)
    return {"polytope": inp.P.to_dict(), "colors": list(colors)}, json.dumps(bundle)


def cmd_present(args, out):
    inp = Inputs(args)
    pres, cert, capped = _presentation(inp, args.method, args.simplify)
    rep = _base_report(inp)
    rep.update(inputs=inp.digests, method=args.method, presentation=pres.to_text(),
               abelianization=abelianization(pres).to_dict(), simplify_capped=capped)
    if cert is not None:
        rep["certificate"] = cert.to_dict()
    return rep, pres.to_text().rstrip("\n")


def cmd_h1(args, out):
    text = _read(args.polytope)
    try:
        json.loads(text)
    except json.JSONDecodeError:
        pres = parse_presentation(text)
        ab = abelianization(pres)
        return {"inputs": {"presentation": _digest(text)}, "abelianization": ab.to_dict()}, str(ab)
    inp = Inputs(args)
    pres, cert, _ = _presentation(inp, args.method)
    ab = abelianization(pres)
    rep = _base_report(inp)
    rep.update(inputs=inp.digests, method=args.method, abelianization=ab.to_dict())
    if cert is not None:
        rep["certificate"] = cert.to_dict()
    return rep, str(ab)


def cmd_invariants(args, out):
    inp = Inputs(args)
    targets = [t.strip() for t in args.targets.split(",") if t.strip()]
    for t in targets:
        target_group(t)
    methods = METHODS if args.method == "all" else (args.method,)
    rep = _base_report(inp)
    rep["inputs"] = inp.digests
    rep["hom_counts"] = {}
    lines = []
    for m in methods:
        pres, cert, _ = _presentation(inp, m)
        counts = _hom_counts(pres, targets, args.cap)
        rep["hom_counts"][m] = counts
        lines.append("%-8s " % m + "  ".join("%s=%s" % (t, "capped" if c is None else c) for t, c in counts.items()))
    return rep, "\n".join(lines)


def cmd_compare(args, out):
    inp = Inputs(args)
    targets = ["z2", "z2^2", "z2^3"]
    rep = _base_report(inp)
    rep["inputs"] = inp.digests
    abel, homs = {}, {}
    cert = None
    for m in METHODS:
        pres, c, _ = _presentation(inp, m)
        if c is not None:
            cert = c
        abel[m] = abelianization(pres)
        homs[m] = _hom_counts(pres, targets, args.cap)
    rep["abelianization"] = {m: a.to_dict() for m, a in abel.items()}
    rep["hom_counts"] = homs
    rep["certificate"] = cert.to_dict()
    agree = len({str(a) for a in abel.values()}) == 1
    for t in targets:
        vals = {homs[m][t] for m in METHODS}
        if None not in vals and len(vals) != 1:
            agree = False
    rep["agree"] = agree
    lines = ["%-8s H1 = %s" % (m, abel[m]) for m in METHODS]
    for t in targets:
        lines.append("%-8s " % t + "  ".join("%s=%s" % (m, "capped" if homs[m][t] is None else homs[m][t])
                                             for m in METHODS))
    lines.append("certificate: %s" % cert.level)
    lines.append("agree" if agree else "DISAGREE")
    if not agree:
        raise PostCheckError("\n".join(lines))
    return rep, "\n".join(lines)


def cmd_genus(args, out):
    inp = Inputs(args)
    g = cover.heegaard_report(inp.P)
    rep = _base_report(inp)
    rep["inputs"] = inp.digests
    text = ("canonical handlebodies N^%d,%d and N^%d,%d\nreduced canonical genus %d\nminimal genus %d"
            % (g.handlebody_1 + g.handlebody_2 + (g.reduced_genus, g.minimal_genus)))
    return rep, text


def build_parser():
    p = _Parser(prog="smallcover", description="Fundamental groups of 3-dimensional small covers.")
    p.add_argument("--json", action="store_true", help="emit a JSON run report")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in the JSON report")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_inputs(name, help_, order=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("polytope", help="polytope JSON file or '-' for stdin")
        sp.add_argument("--colors", help="characteristic map JSON file")
        if order:
            sp.add_argument("--order", help="vertex order JSON file")
        return sp

    sp = sub.add_parser("gen", help="write a canonical polytope")
    sp.add_argument("--shape", required=True, help="simplex | cube | prism:n | dodecahedron | permutohedron")
    sp.add_argument("--truncate", type=int, action="append", help="truncate this vertex (repeatable)")
    sp.set_defaults(func=cmd_gen)

    with_inputs("validate", "check polytope, colors and order").set_defaults(func=cmd_validate)
    with_inputs("fvector", "f- and h-vectors").set_defaults(func=cmd_fvector)
    sp = with_inputs("belts", "list 3- or 4-belts")
    sp.add_argument("--k", type=int, choices=(3, 4), default=3)
    sp.set_defaults(func=cmd_belts)
    sp = with_inputs("color", "find a proper coloring and emit a bundle", order=False)
    sp.add_argument("--linear", action="store_true", help="use e1, e2, e3 only")
    sp.set_defaults(func=cmd_color)
    sp = with_inputs("present", "print a presentation of pi_1")
    sp.add_argument("--method", choices=METHODS, default="minimal")
    sp.add_argument("--simplify", action="store_true")
    sp.set_defaults(func=cmd_present)
    sp = with_inputs("h1", "abelianization of pi_1 (input may also be a presentation file)")
    sp.add_argument("--method", choices=METHODS, default="minimal")
    sp.set_defaults(func=cmd_h1)
    sp = with_inputs("invariants", "homomorphism counts into small finite groups")
    sp.add_argument("--targets", default="z2,z2^2,z2^3")
    sp.add_argument("--cap", type=int, default=10 ** 7)
    sp.add_argument("--method", choices=METHODS + ("all",), default="all")
    sp.set_defaults(func=cmd_invariants)
    sp = with_inputs("compare", "check that all three presentations agree")
    sp.add_argument("--cap", type=int, default=10 ** 6)
    sp.set_defaults(func=cmd_compare)
    with_inputs("genus", "Heegaard genus numbers", order=False).set_defaults(func=cmd_genus)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, text = args.func(args, out)
    except (PostCheckError, AssertionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    if args.json:
        report = {"command": args.command, **report}
        if args.timing:
            report["seconds"] = round(time.perf_counter() - start, 6)
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
