"""Command-line interface.

Every subcommand prints a short human-readable report, or with ``--json``
a single envelope object (see ``docs/schema.json``). Exit codes: 0 success,
1 oracle disagreement under ``--verify``, 2 usage error, 3 scope refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .coxeter.groups import EnumerationRefused
from .coxeter.roots import positive_roots
from .coxeter.types import CoxeterLabel, CoxeterType, UnknownTypeError, parse_label, parse_type
from .exact.rational import format_rational, parse_rational

SCHEMA_ID = "coxsupport-envelope/1"

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_SCOPE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class ScopeRefusal(Exception):
    pass


class Disagreement(Exception):
    pass


# -- helpers -------------------------------------------------------------------------


def _q(x) -> str:
    return format_rational(x)


def _rat(text: str, what: str = "parameter") -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, TypeError) as e:
        raise UsageError(f"{what}: {e}") from None


def _parse(text: str) -> tuple[CoxeterLabel | None, CoxeterType]:
    """Irreducible label when there is one, plus the type."""
    try:
        t = parse_type(text)
        parts = [p for p in text.replace("X", "x").replace("*", "x").split("x") if p]
        label = parse_label(parts[0]) if len(parts) == 1 else None
    except UnknownTypeError as e:
        raise UsageError(f"{e}; try A3, B4, D4, E6, F4, H3, I2:8, G2 or a product like A1xA2") from None
    return label, t


def _need_label(label: CoxeterLabel | None, text: str) -> CoxeterLabel:
    if label is None:
        raise UsageError(f"{text} is reducible; this command needs an irreducible type")
    return label


def _params(args) -> Fraction | tuple[Fraction, Fraction] | None:
    c = getattr(args, "c", None)
    c1 = getattr(args, "c1", None)
    c2 = getattr(args, "c2", None)
    if c is not None and (c1 is not None or c2 is not None):
        raise UsageError("give either --c or both --c1 and --c2")
    if c is not None:
        return _rat(c, "--c")
    if (c1 is None) != (c2 is None):
        raise UsageError("--c1 and --c2 must be given together")
    if c1 is not None:
        return (_rat(c1, "--c1"), _rat(c2, "--c2"))
    return None


def _c_json(c):
    if isinstance(c, tuple):
        return [_q(c[0]), _q(c[1])]
    return None if c is None else _q(c)


def _type_json(label, t: CoxeterType) -> dict:
    return {
        "name": label.name if label is not None else t.name,
        "rank": t.rank,
        "degrees": t.degrees(),
        "order": t.order(),
        "irreducible": label is not None,
    }


def _coord(x) -> str:
    if isinstance(x, (int, Fraction)):
        return _q(x)
    return str(x)


# -- commands -----------------------------------------------------------------------


def cmd_degrees(args, label, t):
    from .elliptic import codegrees

    degs = t.degrees()
    res = {
        "degrees": degs,
        "exponents": [d - 1 for d in degs],
        "order": t.order(),
        "reflections": sum(d - 1 for d in degs),
    }
    if label is not None:
        res["codegrees"] = codegrees(label)
    lines = [f"degrees   {' '.join(map(str, degs))}", f"order     {t.order()}",
             f"reflections {res['reflections']}"]
    return res, lines, ["degrees from the catalog"]


def cmd_roots(args, label, t):
    label = _need_label(label, args.type)
    data = positive_roots(label)
    roots = [{"coords": [_coord(x) for x in v], "class": cl} for v, cl in zip(data.roots, data.classes)]
    res = {"count": data.n_pos, "field": data.kind, "roots": roots, "class_counts": data.class_counts()}
    lines = [f"{data.n_pos} positive roots over {data.kind} (simple-root coordinates)"]
    if args.list:
        lines += [f"  [{', '.join(r['coords'])}]  class {r['class']}" for r in roots]
    return res, lines, ["closure of the simple roots under simple reflections"]


def cmd_poincare(args, label, t):
    from .poincare import poincare1, poincare2, poincare_bruteforce

    p1 = poincare1(t)
    res = {"one_variable": [_q(x) for x in p1.coeff_list()]}
    lines = [f"P(q) coefficients: {' '.join(res['one_variable'])}"]
    prov = ["product of q-integers over the degrees"]
    two = None
    if args.two:
        if label is None or label.num_classes() != 2:
            raise UsageError("--two needs an irreducible type with two reflection classes (I2(2m), B_n, F4, G2)")
        two = poincare2(label)
        res["two_variable"] = two.to_string()
        lines.append(f"P(q1,q2) = {two}")
        prov.append("root-height product over positive roots")
    if args.verify:
        if label is None:
            raise UsageError("--verify needs an irreducible type")
        brute = poincare_bruteforce(label, cap=args.cap)
        if brute != p1:
            raise Disagreement("brute-force length count differs from the degree product")
        if two is not None and poincare_bruteforce(label, two_var=True, cap=args.cap) != two.expand():
            raise Disagreement("brute-force two-variable count differs from the product")
        res["verified"] = True
        prov.append("verified against element enumeration")
    return res, lines, prov


def _strata_rows(strata):
    return [{"type": s.name, "codim": s.codimension, "in_support": s.in_support, "note": s.note} for s in strata]


def cmd_support(args, label, t):
    from .mehta import mm_ratio_nonzero
    from . import support as sp

    c = _params(args)
    if c is None:
        raise UsageError("support needs --c or --c1/--c2")
    prov = []
    if isinstance(c, tuple):
        w = _need_label(label, args.type)
        try:
            sp.check_two_parameter_type(w)
        except ValueError as e:
            raise UsageError(str(e)) from None
        strata = sp.support_strata_two(w, c)
        finite = sp.is_finite_dim_two(w, c)
        prov.append("positive-line test on the factored Poincare ratio")
        if args.verify:
            for s in strata:
                a = sp.in_support_two_oracle(w, s.parabolic, c)
                b = mm_ratio_nonzero(w, s.parabolic, c)
                if not (a == b == s.in_support):
                    raise Disagreement(f"stratum {s.name}: line test {s.in_support}, expanded {a}, Gamma {b}")
            prov.append("verified by expanded-polynomial restriction and Gamma pole count")
    else:
        w = label if label is not None else t
        strata = sp.support_strata(w, c)
        finite = sp.is_finite_dim_equal(w, c)
        prov.append("a-count comparison")
        if args.verify:
            for s in strata:
                a = sp.in_support_cyclotomic(w, s.parabolic, c)
                b = mm_ratio_nonzero(w, s.parabolic, c) if c > 0 and c.denominator > 1 else True
                if not (a == b == s.in_support):
                    raise Disagreement(f"stratum {s.name}: a-count {s.in_support}, cyclotomic {a}, Gamma {b}")
            prov.append("verified by cyclotomic evaluation and Gamma pole count")
    rows = _strata_rows(strata)
    res = {"c": _c_json(c), "strata": rows, "finite_dim": finite}
    lines = [f"{'stratum':<24} codim  in support"]
    lines += [f"{r['type']:<24} {r['codim']:>5}  {'yes' if r['in_support'] else 'no'}"
              + (f"   ({r['note']})" if r["note"] else "") for r in rows]
    lines.append(f"finite-dim: {'true' if finite else 'false'}")
    return res, lines, prov


def cmd_finite_dim(args, label, t):
    from . import support as sp

    c = _params(args)
    w = label if label is not None else t
    if c is None:
        dens = sp.finite_dim_denominators(w, args.m_max)
        res = {"denominators": dens}
        return res, [f"denominators m with L_(1/m) finite: {dens}"], ["a-count against maximal parabolics"]
    if isinstance(c, tuple):
        w = _need_label(label, args.type)
        try:
            finite = sp.is_finite_dim_two(w, c)
        except ValueError as e:
            raise UsageError(str(e)) from None
        prov = ["every proper stratum killed by a positive line"]
    else:
        finite = sp.is_finite_dim_equal(w, c)
        prov = ["a-count against maximal parabolics"]
    return {"c": _c_json(c), "finite_dim": finite}, [f"finite-dim: {'true' if finite else 'false'}"], prov


def cmd_sigma(args, label, t):
    from .sigma import sigma_closed_form, sigma_member
    from .support import is_finite_dim_two

    w = _need_label(label, args.type)
    try:
        desc = sigma_closed_form(w)
    except ValueError as e:
        raise UsageError(str(e)) from None
    c = _params(args)
    res = {"lines": list(desc.lines), "points": list(desc.points)}
    lines = ["lines:"] + [f"  {x}" for x in desc.lines] + ["points:"] + [f"  {x}" for x in desc.points]
    prov = ["closed-form classification"]
    if c is not None:
        if not isinstance(c, tuple):
            c = (c, c)
        member, wit = sigma_member(w, c)
        res["c"] = _c_json(c)
        res["member"] = member
        res["witness"] = wit.family if wit else None
        res["witness_detail"] = wit.describe() if wit else None
        lines.append(f"({_q(c[0])}, {_q(c[1])}): {'member' if member else 'not a member'}"
                     + (f", family {wit.describe()}" if wit else ""))
        if args.verify:
            if is_finite_dim_two(w, c) != member:
                raise Disagreement("closed form and positive-line algorithm disagree")
            res["verified"] = True
            prov.append("verified by the positive-line algorithm")
    if args.plot:
        lo, hi = _range(args.range)
        with open(args.plot, "w") as fh:
            fh.write(sigma_svg(w, lo, hi, c))
        res["plot"] = args.plot
        lines.append(f"plot written to {args.plot}")
    return res, lines, prov


def _range(text: str) -> tuple[Fraction, Fraction]:
    try:
        a, b = text.split(":")
    except ValueError:
        raise UsageError("--range must look like a:b, e.g. 0:3") from None
    lo, hi = _rat(a, "--range"), _rat(b, "--range")
    if not lo < hi:
        raise UsageError("--range needs a < b")
    return lo, hi


def sigma_svg(label: CoxeterLabel, lo, hi, c=None, size: int = 480) -> str:
    """Standalone SVG of the line families and isolated points inside ``[lo, hi]^2``."""
    from .sigma import sigma_in_box

    lines, points = sigma_in_box(label, lo, hi)
    pad = 30
    span = float(hi - lo)

    def px(x, y):
        sx = pad + (float(x) - float(lo)) / span * (size - 2 * pad)
        sy = size - pad - (float(y) - float(lo)) / span * (size - 2 * pad)
        return f"{sx:.2f}", f"{sy:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}">',
        f'<title>finite-dimensional parameters for {label.name}</title>',
        f'<rect x="{pad}" y="{pad}" width="{size - 2 * pad}" height="{size - 2 * pad}" fill="white" stroke="black"/>',
        f'<text x="{size / 2}" y="{size - 5}" font-size="12" text-anchor="middle">c1</text>',
        f'<text x="8" y="{size / 2}" font-size="12">c2</text>',
    ]
    for a1, a2, b, _ in lines:
        seg = _clip(a1, a2, b, lo, hi)
        if seg:
            (x1, y1), (x2, y2) = seg
            p1, p2 = px(x1, y1), px(x2, y2)
            out.append(f'<line x1="{p1[0]}" y1="{p1[1]}" x2="{p2[0]}" y2="{p2[1]}" stroke="steelblue" stroke-width="1"/>')
    for x, y, _ in points:
        p = px(x, y)
        out.append(f'<circle cx="{p[0]}" cy="{p[1]}" r="3" fill="darkorange"/>')
    if c is not None:
        p = px(*c)
        out.append(f'<circle cx="{p[0]}" cy="{p[1]}" r="6" fill="none" stroke="red" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _clip(a1, a2, b, lo, hi):
    """Segment of ``a1 x + a2 y = b`` inside the square, or None."""
    pts = set()
    for x in (lo, hi):
        if a2:
            y = (b - a1 * x) / Fraction(a2)
            if lo <= y <= hi:
                pts.add((x, y))
    for y in (lo, hi):
        if a1:
            x = (b - a2 * y) / Fraction(a1)
            if lo <= x <= hi:
                pts.add((x, y))
    pts = sorted(pts)
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def cmd_mm(args, label, t):
    from .mehta import QuadratureError, mm_numeric, mm_value, mm_value2

    c = _params(args)
    if c is None:
        raise UsageError("mm needs --c or --c1/--c2")
    if isinstance(c, tuple):
        w = _need_label(label, args.type)
        if w.num_classes() != 2:
            raise UsageError(f"{w.name} has one reflection class; use --c")
        g = mm_value2(w, *c)
    else:
        g = mm_value(label if label is not None else t, c)
    value = g.value()
    res = {"c": _c_json(c), "exact": g.to_string(), "value": _num(value)}
    lines = [f"F(c) = {g.to_string()} = {value:.10g}"]
    prov = ["Gamma product over degrees" if not isinstance(c, tuple) else "two-parameter Gamma product"]
    if args.numeric:
        try:
            num, err = mm_numeric(label if label is not None else t, c, method=args.method)
        except QuadratureError as e:
            raise ScopeRefusal(str(e)) from None
        except ValueError as e:
            raise ScopeRefusal(str(e)) from None
        res["numeric"] = num
        res["numeric_error"] = err
        lines.append(f"numeric ({args.method}) = {num:.10g} +- {err:.2g}")
        prov.append(f"numeric integral ({args.method})")
    return res, lines, prov


def _num(v: float):
    if v != v:
        return "nan"
    if v in (float("inf"), float("-inf")):
        return "inf" if v > 0 else "-inf"
    return v


def cmd_trig(args, label, t):
    from .trig import in_trig_support, stabilizer_subsystem, trig_support_strata

    w = _need_label(label, args.type)
    c = _params(args)
    if c is None or isinstance(c, tuple):
        raise UsageError("trig needs a single positive --c")
    if args.point:
        coords = [_rat(x, "--point") for x in args.point.split(",")]
        _, st = stabilizer_subsystem(w, coords)
        flag = in_trig_support(w, coords, c)
        res = {"c": _q(c), "point": [_q(x) for x in coords], "stabilizer": st.class_name(), "in_support": flag}
        return res, [f"stabilizer {st.class_name()}, in support: {'yes' if flag else 'no'}"], [
            "integral roots at the point, a-count comparison"]
    strata = trig_support_strata(w, c)
    rows = [{"type": s.ctype.class_name(), "rank": s.ctype.rank, "in_support": s.in_support,
             "witness": [_q(x) for x in s.witness.x], "torus": s.witness.torus_coords()} for s in strata]
    lines = [f"{'stabilizer':<24} witness x            exp(2 pi i x)        in support"]
    lines += [f"{r['type']:<24} ({', '.join(r['witness'])})".ljust(46) + f"({', '.join(r['torus'])})".ljust(21)
              + ("yes" if r["in_support"] else "no") for r in rows]
    return {"c": _q(c), "strata": rows}, lines, ["extended-diagram faces, a-count comparison"]


def cmd_elliptic(args, label, t):
    from .elliptic import brute_force_search, is_elliptic_number, is_regular_number

    w = _need_label(label, args.type)
    if args.m is not None:
        if args.m < 2:
            raise UsageError("m must be at least 2 (m = 1 is excluded)")
        ms = [args.m]
    else:
        ms = list(range(2, max(w.degrees()) + 1))
    rows = []
    prov = ["a-count inequality and codegree count"]
    for m in ms:
        row = {"m": m, "elliptic": is_elliptic_number(w, m), "regular": is_regular_number(w, m)}
        if args.verify:
            rep = brute_force_search(w, m, cap=args.cap)
            row["oracle"] = {"regular": rep.regular, "regular_elliptic": rep.regular_elliptic,
                             "max_eigen_dim": rep.max_eigen_dim}
            if rep.has_regular_elliptic != row["elliptic"] or rep.has_regular != row["regular"]:
                raise Disagreement(f"m={m}: criterion and eigenvector search disagree ({rep.summary()})")
        rows.append(row)
    if args.verify:
        prov.append("verified by exhaustive eigenvector search")
    lines = [f"{'m':>3}  elliptic  regular"]
    lines += [f"{r['m']:>3}  {'yes' if r['elliptic'] else 'no':<8}  {'yes' if r['regular'] else 'no'}" for r in rows]
    return {"numbers": rows}, lines, prov


def cmd_oracle(args, label, t):
    from . import dunkl

    w = _need_label(label, args.type)
    c = _params(args)
    if c is None:
        raise UsageError("oracle needs --c or --c1/--c2")
    if args.kind == "relations":
        chk = dunkl.check_relations(w, c, args.dmax)
        res = {"c": _c_json(c), "dmax": args.dmax, "ok": chk.ok,
               "violation": None if chk.ok else [str(x) for x in chk.violation]}
        if not chk.ok:
            raise Disagreement(f"relation check failed at {chk.violation}")
        return res, [f"relations hold up to degree {args.dmax}"], ["Dunkl operators on monomials"]
    if args.kind == "gram":
        g = dunkl.beta_gram(w, c, args.dmax)
        ranks = [g.ranks[d] for d in range(args.dmax + 1)]
        sizes = [len(g.degrees[d][0]) for d in range(args.dmax + 1)]
        res = {"c": _c_json(c), "dmax": args.dmax, "ranks": ranks, "sizes": sizes}
        lines = [f"degree {d}: rank {r} of {n}" for d, (r, n) in enumerate(zip(ranks, sizes))]
        return res, lines, ["contravariant form via Dunkl operators"]
    mq = dunkl.measure_quotient(w, c, args.dmax)
    res = {"c": _c_json(c), "dmax": args.dmax, "finite": mq.finite, "dim": mq.dim, "ranks": mq.ranks,
           "window": mq.window}
    return res, [mq.describe(), f"ranks by degree: {mq.ranks}"], ["sum of Gram ranks"]


COMMANDS = {
    "degrees": cmd_degrees,
    "roots": cmd_roots,
    "poincare": cmd_poincare,
    "support": cmd_support,
    "finite-dim": cmd_finite_dim,
    "sigma": cmd_sigma,
    "mm": cmd_mm,
    "trig": cmd_trig,
    "elliptic": cmd_elliptic,
    "oracle": cmd_oracle,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON envelope")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (default 100000 or COXSUPPORT_ENUM_CAP)")

    def params(sp):
        sp.add_argument("--c", help="equal parameter p/q")
        sp.add_argument("--c1", help="parameter on the first reflection class")
        sp.add_argument("--c2", help="parameter on the second reflection class")

    p = _Parser(prog="coxsupport", description="Supports of spherical Cherednik modules for finite Coxeter groups")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("degrees", "roots"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("type")
        if name == "roots":
            sp.add_argument("--list", action="store_true", help="print every positive root")
    sp = sub.add_parser("poincare", parents=[common])
    sp.add_argument("type")
    sp.add_argument("--two", action="store_true", help="two-variable form")
    sp.add_argument("--verify", action="store_true")
    sp = sub.add_parser("support", parents=[common])
    sp.add_argument("type")
    params(sp)
    sp.add_argument("--verify", action="store_true")
    sp = sub.add_parser("finite-dim", parents=[common])
    sp.add_argument("type")
    params(sp)
    sp.add_argument("--m-max", type=int, default=None, help="largest denominator to list")
    sp = sub.add_parser("sigma", parents=[common])
    sp.add_argument("type")
    params(sp)
    sp.add_argument("--plot", metavar="FILE", help="write an SVG plot")
    sp.add_argument("--range", default="0:3", help="plot box a:b (default 0:3)")
    sp.add_argument("--verify", action="store_true")
    sp = sub.add_parser("mm", parents=[common])
    sp.add_argument("type")
    params(sp)
    sp.add_argument("--numeric", action="store_true", help="also integrate numerically (c <= 0, rank <= 2)")
    sp.add_argument("--method", choices=["quad", "mc"], default="quad")
    sp = sub.add_parser("trig", parents=[common])
    sp.add_argument("type")
    params(sp)
    sp.add_argument("--point", help="torus point x as comma-separated rationals")
    sp = sub.add_parser("elliptic", parents=[common])
    sp.add_argument("type")
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--verify", action="store_true")
    sp = sub.add_parser("oracle", parents=[common])
    sp.add_argument("kind", choices=["gram", "relations", "quotient"])
    sp.add_argument("type")
    params(sp)
    sp.add_argument("--dmax", type=int, default=6)
    return p


_VALUE_FLAGS = ("--c", "--c1", "--c2", "--point", "--range")


def _glue_negatives(argv: list[str]) -> list[str]:
    """Turn ``--c -1/2`` into ``--c=-1/2`` so argparse does not read a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt is not None and len(nxt) > 1 and nxt[0] == "-" and nxt[1].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    from .dunkl import BudgetError
    from .trig import ScopeError

    try:
        args = build_parser().parse_args(_glue_negatives(argv))
        label, t = _parse(args.type)
        result, lines, prov = COMMANDS[args.command](args, label, t)
    except UsageError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except (EnumerationRefused, ScopeError, BudgetError, ScopeRefusal) as e:
        print(f"refused: {e}", file=err)
        return EXIT_SCOPE
    except Disagreement as e:
        print(f"oracle disagreement: {e}", file=err)
        return EXIT_DISAGREE
    except (ValueError, TypeError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    if args.json:
        env = {
            "schema": SCHEMA_ID,
            "command": args.command,
            "argv": argv,
            "type": _type_json(label, t),
            "result": result,
            "provenance": prov,
        }
        json.dump(env, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        head = label.name if label is not None else t.name
        print(f"{args.command} {head}", file=out)
        for line in lines:
            print(line, file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
