"""Command-line front end: ``polymoment <subcommand> ...``.

Exit status is 0 on success (including "none" answers), 1 on domain
errors and 2 on usage errors.  ``--json`` switches any subcommand to the
stable JSON schema of :mod:`polymoment.serialize`.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Sequence

from . import decomposition as dec
from . import moments as mom
from . import ritt
from .errors import HypothesisError, NotReducibleError, ParseError, PolyMomentError
from .numeric import FieldElement
from .parser import GRAMMAR, parse_poly
from .poly import LinearMap, Poly, chebyshev, compose
from .serialize import dumps

__all__ = ["main", "run_command", "build_parser"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- formatting ----------------------------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, Poly):
        return str(x)
    if isinstance(x, LinearMap):
        return str(x.poly)
    if isinstance(x, FieldElement):
        return str(x.rep.coeff(0)) if x.is_rational() else str(x)
    return str(x)


def _lines(pairs) -> str:
    return "\n".join(f"{k}: {_fmt(v)}" for k, v in pairs)


def _cert_text(c: mom.MomentCertificate) -> str:
    if c.kind == "structural":
        rows = ["certificate: structural"]
        rows += [f"  term: V = {t.V}; W = {t.W}" for t in c.terms]
        if c.P_tilde is not None:
            rows.append(f"  P~ = {c.P_tilde}")
        return "\n".join(rows)
    vals = ", ".join(_fmt(m) for m in c.moments)
    return f"certificate: checked K={c.K} all_zero={c.all_zero}\n  moments: {vals}"


# -- argument helpers ----------------------------------------------------------

def _poly(text: str) -> Poly:
    return parse_poly(text)


def _file_exprs(path: str | None) -> list[str]:
    if not path:
        return []
    with open(path, encoding="utf-8") as fh:
        return [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]


def _fill(args, names: Sequence[str]) -> None:
    """Fill missing expression options from ``--file`` lines, in order."""
    extra = _file_exprs(args.file)
    for name in names:
        if getattr(args, name) is None and extra:
            setattr(args, name, extra.pop(0))
        if getattr(args, name) is None:
            raise UsageError(f"missing -{name}")


def _positional(args) -> list[str]:
    return list(args.exprs) + _file_exprs(args.file)


def _endpoints(args) -> mom.Endpoints:
    if not args.endpoints:
        raise UsageError("--endpoints a,b is required")
    return mom.Endpoints.parse(args.endpoints)


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


# -- subcommands ---------------------------------------------------------------

def cmd_cheb(args):
    p = chebyshev(args.n)
    return p, str(p)


def cmd_compose(args):
    exprs = _positional(args)
    if not exprs:
        raise UsageError("compose needs at least one expression")
    polys = [_poly(e) for e in exprs]
    out = polys[-1]
    for p in reversed(polys[:-1]):
        out = compose(p, out)
    return out, str(out)


def cmd_decompose(args):
    f = _poly(args.F)
    if args.degree is not None:
        pair = dec.right_factor(f, args.degree)
        if pair is None:
            return None, "none"
        return pair, _lines([("outer", pair.outer), ("inner", pair.inner)])
    if args.left is not None:
        a = dec.left_quotient(f, _poly(args.left))
    elif args.outer is not None:
        a = dec.inner_quotient(f, _poly(args.outer))
    else:
        raise UsageError("decompose needs --degree, --left or --outer")
    return a, "none" if a is None else str(a)


def cmd_factors(args):
    table = dec.all_right_factors(_poly(args.F))
    text = "\n".join(f"{d}: {'none' if w is None else w}" for d, w in table.items())
    return table, text


def cmd_reduce(args):
    ps = [_poly(p) for p in args.P or []]
    ws = [_poly(w) for w in args.W or []]
    red = dec.reduce_coprime(ps, ws)
    rows = [("U", red.U), ("V", red.V)]
    rows += [(f"P~{i + 1}", p) for i, p in enumerate(red.P_tilde)]
    rows += [(f"W~{i + 1}", w) for i, w in enumerate(red.W_tilde)]
    return red, _lines(rows)


def cmd_ritt2(args):
    exprs = _positional(args)
    if len(exprs) != 4:
        raise UsageError("ritt2 needs exactly four expressions: P1 W1 P2 W2")
    form = ritt.ritt2_normal_form(*(_poly(e) for e in exprs))
    rows = [("kind", form.kind), ("swapped", form.swapped), ("n", form.n)]
    rows += [("s", form.s), ("R", form.R)] if form.kind == "first" else [("m", form.m)]
    rows += [("nu", form.nu), ("sigma1", form.sigma1), ("sigma2", form.sigma2), ("mu", form.mu)]
    return form, _lines(rows)


def cmd_equiv(args):
    p = _poly(args.F)
    if p.degree < 1:
        raise HypothesisError("equiv needs a nonconstant polynomial")
    w = ritt.linear_equivalence(p)
    if w is None:
        return None, "none"
    if not w.rational:
        return w, _lines([("kind", w.kind), ("n", w.n), ("discriminant", w.discriminant)])
    return w, _lines([("kind", w.kind), ("n", w.n), ("mu", w.mu), ("nu", w.nu)])


def cmd_moments(args):
    _fill(args, ["P", "Q"])
    cert = mom.moments_vanish(_poly(args.P), _poly(args.Q), _endpoints(args), args.K)
    return cert, "\n".join(_fmt(m) for m in cert.moments)


def cmd_certify(args):
    _fill(args, ["P", "Q", "W"])
    cert = mom.certify_reducible(_poly(args.P), _poly(args.Q), _poly(args.W), _endpoints(args))
    t = cert.terms[0]
    return cert, _lines([("P~", cert.P_tilde), ("Q~", t.V), ("W", t.W)])


def cmd_classify(args):
    _fill(args, ["P", "Q"])
    sc = mom.classify_solution(_poly(args.P), _poly(args.Q), _endpoints(args), args.K)
    head = f"case {sc.case}" if sc.case is not None else sc.status
    body = [f"{k}: {_fmt(v)}" for k, v in sc.witnesses.items()]
    return sc, "\n".join([head, *body, _cert_text(sc.certificate)])


def cmd_merge(args):
    ws = [_poly(w) for w in (args.W or []) + _file_exprs(args.file)]
    if not ws:
        raise UsageError("merge needs at least one -W")
    vs = [_poly(v) for v in args.V] if args.V else [Poly([0, 1])] * len(ws)
    if len(vs) != len(ws):
        raise UsageError("give one -V per -W or none at all")
    p = _poly(args.P) if args.P else None
    terms = mom.merge_reducible([mom.ReducibleTerm(v, w) for v, w in zip(vs, ws)],
                                _endpoints(args), p)
    return terms, "\n".join(f"V = {t.V}; W = {t.W}" for t in terms)


def cmd_generate(args):
    x = "x"
    V = [_poly(getattr(args, f"V{i}") or x) for i in (1, 2, 3)]
    if args.case == "case2":
        if args.a is None:
            raise UsageError("case2 needs -a")
        inst = mom.gen_case2(args.n, args.s, _poly(args.R or "x-1"), V[0], V[1], args.a)
    elif args.case == "case3":
        inst = mom.gen_case3(args.n, args.m, V[0], V[1], _endpoints(args))
    else:
        e = _endpoints(args) if args.endpoints else mom.find_case4_endpoints(args.n, args.m)
        inst = mom.gen_case4(args.n, args.m, _poly(args.R or "x-1"), *V, e)
    text = _lines([("P", inst.P), ("Q", inst.Q), ("endpoints", inst.endpoints)])
    return {"P": inst.P, "Q": inst.Q, "endpoints": inst.endpoints,
            "certificate": inst.certificate}, text


def cmd_skun(args):
    ms = _int_list(args.moduli)
    if args.part == "b":
        if args.point is None and not args.endpoints:
            raise UsageError("part b needs --point")
        pt = args.point if args.point is not None else args.endpoints.split(",")[0]
        res = mom.skun_checks("b", ms, pt)
        return {"a": str(res)}, f"a = {res} = 0"
    res = mom.skun_checks(args.part, ms, _endpoints(args))
    if args.part == "a":
        (i, j), l = res
        return {"pair": [i, j], "l": l}, f"pair: ({i}, {j})\nl: {l}"
    return {"disjunct": res}, res


def cmd_remark(args):
    rep = mom.verify_remark_example(args.m, args.n, _poly(args.R))
    rows = [("hypothesis_met", rep.hypothesis_met), ("endpoints", rep.endpoints),
            ("factor_degrees", rep.factor_degrees)]
    rows += [(f"pair {a},{b} feasible", v) for (a, b), v in rep.pair_feasible.items()]
    rows += [("triple feasible", rep.triple_feasible),
             ("all factor pairs infeasible", rep.all_factor_pairs_infeasible),
             ("confirms remark", rep.confirms_remark)]
    return rep, _lines(rows)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--file", help="read expressions, one per line")

    parser = _Parser(
        prog="polymoment",
        description="Exact polynomial composition algebra and moment-problem tools.",
        epilog=f"expression grammar: {GRAMMAR}",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("cheb", cmd_cheb, "print T_n")
    p.add_argument("n", type=int)

    p = add("compose", cmd_compose, "compose expressions left to right: A o B o ...")
    p.add_argument("exprs", nargs="*")

    p = add("decompose", cmd_decompose, "right factor, left quotient or inner quotient")
    p.add_argument("F")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--degree", "-d", type=int, help="degree of the right factor")
    g.add_argument("--left", help="B: find A with A o B = F")
    g.add_argument("--outer", help="A: find B with A o B = F")

    p = add("factors", cmd_factors, "all normalized right factors")
    p.add_argument("F")

    p = add("reduce", cmd_reduce, "split P_i o W_i = F into U, V and coprime parts")
    p.add_argument("-P", action="append", help="outer polynomial (repeat)")
    p.add_argument("-W", action="append", help="inner polynomial (repeat)")

    p = add("ritt2", cmd_ritt2, "normal form of P1 o W1 = P2 o W2")
    p.add_argument("exprs", nargs="*")

    p = add("equiv", cmd_equiv, "linear equivalence to a power or Chebyshev polynomial")
    p.add_argument("F")

    for name, func, extra in (
        ("moments", cmd_moments, ()),
        ("certify", cmd_certify, ("W",)),
        ("classify", cmd_classify, ()),
    ):
        p = add(name, func, f"{name} for the moment problem")
        p.add_argument("-P")
        p.add_argument("-Q")
        for opt in extra:
            p.add_argument(f"-{opt}")
        p.add_argument("--endpoints", "-e")
        if name == "moments":
            p.add_argument("-K", type=int, default=10)
        elif name == "classify":
            p.add_argument("-K", type=int, default=None)

    p = add("merge", cmd_merge, "merge reducible terms sharing a right factor")
    p.add_argument("-W", action="append")
    p.add_argument("-V", action="append")
    p.add_argument("-P")
    p.add_argument("--endpoints", "-e")

    p = add("generate", cmd_generate, "build a solution of case 2, 3 or 4")
    p.add_argument("case", choices=["case2", "case3", "case4"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int)
    p.add_argument("-s", type=int, default=1)
    p.add_argument("-R")
    p.add_argument("-a")
    for i in (1, 2, 3):
        p.add_argument(f"--V{i}")
    p.add_argument("--endpoints", "-e")

    p = add("skun", cmd_skun, "Chebyshev value relations at two points")
    p.add_argument("part", choices=["a", "b", "c"])
    p.add_argument("--moduli", required=True, help="comma-separated, e.g. 3,5")
    p.add_argument("--endpoints", "-e")
    p.add_argument("--point")

    p = add("remark", cmd_remark, "three-term necessity for the simplest case-4 pair")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-R", default="x-1")
    return parser


def _value_options(parser: argparse.ArgumentParser) -> tuple[set[str], set[str]]:
    takes, known = set(), set()
    subs = [a for a in parser._actions if isinstance(a, argparse._SubParsersAction)]
    for sp in subs[0].choices.values():
        for act in sp._actions:
            known.update(act.option_strings)
            if act.nargs is None and act.option_strings and not isinstance(
                act, (argparse._StoreTrueAction, argparse._HelpAction)
            ):
                takes.update(act.option_strings)
    return takes, known


def _join_negative_values(argv: list[str], parser) -> list[str]:
    """Let option values start with '-', e.g. ``--endpoints -1,1`` or ``-P -x^2``."""
    takes, known = _value_options(parser)
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in takes and nxt is not None and nxt.startswith("-") and nxt not in known:
            out.append(f"{tok}={nxt}" if tok.startswith("--") else tok + nxt)
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run_command(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(_join_negative_values(list(argv), parser))
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        print(f"expression grammar: {GRAMMAR}", file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        value, text = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        print(f"expression grammar: {GRAMMAR}", file=err)
        return 2
    except NotReducibleError as exc:
        print(f"not reducible ({exc.condition}): {exc}", file=err)
        return 1
    except (PolyMomentError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.json:
        print(dumps(value), file=out)
    else:
        print(text, file=out)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
