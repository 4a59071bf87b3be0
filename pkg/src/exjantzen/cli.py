"""Command line front end.

Examples::

    exjantzen weight classify --kind f4 "3|0,0,0"
    exjantzen verma graph --kind d21a --a generic "3|1,1" --format dot
    exjantzen char simple --kind g3 "5|0,0,0" --depth 4 --format json
    exjantzen verify kl --kind g3 --sweep 6

Exit status is 0 on success, 1 when the input lies outside the domain of the
requested operation and 2 on usage errors (including unparsable weights).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .blocks import (
    BlockPosition,
    ClassificationError,
    Typical,
    blocks_for_sweep,
    chain_weight,
    classify,
    window,
)
from .characters import (
    char_kac,
    char_simple_g0,
    char_simple_truncated,
    char_typical_g0,
    char_verma_truncated,
    dim_kac,
    dim_simple,
    g0_multiplicity,
)
from .klhom import (
    IncompleteWindowError,
    cohomology_table,
    homology,
    inverse_kl,
    kl_polynomial,
    verify_euler,
    verify_grothendieck_cancellation,
    verify_kl_identity,
)
from .root_data import (
    AlgebraKind,
    WeightSyntaxError,
    build_algebra,
    parse_a,
    parse_weight,
)
from .verma import DomainError, jantzen_polynomials, loewy_layers, primitive_weight_graph
from .weights import is_integral_dominant, is_typical

__all__ = ["run", "main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # weights such as "-1|1,1" are positionals, not options
        self._negative_number_matcher = re.compile(r"^-[\d./]*(\||$)")

    def error(self, message):
        raise UsageError(message)


# -- output helpers ------------------------------------------------------------


def _emit(out, payload, fmt: str, text: str | None = None, latex: str | None = None, dot: str | None = None):
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "text":
        out.write((text if text is not None else json.dumps(payload)) + "\n")
    elif fmt == "latex" and latex is not None:
        out.write(latex)
    elif fmt == "dot" and dot is not None:
        out.write(dot)
    else:
        raise UsageError(f"--format {fmt} is not available for this command")


def _latex_weight(w) -> str:
    def f(x: Fraction) -> str:
        if x.denominator == 1:
            return str(x.numerator)
        sign = "-" if x < 0 else ""
        return f"{sign}\\tfrac{{{abs(x.numerator)}}}{{{x.denominator}}}"

    c = [f(x) for x in w.coords]
    return f"({c[0]}\\,|\\,{','.join(c[1:])})"


def _latex_table(header: tuple[str, str], rows: list[tuple[str, str]]) -> str:
    lines = ["\\begin{tabular}{ll}", "\\hline", f"{header[0]} & {header[1]} \\\\", "\\hline"]
    lines += [f"${a}$ & ${b}$ \\\\" for a, b in rows]
    lines += ["\\hline", "\\end{tabular}"]
    return "\n".join(lines) + "\n"


# -- argument parsing ----------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--kind", required=True, choices=[k for k in ("d21a", "f4", "g3")])
    p.add_argument("--a", default=None, help="parameter of D(2,1;a): 'p/q' or 'generic'")
    p.add_argument("--depth", type=int, default=6, help="truncation depth of character boxes")
    p.add_argument("--window", type=int, default=8, help="chain window radius for KL matrices")
    p.add_argument("--format", default="text", choices=["text", "json", "dot", "latex"])
    return p


def _parser() -> argparse.ArgumentParser:
    common = _common()
    top = _Parser(prog="exjantzen", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="cmd", required=True)

    def leaf(parent, name, weights=1, **kw):
        p = parent.add_parser(name, parents=[common], **kw)
        for i in range(weights):
            p.add_argument("weight" if i == 0 else "mu", help="weight as l0|l1,l2[,l3]")
        return p

    alg = sub.add_parser("algebra").add_subparsers(dest="sub", required=True)
    leaf(alg, "info", 0)

    wt = sub.add_parser("weight").add_subparsers(dest="sub", required=True)
    leaf(wt, "classify")

    cw = sub.add_parser("chain-weight", parents=[common])
    cw.add_argument("position", help="BlockPosition JSON as printed by 'weight classify'")

    vm = sub.add_parser("verma").add_subparsers(dest="sub", required=True)
    leaf(vm, "graph")
    leaf(vm, "layers")

    ch = sub.add_parser("char").add_subparsers(dest="sub", required=True)
    s = leaf(ch, "simple")
    s.add_argument("--g0", action="store_true", help="closed g_0-decomposition instead of a box")
    s.add_argument("--gamma", default="+", choices=["+", "-"])
    leaf(ch, "verma").add_argument("--route", default="pbw", choices=["pbw", "formula"])
    leaf(ch, "kac")

    d = sub.add_parser("dim", parents=[common])
    d.add_argument("weight")
    d.add_argument("--kac", action="store_true", help="dimension of the Kac module")

    kl = sub.add_parser("kl").add_subparsers(dest="sub", required=True)
    leaf(kl, "p", 2)
    leaf(kl, "a", 2)
    leaf(kl, "jantzen")

    h = sub.add_parser("homology", parents=[common])
    h.add_argument("weight")
    h.add_argument("--kmax", type=int, default=4)

    c = sub.add_parser("cohomology", parents=[common])
    c.add_argument("weight")
    c.add_argument("--module", default="simple", choices=["simple", "kac"])
    c.add_argument("--degree", type=int, default=1, choices=[1, 2])

    v = sub.add_parser("verify").add_subparsers(dest="sub", required=True)
    for name in ("kl", "grothendieck", "euler", "rigidity", "b-oracle"):
        p = v.add_parser(name, parents=[common])
        p.add_argument("--sweep", type=int, default=3, help="chain indices |i| <= SWEEP")
        p.add_argument("--xmax", type=int, default=3, help="largest chain parameter x")
    return top


# -- commands ------------------------------------------------------------------


def _algebra(args):
    try:
        kind = AlgebraKind(args.kind, parse_a(args.a) if args.kind == "d21a" else None)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return build_algebra(kind)


def _weight(alg, text):
    try:
        return parse_weight(alg, text)
    except WeightSyntaxError as e:
        raise UsageError(str(e)) from None


def _cmd_algebra_info(args, alg, out):
    payload = {
        "algebra": alg.key,
        "simple_roots": [r.text() for r in alg.simple_roots],
        "even_positive": [r.text() for r in alg.even_positive],
        "odd_positive": [r.text() for r in alg.odd_positive],
        "theta": alg.theta.text(),
        "rho": alg.rho.text(),
        "rho0": alg.rho0.text(),
        "rho1": alg.rho1.text(),
        "weyl_order": len(alg.W),
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(out, payload, args.format, text)


def _cmd_weight_classify(args, alg, out):
    lam = _weight(alg, args.weight)
    r = classify(lam)
    if isinstance(r, BlockPosition):
        payload = r.to_json()
        text = f"{lam} = {r.label()} in {r.block}\n{json.dumps(payload)}"
    else:
        tag = "typical" if isinstance(r, Typical) else "singular"
        payload = {"family": tag, "weight": lam.text()}
        text = f"{lam} is {tag}"
    _emit(out, payload, args.format, text)


def _cmd_chain_weight(args, alg, out):
    try:
        data = json.loads(args.position)
        pos = BlockPosition.from_json(alg, data)
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError(f"bad position: {e}") from None
    w = chain_weight(pos)
    _emit(out, {"weight": w.text()}, args.format, w.text())


def _graph_latex(g) -> str:
    rows = [(_latex_weight(v), str(g.levels[v])) for v in g.vertices]
    return _latex_table(("vertex", "level"), rows)


def _cmd_verma_graph(args, alg, out):
    g = primitive_weight_graph(_weight(alg, args.weight))
    lines = [f"shape: {g.shape}"]
    lines += [f"  {a} -> {b}" for a, b in g.edges]
    if not g.edges:
        lines.append(f"  {g.source}")
    _emit(out, g.to_json(), args.format, "\n".join(lines), _graph_latex(g), g.to_dot())


def _cmd_verma_layers(args, alg, out):
    g = primitive_weight_graph(_weight(alg, args.weight))
    layers = loewy_layers(g)
    payload = {"weight": g.source.text(), "layers": [[v.text() for v in L] for L in layers]}
    text = "\n".join(f"{k}: " + ", ".join(str(v) for v in L) for k, L in enumerate(layers))
    _emit(out, payload, args.format, text, _graph_latex(g))


def _truncation_out(ch, args, out):
    payload = ch.to_json()
    text = "\n".join(f"{m['m']:>6}  {m['weight']}" for m in payload["mult"])
    rows = [
        (_latex_weight(ch.weight_of(k)), str(v))
        for k, v in sorted(ch.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    ]
    _emit(out, payload, args.format, text, _latex_table(("weight", "mult"), rows))


def _decomposition_out(dec, args, out):
    payload = dec.to_json()
    text = "\n".join(f"{t['c']:>4}  L0({t['weight']})" for t in payload["terms"])
    rows = [(f"L^0{_latex_weight(w)}", str(c)) for w, c in dec.terms.items()]
    _emit(out, payload, args.format, text, _latex_table(("g_0-module", "multiplicity"), rows))


def _cmd_char_simple(args, alg, out):
    lam = _weight(alg, args.weight)
    if args.g0:
        if not is_integral_dominant(lam):
            raise DomainError(f"{lam} is not integral dominant (predicate is_integral_dominant)")
        dec = char_typical_g0(lam) if is_typical(lam) else char_simple_g0(lam, args.gamma)
        _decomposition_out(dec, args, out)
    else:
        _truncation_out(char_simple_truncated(lam, args.depth), args, out)


def _cmd_char_verma(args, alg, out):
    lam = _weight(alg, args.weight)
    _truncation_out(char_verma_truncated(lam, args.depth, route=args.route), args, out)


def _cmd_char_kac(args, alg, out):
    lam = _weight(alg, args.weight)
    _truncation_out(char_kac(lam, args.depth), args, out)


def _cmd_dim(args, alg, out):
    lam = _weight(alg, args.weight)
    n = dim_kac(lam) if args.kac else dim_simple(lam)
    _emit(out, {"weight": lam.text(), "module": "kac" if args.kac else "simple", "dim": n}, args.format, str(n))


def _cmd_kl_p(args, alg, out):
    lam, mu = _weight(alg, args.weight), _weight(alg, args.mu)
    p = kl_polynomial(lam, mu)
    payload = {"lambda": lam.text(), "mu": mu.text(), "coeffs": p.coefficient_list()}
    _emit(out, payload, args.format, str(p))


def _cmd_kl_a(args, alg, out):
    lam, mu = _weight(alg, args.weight), _weight(alg, args.mu)
    pos = classify(lam)
    if not isinstance(pos, BlockPosition):
        raise DomainError(f"{lam} is not in an atypical chain (predicate classify)")
    a = inverse_kl(pos.block, args.window).a_entry(lam, mu)
    payload = {"lambda": lam.text(), "mu": mu.text(), "window": args.window, "coeffs": a.coefficient_list()}
    _emit(out, payload, args.format, str(a))


def _cmd_kl_jantzen(args, alg, out):
    lam = _weight(alg, args.weight)
    J = jantzen_polynomials(lam)
    payload = {"lambda": lam.text(), "entries": [{"mu": m.text(), "coeffs": p.coefficient_list()} for m, p in J.items()]}
    text = "\n".join(f"{p}  {m}" for m, p in J.items())
    rows = [(_latex_weight(m), str(p)) for m, p in J.items()]
    _emit(out, payload, args.format, text, _latex_table(("mu", "J(q)"), rows))


def _cmd_homology(args, alg, out):
    t = homology(_weight(alg, args.weight), args.kmax)
    lines = [f"H_{k}: " + ", ".join(str(w) for w in t[k]) for k in range(args.kmax + 1)]
    if t.derived:
        lines.append("(derived extension outside the atypical tables)")
    rows = [(f"H_{k}", ",\\ ".join(_latex_weight(w) for w in t[k])) for k in range(args.kmax + 1)]
    _emit(out, t.to_json(), args.format, "\n".join(lines), _latex_table(("degree", "weights"), rows))


def _cmd_cohomology(args, alg, out):
    lam = _weight(alg, args.weight)
    n = cohomology_table(lam, args.module, args.degree)
    payload = {"weight": lam.text(), "module": args.module, "degree": args.degree, "dim": n}
    _emit(out, payload, args.format, str(n))


# -- sweeps ---------------------------------------------------------------------


def _sweep(alg, args):
    for block in blocks_for_sweep(alg, args.xmax):
        for pos in window(block, args.sweep):
            yield block, pos, chain_weight(pos)


def _verify_kl(args, alg):
    items = []
    for block, pos, lam in _sweep(alg, args):
        for p2 in window(block, args.window):
            nu = chain_weight(p2)
            items.append(({"block": str(block), "lambda": lam.text(), "nu": nu.text()}, verify_kl_identity(lam, nu)))
    return items


def _verify_grothendieck(args, alg):
    return [({"block": str(b), "lambda": lam.text(), "kmax": 6}, verify_grothendieck_cancellation(lam, 6))
            for b, _, lam in _sweep(alg, args)]


def _verify_euler(args, alg):
    return [({"block": str(b), "lambda": lam.text(), "depth": args.depth}, verify_euler(lam, args.depth))
            for b, _, lam in _sweep(alg, args)]


def _verify_rigidity(args, alg):
    return [({"block": str(b), "lambda": lam.text()}, primitive_weight_graph(lam).is_rigid())
            for b, _, lam in _sweep(alg, args)]


def _verify_b(args, alg):
    items = []
    for block, pos, lam in _sweep(alg, args):
        for mu in primitive_weight_graph(lam).vertices:
            b = g0_multiplicity(lam, mu)
            items.append(({"block": str(block), "lambda": lam.text(), "mu": mu.text(), "b": b}, b >= 1))
    return items


_VERIFY = {
    "kl": _verify_kl,
    "grothendieck": _verify_grothendieck,
    "euler": _verify_euler,
    "rigidity": _verify_rigidity,
    "b-oracle": _verify_b,
}


def _cmd_verify(args, alg, out):
    if args.sweep < 0 or args.xmax < 0:
        raise UsageError("--sweep and --xmax must be non-negative")
    items = _VERIFY[args.sub](args, alg)
    failures = [w for w, ok in items if not ok]
    payload = {
        "check": args.sub,
        "algebra": alg.key,
        "passed": not failures,
        "checked": len(items),
        "items": [w for w, _ in items],
        "failures": failures,
    }
    lines = [("ok    " if ok else "FAIL  ") + " ".join(f"{k}={v}" for k, v in w.items()) for w, ok in items]
    lines.append(f"{args.sub}: {'pass' if not failures else 'FAIL'} ({len(items)} checked, {len(failures)} failed)")
    _emit(out, payload, args.format, "\n".join(lines))
    return 0 if not failures else 1


_COMMANDS = {
    ("algebra", "info"): _cmd_algebra_info,
    ("weight", "classify"): _cmd_weight_classify,
    ("chain-weight", None): _cmd_chain_weight,
    ("verma", "graph"): _cmd_verma_graph,
    ("verma", "layers"): _cmd_verma_layers,
    ("char", "simple"): _cmd_char_simple,
    ("char", "verma"): _cmd_char_verma,
    ("char", "kac"): _cmd_char_kac,
    ("dim", None): _cmd_dim,
    ("kl", "p"): _cmd_kl_p,
    ("kl", "a"): _cmd_kl_a,
    ("kl", "jantzen"): _cmd_kl_jantzen,
    ("homology", None): _cmd_homology,
    ("cohomology", None): _cmd_cohomology,
}


def run(argv: list[str], out=None, err=None) -> int:
    """Execute one command; returns the exit status."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _parser().parse_args(argv)
        alg = _algebra(args)
        if getattr(args, "depth", 0) < 0 or getattr(args, "window", 0) < 0:
            raise UsageError("--depth and --window must be non-negative")
        if args.cmd == "verify":
            return _cmd_verify(args, alg, out)
        _COMMANDS[(args.cmd, getattr(args, "sub", None))](args, alg, out)
        return 0
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return 2
    except (DomainError, ClassificationError, IncompleteWindowError) as e:
        err.write(f"domain error: {e}\n")
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
