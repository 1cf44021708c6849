"""Command-line entry point: ``polyclosure <subcommand> ...``.

Every subcommand writes deterministic JSON (sorted keys) to stdout or ``--out``.
Exit codes: 0 success, 2 an Undetermined verdict, 1 error (a JSON error object
with a machine-readable ``code`` is written to stdout).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

from .core.gaussian import GaussianRational
from .core.norm import norm_l1
from .core.polynomial import Polynomial
from .core.textfmt import PolynomialSyntaxError, format_polynomial, parse_polynomial, parse_polynomials
from .ideals.ideal import Ideal, NotZeroDimensionalError, poly_gcd
from .ideals.orders import order_from_tag
from .ideals.roots import RootIsolationError

EXIT_OK, EXIT_ERROR, EXIT_UNDETERMINED = 0, 1, 2


class CliInputError(ValueError):
    pass


# -- argument helpers ------------------------------------------------------------

def _read_items(items: Sequence[str]) -> List[str]:
    """Inline polynomial texts; an item ``@path`` reads one polynomial per nonblank line."""
    out = []
    for it in items:
        if it.startswith("@"):
            with open(it[1:]) as fh:
                out.extend(line.strip() for line in fh if line.strip() and not line.startswith("#"))
        else:
            out.append(it)
    return out


def _ideal(texts: Sequence[str], n: Optional[int]) -> Ideal:
    texts = _read_items(texts)
    if not texts:
        raise CliInputError("no generators given")
    polys = parse_polynomials(texts, n)
    return Ideal(polys[0].n, polys)


def _number(text: str) -> GaussianRational:
    p = parse_polynomial(text, 1)
    if not p.is_constant():
        raise CliInputError(f"expected a Gaussian rational, got {text!r}")
    return p.constant_term()


def _point(text: str) -> List[GaussianRational]:
    return [_number(t) for t in text.split(",")]


def _factor(text: str, n: int):
    body, _, k = text.rpartition(":")
    if not body:
        body, k = text, "1"
    return parse_polynomial(body, n), int(k)


# -- subcommands ------------------------------------------------------------------

def cmd_norm(a):
    f = parse_polynomial(a.polynomial, a.n)
    return {"polynomial": format_polynomial(f), "norm": norm_l1(f, a.precision).to_json()}


def cmd_eval(a):
    f = parse_polynomial(a.polynomial, a.n)
    z = _point(a.at)
    if len(z) != f.n:
        raise CliInputError(f"point has {len(z)} coordinates, polynomial has n={f.n}")
    return {"polynomial": format_polynomial(f), "point": [str(c) for c in z], "value": str(f.evaluate(z))}


def cmd_gb(a):
    I = _ideal(a.generators, a.n)
    order = order_from_tag(a.order)
    return {"n": I.n, "order": order.tag, "basis": [format_polynomial(g) for g in I.groebner(order)]}


def cmd_member(a):
    I = _ideal(a.generators, a.n)
    f = parse_polynomial(a.poly, I.n)
    return {"n": I.n, "polynomial": format_polynomial(f), "member": I.contains(f),
            "normal_form": format_polynomial(I.normal_form(f))}


def cmd_closure_primary(a):
    from .disc import closure_primary_report

    I = _ideal(a.generators, a.n)
    return closure_primary_report(I, _point(a.point)).to_json()


def cmd_itilde(a):
    from .disc import i_tilde_report

    I = _ideal(a.generators, a.n)
    support = [_point(p) for p in a.support] if a.support else None
    return i_tilde_report(I, support, a.precision).to_json()


def cmd_classify_curve(a):
    from .plane.classify import classify_curve

    f = parse_polynomial(a.polynomial, 2)
    c = classify_curve(f, samples=a.samples, seed=a.seed)
    return {"polynomial": format_polynomial(f), "class": c.to_json()}, c.tag == "Undetermined"


def _auto_factors(I: Ideal):
    from .plane.factor import factor_gaussian

    g = Polynomial.zero(I.n)
    for h in I.basis:
        g = poly_gcd(g, h)
    if g.is_constant():
        return []
    return factor_gaussian(g)


def cmd_closure_plane(a):
    from .plane.closure import UndeterminedCurveError, closure_plane_report

    I = _ideal(a.generators, 2)
    factors = [_factor(t, 2) for t in a.factor] if a.factor else _auto_factors(I)
    hints = a.hint or None
    try:
        rep = closure_plane_report(I, factors, hints, samples=a.samples, precision=a.precision)
    except UndeterminedCurveError as exc:
        body = {"error": {"code": "undetermined", "message": str(exc)}}
        if exc.curve is not None:
            body["class"] = exc.curve.to_json()
        return body, True
    out = rep.to_json()
    out["factors"] = [{"factor": format_polynomial(p), "exponent": k} for p, k in factors]
    return out


def _r_schedule(a):
    return [1 - 2.0 ** (-k) for k in range(a.kmin, a.kmax + 1)]


def cmd_rates(a):
    from .plane.rates import approx_identity_rates, norm_exponent_g1k

    w = float(_number(a.w).re)
    f = parse_polynomial(f"1 + {a.w}*X + {a.w}*Y + X*Y", 2)
    quot, diff = approx_identity_rates(f, _r_schedule(a))
    g1k = norm_exponent_g1k(f, k_max=a.g1k_kmax)
    fits = [quot, diff, g1k]
    if a.format == "csv":
        return "".join(f"# {fit.label}\n{fit.to_csv()}" for fit in fits)
    return {"w": w, "fits": [fit.to_json() for fit in fits]}


def cmd_g_table(a):
    from .plane.gseries import boundary_samples, check_coefficient_bound, g_series_table

    f = parse_polynomial(a.polynomial, 2)
    fam = g_series_table(f, a.lmax, a.kmax, x_degree=a.truncation or 20)
    rows = []
    for (l, k), coeffs in sorted(fam.table.items()):
        rows.append({"l": l, "k": k, "coefficients": [str(c) for c in coeffs]})
    chk = check_coefficient_bound(f, k_max=a.kmax, samples=boundary_samples(a.samples))
    out = {"polynomial": format_polynomial(f), "d2": fam.d2, "x_degree": fam.x_degree,
           "table": rows,
           "bound_check": {"checked": chk.checked, "violations": len(chk.violations),
                           "max_ratio": chk.max_ratio, "ok": chk.ok}}
    if a.format == "csv":
        lines = ["l,k,j,coefficient"]
        for r in rows:
            lines += [f"{r['l']},{r['k']},{j},{c}" for j, c in enumerate(r["coefficients"])]
        return "\n".join(lines) + "\n"
    return out


def cmd_dbar_check(a):
    from .analysis import STANDARD_TEST_FUNCTIONS, PolarRule, dbar_check

    names = [a.function] if a.function else sorted(STANDARD_TEST_FUNCTIONS)
    rule = PolarRule(a.radial, a.arc)
    reports = []
    for name in names:
        rep = dbar_check(STANDARD_TEST_FUNCTIONS[name], a.grid or 256, rule).to_json()
        rep["function"] = name
        reports.append(rep)
    return {"reports": reports}


def cmd_loja(a):
    from .analysis import koszul_step0_check, lojasiewicz_search

    fs = parse_polynomials(_read_items(a.generators), a.n)
    n = max(fs[0].n, parse_polynomial(a.g).n)
    fs = [parse_polynomial(format_polynomial(f), n) for f in fs]
    g = parse_polynomial(a.g, n)
    cert = lojasiewicz_search(fs, g, r_max=a.rmax, resolution=a.grid or 64)
    out = {"certificate": cert.to_json()}
    if a.koszul:
        t = 2 * cert.r + 1
        out["koszul_step0"] = {"t": t, "residual": koszul_step0_check(fs, g, t, a.grid or 64)}
    return out


def cmd_probe_n3(a):
    from .plane.rates import conjecture_probe_n3

    w = float(_number(a.w).re)
    return conjecture_probe_n3(w, _r_schedule(a) + [1.0], truncation=a.truncation or 24)


COMMANDS = {
    "norm": cmd_norm, "eval": cmd_eval, "gb": cmd_gb, "member": cmd_member,
    "closure-primary": cmd_closure_primary, "itilde": cmd_itilde, "classify-curve": cmd_classify_curve,
    "closure-plane": cmd_closure_plane, "rates": cmd_rates, "g-table": cmd_g_table,
    "dbar-check": cmd_dbar_check, "loja": cmd_loja, "probe-n3": cmd_probe_n3,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=128, help="bits for certified enclosures")
    common.add_argument("--truncation", type=int, default=None, help="series truncation degree")
    common.add_argument("--grid", type=int, default=None, help="grid resolution")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--n", type=int, default=None, help="number of variables")

    p = argparse.ArgumentParser(prog="polyclosure", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("norm", parents=[common], help="l1 coefficient norm")
    s.add_argument("polynomial")
    s = sub.add_parser("eval", parents=[common], help="exact evaluation")
    s.add_argument("polynomial")
    s.add_argument("--at", required=True, help="comma-separated coordinates")
    s = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    s.add_argument("generators", nargs="+")
    s.add_argument("--order", default="grevlex")
    s = sub.add_parser("member", parents=[common], help="ideal membership")
    s.add_argument("generators", nargs="+")
    s.add_argument("--poly", required=True)
    s = sub.add_parser("closure-primary", parents=[common], help="closure of an m_z-primary ideal")
    s.add_argument("generators", nargs="+")
    s.add_argument("--point", required=True)
    s = sub.add_parser("itilde", parents=[common], help="finite-support closure")
    s.add_argument("generators", nargs="+")
    s.add_argument("--support", action="append", help="a point of M(I); repeat for each point")
    s = sub.add_parser("classify-curve", parents=[common], help="classify a plane curve against the bidisc")
    s.add_argument("polynomial")
    s.add_argument("--samples", type=int, default=32)
    s = sub.add_parser("closure-plane", parents=[common], help="closure of an ideal of C[X1,X2]")
    s.add_argument("generators", nargs="+")
    s.add_argument("--factor", action="append", help="irreducible factor as POLY:EXPONENT; repeat")
    s.add_argument("--hint", action="append", help="class tag per factor, in order")
    s.add_argument("--samples", type=int, default=32)
    for name, helptext in (("rates", "approximate identity rate fits"), ("probe-n3", "three-variable probe")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--w", default="1/2")
        s.add_argument("--kmin", type=int, default=3)
        s.add_argument("--kmax", type=int, default=10)
        if name == "rates":
            s.add_argument("--g1k-kmax", type=int, default=200)
    s = sub.add_parser("g-table", parents=[common], help="g_lk series and the coefficient bound")
    s.add_argument("polynomial")
    s.add_argument("--lmax", type=int, default=None)
    s.add_argument("--kmax", type=int, default=50)
    s.add_argument("--samples", type=int, default=64)
    s = sub.add_parser("dbar-check", parents=[common], help="d-bar identity for the Cauchy transform")
    s.add_argument("--function", choices=["re", "abs2", "bump"], default=None)
    s.add_argument("--radial", type=int, default=64)
    s.add_argument("--arc", type=int, default=32)
    s = sub.add_parser("loja", parents=[common], help="grid Lojasiewicz certificate")
    s.add_argument("generators", nargs="+")
    s.add_argument("--g", required=True)
    s.add_argument("--rmax", type=int, default=6)
    s.add_argument("--koszul", action="store_true", help="also check the k = 0 decomposition")
    return p


_ERROR_CODES = [
    (PolynomialSyntaxError, "syntax_error"),
    (NotZeroDimensionalError, "not_zero_dimensional"),
    (RootIsolationError, "root_isolation"),
    (CliInputError, "invalid_input"),
]


def _error_code(exc: BaseException) -> str:
    from .disc import NotPrimaryError
    from .analysis import LojasiewiczPreconditionError
    from .plane.classify import CurveInputError
    from .plane.closure import FactorizationError
    from .plane.gseries import SeriesPreconditionError
    from .plane.rates import TruncationBudgetError

    table = [(NotPrimaryError, "not_primary"), (FactorizationError, "factorization"),
             (CurveInputError, "curve_input"), (SeriesPreconditionError, "series_precondition"),
             (LojasiewiczPreconditionError, "lojasiewicz"), (TruncationBudgetError, "truncation_budget")]
    for cls, code in table + _ERROR_CODES:
        if isinstance(exc, cls):
            return code
    if isinstance(exc, (ValueError, TypeError, OSError)):
        return "invalid_input"
    return "internal_error"


def _clean(obj):
    """Make floats JSON-safe (NaN and infinities become strings)."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def render(obj) -> str:
    if isinstance(obj, str):
        return obj
    return json.dumps(_clean(obj), sort_keys=True, indent=2) + "\n"


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    code = EXIT_OK
    try:
        if a.command == "g-table" and a.lmax is None:
            from .plane.gseries import y_coefficients

            a.lmax = len(y_coefficients(parse_polynomial(a.polynomial, 2))) - 1
        result = COMMANDS[a.command](a)
        if isinstance(result, tuple):
            result, undetermined = result
            code = EXIT_UNDETERMINED if undetermined else EXIT_OK
        text = render(result)
    except Exception as exc:  # noqa: BLE001 - every failure becomes a JSON error object
        text = render({"error": {"code": _error_code(exc), "type": type(exc).__name__, "message": str(exc)}})
        code = EXIT_ERROR
    if a.out and code != EXIT_ERROR:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
