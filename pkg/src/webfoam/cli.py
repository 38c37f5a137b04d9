"""Command-line front end: webfoam <subcommand>.

Output is JSON by default (stable key order) or an aligned table with
``--format table``.  Exit codes: 0 success, 1 domain error, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import adhm, catalogue, dims, foams, gf2, modules, skein, tait, webs


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "table":
        width = max((len(str(k)) for k in doc), default=0)
        for k in sorted(doc, key=str):
            print(f"{str(k):<{width}}  {doc[k]}")
    else:
        print(json.dumps(doc, sort_keys=True, default=str))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_web_or_diagram(text: str):
    doc = json.loads(text)
    if isinstance(doc, dict) and "edges" in doc:
        return webs.parse_web(text), None
    d = webs.parse_diagram(text)
    return webs.underlying_web(d), d


def _frac(s: str) -> Fraction:
    return Fraction(s)


def cmd_tait(args) -> dict:
    web, diagram = _load_web_or_diagram(_read(args.input))
    sets = []
    for s in tait.one_sets(web):
        comps = tait.complement_components(web, s)
        sets.append(
            {
                "edges": sorted(map(str, s)),
                "even": all(len(c["vertices"]) % 2 == 0 for c in comps),
                "n": len(comps),
            }
        )
    return {
        "count": tait.tait_count(web),
        "signed": tait.signed_tait(diagram) if diagram is not None else None,
        "one_sets": sets,
        "planar_dim": tait.planar_lsharp_dim(web),
    }


def cmd_euler(args) -> dict:
    d = webs.parse_diagram(_read(args.input))
    return skein.euler_char_report(d)


def cmd_foam_eval(args) -> dict:
    expr = foams.parse_expr(args.expr)
    return {"value": expr.value()}


def _min_poly(m: np.ndarray) -> str:
    """Minimal polynomial of an operator satisfying u^3 + u = 0."""
    n = m.shape[0]
    if n == 0:
        return "1"
    powers = [gf2.identity(n)]
    for _ in range(3):
        powers.append(gf2.matmul(powers[-1], m))
    for degree in range(1, 4):
        mat = np.stack([p.ravel() for p in powers[: degree + 1]], axis=1)
        ker = gf2.nullspace(mat)
        for j in range(ker.shape[1]):
            if ker[degree, j]:
                coeffs = ker[:, j]
                terms = [
                    ("1" if k == 0 else "u" if k == 1 else f"u^{k}")
                    for k in range(degree, -1, -1)
                    if coeffs[k]
                ]
                return " + ".join(terms)
    return "u^3 + u"


def cmd_module(args) -> dict:
    mod = modules.known_module(args.web)
    out: dict = {
        "web": args.web,
        "dim": mod.dim,
        "operators": {name: _min_poly(m) for name, m in sorted(mod.operators.items())},
    }
    if mod.grading is not None:
        even, odd = mod.graded_dims()
        out["dim_even"] = even
        out["dim_odd"] = odd
        out["chi"] = mod.euler_characteristic()
    if args.decompose and mod.operators:
        dec = modules.edge_decomposition(mod)
        out["decomposition"] = {
            ",".join(sorted(map(str, s))) or "(none)": dim for s, dim in dec.summands.items()
        }
    return out


def cmd_dims(args) -> dict:
    b = dims.BifoldTopology(
        kappa=args.kappa,
        b_plus=args.bplus,
        b_1=args.b1,
        sigma_self=args.sigma2,
        chi_sigma=args.chi,
        t=args.t,
    )
    return {
        "dim": str(dims.formal_dim(b)),
        "dim_mod6": str(dims.dim_mod6(b)),
        "parity": dims.dim_parity(b),
    }


def cmd_adhm_verify(args) -> dict:
    n = args.rank
    rep = adhm.build_rep(n)
    inter = adhm.find_intertwiners(rep)
    worst_complex = 0.0
    worst_moment = 0.0
    worst_rank_margin = float("inf")
    rng = np.random.default_rng(0)
    grid = [10.0 ** (k / 3 - 1) for k in range(10)]
    for t1m in grid:
        for t2m in grid:
            t1 = t1m * np.exp(1j * rng.uniform(0, 2 * np.pi))
            t2 = t2m * np.exp(1j * rng.uniform(0, 2 * np.pi))
            d = adhm.scalar_solution(inter, t1, t2)
            res = adhm.adhm_residuals(d)
            scale = max(1.0, abs(t1 * t2))
            worst_complex = max(worst_complex, res["complex"] / scale)
            worst_moment = max(worst_moment, res["moment"] / scale)
            z = (complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal()))
            sa, sb = adhm.min_singular_values(d, z)
            worst_rank_margin = min(worst_rank_margin, sa, sb)
    nu, nu_mod2 = adhm.chern_nu(n)
    degenerate = {}
    for label, point in (
        ("alpha", adhm.DEGENERATE_ALPHA_POINT),
        ("beta", adhm.DEGENERATE_BETA_POINT),
    ):
        alpha, beta = adhm.homogeneous_operators(inter, point)
        sv = np.linalg.svd(alpha if label == "alpha" else beta, compute_uv=False)
        degenerate[f"{label}_min_sv_at_degenerate_point"] = float(sv[-1])
    ok = (
        worst_complex < adhm.TOL_EQ
        and worst_moment < adhm.TOL_EQ
        and worst_rank_margin > adhm.TOL_RANK
        and nu == n
    )
    return {
        "rank": n,
        "max_complex_residual": worst_complex,
        "max_moment_residual": worst_moment,
        "min_rank_margin": worst_rank_margin,
        "nu": nu,
        "nu_mod2": nu_mod2,
        **degenerate,
        "pass": bool(ok),
    }


def cmd_catalogue(args) -> dict:
    if args.verify:
        problems = catalogue.verify_all()
        doc = {"entries": len(catalogue.CATALOGUE), "failures": problems, "pass": not problems}
        _emit(doc, args.format)
        if problems:
            raise SystemExit(1)
        return None
    out = {}
    for e in catalogue.CATALOGUE:
        out[e.name] = {
            "web": e.web_file,
            "diagram": e.diagram_file,
            "tait": e.tait_count,
            "planar_dim": e.planar_dim,
            "dim": e.dim,
            "chi": e.chi,
        }
    return {"entries": out}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="webfoam",
        description="Calculators for webs, foams, and their instanton invariants.",
    )
    parser.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tait", help="Tait colorings, 1-sets, planar dimension")
    p.add_argument("input", help="web or diagram JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_tait)

    p = sub.add_parser("euler", help="Euler characteristic by skein expansion")
    p.add_argument("input", help="diagram JSON file")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("foam-eval", help="evaluate a closed dotted foam expression")
    p.add_argument("expr", help="e.g. 'theta 0 1 2' or '(sum-t2 (sphere 0))'")
    p.set_defaults(func=cmd_foam_eval)

    p = sub.add_parser("module", help="module structure of a catalogued web")
    p.add_argument(
        "--web",
        required=True,
        metavar="NAME",
        help="one of %s, or unlink_N" % ", ".join(sorted(modules.KNOWN_WEBS)),
    )
    p.add_argument("--decompose", action="store_true")
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("dims", help="moduli dimension formulas")
    p.add_argument("--kappa", type=_frac, default=Fraction(0))
    p.add_argument("--bplus", type=int, default=0)
    p.add_argument("--b1", type=int, default=0)
    p.add_argument("--sigma2", type=_frac, default=Fraction(0))
    p.add_argument("--chi", type=int, default=0)
    p.add_argument("--t", type=int, default=0)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("adhm-verify", help="verify the equivariant ADHM construction")
    p.add_argument("--rank", type=int, default=3)
    p.set_defaults(func=cmd_adhm_verify)

    p = sub.add_parser("catalogue", help="bundled examples and expected invariants")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_catalogue)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except SystemExit:
        raise
    except (webs.WebError, foams.FoamError, modules.ModuleError, dims.DimensionError,
            adhm.AdhmError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if doc is not None:
        _emit(doc, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
