"""Command line front end.

Every library capability is reachable in one invocation.  Output is exact
by default (rationals as p/q strings); --json and --csv switch the shape,
--approx adds decimal renderings.  Exit codes: 0 success, 1 domain error,
2 usage/syntax error, 3 a tri-state verdict came back Unknown.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classf as cf
from . import density as dens
from . import distlib as dl
from . import euler as eu
from . import oeis as oe
from . import posdef as pd
from . import spectra as sp
from .config import load_config
from .errors import FclError, ParseError
from .exactalg import Poly, rat_str
from .parser import parse_expr, to_classf, to_rtransform


def _frac(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"expected a rational number, got {s!r}") from e


def _range(s: str):
    if ":" not in s:
        raise ParseError(f"expected lo:hi, got {s!r}")
    lo, hi = s.split(":", 1)
    return _frac(lo), _frac(hi)


def _f_from(args, attr="expr") -> cf.ClassF:
    ast = parse_expr(getattr(args, attr))
    if getattr(args, "from_r", False):
        f = cf.from_r(to_rtransform(ast))
    else:
        f = to_classf(ast)
    power = getattr(args, "power", None)
    if power is not None:
        f = cf.free_power(f, _frac(power))
    return f


def _classf_payload(f: cf.ClassF, args) -> dict:
    out = {"P": [rat_str(c) for c in f.P.coeffs],
           "Q": [rat_str(c) for c in f.Q.coeffs],
           "pretty": repr(f)}
    return out


def _alg_payload(a, digits: int) -> dict:
    if isinstance(a, (int, Fraction)):
        return {"value": rat_str(Fraction(a))}
    q = a.as_fraction()
    if q is not None:
        return {"value": rat_str(q)}
    d = max(digits, 12)
    r = a.refined_to(Fraction(1, 10 ** d))
    # outward-rounded endpoints with tame denominators keep the enclosure
    scale = 10 ** d
    lo = Fraction((r.lo * scale).__floor__(), scale)
    hi = Fraction((r.hi * scale).__ceil__(), scale)
    ints, _ = r.defining.int_coeffs()
    return {"defining": [str(c) for c in ints],
            "interval": [rat_str(lo), rat_str(hi)],
            "approx": float(r)}


def _poly_payload(p: Poly) -> dict:
    return {"coeffs": [rat_str(c) for c in p.coeffs], "pretty": p.to_str()}


# ----------------------------------------------------------------------
# handlers: each returns (payload, exit_code)


def _cmd_moments(args):
    f = _f_from(args)
    m = cf.moments(f, args.order)
    return {"s": [rat_str(t) for t in m.terms]}, 0


def _cmd_cumulants(args):
    f = _f_from(args)
    r = cf.cumulants(f, max(args.order, 1))
    return {"r": [rat_str(t) for t in r.terms]}, 0


def _cmd_charpoly(args):
    return {"chi": _poly_payload(sp.char_poly(_f_from(args)))}, 0


def _cmd_chart(args):
    x = sp.char_poly_t(_f_from(args))
    return {"chi_t": {"w_coeffs": [[rat_str(c) for c in p.coeffs] for p in x.wcoeffs],
                      "pretty": x.to_str()}}, 0


def _cmd_rr0(args):
    return {"rr0": sp.is_rr0(_f_from(args))}, 0


def _cmd_rr(args):
    return {"rr": sp.is_rr(_f_from(args))}, 0


def _cmd_singular(args):
    return {"singular": sp.is_singular(_f_from(args))}, 0


def _cmd_nset(args):
    ns = sp.n_set(_f_from(args))
    return {"z_poly": _poly_payload(ns.z_poly),
            "real_members": [_alg_payload(r, args.precision) for r in ns.real_members],
            "nonreal_pair_count": ns.nonreal_pair_count,
            "all_real": ns.all_real}, 0


def _verdict_payload(hv: pd.HankelVerdict) -> dict:
    return {"status": hv.status, "order": hv.order,
            "determinant": rat_str(hv.determinant) if hv.is_negative else None,
            "minors": [rat_str(m) for m in hv.minors],
            "note": hv.describe()}


def _cmd_hankel(args):
    return {"hankel": _verdict_payload(pd.is_moment_positive_up_to(_f_from(args), args.order))}, 0


def _cmd_fid(args):
    return {"fid": _verdict_payload(pd.fid_check(_f_from(args), args.order))}, 0


def _cmd_convolve(args):
    f1, f2 = _f_from(args, "expr"), _f_from(args, "expr2")
    return _classf_payload(cf.boxplus(f1, f2), args), 0


def _cmd_power(args):
    return _classf_payload(cf.free_power(_f_from(args), _frac(args.t)), args), 0


def _cmd_compose(args):
    outer, inner = _f_from(args, "expr"), _f_from(args, "expr2")
    return _classf_payload(cf.compose(outer, inner), args), 0


def _cmd_translate(args):
    return _classf_payload(cf.translate(_f_from(args), _frac(args.u)), args), 0


def _cmd_dilate(args):
    return _classf_payload(cf.dilate(_f_from(args), _frac(args.c)), args), 0


def _cmd_criticals(args):
    lo, hi = _range(args.range)
    rep = sp.critical_ts(_f_from(args), lo, hi)
    return {"range": [rat_str(lo), rat_str(hi)],
            "criticals": [dict(_alg_payload(c, args.precision), kind=k)
                          for c, k in zip(rep.criticals, rep.kinds)],
            "rr0_verdicts": [v.value for v in rep.rr0_verdicts],
            "samples": [rat_str(s) for s in rep.samples]}, 0


def _cmd_density(args):
    lo, hi = _range(args.range)
    eps = tuple(float(Fraction(e)) for e in args.eps.split(",")) if args.eps else dens._DEFAULT_EPS
    table = dens.density_grid(_f_from(args), float(lo), float(hi), args.grid, eps)
    rows = [{"x": x, "f": v} for x, v in table.rows()]
    return {"density": {"rows": rows, "mass_estimate": table.mass_estimate,
                        "eps_used": list(table.eps_used)},
            "_csv": dens.density_csv(table)}, 0


def _cmd_euler(args):
    if args.ck is not None:
        res = eu.ck_candidates(args.k, _frac(args.ck))
        rep = res["report"]
        payload = {
            "criticals": [dict(_alg_payload(c, args.precision), kind=k)
                          for c, k in zip(rep.criticals, rep.kinds)],
            "rr0_verdicts": [v.value for v in rep.rr0_verdicts],
            "candidate": None if res["candidate"] is None
            else _alg_payload(res["candidate"], args.precision)}
        return {"ck": payload}, 0
    tab = eu.euler_table(args.k)
    f = eu.nk_classf(args.k) if args.k >= 1 else None
    out = {"k": args.k,
           "e_row": [rat_str(c) for c in tab.e_row],
           "e_tilde_row": [rat_str(c) for c in tab.e_tilde_row]}
    if f is not None:
        out["nk_classf"] = _classf_payload(f, args)
    return {"euler": out}, 0


def _cmd_fuss(args):
    f = dl.fuss_f(args.r)
    ms = [rat_str(dl.fuss_moment(args.r, n)) for n in range(args.order + 1)]
    chi_ok = sp.char_poly(f) == dl.fuss_chi(args.r)
    return {"fuss": dict(_classf_payload(f, args), moments=ms, chi_check=chi_ok)}, 0


def _cmd_dist(args):
    kind = args.kind
    if kind == "dirac":
        f = dl.dirac(_frac(args.params[0]))
    elif kind == "wigner":
        f = dl.wigner(_frac(args.params[0]))
    elif kind == "mp":
        f = dl.mp(_frac(args.params[0]), _frac(args.params[1]))
    else:
        raise ParseError(f"unknown family {kind!r}")
    rt = cf.r_transform(f)
    return {"dist": dict(_classf_payload(f, args),
                         chi=_poly_payload(sp.char_poly(f)),
                         r_transform=repr(rt))}, 0


def _cmd_deconv(args):
    if args.kind == "wmp":
        rec = dl.deconv_wmp(_frac(args.params[0]), _frac(args.params[1]))
    elif args.kind == "mpmp":
        rec = dl.deconv_mpmp(*[_frac(p) for p in args.params[:3]])
    else:
        raise ParseError(f"unknown deconvolution family {args.kind!r}")
    return {"deconv": dict(_classf_payload(rec["f"], args),
                           chi=_poly_payload(rec["chi"]),
                           chi_claimed=_poly_payload(rec["chi_claimed"]),
                           chi_factored_check=rec["chi_factored_check"])}, 0


def _atom_payload(a: dl.Atom, digits: int) -> dict:
    if a.kind in ("rpoly",):
        return {"kind": a.kind, "r_part": a.params[0].to_str()}
    if a.kind == "rfun":
        return {"kind": a.kind, "r_part": repr(a.params[0])}
    return {"kind": a.kind,
            "params": [_alg_payload(p, digits) for p in a.params]}


def _cmd_monotone(args):
    digits = args.precision
    kind = args.kind
    ps = [_frac(p) for p in args.params]
    if kind == "wmp":
        rec = dl.monotone_family("wmp", t=ps[0], v=ps[1], s=ps[2])
    elif kind == "mpw":
        rec = dl.monotone_family("mpw", v=ps[0], s=ps[1], t=ps[2])
    elif kind == "mpmp":
        rec = dl.monotone_family("mpmp", u=ps[0], s=ps[1], v=ps[2], t=ps[3])
    elif kind == "ww":
        rec = dl.monotone_family("ww", s=ps[0], t=ps[1])
    elif kind == "dirac-w":
        rec = dl.dirac_monotone(ps[0], "wigner", ps[1])
    elif kind == "dirac-mp":
        rec = dl.dirac_monotone(ps[0], "mp", ps[1], ps[2])
    else:
        raise ParseError(f"unknown monotone kind {kind!r}")
    out = dict(_classf_payload(rec["f"], args))
    if "chi" in rec:
        out["chi"] = _poly_payload(rec["chi"])
        out["chi_check"] = rec["chi_check"]
    if rec.get("decomposition") is not None:
        out["decomposition"] = [_atom_payload(a, digits) for a in rec["decomposition"]]
        out["identity_check"] = rec["identity_check"]
    return {"monotone": out}, 0


def _cmd_oeis_match(args):
    cfg = _config_of(args)
    f = _f_from(args)
    m = cf.moments(f, args.order)
    hits = oe.match(m, min_overlap=args.min_overlap, fixtures=oe.load_fixtures(cfg))
    return {"matches": [{"a_number": a, "transform": t} for a, t in hits]}, 0


def _cmd_oeis_fetch(args):
    cfg = _config_of(args)
    fx = oe.fetch(args.a_number, cfg)
    return {"fixture": {"a_number": fx.a_number, "offset": fx.offset,
                        "terms": [str(t) for t in fx.terms],
                        "source": fx.source, "note": fx.note}}, 0


def _cmd_region(args):
    if args.kind == "cg":
        rows = ["x,y,side"]
        n = args.samples
        for i in range(n + 1):
            u2 = Fraction(1, 6) + Fraction(i, n) * (Fraction(1, 2) - Fraction(1, 6))
            uf = float(u2) ** 0.5
            x = uf * (2 * float(u2) - 1)
            y = float(u2) * (1 - 3 * float(u2)) / 3
            rows.append(f"{x!r},{y!r},lower")
            rows.append(f"{-x!r},{y!r},lower")
        for i in range(n + 1):
            y = 1 / 36 + (1 / 4 - 1 / 36) * i / n
            inner = 6 * y * (y**0.5 - 2 * y)
            x = 2 * (inner ** 0.5) if inner > 0 else 0.0
            rows.append(f"{x!r},{y!r},upper")
            rows.append(f"{-x!r},{y!r},upper")
        return {"_csv": "\n".join(rows) + "\n", "region": "cg"}, 0
    if args.kind == "lb":
        pts = sp.lb_curve(_frac(args.b), args.samples)
        rows = ["c,d"] + [f"{float(c)!r},{float(d)!r}" for c, d in pts]
        return {"_csv": "\n".join(rows) + "\n", "region": "lb",
                "points": [[rat_str(c), rat_str(d)] for c, d in pts]}, 0
    if args.kind == "deg3":
        rows = ["a,b,rr0"]
        n = args.samples
        for i in range(n + 1):
            a = Fraction(-4) + Fraction(8 * i, n)
            for j in range(n + 1):
                b = Fraction(-4) + Fraction(8 * j, n)
                rows.append(f"{float(a)!r},{float(b)!r},{int(sp.deg3_rr0(a, b, 1))}")
        return {"_csv": "\n".join(rows) + "\n", "region": "deg3"}, 0
    raise ParseError(f"unknown region {args.kind!r}")


def _config_of(args):
    return load_config({
        "fixtures": getattr(args, "fixtures", None),
        "network": getattr(args, "network", None),
        "precision": getattr(args, "precision", None),
        "config": getattr(args, "config", None),
    })


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--csv", action="store_true", help="emit CSV where tabular")
    common.add_argument("--approx", type=int, metavar="DIGITS", default=None,
                        help="add decimal approximations with this many digits")
    common.add_argument("--precision", type=int, default=50,
                        help="working precision (digits) for interval refinement")
    common.add_argument("--fixtures", default=None, help="extra fixture/cache directory")
    common.add_argument("--network", choices=["on", "off"], default=None)
    common.add_argument("--config", default=None, help="config file path")

    fexpr = argparse.ArgumentParser(add_help=False)
    fexpr.add_argument("expr", help="rational expression in w")
    fexpr.add_argument("--from-r", action="store_true",
                       help="treat the expression as an R-transform")
    fexpr.add_argument("--power", default=None, metavar="T",
                       help="apply the free power T before the operation")

    p = argparse.ArgumentParser(prog="fcl",
                                description="exact calculus on rational F-functions")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, parents=(), **kw):
        sp_ = sub.add_parser(name, parents=[common, *parents], **kw)
        sp_.set_defaults(fn=fn)
        return sp_

    s = add("moments", _cmd_moments, [fexpr]); s.add_argument("--order", type=int, default=10)
    s = add("cumulants", _cmd_cumulants, [fexpr]); s.add_argument("--order", type=int, default=10)
    add("charpoly", _cmd_charpoly, [fexpr])
    add("chart", _cmd_chart, [fexpr])
    add("rr0", _cmd_rr0, [fexpr])
    add("rr", _cmd_rr, [fexpr])
    add("singular", _cmd_singular, [fexpr])
    add("nset", _cmd_nset, [fexpr])
    s = add("hankel", _cmd_hankel, [fexpr]); s.add_argument("--order", type=int, default=12)
    s = add("fid", _cmd_fid, [fexpr]); s.add_argument("--order", type=int, default=12)
    s = add("convolve", _cmd_convolve, [fexpr]); s.add_argument("expr2")
    s = add("power", _cmd_power, [fexpr]); s.add_argument("t")
    s = add("compose", _cmd_compose, [fexpr]); s.add_argument("expr2", help="inner F")
    s = add("translate", _cmd_translate, [fexpr]); s.add_argument("u")
    s = add("dilate", _cmd_dilate, [fexpr]); s.add_argument("c")
    s = add("criticals", _cmd_criticals, [fexpr]); s.add_argument("--range", required=True)
    s = add("density", _cmd_density, [fexpr])
    s.add_argument("--range", required=True)
    s.add_argument("--grid", type=int, default=201)
    s.add_argument("--eps", default=None, help="comma-separated schedule")
    s = add("euler", _cmd_euler)
    s.add_argument("k", type=int)
    s.add_argument("--ck", default=None, metavar="T_HI",
                   help="scan (0, T_HI) for the threshold candidate")
    s = add("fuss", _cmd_fuss)
    s.add_argument("r", type=int)
    s.add_argument("--order", type=int, default=10)
    s = add("dist", _cmd_dist)
    s.add_argument("kind", choices=["dirac", "wigner", "mp"])
    s.add_argument("params", nargs="+")
    s = add("deconv", _cmd_deconv)
    s.add_argument("kind", choices=["wmp", "mpmp"])
    s.add_argument("params", nargs="+")
    s = add("monotone", _cmd_monotone)
    s.add_argument("kind", choices=["wmp", "mpw", "mpmp", "ww", "dirac-w", "dirac-mp"])
    s.add_argument("params", nargs="+")
    s = add("oeis-match", _cmd_oeis_match, [fexpr])
    s.add_argument("--order", type=int, default=12)
    s.add_argument("--min-overlap", type=int, default=6)
    s = add("oeis-fetch", _cmd_oeis_fetch)
    s.add_argument("a_number")
    s = add("region", _cmd_region)
    s.add_argument("kind", choices=["cg", "lb", "deg3"])
    s.add_argument("--b", default="1")
    s.add_argument("--samples", type=int, default=64)
    return p


def _approximate(obj, digits):
    """Recursively add float renderings next to exact strings."""
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            out[k] = _approximate(v, digits)
            if k in ("value", "determinant") and isinstance(v, str) and v:
                try:
                    out[k + "_approx"] = f"{float(Fraction(v)):.{digits}g}"
                except ValueError:
                    pass
        return out
    if isinstance(obj, list):
        return [_approximate(v, digits) for v in obj]
    return obj


def _render_text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def _has_unknown(obj) -> bool:
    if isinstance(obj, dict):
        return any(_has_unknown(v) for v in obj.values())
    if isinstance(obj, list):
        return any(_has_unknown(v) for v in obj)
    return obj == "unknown"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.fn(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (FclError, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    csv_text = payload.pop("_csv", None)
    if args.csv and csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        if args.approx is not None:
            payload = _approximate(payload, args.approx)
        if args.json:
            print(json.dumps(payload, indent=1))
        else:
            print(_render_text(payload))
    if code == 0 and _has_unknown(payload):
        return 3
    return code


if __name__ == "__main__":
    sys.exit(main())
