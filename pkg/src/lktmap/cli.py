"""
Command line interface: ``lktmap {lkt,verify,table,expand,orbit-info}``.

JSON output always has the top-level keys ``n``, ``orbit``, ``input``,
``result``, ``diagnostics`` and ``version``; weights are integer arrays and
virtual modules are arrays of ``{"param", "coeff"}``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .cousin import verify_zuckerman
from .errors import AmbiguityError, BoxTooSmall, LKTError, TieError, TruncationError
from .orbits import build_orbit, default_box, family_name, parse_orbit
from .pushforward import closed_form_lkt, lkt_map, verify_bijection
from .tempiric import expand_k_irrep


def _ints(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in s.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _truncation(args) -> int | None:
    if getattr(args, "truncate", None) is not None:
        return args.truncate
    env = os.environ.get("LV_TRUNCATION")
    if env:
        return int(env)
    return None


def _envelope(n, orbit, inp, result, diagnostics) -> dict:
    return {"n": n, "orbit": orbit, "input": inp, "result": result,
            "diagnostics": diagnostics, "version": __version__}


def _weight(w) -> str:
    return ",".join(str(c) for c in w)


def _closed_form(o, tau):
    fam = family_name(o.n, o.partition)
    if fam is None:
        return None
    try:
        return closed_form_lkt(fam, o.n, tau)
    except ValueError:
        return None


def _emit(args, payload: dict, text: str, tsv: str) -> None:
    fmt = args.format
    body = json.dumps(payload, indent=2) if fmt == "json" else (tsv if fmt == "tsv" else text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _error_payload(e: Exception) -> dict:
    out = {"type": type(e).__name__, "message": str(e)}
    if getattr(e, "candidates", None):
        out["candidates"] = [list(c) for c in e.candidates]
    return out


def _orbit_of(args):
    part = parse_orbit(args.n, args.orbit)
    return build_orbit(args.n, part)


def cmd_lkt(args) -> int:
    o = _orbit_of(args)
    tau = args.tau
    inp = {"tau": list(tau), "partition": list(o.partition)}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BoxTooSmall)
        try:
            res = lkt_map(o, tau, args.box, _truncation(args))
        except (TieError, AmbiguityError, TruncationError) as e:
            payload = _envelope(o.n, o.name, inp, None, {"error": _error_payload(e)})
            _emit(args, payload, f"error: {e}", f"error\t{type(e).__name__}")
            return 2
    cf = _closed_form(o, res.tau)
    result = res.to_dict()
    result["closed_form"] = None if cf is None else list(cf)
    result["matches_closed_form"] = None if cf is None else tuple(res.lkt) == cf
    diag = dict(res.diagnostics)
    diag["warnings"] = [str(w.message) for w in caught]
    payload = _envelope(o.n, o.name, inp, result, diag)
    text = (f"orbit {o.name} {list(o.partition)}  tau {res.tau}\n"
            f"k = {res.k}  lift = {res.lift}\n"
            f"largest parameter {res.largest_param}  lkt {res.lkt}")
    if cf is not None:
        text += f"\nclosed form {cf} ({'match' if tuple(res.lkt) == cf else 'MISMATCH'})"
    tsv = "\t".join([_weight(res.tau), _weight(res.lkt), _weight(res.k), _weight(res.largest_param),
                     "" if cf is None else _weight(cf)])
    _emit(args, payload, text, tsv)
    return 0


def _grid(o, m: int) -> list[tuple[int, ...]]:
    from .weights import dominant_weights_in_ball
    g = len(o.diagonals)
    if o.sp_rank:
        sp = [w for w in dominant_weights_in_ball(o.sp_rank, o.sp_rank * m * m) if not w or w[0] <= m]
    else:
        sp = [()]
    import itertools
    diag = list(itertools.product(range(m + 1), repeat=g))
    return sorted(d + s for d in diag for s in sp)


def cmd_table(args) -> int:
    o = _orbit_of(args)
    grid = _grid(o, args.max)
    bound = _truncation(args)

    def one(tau):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", BoxTooSmall)
                r = lkt_map(o, tau, args.box, bound)
            cf = _closed_form(o, tau)
            return {"tau": list(tau), "lkt": list(r.lkt), "k": list(r.k), "param": list(r.largest_param),
                    "closed_form": None if cf is None else list(cf)}
        except LKTError as e:
            return {"tau": list(tau), "lkt": None, "error": _error_payload(e)}

    if args.jobs > 1:
        with ThreadPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(one, grid))
    else:
        rows = [one(t) for t in grid]
    payload = _envelope(o.n, o.name, {"max": args.max, "partition": list(o.partition)}, rows,
                        {"box": args.box if args.box is not None else default_box(o.n)})
    lines = ["tau\tlkt\tk\tparam\tclosed_form"]
    text = [f"orbit {o.name} {list(o.partition)}"]
    for r in rows:
        if r["lkt"] is None:
            lines.append(f"{_weight(r['tau'])}\terror\t\t\t")
            text.append(f"{tuple(r['tau'])} -> error {r['error']['type']}")
            continue
        cf = "" if r["closed_form"] is None else _weight(r["closed_form"])
        lines.append("\t".join([_weight(r["tau"]), _weight(r["lkt"]), _weight(r["k"]), _weight(r["param"]), cf]))
        text.append(f"{tuple(r['tau'])} -> {tuple(r['lkt'])}")
    _emit(args, payload, "\n".join(text), "\n".join(lines))
    return 0 if all(r["lkt"] is not None for r in rows) else 2


def cmd_expand(args) -> int:
    tau = args.ktype
    if len(tau) != args.n:
        raise SystemExit(f"--ktype needs {args.n} entries")
    try:
        v = expand_k_irrep(tau, _truncation(args))
    except TruncationError as e:
        payload = _envelope(args.n, None, {"ktype": list(tau)}, None, {"error": _error_payload(e)})
        _emit(args, payload, f"error: {e}", f"error\t{type(e).__name__}")
        return 2
    payload = _envelope(args.n, None, {"ktype": list(tau)}, v.to_list(), {"terms": len(v)})
    text = "\n".join(f"{c:+d} {p}" for p, c in v)
    tsv = "\n".join(["param\tcoeff"] + [f"{_weight(p)}\t{c}" for p, c in v])
    _emit(args, payload, text, tsv)
    return 0


def cmd_orbit_info(args) -> int:
    sel = args.partition if args.partition else args.orbit
    if not sel:
        raise SystemExit("give --partition or --orbit")
    o = build_orbit(args.n, parse_orbit(args.n, sel))
    result = {
        "partition": list(o.partition),
        "h_weights": list(o.h_weights),
        "levi_shape": str(o.levi_shape),
        "stab_shape": o.stab_str(),
        "s1_weights": [list(w) for w in o.s1_weights],
        "rho_u_T": list(o.rho_u_T),
        "lift_dim": o.lift_dim,
        "lifts_supported": o.supported,
    }
    payload = _envelope(o.n, o.name, {"partition": list(o.partition)}, result, {})
    text = "\n".join(f"{k}: {v}" for k, v in result.items())
    tsv = "\n".join(f"{k}\t{v}" for k, v in result.items())
    _emit(args, payload, text, tsv)
    return 0


def cmd_verify(args) -> int:
    t0 = time.time()
    checks = {}
    if args.zuckerman:
        trunc = _truncation(args) or 10
        checks["zuckerman"] = verify_zuckerman(args.n, trunc)
    else:
        rep = verify_bijection(args.n, args.max, args.box, _truncation(args), jobs=args.jobs)
        rep.pop("rows")
        checks["bijection"] = rep
    ok = all(c["ok"] for c in checks.values())
    payload = _envelope(args.n, None, {"max": args.max, "zuckerman": args.zuckerman},
                        {"ok": ok, "checks": checks}, {"seconds": round(time.time() - t0, 3)})
    text = "\n".join(f"{name}: {'pass' if c['ok'] else 'FAIL'}" for name, c in checks.items())
    tsv = "\n".join(f"{name}\t{'pass' if c['ok'] else 'fail'}" for name, c in checks.items())
    _emit(args, payload, text, tsv)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lktmap", description="Lowest K-type map for GL(n, H).")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt="text"):
        sp.add_argument("--n", type=_positive, required=True, help="rank of GL(n, H)")
        sp.add_argument("--format", choices=["json", "tsv", "text"], default=fmt)
        sp.add_argument("--out", help="write output to this path")
        sp.add_argument("--truncate", type=_positive, default=None,
                        help="truncation radius (default: LV_TRUNCATION or automatic)")

    sp = sub.add_parser("lkt", help="lowest K-type of one stabilizer representation")
    common(sp)
    sp.add_argument("--orbit", required=True, help="zero, principal, subregular, middle, or a partition like 2,1")
    sp.add_argument("--tau", type=_ints, required=True)
    sp.add_argument("--box", type=_nonneg, default=None)
    sp.set_defaults(func=cmd_lkt)

    sp = sub.add_parser("table", help="the map over a grid of inputs")
    common(sp, "tsv")
    sp.add_argument("--orbit", required=True)
    sp.add_argument("--max", type=_nonneg, required=True, help="largest entry of the input grid")
    sp.add_argument("--box", type=_nonneg, default=None)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("expand", help="tempiric expansion of a K-type")
    common(sp)
    sp.add_argument("--ktype", type=_ints, required=True)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("orbit-info", help="orbit data of a partition")
    common(sp)
    sp.add_argument("--partition", default=None)
    sp.add_argument("--orbit", default=None)
    sp.set_defaults(func=cmd_orbit_info)

    sp = sub.add_parser("verify", help="closed-form, bijection or resolution checks")
    common(sp, "json")
    sp.add_argument("--max", type=_nonneg, default=6)
    sp.add_argument("--box", type=_nonneg, default=None)
    sp.add_argument("--zuckerman", action="store_true")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, NotImplementedError) as e:
        print(f"lktmap: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
