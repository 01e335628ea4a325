"""Command-line interface: ``orlicz <command> ...``.

Exit codes: 0 pass, 1 fail, 2 precondition refusal.  Reports are JSON on
stdout or in the file given by ``--out``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import bench
from .conditions import hormander_functional, mihlin_functional
from .errors import OrliczError, PreconditionError
from .grid import load_grid_function, save_grid_function
from .norms import luxemburg_norm, weak_orlicz_norm
from .operators import (SampledSymbol, apply_fio, apply_multiplier, apply_psdo_general,
                        apply_psdo_kn, transfer_quantization)
from .symbols import PHASE_CATALOG, SYMBOL_CATALOG, catalog_phase, catalog_symbol
from .young import BUILTIN_NAMES, GridConfig, YoungFunction, compute_exponents, make_builtin

EXIT_PASS, EXIT_FAIL, EXIT_REFUSED = 0, 1, 2


def _load_phi(spec: str) -> YoungFunction:
    """A JSON descriptor file, or a built-in name such as ``power:2``."""
    path = Path(spec)
    if path.exists():
        return YoungFunction.from_dict(json.loads(path.read_text()))
    name, _, params = spec.partition(":")
    if name not in BUILTIN_NAMES:
        raise SystemExit(f"--phi: {spec!r} is neither a file nor a built-in ({', '.join(BUILTIN_NAMES)})")
    return make_builtin(name, [float(p) for p in params.split(",") if p])


def _params(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise SystemExit(f"--param expects key=value, got {item!r}")
        out[key] = float(val)
    return out


def _emit(args, payload) -> None:
    text = bench.dumps(payload)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_exponents(args) -> int:
    phi = _load_phi(args.phi)
    cfg = GridConfig(args.t_min, args.t_max, args.n_points)
    _emit(args, compute_exponents(phi, cfg).to_dict())
    return EXIT_PASS


def cmd_norm(args) -> int:
    f = load_grid_function(args.f)
    phi = _load_phi(args.phi)
    res = weak_orlicz_norm(f, phi) if args.weak else luxemburg_norm(f, phi)
    _emit(args, {"norm": "weak-orlicz" if args.weak else "luxemburg", **res.to_dict()})
    return EXIT_PASS


def cmd_check_mihlin(args) -> int:
    a = catalog_symbol(args.symbol, args.dim, **_params(args.param))
    rep = mihlin_functional(a, args.dim)
    _emit(args, {"symbol": args.symbol, "dim": args.dim, **rep.to_dict()})
    return EXIT_PASS if np.isfinite(rep.value) else EXIT_FAIL


def cmd_check_hormander(args) -> int:
    a = catalog_symbol(args.symbol, args.dim, **_params(args.param))
    rep = hormander_functional(a, args.dim)
    _emit(args, {"symbol": args.symbol, "dim": args.dim, **rep.to_dict()})
    return EXIT_PASS if np.isfinite(rep.value) else EXIT_FAIL


def cmd_apply(args) -> int:
    f = load_grid_function(args.input)
    a = catalog_symbol(args.symbol, f.dim, **_params(args.param))
    if args.cutoff:
        a = a.with_cutoff(args.cutoff)
    info = {}
    if args.op == "multiplier":
        g = apply_multiplier(a, f, info)
    elif args.op == "psdo-kn":
        g = apply_psdo_kn(a, f)
    elif args.op == "psdo":
        g = apply_psdo_general(a, args.A, f)
    else:
        if not args.phase:
            raise PreconditionError("--op fio needs --phase")
        g = apply_fio(a, catalog_phase(args.phase, f.dim, **_params(args.phase_param)), f)
    save_grid_function(g, args.output)
    _emit(args, {"op": args.op, "symbol": args.symbol, "output": str(args.output),
                 "dim": g.dim, "n": g.n, "extent": g.extent,
                 "zero_mode_defined": info.get("zero_mode_defined")})
    return EXIT_PASS


def cmd_transfer(args) -> int:
    a1 = catalog_symbol(args.a1, 1, **_params(args.param))
    s1 = SampledSymbol.from_symbol(a1, args.x_extent, args.nx, args.xi_extent, args.nk)
    s2 = transfer_quantization(s1, args.A1, args.A2)
    back = transfer_quantization(s2, args.A2, args.A1)
    if args.output:
        np.savez(args.output, x_extent=s2.x_extent, xi_extent=s2.xi_extent, values=s2.values)
    _emit(args, {"a1": args.a1, "A1": args.A1, "A2": args.A2,
                 "round_trip_error": float(np.max(np.abs(back.values - s1.values))),
                 "max_change": float(np.max(np.abs(s2.values - s1.values))),
                 "output": args.output})
    return EXIT_PASS


def cmd_bench(args) -> int:
    spec = bench.ExperimentSpec.from_json(Path(args.experiment).read_text())
    rep = bench.run_boundedness(spec)
    _emit(args, rep.to_dict())
    return EXIT_PASS if rep.bounded else EXIT_FAIL


def cmd_reproduce(args) -> int:
    ids = bench.CASE_IDS if args.case == "all" else (args.case,)
    results = [bench.run_check(c).to_dict() for c in ids]
    _emit(args, results[0] if len(results) == 1 else {"schema": bench.SCHEMA_VERSION,
                                                      "cases": results})
    return EXIT_PASS if all(r["passed"] for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orlicz", description=__doc__.splitlines()[0])
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("exponents", help="p_phi, q_phi and the Delta2/Lambda checks")
    s.add_argument("phi", help="Young function JSON file or built-in (e.g. power:2)")
    s.add_argument("--t-min", type=float, default=1e-6)
    s.add_argument("--t-max", type=float, default=1e6)
    s.add_argument("--n-points", type=int, default=100_000)
    s.set_defaults(fn=cmd_exponents)

    s = sub.add_parser("norm", help="Luxemburg or weak-Orlicz norm of a grid file")
    s.add_argument("f")
    s.add_argument("--phi", required=True)
    s.add_argument("--weak", action="store_true")
    s.set_defaults(fn=cmd_norm)

    for name, fn in (("check-mihlin", cmd_check_mihlin), ("check-hormander", cmd_check_hormander)):
        s = sub.add_parser(name, help="multiplier condition functional of a catalog symbol")
        s.add_argument("symbol", choices=sorted(SYMBOL_CATALOG))
        s.add_argument("--dim", type=int, default=1)
        s.add_argument("--param", action="append", metavar="KEY=VALUE")
        s.set_defaults(fn=fn)

    s = sub.add_parser("apply", help="apply an operator to a grid file")
    s.add_argument("--op", required=True, choices=["multiplier", "psdo-kn", "psdo", "fio"])
    s.add_argument("--symbol", required=True, choices=sorted(SYMBOL_CATALOG))
    s.add_argument("--param", action="append", metavar="KEY=VALUE")
    s.add_argument("--input", required=True)
    s.add_argument("--output", required=True)
    s.add_argument("--A", type=float, default=0.0, help="quantization parameter for --op psdo")
    s.add_argument("--phase", choices=sorted(PHASE_CATALOG))
    s.add_argument("--phase-param", action="append", metavar="KEY=VALUE")
    s.add_argument("--cutoff", type=float, help="zero the symbol for |xi| < cutoff")
    s.set_defaults(fn=cmd_apply)

    s = sub.add_parser("transfer", help="change the quantization of a sampled symbol (d = 1)")
    s.add_argument("--a1", required=True, choices=sorted(SYMBOL_CATALOG))
    s.add_argument("--param", action="append", metavar="KEY=VALUE")
    s.add_argument("--A1", type=float, required=True)
    s.add_argument("--A2", type=float, required=True)
    s.add_argument("--x-extent", type=float, default=24.0)
    s.add_argument("--nx", type=int, default=256)
    s.add_argument("--xi-extent", type=float, default=16.0)
    s.add_argument("--nk", type=int, default=256)
    s.add_argument("--output", help="save the transferred samples as .npz")
    s.set_defaults(fn=cmd_transfer)

    s = sub.add_parser("bench", help="empirical boundedness run from an experiment JSON")
    s.add_argument("experiment")
    s.set_defaults(fn=cmd_bench)

    s = sub.add_parser("reproduce", help="run a scripted check")
    s.add_argument("case", choices=list(bench.CASE_IDS) + ["all"])
    s.set_defaults(fn=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PreconditionError as exc:
        _emit(args, {"refused": True, "error": type(exc).__name__, "message": str(exc)})
        return EXIT_REFUSED
    except OrliczError as exc:
        _emit(args, {"refused": False, "error": type(exc).__name__, "message": str(exc)})
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
