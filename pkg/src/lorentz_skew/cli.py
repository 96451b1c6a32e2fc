"""``lorentz-skew`` command-line front end.

Every subcommand writes one JSON report to stdout.  Failures write a JSON
error object to stderr and exit nonzero: 1 for domain or input errors (and a
failed ``verify``), 2 for bad command-line usage.

Configuration and loop arguments are file paths; ``@name`` refers to the
fixture ``name.json`` shipped with the package.
"""

import argparse
import json
import sys
import time
from importlib import resources

import numpy as np

from . import eigen, lorentz, topology
from .battery import run_battery
from .energy import lambda_T, poynting
from .errors import LorentzSkewError, ZeroField
from .minkowski import spatial_vector
from .skew import SkewField


class UsageError(Exception):
    code = "ArgumentError"


class InputError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class ParityMismatch(LorentzSkewError):
    code = "ParityMismatch"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fixture_path(name):
    return resources.files("lorentz_skew") / "fixtures" / f"{name}.json"


def _load_json(path):
    src = fixture_path(path[1:]) if path.startswith("@") else path
    try:
        with open(src, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError("NotFound", f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError("ParseError", f"{path}: {exc}") from None


def _parse(builder, data, what):
    try:
        return builder(data)
    except (AttributeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LorentzSkewError):
            raise
        raise InputError("InvalidInput", f"bad {what}: {exc!r}") from None


def _vec(v):
    return [float(x) for x in np.asarray(v).ravel()]


def cmd_analyze(args):
    config = _parse(topology.config_from_dict, _load_json(args.config), "configuration")
    point = _vec(args.point)
    F = topology.eval_config(config, point)
    results = {
        "E": _vec(F.E),
        "B": _vec(F.B),
        "psi": [topology.psi(F).real, topology.psi(F).imag],
        "eigen": eigen.eigenvalues(F).to_dict(),
        "lambda_T": lambda_T(F),
        "poynting": _vec(poynting(F)),
        "region": topology.region_classify(config, point).value,
    }
    return {"config": args.config, "point": point}, results, 0


def _load_loops(data):
    if isinstance(data, dict) and "loops" in data:
        return [topology.loop_from_dict(d) for d in data["loops"]], True
    return [topology.loop_from_dict(data)], False


def _winding_entry(config, loop):
    report = topology.winding(config, loop)
    parity = topology.eigenvalue_continuation(config, loop)
    if parity != report.parity:
        raise ParityMismatch(
            f"winding {report.winding} disagrees with continuation parity {parity.value}"
        )
    d = report.to_dict()
    d["continuation_parity"] = parity.value
    return d, report.winding


def cmd_winding(args):
    config = _parse(topology.config_from_dict, _load_json(args.config), "configuration")
    loops, many = _parse(_load_loops, _load_json(args.loop), "loop")
    entries = [_winding_entry(config, lp) for lp in loops]
    inputs = {"config": args.config, "loop": args.loop}
    if not many:
        return inputs, entries[0][0], 0
    deg = 0
    for _, n in entries:
        deg = int(np.gcd(deg, abs(n)))
    return inputs, {"loops": [e for e, _ in entries], "degree": deg}, 0


def cmd_verify(args):
    if args.cases < 1:
        raise UsageError("--cases must be at least 1")
    if args.seed < 0:
        raise UsageError("--seed must be nonnegative")
    report = run_battery(seed=args.seed, cases=args.cases)
    results = report.to_dict()
    results["max_residual"] = report.max_residual
    return {"seed": args.seed, "cases": args.cases}, results, 0 if report.passed else 1


def _boost_inputs(args):
    if args.input is not None:
        data = _load_json(args.input)
        try:
            return data["E"], data["B"], data["w"]
        except (KeyError, TypeError):
            raise InputError("InvalidInput", "boost input needs E, B and w") from None
    missing = [n for n in ("E", "B", "w") if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing --{', --'.join(missing)} (or use --input)")
    return args.E, args.B, args.w


def cmd_boost(args):
    E, B, w = _boost_inputs(args)
    try:
        F = SkewField(E, B)
        w = spatial_vector(w)
    except (TypeError, ValueError) as exc:
        raise InputError("InvalidInput", f"bad boost input: {exc}") from None
    res = lorentz.transform_fields(F, w)
    EBp, E2mB2p = res.invariants()
    try:
        scale = lorentz.eigenvector_scale_factor(F, w)
        scale_ratio = lorentz.eigenvector_scale_factor(F, w, method="ratio")
    except ZeroField:
        scale = scale_ratio = None
    if F.is_zero() or eigen.is_null(F):
        w_elim = None
    else:
        w_elim = _vec(lorentz.poynting_eliminating_velocity(F))
    results = {
        "E_prime": _vec(res.E_prime),
        "B_prime": _vec(res.B_prime),
        "invariants": {"EdotB": EBp, "E2mB2": E2mB2p},
        "invariants_before": {"EdotB": F.EdotB, "E2mB2": F.E2 - F.B2},
        "scale_factor": scale,
        "scale_factor_ratio": scale_ratio,
        "poynting_eliminating_velocity": w_elim,
    }
    return {"E": _vec(F.E), "B": _vec(F.B), "w": _vec(w)}, results, 0


def build_parser():
    parser = _Parser(prog="lorentz-skew", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("analyze", cmd_analyze, "evaluate a configuration at a point")
    p.add_argument("--config", required=True)
    p.add_argument("--point", nargs=3, type=float, required=True, metavar=("X", "Y", "Z"))

    p = add("winding", cmd_winding, "winding of psi along a loop (or a list of loops)")
    p.add_argument("--config", required=True)
    p.add_argument("--loop", required=True)

    p = add("verify", cmd_verify, "run the seeded identity battery")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument(
        "--timing", action="store_true", help="include wall time (makes output nondeterministic)"
    )

    p = add("boost", cmd_boost, "fields seen by a moving observer")
    xyz = ("X", "Y", "Z")
    p.add_argument("--E", nargs=3, type=float, metavar=xyz)
    p.add_argument("--B", nargs=3, type=float, metavar=xyz)
    p.add_argument("--w", nargs=3, type=float, metavar=xyz)
    p.add_argument("--input", help="JSON file with keys E, B, w")
    return parser


def _emit(obj, stream, pretty):
    json.dump(obj, stream, indent=2 if pretty else None, sort_keys=False)
    stream.write("\n")


def main(argv=None):
    pretty = False
    try:
        args = build_parser().parse_args(argv)
        pretty = args.pretty
        start = time.perf_counter()
        inputs, results, status = args.func(args)
        report = {"command": args.command, "inputs_echo": inputs, "results": results}
        if args.command == "verify":
            report["seed"] = args.seed
            if args.timing:
                report["wall_time_ms"] = 1000 * (time.perf_counter() - start)
        else:
            report["wall_time_ms"] = 1000 * (time.perf_counter() - start)
        _emit(report, sys.stdout, pretty)
        return status
    except UsageError as exc:
        _emit({"error": exc.code, "message": str(exc)}, sys.stderr, pretty)
        return 2
    except InputError as exc:
        _emit({"error": exc.code, "message": str(exc)}, sys.stderr, pretty)
        return 1
    except LorentzSkewError as exc:
        _emit(exc.to_dict(), sys.stderr, pretty)
        return 1


if __name__ == "__main__":
    sys.exit(main())
