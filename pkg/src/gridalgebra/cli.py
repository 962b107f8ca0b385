"""Command-line entry point.

One binary with subcommands; JSON is the single machine format. The
result payload written to stdout (or --out) is deterministic: identical
inputs and flags produce identical bytes. Wall time goes to stderr so it
never perturbs the payload.

Exit codes: 0 success (decide-sft: nonempty; verify: pass), 1 decide-sft
empty / verify fail, 2 decide-sft unknown, 64 usage error, 65 input format
error, 70 domain errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .algebra import LaurentPoly, domain_from_name
from .annihilator import find_annihilator, verify as verify_annihilator
from .applications import (
    AntennaProblem,
    ClusterTile,
    antenna_classify,
    antenna_verify,
    cotiler_decision,
    cotiler_sft,
    exact_cover_on_torus,
)
from .configuration import (
    Patch,
    TorusConfig,
    complexity,
    extract_patterns,
    rectangle_complexity_profile,
)
from .errors import GridAlgebraError, InputFormatError, UsageError
from .formats import (
    annihilator_result_from_json,
    annihilator_result_to_json,
    decision_to_json,
    decomposition_to_json,
    elimination_report_to_json,
    grid_from_text,
    parse_shape_spec,
    poly_from_json,
    poly_from_text,
    poly_to_json,
    sft_spec_from_json,
    sft_spec_to_json,
    shape_from_json,
    shape_to_json,
    source_from_json,
    source_to_json,
    verdict_to_json,
)
from .linestructure import classify, eliminate_and_classify_fp, line_factor_decomposition
from .sft import Budget, EMPTY, NONEMPTY, decide, reconfirm_empty, verify_witness


def _read_file(path: str, inputs: dict) -> str:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e}") from e
    inputs[path] = hashlib.sha256(data).hexdigest()
    return data.decode("utf-8")


def _load_source(path: str, inputs: dict, torus: bool):
    text = _read_file(path, inputs)
    if text.lstrip().startswith("{"):
        return source_from_json(json.loads(text))
    rows = grid_from_text(text)
    return TorusConfig(rows) if torus else Patch((0, 0), rows)


def _load_shape(spec: str, inputs: dict):
    if spec.startswith("rect:") or spec == "plus":
        return parse_shape_spec(spec)
    return shape_from_json(json.loads(_read_file(spec, inputs)))


def _load_poly(path_or_literal: str, inputs: dict, field: str) -> LaurentPoly:
    try:
        text = _read_file(path_or_literal, inputs)
    except InputFormatError:
        text = path_or_literal  # allow literal polynomial text
    text = text.strip()
    if text.startswith("{"):
        return poly_from_json(json.loads(text))
    return poly_from_text(text, domain_from_name(field))


def _budget(args) -> Budget:
    return Budget(
        max_window=args.max_window, max_torus=args.max_torus, max_nodes=args.max_nodes
    )


def _emit(payload: dict, args, start: float) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"wall_time_s: {time.monotonic() - start:.3f}", file=sys.stderr)


def _payload(command: str, inputs: dict, result: dict, budget_spent=None) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "budget_spent": budget_spent,
        "version": __version__,
    }


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-window", type=int, default=8)
    p.add_argument("--max-torus", type=int, default=6)
    p.add_argument("--max-nodes", type=int, default=5_000_000)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridalgebra",
        description="Exact algebraic analysis of low-complexity grid colorings.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("complexity", help="pattern count and low-complexity flag")
    p.add_argument("grid")
    p.add_argument("--shape", required=True)
    p.add_argument("--torus", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("profile", help="rectangle complexity profile")
    p.add_argument("grid")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--torus", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("annihilate", help="construct an annihilator from pattern data")
    p.add_argument("grid")
    p.add_argument("--shape", required=True)
    p.add_argument("--torus", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("factor-lines", help="line-polynomial decomposition")
    p.add_argument("poly")
    p.add_argument("--field", default="Z")
    p.add_argument("--out")

    p = sub.add_parser("classify", help="periodicity verdict from line factors")
    p.add_argument("poly")
    p.add_argument("--role", choices=["annihilates", "periodizes"], default="annihilates")
    p.add_argument("--field", default="Z")
    p.add_argument("--out")

    p = sub.add_parser("eliminate-fp", help="resultant elimination over a prime field")
    p.add_argument("poly_f")
    p.add_argument("poly_g")
    p.add_argument("--field", default="F2")
    p.add_argument("--out")

    p = sub.add_parser("decide-sft", help="budgeted SFT emptiness decision")
    p.add_argument("spec")
    _add_budget_flags(p)
    p.add_argument("--out")

    p = sub.add_parser("antenna", help="antenna placement problems")
    anten = p.add_subparsers(dest="antenna_command")
    pc = anten.add_parser("classify")
    pc.add_argument("--shape", required=True)
    pc.add_argument("--a", type=int, required=True)
    pc.add_argument("--b", type=int, required=True)
    pc.add_argument("--out")
    pv = anten.add_parser("verify")
    pv.add_argument("grid")
    pv.add_argument("--shape", required=True)
    pv.add_argument("--a", type=int, required=True)
    pv.add_argument("--b", type=int, required=True)
    pv.add_argument("--out")

    p = sub.add_parser("cotiler", help="cluster tile co-tilers")
    cot = p.add_subparsers(dest="cotiler_command")
    cf = cot.add_parser("find")
    cf.add_argument("--tile", required=True)
    _add_budget_flags(cf)
    cf.add_argument("--out")
    cv = cot.add_parser("verify")
    cv.add_argument("grid")
    cv.add_argument("--tile", required=True)
    cv.add_argument("--out")

    p = sub.add_parser("verify", help="re-verify an emitted certificate")
    p.add_argument("certificate")
    p.add_argument("grid", nargs="?")
    p.add_argument("--torus", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    return parser


def run(argv) -> int:
    start = time.monotonic()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 64 if e.code not in (0, None) else 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 64
    inputs: dict[str, str] = {}
    try:
        return _dispatch(args, inputs, start)
    except json.JSONDecodeError as e:
        print(json.dumps({"error": "input-format", "message": str(e)}), file=sys.stderr)
        return 65
    except GridAlgebraError as e:
        print(json.dumps({"error": e.code, "message": str(e)}), file=sys.stderr)
        return e.exit_code


def _dispatch(args, inputs, start) -> int:
    cmd = args.command

    if cmd == "complexity":
        source = _load_source(args.grid, inputs, args.torus)
        shape = _load_shape(args.shape, inputs)
        count, low = complexity(source, shape)
        result = {"count": count, "low_complexity": low, "shape_size": len(shape)}
        _emit(_payload(cmd, inputs, result), args, start)
        return 0

    if cmd == "profile":
        source = _load_source(args.grid, inputs, args.torus)
        table = rectangle_complexity_profile(source, args.nmax, args.mmax)
        result = {
            "profile": [
                {"n": n, "m": m, "count": c, "low_complexity": low}
                for (n, m), (c, low) in sorted(table.items())
            ]
        }
        _emit(_payload(cmd, inputs, result), args, start)
        return 0

    if cmd == "annihilate":
        source = _load_source(args.grid, inputs, args.torus)
        shape = _load_shape(args.shape, inputs)
        patterns = extract_patterns(source, shape)
        result_obj = find_annihilator(patterns)
        report = verify_annihilator(result_obj, source)
        result = {
            "certificate": "annihilator",
            "shape": shape_to_json(shape),
            "source": source_to_json(source),
            "result": annihilator_result_to_json(result_obj),
            "verified": report.passed,
        }
        _emit(_payload(cmd, inputs, result), args, start)
        return 0

    if cmd == "factor-lines":
        f = _load_poly(args.poly, inputs, args.field)
        decomp = line_factor_decomposition(f)
        result = {"input": poly_to_json(f), "decomposition": decomposition_to_json(decomp)}
        _emit(_payload(cmd, inputs, result), args, start)
        return 0

    if cmd == "classify":
        f = _load_poly(args.poly, inputs, args.field)
        verdict = classify(f, role=args.role)
        result = {"input": poly_to_json(f), "role": args.role, **verdict_to_json(verdict)}
        _emit(_payload(cmd, inputs, result), args, start)
        return 0

    if cmd == "eliminate-fp":
        f = _load_poly(args.poly_f, inputs, args.field)
        g = _load_poly(args.poly_g, inputs, args.field)
        report = eliminate_and_classify_fp(f, g)
        result = {
            "f": poly_to_json(f),
            "g": poly_to_json(g),
            **elimination_report_to_json(report),
        }
        _emit(_payload(cmd, inputs, result), args, start)
        return 0

    if cmd == "decide-sft":
        spec = sft_spec_from_json(json.loads(_read_file(args.spec, inputs)))
        decision = decide(spec, _budget(args))
        result = {
            "certificate": "sft_decision",
            "spec": sft_spec_to_json(spec),
            **decision_to_json(decision),
        }
        _emit(_payload(cmd, inputs, result, result["budget_spent"]), args, start)
        return {NONEMPTY: 0, EMPTY: 1}.get(decision.kind, 2)

    if cmd == "antenna":
        if args.antenna_command == "classify":
            shape = _load_shape(args.shape, inputs)
            problem = AntennaProblem(shape, args.a, args.b)
            verdict = antenna_classify(problem)
            result = {
                "shape": shape_to_json(shape),
                "a": args.a,
                "b": args.b,
                **verdict_to_json(verdict),
            }
            _emit(_payload("antenna classify", inputs, result), args, start)
            return 0
        if args.antenna_command == "verify":
            shape = _load_shape(args.shape, inputs)
            source = _load_source(args.grid, inputs, torus=True)
            problem = AntennaProblem(shape, args.a, args.b)
            ok = antenna_verify(source, problem)
            result = {
                "certificate": "antenna",
                "shape": shape_to_json(shape),
                "a": args.a,
                "b": args.b,
                "config": source_to_json(source),
                "valid": ok,
            }
            _emit(_payload("antenna verify", inputs, result), args, start)
            return 0 if ok else 1
        raise UsageError("antenna needs a subcommand: classify | verify")

    if cmd == "cotiler":
        if args.cotiler_command == "find":
            tile = ClusterTile(_load_shape(args.tile, inputs))
            decision = cotiler_decision(tile, _budget(args))
            cover_ok = None
            if decision.kind == NONEMPTY:
                cover_ok = exact_cover_on_torus(tile, decision.witness)
            result = {
                "certificate": "cotiler",
                "tile": shape_to_json(tile.shape),
                **decision_to_json(decision),
                "exact_cover_verified": cover_ok,
            }
            _emit(_payload("cotiler find", inputs, result, result["budget_spent"]), args, start)
            return {NONEMPTY: 0, EMPTY: 1}.get(decision.kind, 2)
        if args.cotiler_command == "verify":
            tile = ClusterTile(_load_shape(args.tile, inputs))
            source = _load_source(args.grid, inputs, torus=True)
            ok = exact_cover_on_torus(tile, source)
            result = {
                "certificate": "cotiler",
                "tile": shape_to_json(tile.shape),
                "config": source_to_json(source),
                "exact_cover_verified": ok,
            }
            _emit(_payload("cotiler verify", inputs, result), args, start)
            return 0 if ok else 1
        raise UsageError("cotiler needs a subcommand: find | verify")

    if cmd == "verify":
        return _verify_certificate(args, inputs, start)

    raise UsageError(f"unknown command {cmd!r}")


def _verify_certificate(args, inputs, start) -> int:
    data = json.loads(_read_file(args.certificate, inputs))
    cert = data.get("result", data)  # accept a full report or a bare result
    kind = cert.get("certificate")
    checks: dict[str, bool] = {}

    if kind == "annihilator":
        result_obj = annihilator_result_from_json(cert["result"])
        if args.grid:
            source = _load_source(args.grid, inputs, args.torus)
        else:
            source = source_from_json(cert["source"])
        report = verify_annihilator(result_obj, source)
        checks["annihilates"] = report.annihilation.annihilated
        if report.constant_ok is not None:
            checks["periodizer_constant"] = report.constant_ok
    elif kind == "sft_decision":
        spec = sft_spec_from_json(cert["spec"])
        if cert["decision"] == NONEMPTY:
            checks["witness_patterns_allowed"] = verify_witness(
                spec, source_from_json(cert["witness"])
            )
        elif cert["decision"] == EMPTY:
            checks["window_unfillable"] = reconfirm_empty(spec, cert["window"], seed=args.seed)
        else:
            checks["unknown_makes_no_claim"] = True
    elif kind == "cotiler":
        tile = ClusterTile(shape_from_json(cert["tile"]))
        if "config" in cert and cert.get("config"):
            witness = source_from_json(cert["config"])
        elif cert.get("witness"):
            witness = source_from_json(cert["witness"])
        else:
            checks["no_witness_to_check"] = cert.get("decision") != NONEMPTY
            witness = None
        if witness is not None:
            checks["exact_cover"] = exact_cover_on_torus(tile, witness)
            checks["sft_patterns_allowed"] = verify_witness(cotiler_sft(tile), witness)
    elif kind == "antenna":
        problem = AntennaProblem(
            shape_from_json(cert["shape"]), int(cert["a"]), int(cert["b"])
        )
        config = source_from_json(cert["config"])
        checks["antenna_condition"] = antenna_verify(config, problem) == cert["valid"]
    else:
        raise InputFormatError(f"unknown certificate kind {kind!r}")

    passed = all(checks.values())
    result = {"certificate": kind, "checks": checks, "passed": passed}
    _emit(_payload("verify", inputs, result), args, start)
    return 0 if passed else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
