"""Command-line interface.

Each subcommand prints one JSON report on stdout and a short summary on
stderr. Exit codes: 0 ok, 1 oracle mismatch / internal check failure,
2 usage or input error, 10 satisfiable, 20 unsatisfiable, 30 candidate
budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import oracle
from .blocks import decompose, ground_assignment
from .bounds import count_pseudomodels, hardness_report, sat_bound
from .decide import (
    SAT_CONDITION,
    CandidateBudgetExceeded,
    PartitionSpec,
    SpecError,
    count_part_sat_models,
    count_sat_models,
    count_xsat_models,
    decide_part_sat,
    decide_sat,
    decide_xsat,
    enumerate_pseudomodels,
    target_sigma,
    verify_witness,
)
from .formula import FormulaError, occurrence_profile, read_dimacs, sigma
from .generators import GenerationError, generate_dimacs

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ERROR = 2
EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_BUDGET = 30

DEFAULT_MAX_CANDIDATES = 10**8


def _bits(y) -> str:
    return "".join(str(v) for v in y)


def _log2(x: int):
    return math.log2(x) if x > 0 else None


def instance_section(f) -> dict:
    profile = occurrence_profile(f)
    d = decompose(profile)
    g = ground_assignment(profile)
    return {
        "n": f.n,
        "m": f.m,
        "num_literals": f.num_literals,
        "profile": {
            "p_plus": [int(x) for x in profile.p_plus],
            "p_minus": [int(x) for x in profile.p_minus],
        },
        "blocks": [
            {"b": b, "n_b": len(v), "N_b": d.literal_counts[b], "variables": list(v)}
            for b, v in d.blocks.items()
        ],
        "n0": d.n0,
        "free_variables": list(d.free),
        "sigma_min": d.sigma_min,
        "sigma_max": d.sigma_max,
        "ground_state": _bits(g.base),
    }


def _mode(args, f):
    """Return (mode name, condition, target sigma or None)."""
    if args.xsat:
        spec = PartitionSpec.xsat(f.m)
        return "xsat", spec.mu, f.m
    if args.sat:
        return "sat", SAT_CONDITION, None
    if args.part is not None:
        spec = PartitionSpec.parse(args.part)
        spec.validate(f)
        return "part", spec.mu, target_sigma(spec)
    return "sigma", None, args.sigma


def _hardness(report: dict) -> dict:
    out = dict(report)
    out["bound"] = str(out["bound"])
    return out


def cmd_analyze(args, f) -> tuple[dict, int]:
    sigma0 = f.m if args.sigma is None else args.sigma
    report = {"command": "analyze", "instance": instance_section(f)}
    report["hardness"] = _hardness(hardness_report(f, sigma0, args.slack))
    return report, EXIT_OK


def cmd_bound(args, f) -> tuple[dict, int]:
    d = decompose(occurrence_profile(f))
    mode, _, sigma0 = _mode(args, f)
    if mode == "sat":
        bound = sat_bound(d, f.m)
    else:
        bound = count_pseudomodels(d, sigma0)
    report = {
        "command": "bound",
        "instance": instance_section(f),
        "mode": mode,
        "target_sigma": sigma0,
        "bound": str(bound),
        "log2_bound": _log2(bound),
    }
    return report, EXIT_OK


_ANSWERS = {
    "xsat": ("x-SAT", "x-UNSAT"),
    "sat": ("SAT", "UNSAT"),
    "part": ("PART-SAT", "PART-UNSAT"),
    "sigma": ("PSEUDOMODEL", "NO-PSEUDOMODEL"),
}


def cmd_decide(args, f) -> tuple[dict, int]:
    mode, condition, sigma0 = _mode(args, f)
    kwargs = {"count": args.count, "max_candidates": args.max_candidates, "jobs": args.jobs}
    report = {"command": "decide", "instance": instance_section(f), "mode": mode, "target_sigma": sigma0}
    try:
        if mode == "xsat":
            verdict = decide_xsat(f, **kwargs)
        elif mode == "sat":
            verdict = decide_sat(f, **kwargs)
        elif mode == "part":
            verdict = decide_part_sat(f, PartitionSpec(condition), **kwargs)
        else:
            verdict = None
    except CandidateBudgetExceeded as exc:
        report.update(status="aborted", examined=str(exc.examined), budget=str(exc.budget))
        return report, EXIT_BUDGET

    if verdict is None:
        d = decompose(occurrence_profile(f))
        bound = count_pseudomodels(d, sigma0)
        witness = next(enumerate_pseudomodels(f, sigma0), None)
        satisfiable = witness is not None
        report.update(
            status="satisfiable" if satisfiable else "unsatisfiable",
            witness=_bits(witness) if satisfiable else None,
            examined=str(1 if satisfiable else 0),
            bound=str(bound),
        )
        if args.count:
            report["models"] = str(bound)
        verified = not satisfiable or sigma(occurrence_profile(f), witness) == sigma0
    else:
        satisfiable = verdict.satisfiable
        report.update(
            status=verdict.status,
            witness=_bits(verdict.witness) if satisfiable else None,
            examined=str(verdict.examined),
            bound=str(verdict.bound),
        )
        if args.count:
            report["models"] = str(verdict.models)
        verified = not satisfiable or verify_witness(f, verdict.witness, condition)
    report["answer"] = _ANSWERS[mode][0 if satisfiable else 1]
    if not verified:
        report["error"] = "witness failed re-verification"
        return report, EXIT_MISMATCH
    return report, EXIT_SAT if satisfiable else EXIT_UNSAT


def cmd_oracle(args, f) -> tuple[dict, int]:
    report = {"command": "oracle", "instance": instance_section(f)}
    if args.sweep or not (args.xsat or args.sat or args.part is not None or args.sigma is not None):
        d = decompose(occurrence_profile(f))
        engine = {
            str(s): str(c)
            for s in range(d.sigma_min, d.sigma_max + 1)
            if (c := count_pseudomodels(d, s))
        }
        brute = {str(s): str(c) for s, c in oracle.brute_sigma_histogram(f).items()}
        report.update(mode="sweep", engine=engine, oracle=brute)
    else:
        mode, condition, sigma0 = _mode(args, f)
        if mode == "sigma":
            d = decompose(occurrence_profile(f))
            engine = count_pseudomodels(d, sigma0)
            brute = oracle.brute_sigma_histogram(f).get(sigma0, 0)
        elif mode == "xsat":
            engine = count_xsat_models(f, jobs=args.jobs)
            brute, _ = oracle.brute_count_models(f, PartitionSpec(condition))
        elif mode == "sat":
            engine = count_sat_models(f, jobs=args.jobs)
            brute, _ = oracle.brute_sat(f)
        else:
            engine = count_part_sat_models(f, PartitionSpec(condition), jobs=args.jobs)
            brute, _ = oracle.brute_count_models(f, PartitionSpec(condition))
        report.update(mode=mode, target_sigma=sigma0, engine=str(engine), oracle=str(brute))
    report["match"] = report["engine"] == report["oracle"]
    return report, EXIT_OK if report["match"] else EXIT_MISMATCH


def cmd_gen(args) -> tuple[dict, int]:
    if args.kind == "l-regular":
        params = {"n": args.n, "l": args.l, "m": args.m}
    elif args.kind == "staircase":
        params = {"n": args.n, "p_prime": args.p_prime, "lam": args.lam}
    else:
        params = {"n": args.n, "m": args.m, "width_min": args.width_min, "width_max": args.width_max}
    missing = [k for k, v in params.items() if v is None]
    if missing:
        raise GenerationError(f"missing parameters for {args.kind}: {', '.join(missing)}")
    text = generate_dimacs(args.kind, seed=args.seed, **params)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        report = {"command": "gen", "class": args.kind, "seed": args.seed, "params": params, "out": args.out}
        return report, EXIT_OK
    sys.stdout.write(text)
    return None, EXIT_OK


def _add_modes(p: argparse.ArgumentParser, required: bool, sweep: bool = False) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--sigma", type=int, help="target number of true literals")
    group.add_argument("--xsat", action="store_true", help="exactly one true literal per clause")
    group.add_argument("--sat", action="store_true", help="at least one true literal per clause")
    group.add_argument("--part", metavar="MU", help="comma-separated clause histogram mu0,mu1,...")
    if sweep:
        group.add_argument("--sweep", action="store_true", help="compare the full sigma histogram (default)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES,
                        help="abort decision runs after this many candidates (exit 30)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for exhaustive counting")
    common.add_argument("--quiet", action="store_true", help="no summary on stderr")

    parser = argparse.ArgumentParser(prog="pseudomodel", description="Pseudomodel counting and decisions for CNF formulas.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="blocks, sigma extrema and hardness report")
    p.add_argument("path")
    p.add_argument("--sigma", type=int, help="target sigma for the hardness report (default m)")
    p.add_argument("--slack", type=float, default=4.0, help="additive constant in the hardness threshold")

    p = sub.add_parser("bound", parents=[common], help="exact pseudomodel bound")
    p.add_argument("path")
    _add_modes(p, required=True)

    p = sub.add_parser("decide", parents=[common], help="decide by pseudomodel enumeration")
    p.add_argument("path")
    _add_modes(p, required=True)
    p.add_argument("--count", action="store_true", help="count all models instead of stopping at the first")

    p = sub.add_parser("oracle", parents=[common], help="cross-check the engine against brute force")
    p.add_argument("path")
    _add_modes(p, required=False, sweep=True)

    p = sub.add_parser("gen", parents=[common], help="generate an instance as DIMACS")
    p.add_argument("kind", choices=["l-regular", "staircase", "random"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--p-prime", type=int)
    p.add_argument("--lam", type=int)
    p.add_argument("--width-min", type=int)
    p.add_argument("--width-max", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    return parser


COMMANDS = {"analyze": cmd_analyze, "bound": cmd_bound, "decide": cmd_decide, "oracle": cmd_oracle}


def _summary(report: dict) -> str:
    keys = ("command", "mode", "answer", "status", "bound", "models", "examined", "match")
    parts = [f"{k}={report[k]}" for k in keys if k in report and report[k] is not None]
    if "hardness" in report:
        h = report["hardness"]
        parts.append(f"bound={h['bound']} label={h['label']}")
    return " ".join(parts)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "gen":
            report, code = cmd_gen(args)
        else:
            f = read_dimacs(args.path)
            report, code = COMMANDS[args.command](args, f)
    except (OSError, FormulaError, GenerationError, oracle.OracleLimitError) as exc:
        kind = "spec" if isinstance(exc, SpecError) else type(exc).__name__
        print(f"error ({kind}): {exc}", file=sys.stderr)
        return EXIT_ERROR
    if report is None:
        return code
    report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    print(json.dumps(report, indent=2))
    if not args.quiet:
        print(_summary(report), file=sys.stderr)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
