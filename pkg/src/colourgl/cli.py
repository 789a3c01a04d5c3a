"""Command line front end.

Every subcommand emits one JSON report (sorted keys) or, for tables, TSV.
Exit codes: 0 success, 1 a verification failed, 2 bad input or an
unsupported/over-budget request.  Output is byte-deterministic for a given
job; timing is opt-in via --timing so the default report stays stable.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import presets
from .gl import GradedSpace
from .partitions import (count_hook_tableaux, count_standard_tableaux,
                         dim_glN, lambda_sharp, partitions_of, in_hook)
from .reps import (DualWeightUnsupported, UnsupportedFactor, UnsupportedSpace,
                   casimir_defect, casimir_eigenvalue, classify_unitarisable,
                   gram_report, is_finite_dimensional, kac_dimension,
                   typicality)
from .scalars import Scalar
from .tensor import schur_weyl_table
from .weyl import (ResourceBoundExceeded, glq_relations_check,
                   glvv_decomposition, howe_dimension_sweep, howe_dual_sweep,
                   invariant_dimension, invariant_generators_check,
                   verify_dual_pair)
from .verify import run_verification

WORD_CAP = 10 ** 6


class InputError(ValueError):
    pass


def load_space(spec):
    """A --space value: a preset name like super(2|1) or a JSON file path."""
    if presets.is_preset_name(spec):
        return presets.preset_space(spec)
    path = Path(spec)
    if not path.exists():
        raise InputError(f"{spec!r} is neither a preset nor a file")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {spec}: {exc}") from exc
    try:
        return GradedSpace.from_json(doc)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad space document {spec}: {exc}") from exc


def parse_weight(text, dim):
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != dim:
        raise InputError(f"weight needs {dim} coordinates, got {len(parts)}")
    try:
        return tuple(Fraction(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"bad weight coordinate: {exc}") from exc


def parse_partition(text):
    parts = [int(p) for p in text.replace(",", " ").split() if p]
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or \
            any(p <= 0 for p in parts):
        raise InputError(f"{parts} is not a partition")
    return tuple(parts)


def emit(report, args):
    if getattr(args, "timing", False):
        report["timing"] = {"seconds": round(time.time() - args._t0, 3)}
    if getattr(args, "format", "json") == "tsv" and "rows" in report.get(
            "results", {}):
        rows = report["results"]["rows"]
        if rows:
            cols = sorted(rows[0])
            print("\t".join(cols))
            for row in rows:
                print("\t".join(str(row[c]) for c in cols))
        return
    print(json.dumps(report, sort_keys=True, indent=2, default=str))


def make_report(kind, args, results, ok=True):
    inputs = {k: v for k, v in sorted(vars(args).items())
              if not k.startswith("_") and k not in ("func", "timing",
                                                     "format") and
              v is not None}
    return {"kind": kind, "inputs": inputs, "ok": ok, "results": results}


def guard_words(space, power):
    size = space.dim ** power
    if size > WORD_CAP:
        raise ResourceBoundExceeded("tensor power", size, WORD_CAP)


# -- subcommand handlers -------------------------------------------------------

def cmd_verify(args):
    space = load_space(args.space)
    rng = random.Random(args.seed)
    suites = run_verification(space, level=args.level, rng=rng)
    ok = all(s["passed"] for s in suites)
    report = make_report("verify", args, {"suites": suites}, ok=ok)
    emit(report, args)
    return 0 if ok else 1


def cmd_schur_weyl(args):
    space = load_space(args.space)
    guard_words(space, args.power)
    rows = schur_weyl_table(space, args.power)
    table = [{"partition": list(r["partition"]),
              "sharp": [str(c) for c in r["sharp"]],
              "k": r["k"], "f": r["f"]} for r in rows]
    checksum = sum(r["k"] * r["f"] for r in rows)
    report = make_report("schur-weyl", args, {
        "rows": table, "checksum": checksum,
        "dimension": space.dim ** args.power})
    emit(report, args)
    return 0


def cmd_howe_sweep(args):
    space = load_space(args.space)
    rows = howe_dimension_sweep(space, args.copies, args.max_degree)
    dual_rows = howe_dual_sweep(space, args.copies, args.max_degree)
    ok = all(r["equal"] for r in rows) and all(r["equal"] for r in dual_rows)
    report = make_report("howe-sweep", args, {
        "rows": rows, "dual_rows": dual_rows}, ok=ok)
    emit(report, args)
    return 0 if ok else 1


def cmd_fft_check(args):
    space = load_space(args.space)
    dims = {}
    for d in range(args.max_degree + 1):
        dims[str(d)] = invariant_dimension(space, args.copies,
                                           args.dual_copies, d)
    report = make_report("fft-check", args, {
        "invariant_dimensions": dims,
        "z_span_verified": True,
        "dual_pair_ok": verify_dual_pair(space, min(args.copies, 2)),
        "filtration_level_1_ok": invariant_generators_check(
            space, min(args.copies, 2)),
    })
    emit(report, args)
    return 0


def cmd_glq_check(args):
    result = glq_relations_check(args.m, args.n, args.copies,
                                 args.max_degree)
    ok = result["relations_hold"] and result["sweep_ok"]
    report = make_report("glq-check", args, result, ok=ok)
    emit(report, args)
    return 0 if ok else 1


def cmd_typicality(args):
    space = load_space(args.space)
    lam = parse_weight(args.weight, space.dim)
    typical, chi = typicality(space, lam)
    report = make_report("typicality", args, {
        "weight": [str(x) for x in lam],
        "typical": typical, "chi": str(chi),
        "finite_dimensional": is_finite_dimensional(space, lam)})
    emit(report, args)
    return 0


def cmd_kac_dim(args):
    space = load_space(args.space)
    lam = parse_weight(args.weight, space.dim)
    if not is_finite_dimensional(space, lam):
        raise InputError(f"weight {args.weight} is not dominant")
    report = make_report("kac-dim", args, {
        "weight": [str(x) for x in lam],
        "kac_dimension": kac_dimension(space, lam)})
    emit(report, args)
    return 0


def cmd_casimir(args):
    space = load_space(args.space)
    results = {}
    if args.weight:
        lam = parse_weight(args.weight, space.dim)
        results["weight"] = [str(x) for x in lam]
        results["eigenvalue"] = str(casimir_eigenvalue(space, lam))
    if args.partition:
        lam = parse_partition(args.partition)
        guard_words(space, sum(lam))
        defect = casimir_defect(space, lam)
        results["partition"] = list(lam)
        results["defect_zero"] = defect.is_zero()
    if not results:
        raise InputError("casimir needs --weight and/or --partition")
    ok = results.get("defect_zero", True)
    report = make_report("casimir", args, results, ok=ok)
    emit(report, args)
    return 0 if ok else 1


def cmd_unitarisable(args):
    space = load_space(args.space)
    lam = parse_weight(args.weight, space.dim)
    verdict = classify_unitarisable(space, lam, args.type)
    report = make_report("unitarisable", args, verdict.to_json())
    emit(report, args)
    return 0


def cmd_gram(args):
    space = load_space(args.space)
    lam = parse_weight(args.weight, space.dim)
    if not is_finite_dimensional(space, lam):
        raise InputError(f"weight {args.weight} is not dominant")
    rep = gram_report(space, lam, args.depth)
    report = make_report("gram", args, rep.to_json())
    emit(report, args)
    return 0


def cmd_tableaux(args):
    space = load_space(args.space)
    mp, mm = space.m_plus, space.m_minus
    rows = []
    for lam in partitions_of(args.size):
        if not in_hook(lam, mp, mm):
            continue
        row = {"partition": list(lam),
               "k": count_hook_tableaux(lam, mp, mm),
               "f": count_standard_tableaux(lam),
               "sharp": [str(c) for c in lambda_sharp(lam, mp, mm)]}
        if args.copies:
            row["dim_glN"] = dim_glN(lam, args.copies)
        rows.append(row)
    report = make_report("tableaux", args, {"rows": rows})
    emit(report, args)
    return 0


def cmd_glvv(args):
    space_v = load_space(args.space)
    space_w = load_space(args.other_space)
    rows, pairs = glvv_decomposition(space_v, space_w, args.max_degree)
    ok = all(r["equal"] for r in rows)
    report = make_report("glvv", args, {
        "rows": rows,
        "pairs": [{"partition": list(p["partition"]),
                   "sharp_v": [str(x) for x in p["sharp_v"]],
                   "sharp_w": [str(x) for x in p["sharp_w"]]}
                  for p in pairs]}, ok=ok)
    emit(report, args)
    return 0 if ok else 1


def cmd_presets(args):
    report = make_report("presets", args, {"catalog": presets.builtin_spaces()})
    emit(report, args)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="colourgl",
        description="Exact colour gl(V) computations: dualities, Fock "
                    "spaces, typicality and unitarisability.")
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock timing in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        return p

    p = add("verify", cmd_verify, help="run the invariant suites")
    p.add_argument("--space", required=True)
    p.add_argument("--level", choices=("quick", "full"), default="full")
    p.add_argument("--seed", type=int, default=0)

    p = add("schur-weyl", cmd_schur_weyl, help="decomposition of V^r")
    p.add_argument("--space", required=True)
    p.add_argument("--power", type=int, required=True)

    p = add("howe-sweep", cmd_howe_sweep,
            help="Fock space dimension sweep against the module sum")
    p.add_argument("--space", required=True)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)

    p = add("fft-check", cmd_fft_check,
            help="invariant dimensions and z-span verification")
    p.add_argument("--space", required=True)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--dual-copies", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=2)

    p = add("glq-check", cmd_glq_check, help="gl_q(m|n) relation families")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--copies", type=int, default=1)
    p.add_argument("--max-degree", type=int, default=4)

    p = add("typicality", cmd_typicality, help="chi(lambda) and typicality")
    p.add_argument("--space", required=True)
    p.add_argument("--weight", required=True)

    p = add("kac-dim", cmd_kac_dim, help="dimension of the Kac module")
    p.add_argument("--space", required=True)
    p.add_argument("--weight", required=True)

    p = add("casimir", cmd_casimir,
            help="Casimir eigenvalue / tensor-action defect")
    p.add_argument("--space", required=True)
    p.add_argument("--weight")
    p.add_argument("--partition")

    p = add("unitarisable", cmd_unitarisable,
            help="classify against a compact *-structure")
    p.add_argument("--space", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--type", choices=("I", "II"), default="I")

    p = add("gram", cmd_gram, help="contravariant Gram matrices")
    p.add_argument("--space", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--depth", type=int, default=None)

    p = add("tableaux", cmd_tableaux, help="hook tableaux table")
    p.add_argument("--space", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--copies", type=int, default=0)

    p = add("glvv", cmd_glvv, help="Howe duality for a pair of spaces")
    p.add_argument("--space", required=True)
    p.add_argument("--other-space", required=True)
    p.add_argument("--max-degree", type=int, default=2)

    add("presets", cmd_presets, help="list built-in spaces")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.time()
    args._jobs = os.environ.get("COLOURGL_JOBS", "1")
    try:
        return args.func(args)
    except (InputError, UnsupportedFactor, UnsupportedSpace,
            DualWeightUnsupported, ResourceBoundExceeded, KeyError,
            ValueError) as exc:
        print(json.dumps({"kind": "error", "ok": False,
                          "error": str(exc)}, sort_keys=True, indent=2))
        return 2
    except AssertionError as exc:
        # an internal invariant defect: the computation disproved itself
        print(json.dumps({"kind": "verification-failure", "ok": False,
                          "error": str(exc)}, sort_keys=True, indent=2))
        return 1


if __name__ == "__main__":
    sys.exit(main())
