"""Command-line front end.

Subcommands:

  verify     run a verification procedure (or all of them) over a ring
  solve      compute the canonical module of maps satisfying an identity kind
  check      test one serialized map against an identity kind
  decompose  run a constructive decomposition on a serialized map
  pairs      enumerate conditional pair sets

Rings are assembled from flags: ``--base zmod:M | dual:M`` picks the base,
``--n N`` wraps it into the N x N matrix ring, ``--trivial-ext`` wraps that
once more into the square-zero extension.  Structured pair mode is the default
(exhaustive scanning is quadratic in ring size).  Exit codes: 0 on success or
skip, 1 when a verification is falsified or a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GuardError, InternalVerificationError, PreconditionError
from .identities import (
    IDENTITY_KINDS,
    check,
    constraint_system,
    decompose_inner_plus_lifted,
    decompose_theorem21,
    decompose_trivial_extension,
    maps_from_module,
    solve_all,
    verify_proof_steps,
)
from .maps import AdditiveMap
from .rings import (
    anti_commuting_pairs,
    dual_numbers,
    left_zero_pairs,
    matrix_ring,
    ring_rank,
    ring_size,
    trivial_extension,
    zero_product_pairs,
    zmod,
)
from .theorems import THEOREM_IDS, exit_status, run_all, verify_theorem


def _parse_base(text):
    try:
        kind, mod = text.split(":")
        m = int(mod)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected zmod:M or dual:M, got {text!r}"
        ) from None
    if kind == "zmod":
        return zmod(m)
    if kind == "dual":
        return dual_numbers(m)
    raise argparse.ArgumentTypeError(f"unknown base kind {kind!r}")


def _ring_from_args(args):
    ring = args.base
    if args.n:
        ring = matrix_ring(args.n, ring)
    if args.trivial_ext:
        ring = trivial_extension(ring)
    return ring


def _add_ring_flags(parser):
    parser.add_argument("--base", type=_parse_base, default=zmod(3),
                        help="base ring, zmod:M or dual:M (default zmod:3)")
    parser.add_argument("--n", type=int, default=0,
                        help="wrap the base into the n x n matrix ring")
    parser.add_argument("--trivial-ext", action="store_true",
                        help="wrap the ring into its square-zero extension")


def _add_common_flags(parser):
    parser.add_argument("--pairs", choices=("structured", "exhaustive"),
                        default="structured", help="conditional pair mode")
    parser.add_argument("--json", action="store_true", help="machine output")
    parser.add_argument("--out", help="write the result to this file")
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for exhaustive pair scans")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="derivlab",
        description="Exact workbench for derivation-style identities on "
                    "finite matrix rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification procedures")
    _add_ring_flags(p_verify)
    _add_common_flags(p_verify)
    p_verify.add_argument("--theorem", default="all",
                          choices=THEOREM_IDS + ("all",),
                          help="which result to verify (default all)")
    p_verify.add_argument("--sample", type=int, default=1000,
                          help="membership spot-check sample size")
    p_verify.add_argument("--inflation-rank", type=int, default=0,
                          help="zero-action summand rank for the non-unital check")
    p_verify.add_argument("--compare-modes", action="store_true",
                          help="force the structured/exhaustive comparison")

    p_solve = sub.add_parser("solve", help="solve for a full map space")
    _add_ring_flags(p_solve)
    _add_common_flags(p_solve)
    p_solve.add_argument("--kind", required=True, choices=IDENTITY_KINDS)

    p_check = sub.add_parser("check", help="check a serialized map")
    _add_common_flags(p_check)
    p_check.add_argument("--kind", required=True, choices=IDENTITY_KINDS)
    p_check.add_argument("--input", required=True, help="map JSON file")

    p_dec = sub.add_parser("decompose", help="decompose a serialized map")
    _add_common_flags(p_dec)
    p_dec.add_argument("--input", required=True, help="map JSON file")
    p_dec.add_argument(
        "--method",
        required=True,
        choices=("zero-product", "inner-lifted", "extension-components", "proof-steps"),
    )

    p_pairs = sub.add_parser("pairs", help="enumerate conditional pair sets")
    _add_ring_flags(p_pairs)
    _add_common_flags(p_pairs)
    p_pairs.add_argument("--condition", default="zero-product",
                         choices=("zero-product", "anticommuting", "one-sided-zero"))
    return parser


def _emit(args, payload, text_lines):
    body = json.dumps(payload, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    if args.json:
        print(body)
    else:
        for line in text_lines:
            print(line)


def _ring_label(ring):
    return json.dumps(ring.to_json(), sort_keys=True)


def _cmd_verify(args):
    ring = _ring_from_args(args)
    options = dict(
        pair_mode=args.pairs,
        seed=args.seed,
        sample=args.sample,
        inflation_rank=args.inflation_rank or None,
        compare_modes=True if args.compare_modes else None,
        threads=args.threads,
    )
    if args.theorem == "all":
        reports = run_all(ring, **options)
    else:
        reports = [verify_theorem(args.theorem, ring, **options)]
    lines = []
    for rep in reports:
        detail = f" ({rep.reason})" if rep.reason else ""
        counts = ", ".join(f"{k}={v}" for k, v in sorted(rep.counts.items()))
        counts = f" [{counts}]" if counts else ""
        lines.append(
            f"{rep.theorem_id} on {_ring_label(ring)}: {rep.status}{detail}{counts}"
            f" ({rep.elapsed_ms:.0f} ms)"
        )
    _emit(args, [r.to_json() for r in reports], lines)
    return exit_status(reports)


def _cmd_solve(args):
    ring = _ring_from_args(args)
    system = constraint_system(ring=ring, kind=args.kind, pair_mode=args.pairs,
                               threads=args.threads)
    module = solve_all(args.kind, ring, pair_mode=args.pairs, threads=args.threads)
    gens = maps_from_module(module, ring, ring)
    payload = {
        "kind": args.kind,
        "ring": ring.to_json(),
        "pair_mode": args.pairs,
        "pair_count": system.pair_count,
        "module": module.to_json(),
        "size": module.size(),
        "maps": [g.to_json() for g in gens],
    }
    lines = [
        f"kind={args.kind} ring={_ring_label(ring)} pairs={args.pairs}",
        f"generators={module.generators.rows} module_size={module.size()}",
    ]
    _emit(args, payload, lines)
    return 0


def _load_map(path):
    with open(path, encoding="utf-8") as fh:
        return AdditiveMap.from_json(json.load(fh))


def _cmd_check(args):
    fmap = _load_map(args.input)
    report = check(fmap, args.kind, pair_mode=args.pairs, threads=args.threads)
    payload = report.to_json()
    lines = ["passed" if report.passed else "failed"]
    if report.witness:
        w = report.witness
        lines.append(f"witness a = {w.a}")
        lines.append(f"witness b = {w.b}")
        lines.append(f"residual = {list(w.residual)}")
    _emit(args, payload, lines)
    return 0 if report.passed else 1


def _cmd_decompose(args):
    fmap = _load_map(args.input)
    if args.method == "zero-product":
        trace = decompose_theorem21(fmap, pair_mode=args.pairs)
        payload = trace.to_json()
        lines = [
            "decomposed: derivation part plus right multiplication by the image of 1",
            f"central = {list(trace.central)}",
        ]
    elif args.method == "inner-lifted":
        d, g = decompose_inner_plus_lifted(fmap)
        payload = {"base_map": d.to_json(), "inner_element": list(g)}
        lines = [
            "decomposed: entrywise lift plus inner derivation",
            f"base map zero: {d.is_zero()}",
        ]
    elif args.method == "extension-components":
        comps = decompose_trivial_extension(fmap)
        payload = {
            "components": [c.to_json() for c in comps],
            "mixed_component_zero": comps[1].is_zero(),
        }
        lines = [f"component matrices extracted; mixed component zero: {comps[1].is_zero()}"]
    else:  # proof-steps
        steps = verify_proof_steps(fmap, pair_mode=args.pairs)
        payload = steps.to_json()
        lines = [
            f"step {s.step}: {'pass' if s.passed else 'FAIL'}" for s in steps.steps
        ]
    _emit(args, payload, lines)
    return 0


def _cmd_pairs(args):
    ring = _ring_from_args(args)
    enum = {
        "zero-product": zero_product_pairs,
        "anticommuting": anti_commuting_pairs,
        "one-sided-zero": left_zero_pairs,
    }[args.condition]
    pairs = enum(ring, args.pairs, threads=args.threads)
    payload = {
        "ring": ring.to_json(),
        "condition": args.condition,
        "mode": args.pairs,
        "count": len(pairs),
        "pairs": [[list(a.coords), list(b.coords)] for a, b in pairs],
    }
    lines = [
        f"{args.condition} pairs ({args.pairs}) on ring of size {ring_size(ring)}"
        f" rank {ring_rank(ring)}: {len(pairs)}"
    ]
    _emit(args, payload, lines)
    return 0


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    handler = {
        "verify": _cmd_verify,
        "solve": _cmd_solve,
        "check": _cmd_check,
        "decompose": _cmd_decompose,
        "pairs": _cmd_pairs,
    }[args.command]
    try:
        return handler(args)
    except InternalVerificationError as exc:
        # a decomposition postcondition failed: that is a concrete numerical
        # counterexample, the most report-worthy outcome there is
        print(f"internal verification failed: {exc}", file=sys.stderr)
        print(f"payload: {exc.payload!r}", file=sys.stderr)
        return 1
    except (GuardError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
