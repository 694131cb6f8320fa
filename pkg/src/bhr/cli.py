"""Command-line interface.

One subcommand per operation; the multiset grammar ("1^4 2 3^8 4") and
path JSON ("[0,5,1,2,6,3,4]") are shared by every command.  With
--json, output is a schema-versioned JSON document on stdout; otherwise
a short human-readable summary.  Exit codes: 0 success, 1 usage error,
2 not admissible, 3 out of proven range, 4 search failure,
5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, growth, search, seeds, solvers
from .core import (
    Certificate,
    GrowPoint,
    HamPath,
    LengthMultiset,
    MultisetError,
    NotGrowableError,
    PathError,
    check_realization,
    cyclic_lengths,
    growth_points,
    is_admissible,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_ADMISSIBLE = 2
EXIT_OUT_OF_RANGE = 3
EXIT_SEARCH_FAILED = 4
EXIT_VERIFY_FAILED = 5


def _default_brute_cap() -> int:
    raw = os.environ.get("BHR_BRUTE_CAP")
    return int(raw) if raw else search.DEFAULT_BRUTE_CAP


def _parse_path(text: str) -> HamPath:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PathError(f"malformed path JSON: {exc}") from exc
    if not isinstance(data, list) or not all(
        isinstance(x, int) for x in data
    ):
        raise PathError("path JSON must be a list of integers")
    return HamPath.of(data)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        payload.setdefault("schema", 1)
        print(json.dumps(payload))
    else:
        print(human)


def _emit_cert(args, cert: Certificate) -> None:
    if args.json:
        print(cert.to_json())
    else:
        print(f"path: {list(cert.path.vertices)}")
        print(f"multiset: {cert.multiset}")
        if cert.grow_points:
            pts = ", ".join(f"({g.x},{g.m})" for g in cert.grow_points)
            print(f"grow points: {pts}")
        for name, params in cert.trace:
            print(f"  {name} {params}")


def _cert_from_args(args) -> Certificate:
    path = _parse_path(args.path)
    ms = (
        LengthMultiset.parse(args.multiset)
        if args.multiset
        else cyclic_lengths(path)
    )
    return Certificate(
        path=path, multiset=ms, grow_points=tuple(growth_points(path))
    )


def cmd_verify(args) -> int:
    path = _parse_path(args.path)
    ms = LengthMultiset.parse(args.multiset)
    ok, why = check_realization(path, ms)
    _emit(args, {"ok": ok, "detail": why}, why if not ok else "ok")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_admissible(args) -> int:
    ms = LengthMultiset.parse(args.multiset)
    verdict = is_admissible(ms)
    _emit(
        args,
        {"ok": verdict.ok, "detail": verdict.describe()},
        verdict.describe(),
    )
    return EXIT_OK if verdict.ok else EXIT_NOT_ADMISSIBLE


def cmd_grow(args) -> int:
    cert = _cert_from_args(args)
    if args.at:
        try:
            x, m = (int(t) for t in args.at.split(","))
        except ValueError:
            print("--at expects x,m", file=sys.stderr)
            return EXIT_USAGE
        cert = growth.grow(cert, x, m)
    elif args.schedule:
        cert = growth.multi_grow(
            cert, growth.GrowthSchedule.parse(args.schedule)
        )
    else:
        print("grow needs --at or --schedule", file=sys.stderr)
        return EXIT_USAGE
    _emit_cert(args, cert)
    return EXIT_OK


def cmd_splice(args) -> int:
    cert = _cert_from_args(args)
    k_real = _parse_path(args.kpath)
    _emit_cert(args, growth.splice_perfect(cert, k_real))
    return EXIT_OK


def cmd_even_grow(args) -> int:
    cert = _cert_from_args(args)
    _emit_cert(args, growth.even_grow(cert, args.y, args.z))
    return EXIT_OK


def cmd_x2x(args) -> int:
    cert = _cert_from_args(args)
    _emit_cert(args, growth.x2x_swap(cert, args.x, args.i))
    return EXIT_OK


def cmd_perf_grow(args) -> int:
    cert = _cert_from_args(args)
    with open(args.parts) as fh:
        data = json.load(fh)
    parts = [HamPath.of(p) for p in data]
    _emit_cert(args, growth.perf_grow(cert, args.x, parts))
    return EXIT_OK


def cmd_family(args) -> int:
    x, b = args.x, args.b
    if b == x + 1 or b == x + 2 or b == 2 * x:
        cert = families.construct_1x_basic(x, b)
    elif x % 2 == 0:
        cert = families.construct_1x_even(x, b)
    else:
        cert = families.construct_1x_odd(x, b)
    _emit_cert(args, cert)
    return EXIT_OK


def cmd_solve(args) -> int:
    ms = LengthMultiset.parse(args.multiset)
    cfg = search.SearchConfig(rng_seed=args.seed)
    out = solvers.solve(
        ms,
        fallback=args.fallback,
        cfg=cfg,
        brute_cap=_default_brute_cap(),
    )
    if args.json:
        print(json.dumps(out.to_dict()))
    else:
        print(f"status: {out.status}")
        if args.trace or out.certificate is None:
            for name, params in out.trace:
                print(f"  {name} {params}")
        if out.certificate:
            _emit_cert(args, out.certificate)
    if out.status == "not_admissible":
        return EXIT_NOT_ADMISSIBLE
    if out.status == "out_of_proven_range":
        return EXIT_OUT_OF_RANGE
    if out.certificate is None:
        return EXIT_SEARCH_FAILED
    return EXIT_OK


def cmd_search(args) -> int:
    ms = LengthMultiset.parse(args.multiset)
    cfg = search.SearchConfig(
        rng_seed=args.seed,
        max_restarts=args.restarts,
        max_steps_per_restart=args.steps,
    )
    print(f"seed: {args.seed}", file=sys.stderr)
    try:
        cert = search.local_search(ms, cfg)
    except MultisetError as exc:
        _emit(args, {"ok": False, "detail": str(exc)}, str(exc))
        return EXIT_NOT_ADMISSIBLE
    if cert is None:
        _emit(
            args,
            {"ok": False, "detail": "budget exhausted", "seed": args.seed},
            "no realization found (budget exhausted)",
        )
        return EXIT_SEARCH_FAILED
    _emit_cert(args, cert)
    return EXIT_OK


def cmd_oracle(args) -> int:
    ms = LengthMultiset.parse(args.multiset)
    cap = args.cap if args.cap else _default_brute_cap()
    try:
        cert = search.brute_force(ms, cap=cap)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if cert is None:
        _emit(
            args,
            {"ok": False, "detail": "none (definitive)"},
            "no realization exists (definitive)",
        )
        return EXIT_SEARCH_FAILED
    _emit_cert(args, cert)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = search.SearchConfig(rng_seed=args.seed)
    print(f"seed: {args.seed}", file=sys.stderr)
    report = search.sweep(args.vmax, cfg, definitive=args.definitive)
    if args.json:
        print(json.dumps({"schema": 1, "report": report}))
    else:
        for row in report:
            print(
                "v={v}: admissible={admissible_count} realized={realized} "
                "unrealizable={unrealizable} unknown={unknown}".format(**row)
            )
    bad = sum(r["unrealizable"] for r in report)
    return EXIT_OK if not bad else EXIT_SEARCH_FAILED


def cmd_seeds(args) -> int:
    if args.action == "check":
        reports = seeds.verify_all_seeds()
        bad = [r for r in reports if not r.ok]
        _emit(
            args,
            {
                "ok": not bad,
                "entries": len(reports),
                "failures": [
                    {
                        "table": r.entry.table_id,
                        "variant": r.entry.variant,
                        "multiset": r.entry.multiset.format(),
                        "problems": list(r.problems),
                    }
                    for r in bad
                ],
            },
            f"{len(reports)} entries, {len(bad)} failures",
        )
        return EXIT_OK if not bad else EXIT_VERIFY_FAILED
    # dump
    rows = [
        {
            "table": e.table_id,
            "variant": e.variant,
            "multiset": e.multiset.format(),
            "path": list(e.path.vertices),
            "grow_points": [[g.x, g.m] for g in e.declared_grow_points],
        }
        for e in seeds.iter_seeds()
        if args.table is None or e.table_id == args.table
    ]
    if args.json:
        print(json.dumps({"schema": 1, "seeds": rows}))
    else:
        for r in rows:
            print(
                f"{r['table']}/{r['variant']}: {r['multiset']} "
                f"{r['path']} points={r['grow_points']}"
            )
    return EXIT_OK


def cmd_bound(args) -> int:
    ms = LengthMultiset.parse(args.multiset)
    value = solvers.hr_bound(ms)
    _emit(args, {"bound": value}, str(value))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="bhr",
        description="Cyclic realizations of edge-length multisets.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true")
        return p

    p = add("verify", cmd_verify, help="check a path against a multiset")
    p.add_argument("--path", required=True)
    p.add_argument("--multiset", required=True)

    p = add("admissible", cmd_admissible, help="divisor test")
    p.add_argument("multiset")

    p = add("grow", cmd_grow, help="apply grow steps to a realization")
    p.add_argument("--path", required=True)
    p.add_argument("--multiset")
    p.add_argument("--at", help="x,m for a single grow")
    p.add_argument("--schedule", help='e.g. "2*4 3*3"')

    p = add("splice", cmd_splice, help="splice a perfect realization")
    p.add_argument("--path", required=True)
    p.add_argument("--multiset")
    p.add_argument("--kpath", required=True)

    p = add("even-grow", cmd_even_grow, help="the two-run 2-grow rewrite")
    p.add_argument("--path", required=True)
    p.add_argument("--multiset")
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--z", type=int, required=True)

    p = add("x2x", cmd_x2x, help="triple x-grow with i run swaps")
    p.add_argument("--path", required=True)
    p.add_argument("--multiset")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = add("perf-grow", cmd_perf_grow, help="grow through perfect parts")
    p.add_argument("--path", required=True)
    p.add_argument("--multiset")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--parts", required=True, help="JSON file of parts")

    p = add("family", cmd_family, help="closed-form {1^a, x^b} seed")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = add("solve", cmd_solve, help="drive the theorem-level solvers")
    p.add_argument("multiset")
    p.add_argument("--fallback", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = add("search", cmd_search, help="randomized local search")
    p.add_argument("multiset")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--steps", type=int, default=2000)

    p = add("oracle", cmd_oracle, help="exhaustive search (definitive)")
    p.add_argument("multiset")
    p.add_argument("--cap", type=int)

    p = add("sweep", cmd_sweep, help="try every admissible multiset")
    p.add_argument("--vmax", type=int, required=True)
    p.add_argument("--definitive", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = add("seeds", cmd_seeds, help="dump or check the seed tables")
    p.add_argument("action", choices=["dump", "check"])
    p.add_argument("--table")

    p = add("bound", cmd_bound, help="realizability threshold")
    p.add_argument("multiset")

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; remap (0 for --help)
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (MultisetError, PathError, NotGrowableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
