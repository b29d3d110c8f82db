"""Command line surface: gen, centers, verify, render, tables.

Exit codes: 0 all checks passed, 1 at least one identity failed, 2 usage
error.  `verify --seeds` reports are JSON lines ordered by seed and are
byte-identical across runs and across --jobs settings.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from multiprocessing import Pool

from . import registry as rg
from . import render as rd
from .errors import GeometryError, UnknownIdentity
from .extscalar import PointKind, segment_lengths
from .generate import SHAPES, gen_triangle
from .plane import HLine, HPoint, angle_ext, join, origin, polar
from .registry import triangle_from_json, triangle_json


def _load_triangle(path: str):
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    seed = obj.get("meta", {}).get("seed", 0)
    return triangle_from_json(obj), seed


def _cmd_gen(args) -> int:
    t = gen_triangle(args.seed, shape=args.shape)
    payload = json.dumps(triangle_json(t, args.seed), indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return 0


def _cmd_centers(args) -> int:
    t, seed = _load_triangle(args.triangle)
    ctx = rg.TrialContext(seed=seed, t=t)
    aliases = {"Mp": "M'", "Hp": "H'"}
    which = None if args.which == "all" else [
        aliases.get(w.strip(), w.strip()) for w in args.which.split(",")]
    rows = rg.center_table(ctx, which=which)
    if args.table:
        print(f"{'name':6s} {'kind':10s} {'klein x':>12s} {'klein y':>12s}  notes")
        for row in rows:
            if "status" in row:
                print(f"{row['name']:6s} {'-':10s} {'-':>12s} {'-':>12s}  {row['status']}")
                continue
            p = HPoint(*row["point"]["coords"])
            kind = row["classification"]
            if kind == "real":
                kx, ky = p.klein()
                print(f"{row['name']:6s} {kind:10s} {kx:12.6f} {ky:12.6f}")
            else:
                print(f"{row['name']:6s} {kind:10s} {'-':>12s} {'-':>12s}")
        return 0
    print(json.dumps(rows, indent=2, sort_keys=True))
    return 0


def _parse_seed_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(s) for s in text.split(",")]


def _verify_worker(job):
    seed, ids, shape = job
    rep = rg.run_suite(seed, ids=ids, shape=shape, include_centers=False)
    return rep.to_jsonl(), rep.summary()


def _cmd_verify(args) -> int:
    ids = None
    if args.ids:
        ids = [s.strip() for s in args.ids.split(",")]
        for identity_id in ids:
            if identity_id not in rg.REGISTRY:
                raise UnknownIdentity(identity_id)
    lines = []
    totals = {"pass": 0, "fail": 0, "skipped": 0}
    failed_seeds = []

    if args.seeds:
        seeds = _parse_seed_range(args.seeds)
        jobs = [(seed, ids, args.shape) for seed in seeds]
        if args.jobs > 1:
            with Pool(args.jobs) as pool:
                results = pool.map(_verify_worker, jobs)
        else:
            results = [_verify_worker(j) for j in jobs]
        for (jsonl, summary) in results:
            lines.append(jsonl)
            for k in totals:
                totals[k] += summary[k]
            if summary["failed_ids"]:
                failed_seeds.append(summary["seed"])
            if args.fail_fast and summary["failed_ids"]:
                break
    else:
        if not args.triangle:
            print("verify needs a triangle file or --seeds", file=sys.stderr)
            return 2
        t, seed = _load_triangle(args.triangle)
        rep = rg.run_suite(seed, ids=ids, include_centers=False, triangle=t)
        lines.append(rep.to_jsonl())
        summary = rep.summary()
        for k in totals:
            totals[k] += summary[k]
        if summary["failed_ids"]:
            failed_seeds.append(seed)

    lines.append(json.dumps({"total": totals, "seeds_with_failures": failed_seeds},
                            separators=(",", ":")))
    payload = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 1 if totals["fail"] else 0


def _cmd_render(args) -> int:
    t, seed = _load_triangle(args.triangle)
    aliases = {"Mp": "M'", "Hp": "H'"}
    which = ([aliases.get(w.strip(), w.strip()) for w in args.centers.split(",")]
             if args.centers != "all" else
             ["M", "O", "I", "H", "M'", "L", "S", "Z", "F"])
    rd.render_svg(t, which, args.model, args.output,
                  euler_line=args.euler_line, seed=seed)
    return 0


_TABLE_CASES = {
    # segment tables: (kind_a, kind_b, needs_d, line)
    "RR": (PointKind.REAL, PointKind.REAL, True, "real"),
    "RIn": (PointKind.REAL, PointKind.INFINITE, False, "real"),
    "RId": (PointKind.REAL, PointKind.IDEAL, True, "real"),
    "InIn": (PointKind.INFINITE, PointKind.INFINITE, False, "real"),
    "InId": (PointKind.INFINITE, PointKind.IDEAL, False, "real"),
    "IdId": (PointKind.IDEAL, PointKind.IDEAL, True, "real"),
    "InIn@inf": (PointKind.INFINITE, PointKind.INFINITE, False, "infinity"),
    "InId@inf": (PointKind.INFINITE, PointKind.IDEAL, False, "infinity"),
    "IdId@inf": (PointKind.IDEAL, PointKind.IDEAL, False, "infinity"),
}

_ANGLE_CASES = ("aRR-R", "aRR-In", "aRR-Id", "aRIn-In", "aRIn-Id", "aRId",
                "aInIn", "aInId", "aIdId")


def _angle_case_lines(case: str, d: float):
    x_axis = HLine(0.0, 1.0, 0.0)
    tangent = HLine(1.0, 0.0, 1.0)
    if case == "aRR-R":
        return x_axis, HLine(math.sin(d), -math.cos(d), 0.0)
    if case == "aRR-In":
        return (join(HPoint(1.0, 0.0, 1.0), origin()),
                join(HPoint(1.0, 0.0, 1.0), HPoint(0.0, 0.4, 1.0)))
    if case == "aRR-Id":
        return HLine(1.0, 0.0, 0.0), HLine(1.0, 0.0, math.tanh(d))
    if case == "aRIn-In":
        return join(HPoint(1.0, 0.0, 1.0), origin()), tangent
    if case == "aRIn-Id":
        return x_axis, HLine(0.0, 1.0, 1.0)
    if case == "aRId":
        return x_axis, polar(HPoint(0.0, math.tanh(d), 1.0))
    if case == "aInIn":
        return tangent, HLine(-1.0, 0.0, 1.0)
    if case == "aInId":
        return tangent, polar(HPoint(0.3, 0.2, 1.0))
    if case == "aIdId":
        return polar(origin()), polar(HPoint(math.tanh(d), 0.0, 1.0))
    raise GeometryError(f"unknown angle case {case}")


def _cmd_tables(args) -> int:
    cases = ([args.case] if args.case != "all"
             else list(_TABLE_CASES) + list(_ANGLE_CASES))
    for case in cases:
        if case in _TABLE_CASES:
            ka, kb, needs_d, line = _TABLE_CASES[case]
            pair = segment_lengths(ka, kb, d=args.d if needs_d else None, line=line)
            suffix = f" d={args.d:g}" if needs_d else ""
            print(f"{case:9s}{suffix:8s} AB = {pair[0]}, BA = {pair[1]}")
        elif case in _ANGLE_CASES:
            a, b = _angle_case_lines(case, args.d)
            p = angle_ext(a, b)
            def show(v):
                if math.isinf(v.re):
                    return "inf" if v.re > 0 else "-inf"
                if v.over_i == 0.0:
                    return f"{v.re:g}"
                sign = "+" if v.over_i >= 0 else "-"
                return f"{v.re:g} {sign} {abs(v.over_i):g}/i"
            print(f"{case:9s} d={args.d:<6g} angles = ({show(p[0])}, {show(p[1])})")
        else:
            print(f"unknown case {case!r}", file=sys.stderr)
            return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertri",
        description="Hyperbolic triangle geometry: generation, centers, "
                    "identity verification, rendering, segment tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded triangle as JSON")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--shape", choices=SHAPES, default="any")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("centers", help="compute the triangle centers")
    p.add_argument("triangle", help="triangle JSON file")
    p.add_argument("--which", default="all",
                   help="comma list of center names, or 'all'")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="table", action="store_false", default=False)
    fmt.add_argument("--table", dest="table", action="store_true")
    p.set_defaults(fn=_cmd_centers)

    p = sub.add_parser("verify", help="run the identity registry")
    p.add_argument("triangle", nargs="?", help="triangle JSON file")
    p.add_argument("--seeds", help="seed range A..B or comma list")
    p.add_argument("--shape", choices=SHAPES, default="any")
    p.add_argument("--ids", help="comma list of identity codes")
    p.add_argument("--fail-fast", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("render", help="draw the triangle and centers as SVG")
    p.add_argument("triangle", help="triangle JSON file")
    p.add_argument("--model", choices=("klein", "poincare"), required=True)
    p.add_argument("--centers", default="all")
    p.add_argument("--euler-line", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("tables", help="print the segment/angle table dispatch")
    p.add_argument("--case", default="all",
                   help="one of " + "|".join(list(_TABLE_CASES) + list(_ANGLE_CASES))
                        + " or 'all'")
    p.add_argument("--d", type=float, default=0.5,
                   help="auxiliary real distance for the cases that take one")
    p.set_defaults(fn=_cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GeometryError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
