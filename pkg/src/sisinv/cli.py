"""Command line front end.

Every command reads the JSON documents of :mod:`sisinv.io` and prints JSON.
Exit codes: 0 success / invariant, 1 not invariant (or a failed check),
2 usage or parse error, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import fibered as fb
from . import io, oracle, render
from . import subgroup as sg

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_subgroup(path: str) -> sg.ClosedSubgroup:
    return sg.canonicalize(io.subgroup_from_json(io.load_json(path)))


def _parse_point(text: str, d: int | None = None) -> tuple[Fraction, ...]:
    try:
        v = tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad point {text!r}") from exc
    if d is not None and len(v) != d:
        raise UsageError(f"point {text!r} must have {d} coordinates")
    return v


def _parse_grid(text: str, d: int) -> tuple[int, ...]:
    try:
        grid = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}") from exc
    if len(grid) == 1:
        grid = grid * d
    if len(grid) != d:
        raise UsageError(f"grid needs {d} counts")
    return grid


def _parse_window(text: str, d: int):
    try:
        window = render.parse_window(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if any(len(k) != d for k in window):
        raise UsageError(f"window must have {d} ranges")
    return window


def _emit(args, doc) -> None:
    text = io.dumps(doc)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------

def cmd_canon(args) -> int:
    _emit(args, io.subgroup_to_json(_load_subgroup(args.subgroup)))
    return EXIT_OK


def cmd_dual(args) -> int:
    M = _load_subgroup(args.subgroup)
    _emit(args, {"q": M.q, "factors": list(M.a), "dual": io.int_matrix_to_json(sg.dual(M))})
    return EXIT_OK


def cmd_contains(args) -> int:
    M = _load_subgroup(args.subgroup)
    x = _parse_point(args.point, M.d)
    inside = sg.contains(M, x)
    _emit(args, {"point": [io.rational_to_json(t) for t in x], "contains": inside})
    return EXIT_OK if inside else EXIT_FAIL


def _samples(args, M):
    if args.samples:
        return [_parse_point(p, M.d) for p in args.samples.split(";") if p.strip()]
    return fb.default_samples(M, np.random.default_rng(args.seed))


def cmd_test(args) -> int:
    Phi = io.generator_set_from_json(io.load_json(args.generators))
    M = _load_subgroup(args.subgroup)
    samples = _samples(args, M) if args.method == "modulation" else None
    try:
        report = fb.run_test(args.method, Phi, M, args.tol, samples)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, report.to_dict())
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_construct(args) -> int:
    M = _load_subgroup(args.subgroup)
    window = _parse_window(args.window, M.d)
    grid = _parse_grid(args.grid, M.d)
    try:
        phi = fb.exact_invariant_generator(M, window, grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, io.generator_to_json(phi))
    return EXIT_OK


def cmd_support(args) -> int:
    Phi = io.generator_set_from_json(io.load_json(args.generators))
    M = _load_subgroup(args.subgroup)
    rep = fb.support_report(Phi, M, args.tol)
    _emit(args, rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_project(args) -> int:
    f = io.generator_from_json(io.load_json(args.f))
    g = io.generator_from_json(io.load_json(args.g))
    M = _load_subgroup(args.subgroup)
    if not fb.compatible(f, g):
        raise UsageError("f and g must share dimension, grid and frame")
    _emit(args, io.generator_to_json(fb.project_principal(f, g, M, args.tol)))
    return EXIT_OK


def cmd_sweep(args) -> int:
    Phi = io.generator_set_from_json(io.load_json(args.generators))
    candidates = [_load_subgroup(p) for p in args.subgroups]
    window = Phi.window
    for i, Mi in enumerate(candidates):
        for j, Mj in enumerate(candidates):
            if i != j and sg.is_subgroup_of(Mi, Mj) and not sg.same_subgroup(Mi, Mj) \
                    and not fb.window_distinguishes(Mi, Mj, window):
                print(f"warning: window cannot distinguish {args.subgroups[i]} from "
                      f"{args.subgroups[j]}", file=sys.stderr)
    try:
        entries = fb.find_extra_invariance(Phi, candidates, args.tol)
    except fb.MonotonicityError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(args, {"results": [
        {"subgroup": path, "factors": list(e.subgroup.a), "q": e.subgroup.q, "verdict": e.verdict}
        for path, e in zip(args.subgroups, entries)
    ]})
    return EXIT_OK


def cmd_render(args) -> int:
    M = _load_subgroup(args.subgroup)
    if M.d > 2:
        raise UsageError(f"render supports d <= 2, this subgroup has d = {M.d}")
    svg = render.render_svg(M, _parse_window(args.window, M.d))
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_oracle(args) -> int:
    budget = oracle.BruteForceBudget(bound=args.bound, denominator=args.denominator)
    if args.oracle_cmd == "membership":
        spec = io.subgroup_from_json(io.load_json(args.subgroup))
        found = oracle.brute_membership(spec, _parse_point(args.point, spec.d), budget)
        _emit(args, {"member": found})
    elif args.oracle_cmd == "dual":
        spec = io.subgroup_from_json(io.load_json(args.subgroup))
        _emit(args, {"dual_in_box": sorted(list(x) for x in oracle.brute_dual(spec, budget))})
    else:
        vec = [complex(x) for x in args.vector.split(",")]
        span = [[complex(x) for x in s.split(",")] for s in (args.span or "").split(";") if s.strip()]
        _emit(args, {"residual": oracle.brute_span_membership(vec, span)})
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--tol", type=float, default=dflt(fb.DEFAULT_TOL),
                   help="relative rank/residual tolerance (default 1e-8)")
    p.add_argument("--threads", type=int, default=dflt(1), help="worker threads for per-cell work")
    p.add_argument("--seed", type=int, default=dflt(0), help="seed for randomized samples")
    p.add_argument("--out", default=dflt(None), help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sisinv", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_, **kw):
        p = sub.add_parser(name, parents=[common], help=help_, **kw)
        p.set_defaults(func=fn)
        return p

    add("canon", cmd_canon, "canonical form of a subgroup").add_argument("subgroup")
    add("dual", cmd_dual, "basis of the dual lattice").add_argument("subgroup")

    p = add("contains", cmd_contains, "membership of a rational point")
    p.add_argument("subgroup")
    p.add_argument("--point", required=True, help='comma separated rationals, e.g. "1/3,0"')

    p = add("test", cmd_test, "decide M-invariance of a generated space")
    p.add_argument("generators")
    p.add_argument("subgroup")
    p.add_argument("--method", choices=sorted(fb.METHODS), default="rank")
    p.add_argument("--samples", help='members of M for the modulation test, e.g. "1/2;1/4"')

    p = add("construct", cmd_construct, "exactly M-invariant generator")
    p.add_argument("subgroup")
    p.add_argument("--window", required=True, help='inclusive ranges per axis, e.g. "0:3,-1:1"')
    p.add_argument("--grid", default="1", help="cells per axis (one count or one per axis)")

    p = add("support", cmd_support, "support measure against sum j|E_j|")
    p.add_argument("generators")
    p.add_argument("subgroup")

    p = add("project", cmd_project, "project g onto the principal space S_M(f)")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("subgroup")

    p = add("sweep", cmd_sweep, "rank test against several candidate subgroups")
    p.add_argument("generators")
    p.add_argument("subgroups", nargs="+")

    p = add("render", cmd_render, "SVG of the partition over a window")
    p.add_argument("subgroup")
    p.add_argument("--window", required=True)

    p = sub.add_parser("oracle", parents=[common])
    p.set_defaults(func=cmd_oracle)
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--denominator", type=int, default=12)
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    o = osub.add_parser("membership")
    o.add_argument("subgroup")
    o.add_argument("--point", required=True)
    osub.add_parser("dual").add_argument("subgroup")
    o = osub.add_parser("span")
    o.add_argument("--vector", required=True)
    o.add_argument("--span", default="")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        fb.set_num_threads(args.threads)
        return args.func(args)
    except (UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
