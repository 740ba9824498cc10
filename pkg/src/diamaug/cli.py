"""Command-line entry point: ``diamaug <subcommand> ...``.

Exit codes: 0 success, 2 input error, 3 wrong instance kind.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import time

from .approx import approx_optimal_shortcut
from .decision import decide
from .instances import (
    DISTRIBUTIONS,
    InstanceError,
    generate,
    load_instance,
    random_path,
    random_tree,
    result_dict,
)
from .oracle import brute_force_path, brute_force_tree
from .optimize import optimal_shortcut
from .tree import tree_diameter_path, tree_optimal_shortcut
from .unicyclic import path_diameter_with_shortcut

log = logging.getLogger("diamaug")

EXIT_INPUT = 2
EXIT_KIND = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _load(args, want: str | None):
    src = args.input
    try:
        if src == "-":
            kind, inst = load_instance(sys.stdin)
        else:
            kind, inst = load_instance(src)
    except OSError as exc:
        raise CliError(f"cannot read {src}: {exc}") from exc
    except InstanceError as exc:
        raise CliError(f"malformed instance: {exc}") from exc
    if want is not None and kind != want:
        raise CliError(f"expected a {want} instance, got a {kind}", EXIT_KIND)
    return kind, inst


def _seed_of(args):
    if args.input == "-":
        return None
    try:
        with open(args.input) as fh:
            return json.load(fh).get("seed")
    except (OSError, ValueError, AttributeError):
        return None


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_decide(args):
    _, path = _load(args, "path")
    if not args.lam > 0:
        raise CliError("--lambda must be positive")
    t0 = time.perf_counter()
    sc = decide(path, args.lam, workers=args.threads)
    ms = 1000 * (time.perf_counter() - t0)
    if sc is None:
        pair, diam = None, path.length
    else:
        pair, diam = (sc.k, sc.l), path_diameter_with_shortcut(path, sc.k, sc.l)
    payload = result_dict("decide", pair, diam, path.length, ms, order=path.order, seed=_seed_of(args))
    payload["lambda"] = args.lam
    _emit(payload)


def _opt_payload(name, res, ms, order=None, **extra):
    sc = None if res.shortcut is None else (res.shortcut.k, res.shortcut.l)
    return result_dict(name, sc, res.diameter, res.original_diameter, ms, order=order, **extra)


def cmd_path_exact(args):
    _, path = _load(args, "path")
    if path.n < 3:
        raise CliError("a path needs at least 3 vertices")
    t0 = time.perf_counter()
    res = optimal_shortcut(path, rel_tol=args.tol, workers=args.threads)
    ms = 1000 * (time.perf_counter() - t0)
    _emit(_opt_payload("path-exact", res, ms, order=path.order, seed=_seed_of(args)))


def cmd_path_approx(args):
    _, path = _load(args, "path")
    if path.n < 3:
        raise CliError("a path needs at least 3 vertices")
    if not 0 < args.eps < 1:
        raise CliError("--eps must lie in (0, 1)")
    if not path.metric.is_euclidean:
        raise CliError("path-approx needs 'points', not a distance matrix")
    t0 = time.perf_counter()
    res = approx_optimal_shortcut(path, args.eps)
    ms = 1000 * (time.perf_counter() - t0)
    _emit(_opt_payload("path-approx", res, ms, order=path.order, eps=args.eps, seed=_seed_of(args)))


def cmd_tree_exact(args):
    _, tree = _load(args, "tree")
    if tree.n < 3:
        raise CliError("a tree needs at least 3 vertices")
    inner = {"scan": "scan", "bsearch": "bsearch"}[args.inner]
    t0 = time.perf_counter()
    res = tree_optimal_shortcut(tree, inner=inner)
    ms = 1000 * (time.perf_counter() - t0)
    _emit(_opt_payload("tree-exact", res, ms, seed=_seed_of(args)))


def cmd_brute(args):
    kind, inst = _load(args, None)
    if inst.n < 3:
        raise CliError("need at least 3 vertices")
    t0 = time.perf_counter()
    if kind == "path":
        res = brute_force_path(inst)
        original = inst.length
        order = inst.order
    else:
        res = brute_force_tree(inst)
        original = tree_diameter_path(inst)[1]
        order = None
    ms = 1000 * (time.perf_counter() - t0)
    # a tree whose diameter no edge improves is reported without a shortcut
    improves = kind == "path" or res.optimum < original
    sc = res.best_shortcuts[0] if improves else None
    _emit(result_dict("brute", sc, res.optimum, original, ms, order=order, seed=_seed_of(args)))


def cmd_gen(args):
    if args.n < 1:
        raise CliError("--n must be positive")
    data = generate(args.kind, args.n, args.seed, args.dist)
    json.dump(data, sys.stdout)
    sys.stdout.write("\n")


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(float(s)) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise CliError(f"bad --sizes {text!r}") from exc
    if not sizes or min(sizes) < 3:
        raise CliError("--sizes needs integers >= 3")
    return sizes


def run_bench(suite: str, sizes, seed: int, eps: float = 0.1, repeat: int = 1, threads: int = 1):
    """Yield one benchmark row dict per (size, repetition)."""
    for n in sizes:
        for r in range(repeat):
            s = seed + r
            if suite == "tree":
                inst = random_tree(n, s)
            else:
                inst = random_path(n, s)
            t0 = time.perf_counter()
            if suite == "decision":
                sc = decide(inst, 0.5 * inst.length, workers=threads)
                diam = "" if sc is None else path_diameter_with_shortcut(inst, sc.k, sc.l)
            elif suite == "exact":
                diam = optimal_shortcut(inst, workers=threads).diameter
            elif suite == "approx":
                diam = approx_optimal_shortcut(inst, eps).diameter
            elif suite == "tree":
                diam = tree_optimal_shortcut(inst).diameter
            else:
                raise CliError(f"unknown suite {suite!r}")
            ms = 1000 * (time.perf_counter() - t0)
            yield {"suite": suite, "n": n, "eps": eps if suite == "approx" else "",
                   "seed": s, "runtime_ms": round(ms, 3), "diameter": diam}


def cmd_bench(args):
    sizes = _parse_sizes(args.sizes)
    writer = csv.DictWriter(sys.stdout, ["suite", "n", "eps", "seed", "runtime_ms", "diameter"])
    writer.writeheader()
    for row in run_bench(args.suite, sizes, args.seed, args.eps, args.repeat, args.threads):
        writer.writerow(row)
        sys.stdout.flush()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diamaug",
                                description="Diameter-optimal single-edge augmentation of paths and trees.")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="cap on internal parallelism (default: CPU count)")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--input", required=True, help="instance JSON file, or - for stdin")
        return sp

    sp = with_input(sub.add_parser("decide", help="is some shortcut within --lambda?"))
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.set_defaults(func=cmd_decide)

    sp = with_input(sub.add_parser("path-exact", help="optimal shortcut for a path"))
    sp.add_argument("--tol", type=float, default=1e-12, help="relative bisection tolerance")
    sp.set_defaults(func=cmd_path_exact)

    sp = with_input(sub.add_parser("path-approx", help="(1+eps)-approximate shortcut for a Euclidean path"))
    sp.add_argument("--eps", type=float, required=True)
    sp.set_defaults(func=cmd_path_approx)

    sp = with_input(sub.add_parser("tree-exact", help="optimal shortcut for a tree"))
    sp.add_argument("--inner", choices=["scan", "bsearch"], default="scan")
    sp.set_defaults(func=cmd_tree_exact)

    sp = with_input(sub.add_parser("brute", help="exhaustive reference answer"))
    sp.set_defaults(func=cmd_brute)

    sp = sub.add_parser("gen", help="write a random instance to stdout")
    sp.add_argument("--kind", choices=["path", "tree"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform-square")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="timing rows as CSV on stdout")
    sp.add_argument("--suite", choices=["decision", "exact", "approx", "tree"], required=True)
    sp.add_argument("--sizes", required=True, help="comma-separated sizes, e.g. 1e4,2e4")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--eps", type=float, default=0.1)
    sp.add_argument("--repeat", type=int, default=1)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already exits with 2 on usage errors
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    if args.threads < 1:
        log.error("--threads must be at least 1")
        return EXIT_INPUT
    try:
        args.func(args)
    except CliError as exc:
        log.error("%s", exc)
        return exc.code
    return 0


if __name__ == "__main__":
    sys.exit(main())
