"""Batch command line surface; every run is reproducible and machine readable.

Each command computes a payload (JSON, or CSV for point clouds), writes it
to --out or stdout, and emits a run manifest carrying the parameters, the
seed, and a SHA-256 digest of the payload bytes.  Payload bytes depend only
on the parameters and the seed, never on wall time or the worker count, so
rerunning a manifest reproduces the digest.

Exit codes: 0 success, 2 invalid parameters, 3 resource limit, 4
verification failure (a failed symmetry check is loud by design).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .cyclotomic import ConductorError
from .kfree import (
    ResourceCapError,
    anchor_count,
    density_estimate,
    extract_patches,
    is_admissible,
    patch_entropy_estimate,
    patch_from_json,
    sieve_box,
)
from .symmetries import AqNotFound, aq_search, generator_elements, verify_stabiliser_action
from .zeta import dedekind_zeta, entropy_constant, interval_to_json

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4


def _emit(args, command: str, params: dict, payload: bytes, seed: int, wall: float) -> None:
    digest = hashlib.sha256(payload).hexdigest()
    manifest = {
        "command": command,
        "parameters": params,
        "seed": seed,
        "version": __version__,
        "wall_time_s": round(wall, 6),
        "output_digest": digest,
    }
    out = getattr(args, "out", None)
    if out:
        Path(out).write_bytes(payload)
        Path(str(out) + ".manifest.json").write_text(
            json.dumps(manifest, sort_keys=True) + "\n", encoding="utf-8"
        )
    else:
        sys.stdout.write(payload.decode("utf-8"))
        if not payload.endswith(b"\n"):
            sys.stdout.write("\n")
        sys.stderr.write(json.dumps(manifest, sort_keys=True) + "\n")


def _points_payload(box, fmt: str) -> bytes:
    pts = box.sorted_points()
    d = box.d
    if fmt == "csv":
        lines = [",".join(f"x{i+1}" for i in range(d))]
        lines.extend(",".join(str(v) for v in p) for p in pts)
        return ("\n".join(lines) + "\n").encode("utf-8")
    doc = {
        "n": box.n,
        "k": box.k,
        "radius": box.r,
        "count": box.count,
        "points": [list(p) for p in pts],
    }
    return (json.dumps(doc, sort_keys=True) + "\n").encode("utf-8")


def cmd_sieve(args) -> int:
    t0 = time.perf_counter()
    box = sieve_box(args.n, args.k, args.radius, threads=args.threads)
    payload = _points_payload(box, args.format)
    report = density_estimate(box, prime_bound=args.prime_bound)
    wall = time.perf_counter() - t0
    params = {
        "n": args.n,
        "k": args.k,
        "radius": args.radius,
        "format": args.format,
        "prime_bound": args.prime_bound,
    }
    _emit(args, "sieve", params, payload, seed=args.seed, wall=wall)
    if args.out:
        Path(str(args.out) + ".density.json").write_text(report.to_json() + "\n", encoding="utf-8")
    else:
        sys.stderr.write(report.to_json() + "\n")
    return EXIT_OK


def cmd_density(args) -> int:
    t0 = time.perf_counter()
    box = sieve_box(args.n, args.k, args.radius, threads=args.threads)
    report = density_estimate(box, prime_bound=args.prime_bound)
    payload = (report.to_json() + "\n").encode("utf-8")
    wall = time.perf_counter() - t0
    params = {"n": args.n, "k": args.k, "radius": args.radius, "prime_bound": args.prime_bound}
    _emit(args, "density", params, payload, seed=args.seed, wall=wall)
    return EXIT_OK


def cmd_zeta(args) -> int:
    t0 = time.perf_counter()
    value = dedekind_zeta(args.n, args.k, args.prime_bound)
    payload = (value.to_json() + "\n").encode("utf-8")
    wall = time.perf_counter() - t0
    params = {"n": args.n, "k": args.k, "prime_bound": args.prime_bound}
    _emit(args, "zeta", params, payload, seed=args.seed, wall=wall)
    return EXIT_OK


def cmd_entropy(args) -> int:
    t0 = time.perf_counter()
    interval = entropy_constant(args.n, args.k, args.prime_bound)
    payload = (
        interval_to_json(
            interval, n=args.n, k=args.k, prime_bound=args.prime_bound, constant="entropy"
        )
        + "\n"
    ).encode("utf-8")
    wall = time.perf_counter() - t0
    params = {"n": args.n, "k": args.k, "prime_bound": args.prime_bound}
    _emit(args, "entropy", params, payload, seed=args.seed, wall=wall)
    return EXIT_OK


def cmd_admissible(args) -> int:
    t0 = time.perf_counter()
    text = Path(args.infile).read_text(encoding="utf-8")
    patch, n, k = patch_from_json(text)
    verdict = is_admissible(patch.occupied, n, k)
    payload = (
        json.dumps({"admissible": verdict, "n": n, "k": k, "cells": len(patch.occupied)}, sort_keys=True)
        + "\n"
    ).encode("utf-8")
    wall = time.perf_counter() - t0
    _emit(args, "admissible", {"in": str(args.infile)}, payload, seed=args.seed, wall=wall)
    return EXIT_OK


def cmd_symcheck(args) -> int:
    t0 = time.perf_counter()
    reports = [
        verify_stabiliser_action(
            element, args.k, args.radius, sample_size=args.samples, seed=args.seed,
            threads=args.threads,
        )
        for element in generator_elements(args.n)
    ]
    failures = sum(len(r.failures) for r in reports)
    doc = {
        "n": args.n,
        "k": args.k,
        "radius": args.radius,
        "samples": args.samples,
        "elements": [json.loads(r.to_json()) for r in reports],
        "total_checked": sum(r.checked for r in reports),
        "total_failures": failures,
    }
    payload = (json.dumps(doc, sort_keys=True) + "\n").encode("utf-8")
    wall = time.perf_counter() - t0
    params = {"n": args.n, "k": args.k, "radius": args.radius, "samples": args.samples}
    _emit(args, "symcheck", params, payload, seed=args.seed, wall=wall)
    if failures:
        sys.stderr.write(f"symcheck: {failures} failures; this falsifies the stabiliser law\n")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_aq(args) -> int:
    t0 = time.perf_counter()
    candidate = aq_search(args.n, args.q, args.ell_bound, args.a_bound)
    payload = (candidate.to_json() + "\n").encode("utf-8")
    wall = time.perf_counter() - t0
    params = {"n": args.n, "q": args.q, "ell_bound": args.ell_bound, "a_bound": args.a_bound}
    _emit(args, "aq", params, payload, seed=args.seed, wall=wall)
    return EXIT_OK


def cmd_patches(args) -> int:
    t0 = time.perf_counter()
    shape = [tuple(off) for off in json.loads(args.shape)]
    box = sieve_box(args.n, args.k, args.radius, threads=args.threads)
    census = extract_patches(box, shape)
    doc = {
        "n": args.n,
        "k": args.k,
        "radius": args.radius,
        "shape": [list(off) for off in shape],
        "anchors": anchor_count(box, shape),
        "distinct_patterns": len(census),
        "entropy_estimate": patch_entropy_estimate(box, shape),
        "counts": {p.fill_bits: c for p, c in sorted(census.items(), key=lambda t: t[0].fill)},
    }
    payload = (json.dumps(doc, sort_keys=True) + "\n").encode("utf-8")
    wall = time.perf_counter() - t0
    params = {"n": args.n, "k": args.k, "radius": args.radius, "shape": args.shape}
    _emit(args, "patches", params, payload, seed=args.seed, wall=wall)
    return EXIT_OK


def _add_common(parser, radius=False, prime_bound=None, threads=False):
    parser.add_argument("--out", type=str, default=None, help="payload file (default stdout)")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampling commands")
    if radius:
        parser.add_argument("--radius", type=int, required=True, help="box half-width")
    if prime_bound is not None:
        parser.add_argument("--prime-bound", dest="prime_bound", type=int, default=prime_bound)
    if threads:
        parser.add_argument("--threads", type=int, default=1, help="worker count (output-neutral)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclofree",
        description="k-free cyclotomic integers: sieves, zeta constants, symmetries",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="materialize the k-free points of a box")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common(p, radius=True, prime_bound=10_000, threads=True)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("density", help="empirical density against the zeta interval")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, radius=True, prime_bound=100_000, threads=True)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("zeta", help="rigorous enclosure of the Dedekind zeta value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, prime_bound=100_000)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("entropy", help="enclosure of the entropy constant log(2)/zeta")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, prime_bound=100_000)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("admissible", help="admissibility of a patch file")
    p.add_argument("--in", dest="infile", type=str, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("symcheck", help="verify generator symmetries on sieved points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    _add_common(p, radius=True, threads=True)
    p.set_defaults(func=cmd_symcheck)

    p = sub.add_parser("aq", help="search the least a_q meeting (H1)(H2)(H3)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ell-bound", dest="ell_bound", type=int, required=True)
    p.add_argument("--a-bound", dest="a_bound", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_aq)

    p = sub.add_parser("patches", help="patch census over a sieved box")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shape", type=str, required=True, help="JSON list of offsets")
    _add_common(p, radius=True, threads=True)
    p.set_defaults(func=cmd_patches)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConductorError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except ResourceCapError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except AqNotFound as exc:
        sys.stderr.write(f"search exhausted: {exc}\n")
        return EXIT_RESOURCE
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
