"""Command-line front end.

Exit codes: 0 on success, 1 on a mathematical mismatch between pipelines,
2 on usage errors.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .closedform import closed_minor, enumerate_k_systems, enumerate_spin_systems
from .cluster import build_bmatrix, exchange_step, initial_seed, mutate_matrix
from .factorize import (
    TorusPoint,
    check_inverse,
    check_operator_identity,
    phi,
    psi,
    random_point,
)
from .laurent import LaurentPoly
from .pathsum import (
    enumerate_spin_paths,
    enumerate_vector_paths,
    export_dot,
    spin_path_sum,
    vector_path_sum,
)
from .repb import minor_L
from .rootdata import BadShape, MinorSpec, make_minor_spec, validate_word

USAGE_ERROR = 2
MISMATCH = 1


class CliError(Exception):
    pass


def _spec_from_args(args) -> MinorSpec:
    if args.word:
        letters = tuple(int(x) for x in args.word.split(","))
        validate_word(letters, args.rank)
        length = len(letters)
        if args.length is not None and args.length != length:
            raise CliError(
                f"--length {args.length} disagrees with --word of length {length}"
            )
    elif args.length is not None:
        length = args.length
    else:
        raise CliError("either --length or --word is required")
    k = getattr(args, "k", None)
    return make_minor_spec(args.rank, length, k if k is not None else 1)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _minor_by_method(spec: MinorSpec, method: str, c_variant: str) -> LaurentPoly:
    if method == "rep":
        return minor_L(spec)
    if method == "paths":
        return spin_path_sum(spec) if spec.d == spec.r else vector_path_sum(spec)
    if method == "closed":
        return closed_minor(spec, c_variant)
    raise CliError(f"unknown method {method}")


def cmd_minor(args) -> int:
    spec = _spec_from_args(args)
    if args.format == "dot":
        raise CliError("dot output is for the paths command")
    if spec.k < 0 and args.method != "rep":
        raise CliError("negative positions support --method rep only")
    if args.method == "all":
        values = {
            name: _minor_by_method(spec, name, args.c_variant)
            for name in ("rep", "paths", "closed")
        }
        match = values["rep"] == values["paths"] == values["closed"]
        body = _render_poly(values["rep"], args.format)
        verdict = "MATCH" if match else "MISMATCH"
        _emit(body + verdict + "\n", args.out)
        return 0 if match else MISMATCH
    value = _minor_by_method(spec, args.method, args.c_variant)
    _emit(_render_poly(value, args.format), args.out)
    return 0


def _render_poly(value: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(value.json_dict(), sort_keys=True) + "\n"
    return value.text() + "\n"


def cmd_sweep(args) -> int:
    ranks = [args.rank] if args.rank else [2, 3, 4]
    rows = []
    failures = 0
    for r in ranks:
        lengths = [args.length] if args.length else range(1, r * r + 1)
        for n in lengths:
            ks = [args.k] if args.k else range(1, n + 1)
            for k in ks:
                spec = make_minor_spec(r, n, k)
                if spec.i_k != spec.i_n:
                    continue
                rep = minor_L(spec)
                if spec.d == spec.r:
                    paths = enumerate_spin_paths(spec)
                    psum = spin_path_sum(spec)
                    nsys = len(enumerate_spin_systems(spec))
                else:
                    paths = enumerate_vector_paths(spec)
                    psum = vector_path_sum(spec)
                    nsys = len(enumerate_k_systems(spec))
                closed = closed_minor(spec, args.c_variant)
                ok = rep == psum == closed
                failures += 0 if ok else 1
                rows.append(
                    {
                        "r": r,
                        "n": n,
                        "k": k,
                        "d": spec.d,
                        "paths": len(paths),
                        "systems": nsys,
                        "terms": len(rep.terms),
                        "verdict": "MATCH" if ok else "MISMATCH",
                    }
                )
    if args.format == "json":
        _emit(json.dumps(rows) + "\n", args.out)
    else:
        lines = [
            f"r={row['r']} n={row['n']} k={row['k']} d={row['d']} "
            f"paths={row['paths']} systems={row['systems']} "
            f"terms={row['terms']} {row['verdict']}"
            for row in rows
        ]
        _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return MISMATCH if failures else 0


def cmd_paths(args) -> int:
    spec = _spec_from_args(args)
    if spec.k < 0:
        raise CliError("paths need a positive position")
    paths = (
        enumerate_spin_paths(spec)
        if spec.d == spec.r
        else enumerate_vector_paths(spec)
    )
    if args.format == "dot":
        _emit(export_dot(paths, spec.r), args.out)
    elif args.format == "json":
        data = [[list(t) for t in p.tuples] for p in paths]
        _emit(json.dumps(data) + "\n", args.out)
    else:
        body = "\n".join(
            " -> ".join("(" + ",".join(map(str, t)) + ")" for t in p.tuples)
            for p in paths
        )
        _emit(body + "\n", args.out)
    return 0


def cmd_bmatrix(args) -> int:
    spec = _spec_from_args(args)
    b = build_bmatrix(spec)
    if args.format == "json":
        _emit(json.dumps(b.json_dict(), sort_keys=True) + "\n", args.out)
    else:
        _emit(b.text(), args.out)
    return 0


def cmd_mutate(args) -> int:
    spec = _spec_from_args(args)
    if args.k is None:
        raise CliError("--k selects the mutation direction")
    seed = initial_seed(spec)
    if args.k not in seed.matrix.cols:
        raise CliError(f"position {args.k} is not exchangeable")
    mutated = mutate_matrix(seed.matrix, args.k)
    stepped = exchange_step(seed, args.k)
    if args.format == "json":
        payload = {
            "matrix": mutated.json_dict(),
            "new_variable": stepped.cluster[args.k].json_dict(),
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        body = mutated.text() + "x'_{} = {}\n".format(
            args.k, stepped.cluster[args.k].text()
        )
        _emit(body, args.out)
    return 0


def cmd_factor(args) -> int:
    spec = _spec_from_args(args)
    if args.point:
        with open(args.point) as fh:
            point = TorusPoint.from_json_dict(json.load(fh))
        mapped = phi(point, spec) if args.map == "phi" else psi(point, spec)
        _emit(json.dumps(mapped.json_dict(), sort_keys=True) + "\n", args.out)
        return 0
    rng = random.Random(args.seed)
    trials = args.trials
    inv_ok = all(check_inverse(spec, random_point(spec, rng)) for _ in range(trials))
    op_ok = all(
        check_operator_identity(spec, random_point(spec, rng)) for _ in range(trials)
    )
    _emit(
        "phi/psi inverse: {}; operator identity: {}\n".format(
            "OK" if inv_ok else "FAIL", "OK" if op_ok else "FAIL"
        ),
        args.out,
    )
    return 0 if inv_ok and op_ok else MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bminors",
        description="Exact minors on type-B double Bruhat cells",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_k=True):
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--length", type=int)
        p.add_argument("--word", help="explicit comma-separated word (family only)")
        if with_k:
            p.add_argument("--k", type=int)
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("--out", help="write output to this path")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument(
            "--c-variant",
            choices=("lemma", "theorem"),
            default="theorem",
            dest="c_variant",
            help="zero-exit clause used by the closed form",
        )

    p_minor = sub.add_parser("minor", help="compute one minor")
    common(p_minor)
    p_minor.add_argument(
        "--method", choices=("rep", "paths", "closed", "all"), default="all"
    )
    p_minor.set_defaults(func=cmd_minor)

    p_sweep = sub.add_parser("sweep", help="cross-check pipelines over a range")
    p_sweep.add_argument("--rank", type=int)
    p_sweep.add_argument("--length", type=int)
    p_sweep.add_argument("--k", type=int)
    p_sweep.add_argument("--format", choices=("text", "json"), default="text")
    p_sweep.add_argument("--out")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument(
        "--c-variant",
        choices=("lemma", "theorem"),
        default="theorem",
        dest="c_variant",
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_paths = sub.add_parser("paths", help="enumerate labelled paths")
    common(p_paths)
    p_paths.set_defaults(func=cmd_paths)

    p_b = sub.add_parser("bmatrix", help="print the exchange matrix")
    common(p_b, with_k=False)
    p_b.set_defaults(func=cmd_bmatrix)

    p_mut = sub.add_parser("mutate", help="mutate the initial seed once")
    common(p_mut)
    p_mut.set_defaults(func=cmd_mutate)

    p_f = sub.add_parser("factor", help="coordinate-change checks and evaluation")
    common(p_f, with_k=False)
    p_f.add_argument("--check", action="store_true")
    p_f.add_argument("--trials", type=int, default=20)
    p_f.add_argument("--point", help="JSON torus point to map")
    p_f.add_argument("--map", choices=("phi", "psi"), default="phi")
    p_f.set_defaults(func=cmd_factor)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (CliError, BadShape, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
