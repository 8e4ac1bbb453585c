"""Command-line interface: ``grassdist <command> ...``.

Subspaces are read from CSV files with one row per ambient coordinate and
one column per spanning vector (no header). Inputs are orthonormalized on
ingestion. Results go to stdout (or ``--output``) as JSON; bases are written
as CSV.

Exit codes: 0 success, 2 bad arguments, 3 unreadable or malformed files,
4 numerical precondition failures (rank deficiency, singular pencil,
insufficient ambient dimension, mismatched dimensions).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import distances, geodesics, metrics, sampling, schubert
from .distances import DistanceKind
from .errors import DimensionError, GrassError
from .metrics import InftyMetricKind
from .subspace import (
    RANK_TOL,
    Subspace,
    intersection,
    orthonormal_basis,
    principal_angles,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FILE = 3
EXIT_NUMERIC = 4

METRIC_CHOICES = sorted({k.value for k in DistanceKind} | {"gap", "sdd"})


class UsageError(Exception):
    pass


class FileFormatError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# file IO

def read_matrix(path) -> np.ndarray:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror or exc}") from exc
    rows = [ln for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FileFormatError(f"{path}: empty file")
    try:
        data = [[float(x) for x in ln.split(",")] for ln in rows]
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc
    width = {len(r) for r in data}
    if len(width) != 1:
        raise FileFormatError(f"{path}: rows have differing numbers of columns")
    M = np.array(data, dtype=float)
    if not np.all(np.isfinite(M)):
        raise FileFormatError(f"{path}: non-finite entries")
    return M


def read_subspace(path) -> Subspace:
    return orthonormal_basis(read_matrix(path))


def format_csv(M: np.ndarray) -> str:
    M = np.atleast_2d(M)
    return "".join(",".join(repr(float(x)) for x in row) + "\n" for row in M)


def _write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror or exc}") from exc


def write_csv(path, M: np.ndarray) -> None:
    _write_text(path, format_csv(M))


def _emit(text: str, output) -> None:
    if output:
        _write_text(output, text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, output) -> None:
    # repr-based float output: shortest string that round-trips bit-exactly
    _emit(json.dumps(obj) + "\n", output)


# commands

def cmd_angles(args):
    A, B = read_subspace(args.a), read_subspace(args.b)
    theta = principal_angles(A, B)
    m, _ = intersection(A, B, args.tol if args.tol is not None else 1e-12)
    _emit_json({"angles": [float(t) for t in theta], "intersection_dim": m}, args.output)


def _pair_value(metric: str, family: str, A: Subspace, B: Subspace) -> float:
    if metric == "gap":
        return distances.containment_gap(A, B)
    if metric == "sdd":
        return distances.symmetric_directional(A, B)
    if family == "infty":
        return metrics.metric_infty(InftyMetricKind(metric), A, B)
    # finite family: the k != l case falls through to delta
    return distances.delta(DistanceKind(metric), A, B)


def cmd_dist(args):
    A, B = read_subspace(args.a), read_subspace(args.b)
    _emit_json({"value": _pair_value(args.metric, args.family, A, B)}, args.output)


def cmd_pairwise(args):
    d = Path(args.directory)
    if not d.is_dir():
        raise FileFormatError(f"{d}: not a directory")
    files = sorted(p for p in d.iterdir() if p.suffix == ".csv" and p.is_file())
    if not files:
        raise FileFormatError(f"{d}: no *.csv files")
    subs = [read_subspace(p) for p in files]
    dims = {s.dim for s in subs}
    if len(dims) > 1 and args.family == "finite" and args.metric not in ("gap", "sdd"):
        raise UsageError(
            "mixed dimensions need --family infty or --metric gap|sdd "
            f"(found dimensions {sorted(dims)})"
        )
    N = len(subs)
    D = np.zeros((N, N))
    for i in range(N):
        for j in range(i + 1, N):
            D[i, j] = D[j, i] = _pair_value(args.metric, args.family, subs[i], subs[j])
    _emit(format_csv(D), args.output)


def cmd_nearest(args):
    A, B = read_subspace(args.a), read_subspace(args.b)
    if args.mode == "contained":
        X = schubert.nearest_contained(A, B)
    else:
        X = schubert.nearest_containing(A, B, args.l)
    out = {"distance": distances.delta(DistanceKind.GRASSMANN, A, B)}
    if args.basis_out:
        write_csv(args.basis_out, X.basis)
        out["basis_file"] = str(args.basis_out)
    else:
        out["basis"] = X.basis.tolist()
    _emit_json(out, args.output)


def cmd_furthest(args):
    A, B = read_subspace(args.a), read_subspace(args.b)
    if args.mode == "containing":
        if args.l is None:
            raise UsageError("furthest --mode containing requires --l")
        X = schubert.furthest_containing(A, B, args.l)
        out = {
            "distance": distances.grassmann_distance(X, B),
            "exact": True,
        }
        if args.basis_out:
            write_csv(args.basis_out, X.basis)
            out["basis_file"] = str(args.basis_out)
        else:
            out["basis"] = X.basis.tolist()
    else:
        # no closed form for the furthest k-plane inside B: random search only
        if A.dim > B.dim:
            raise DimensionError(f"dim A = {A.dim} exceeds dim B = {B.dim}")
        g = sampling.SeededGenerator(args.seed if args.seed is not None else 0)
        best = 0.0
        for _ in range(args.samples):
            Y = sampling.random_contained(B, A.dim, g)
            best = max(best, distances.grassmann_distance(Y, A))
        out = {"estimate": best, "exact": False, "samples": args.samples}
    _emit_json(out, args.output)


def cmd_geodesic(args):
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    A, B = read_subspace(args.a), read_subspace(args.b)
    path = geodesics.geodesic(A, B)
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise FileFormatError(f"{out_dir}: {exc}") from exc
    width = len(str(args.steps))
    files = []
    for i in range(args.steps + 1):
        p = out_dir / f"gamma_{i:0{width}d}.csv"
        write_csv(p, geodesics.evaluate(path, i / args.steps).basis)
        files.append(str(p))
    out = {
        "length": geodesics.polyline_length(path, args.steps),
        "distance": distances.grassmann_distance(A, B),
        "files": files,
    }
    _emit_json(out, args.output)


def cmd_volume(args):
    lv = schubert.log_grassmannian_volume(args.k, args.n)
    _emit_json({"value": math.exp(lv), "log_value": lv}, args.output)


def cmd_relvolume(args):
    lv = schubert.log_relative_volume(args.k, args.l, args.n)
    _emit_json({"value": math.exp(lv), "log_value": lv}, args.output)


def cmd_sample(args):
    g = sampling.SeededGenerator(args.seed if args.seed is not None else 0)
    S = sampling.random_subspace(args.k, args.n, g)
    _emit(format_csv(S.basis), args.output)


def cmd_check(args):
    tol = args.tol if args.tol is not None else 1e-10
    reports = []
    worst = EXIT_OK
    for f in args.files:
        rep = {"file": str(f)}
        try:
            M = read_matrix(f)
        except FileFormatError as exc:
            rep.update(ok=False, error=str(exc))
            worst = max(worst, EXIT_FILE)
            reports.append(rep)
            continue
        n, k = M.shape
        s = np.linalg.svd(M, compute_uv=False)
        ortho_err = float(np.linalg.norm(M.T @ M - np.eye(k)))
        rank_ok = bool(k <= n and s[0] > 0 and s[-1] > RANK_TOL * s[0])
        rep.update(
            rows=n,
            cols=k,
            rank_ok=rank_ok,
            condition=float(s[0] / s[-1]) if s[-1] > 0 else math.inf,
            orthonormality_error=ortho_err,
            orthonormal=bool(ortho_err <= tol * math.sqrt(k)),
            ok=rank_ok,
        )
        if not rank_ok:
            rep["error"] = "rank deficient" if k <= n else f"{k} columns in R^{n}"
            worst = max(worst, EXIT_NUMERIC)
        reports.append(rep)
    _emit_json({"files": reports}, args.output)
    return worst


# parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grassdist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--output", "-o", help="write the result here instead of stdout")
        return sp

    def pair(sp):
        sp.add_argument("a", help="CSV basis of the first subspace")
        sp.add_argument("b", help="CSV basis of the second subspace")
        return common(sp)

    sp = pair(sub.add_parser("angles", help="principal angles and intersection dimension"))
    sp.add_argument("--tol", type=float, help="cosine threshold 1 - tol for shared directions")
    sp.set_defaults(func=cmd_angles)

    sp = pair(sub.add_parser("dist", help="distance or metric between two subspaces"))
    sp.add_argument("--metric", choices=METRIC_CHOICES, default="grassmann")
    sp.add_argument("--family", choices=("finite", "infty"), default="finite")
    sp.set_defaults(func=cmd_dist)

    sp = common(sub.add_parser("pairwise", help="distance matrix over a directory of CSVs"))
    sp.add_argument("directory")
    sp.add_argument("--metric", choices=METRIC_CHOICES, default="grassmann")
    sp.add_argument("--family", choices=("finite", "infty"), default="finite")
    sp.set_defaults(func=cmd_pairwise)

    sp = pair(sub.add_parser("nearest", help="nearest point of a Schubert variety"))
    sp.add_argument("--mode", choices=("contained", "containing"), required=True)
    sp.add_argument("--l", type=int, help="dimension of the containing plane (default dim B)")
    sp.add_argument("--basis-out", help="write the basis CSV here")
    sp.set_defaults(func=cmd_nearest)

    sp = pair(sub.add_parser("furthest", help="furthest point of a Schubert variety"))
    sp.add_argument("--mode", choices=("contained", "containing"), required=True)
    sp.add_argument("--l", type=int)
    sp.add_argument("--basis-out")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--samples", type=int, default=1000)
    sp.set_defaults(func=cmd_furthest)

    sp = pair(sub.add_parser("geodesic", help="sample the minimizing geodesic"))
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--out-dir", required=True, help="directory for gamma_*.csv")
    sp.set_defaults(func=cmd_geodesic)

    sp = common(sub.add_parser("volume", help="volume of Gr(k, n)"))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_volume)

    sp = common(sub.add_parser("relvolume", help="relative volume of the Schubert varieties"))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_relvolume)

    sp = common(sub.add_parser("sample", help="random subspace as CSV"))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_sample)

    sp = common(sub.add_parser("check", help="diagnose input files"))
    sp.add_argument("files", nargs="+")
    sp.add_argument("--tol", type=float, help="orthonormality tolerance (scaled by sqrt(k))")
    sp.set_defaults(func=cmd_check)
    return p


def run(argv=None) -> int:
    """Parse ``argv`` and execute; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args)
        return EXIT_OK if code is None else code
    except UsageError as exc:
        print(f"grassdist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileFormatError as exc:
        print(f"grassdist: file error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except GrassError as exc:
        print(f"grassdist: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def main() -> None:
    sys.exit(run())
