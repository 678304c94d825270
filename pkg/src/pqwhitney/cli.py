"""Command line front end.

    pqwhitney triangle   --m 1 --r 1 --t 1 --n-max 3 --form second
    pqwhitney dowling    --n-max 5 --form second --format json
    pqwhitney verify     --identity vertical --n-max 12 --m 1 --m 2
    pqwhitney congruence --m 1 --r 1 --t 20 --n-max 3
    pqwhitney hankel     --target dstar --n 2

Exit codes: 0 when every confirmable identity (vertical, gf, theorem3) holds,
1 when one fails or an internal invariant breaks, 2 on bad configuration.
Report-only identities (hankel-*, remark-*) never change the exit code.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .congruence import residue_triangle_text, verify_remark, verify_theorem_div
from .dowling import dowling
from .hankel import (
    InvariantViolation,
    det_bareiss,
    det_cofactor,
    random_matrix,
    verify_hankel_dowling,
    verify_hankel_whitney,
)
from .laurent import LaurentPoly, ZeroBase
from .report import VerificationReport, first_failure, summarize
from .whitney import Form, WhitneyParams, gf_series, triangle, vertical_rhs, w2_second

CONFIRMABLE = ("vertical", "gf", "theorem3")
REPORT_ONLY = ("remark-product", "remark-cases", "hankel-w-first", "hankel-w-second", "hankel-dstar")
IDENTITIES = CONFIRMABLE + REPORT_ONLY
HANKEL_TARGETS = {"w-first": "hankel-w-first", "w-second": "hankel-w-second", "dstar": "hankel-dstar"}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    grid: tuple[WhitneyParams, ...]
    n_max: int = 3
    form: Form = Form.SECOND
    identity: str | None = None
    s: int = 0
    n: int = 1
    fmt: str = "text"
    out: str | None = None
    seed: int = 0
    jobs: int = 1
    cross_check: bool = False
    random_checks: int = 0

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        ms, rs, ts = args.m or [1], args.r or [1], args.t or [1]
        try:
            grid = tuple(WhitneyParams(m, r, t) for m, r, t in itertools.product(ms, rs, ts))
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
        if args.n_max < 0:
            raise ConfigError("--n-max must be >= 0")
        if args.s < 0 or args.n < 0:
            raise ConfigError("--s and --n must be >= 0")
        identity = getattr(args, "identity", None)
        if args.command == "hankel":
            identity = HANKEL_TARGETS[args.target]
        if identity == "hankel-dstar" and args.n < 1:
            raise ConfigError("hankel-dstar needs --n >= 1")
        if args.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        if getattr(args, "random_checks", 0) < 0:
            raise ConfigError("--random-checks must be >= 0")
        return cls(
            command=args.command,
            grid=grid,
            n_max=args.n_max,
            form=Form(args.form),
            identity=identity,
            s=args.s,
            n=args.n,
            fmt=args.format,
            out=args.out,
            seed=args.seed,
            jobs=args.jobs,
            cross_check=getattr(args, "cross_check", False),
            random_checks=getattr(args, "random_checks", 0),
        )


# -- per-grid-point work (top level so process pools can pickle it) ----------


def _check_vertical(params: WhitneyParams, n_max: int) -> list[VerificationReport]:
    reports = []
    for n in range(n_max + 1):
        for k in range(n + 1):
            reports.append(VerificationReport(
                "vertical", {**params.as_dict(), "n": n, "k": k},
                vertical_rhs(params, n, k), (w2_second(params, n + 1, k + 1),), ("W*[n+1,k+1]",),
            ))
    return reports


def _check_gf(params: WhitneyParams, n_max: int) -> list[VerificationReport]:
    reports = []
    for k in range(n_max + 1):
        coeffs = gf_series(params, k, n_max - k)
        for n in range(k, n_max + 1):
            reports.append(VerificationReport(
                "gf", {**params.as_dict(), "n": n, "k": k},
                coeffs[n - k], (w2_second(params, n, k),), ("W*[n,k]",),
            ))
    return reports


def run_identity(identity: str, params: WhitneyParams, cfg: RunConfig) -> list[VerificationReport]:
    if identity == "vertical":
        return _check_vertical(params, cfg.n_max)
    if identity == "gf":
        return _check_gf(params, cfg.n_max)
    if identity == "theorem3":
        return verify_theorem_div(params, cfg.n_max)
    if identity in ("remark-product", "remark-cases"):
        return [r for r in verify_remark(params, cfg.n_max) if r.identity_id == identity]
    if identity == "hankel-w-first":
        return [verify_hankel_whitney(params, cfg.s, cfg.n, Form.FIRST, cfg.cross_check)]
    if identity == "hankel-w-second":
        return [verify_hankel_whitney(params, cfg.s, cfg.n, Form.SECOND, cfg.cross_check)]
    if identity == "hankel-dstar":
        return verify_hankel_dowling(params, cfg.n, cfg.cross_check)
    raise ConfigError(f"unknown identity {identity!r}")


def _work(task: tuple[str, WhitneyParams, RunConfig]) -> Any:
    kind, params, cfg = task
    if kind == "triangle":
        return triangle(params, cfg.n_max, cfg.form)
    if kind == "dowling":
        return dowling(params, cfg.form, cfg.n_max)
    if kind == "residues":
        return residue_triangle_text(params, cfg.n_max)
    return run_identity(kind, params, cfg)


def _map(kind: str, cfg: RunConfig) -> list[Any]:
    tasks = [(kind, params, cfg) for params in cfg.grid]
    if cfg.jobs == 1 or len(tasks) == 1:
        return [_work(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        # map() yields in submission order, keeping output deterministic
        return list(pool.map(_work, tasks))


# -- emission ---------------------------------------------------------------


def _at_one(x: LaurentPoly | None) -> str:
    if x is None:
        return ""
    try:
        return str(x.eval_int(1, 1))
    except ZeroBase:
        return ""


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _reports_csv(reports: Sequence[VerificationReport]) -> str:
    extra_keys: list[str] = []
    for rep in reports:
        for key in rep.params:
            if key not in ("m", "r", "t") and key not in extra_keys:
                extra_keys.append(key)
    header = ["identity", "m", "r", "t", *extra_keys, "status", "label", "equal",
              "lhs", "rhs", "lhs_at_1", "rhs_at_1"]
    rows = []
    for rep in reports:
        base = [rep.identity_id, rep.params["m"], rep.params["r"], rep.params["t"],
                *(rep.params.get(key, "") for key in extra_keys), rep.status]
        if rep.is_skipped:
            rows.append(base + [rep.note, "", "", "", "", ""])
            continue
        for label, rhs, ok in zip(rep.labels, rep.rhs_candidates, rep.equal_flags):
            rows.append(base + [label, ok, rep.lhs.canonical(), rhs.canonical(),
                                _at_one(rep.lhs), _at_one(rhs)])
    return _csv_text(header, rows)


def _reports_text(reports: Sequence[VerificationReport], verbose: bool) -> str:
    if verbose:
        return "".join(rep.to_text() for rep in reports)
    counts = summarize(reports)
    identity = reports[0].identity_id if reports else "?"
    where = " ".join(f"{k}={v}" for k, v in reports[0].params.items() if k in ("m", "r", "t")) if reports else ""
    lines = [f"[{identity}] {where}: {counts['equal']}/{counts['checked']} equal, "
             f"{counts['failed']} failed, {counts['skipped']} skipped\n"]
    bad = first_failure(reports)
    if bad is not None:
        lines.append("first failure:\n" + bad.to_text())
    return "".join(lines)


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- commands ---------------------------------------------------------------


def cmd_triangle(cfg: RunConfig) -> int:
    tris = _map("triangle", cfg)
    if cfg.fmt == "json":
        text = _json_text([tri.to_json() for tri in tris])
    elif cfg.fmt == "csv":
        rows = []
        for tri in tris:
            for n, row in enumerate(tri.rows):
                for k, entry in enumerate(row):
                    rows.append([tri.params.m, tri.params.r, tri.params.t, tri.form.value,
                                 n, k, entry.canonical(), _at_one(entry)])
        text = _csv_text(["m", "r", "t", "form", "n", "k", "value", "value_at_1"], rows)
    else:
        text = "\n".join(tri.to_text() for tri in tris)
    _emit(text, cfg)
    return 0


def cmd_dowling(cfg: RunConfig) -> int:
    seqs = _map("dowling", cfg)
    if cfg.fmt == "json":
        text = _json_text([seq.to_json() for seq in seqs])
    elif cfg.fmt == "csv":
        rows = []
        for seq in seqs:
            for n, value in enumerate(seq.values):
                rows.append([seq.params.m, seq.params.r, seq.params.t, seq.form.value,
                             n, value.canonical(), _at_one(value)])
        text = _csv_text(["m", "r", "t", "form", "n", "value", "value_at_1"], rows)
    else:
        text = "\n".join(seq.to_text() for seq in seqs)
    _emit(text, cfg)
    return 0


def _emit_reports(per_point: list[list[VerificationReport]], cfg: RunConfig, verbose: bool,
                  preamble: str = "") -> None:
    flat = [rep for reports in per_point for rep in reports]
    if cfg.fmt == "json":
        text = _json_text({"summary": summarize(flat), "reports": [rep.to_json() for rep in flat]})
    elif cfg.fmt == "csv":
        text = _reports_csv(flat)
    else:
        text = preamble + "".join(_reports_text(reports, verbose) for reports in per_point)
    _emit(text, cfg)


def _exit_code(identity: str, per_point: list[list[VerificationReport]]) -> int:
    if identity not in CONFIRMABLE:
        return 0
    flat = [rep for reports in per_point for rep in reports]
    return 1 if first_failure(flat) is not None else 0


def cmd_verify(cfg: RunConfig) -> int:
    identity = cfg.identity
    per_point = _map(identity, cfg)
    _emit_reports(per_point, cfg, verbose=identity not in CONFIRMABLE)
    return _exit_code(identity, per_point)


def cmd_congruence(cfg: RunConfig) -> int:
    per_point = _map("theorem3", cfg)
    preamble = ""
    if cfg.fmt == "text":
        preamble = "\n".join(_map("residues", cfg)) + "\n"
    _emit_reports(per_point, cfg, verbose=False, preamble=preamble)
    return _exit_code("theorem3", per_point)


def _random_det_checks(cfg: RunConfig) -> str:
    rng = random.Random(cfg.seed)
    for i in range(cfg.random_checks):
        matrix = random_matrix(rng, rng.randint(1, 5))
        if det_bareiss(matrix) != det_cofactor(matrix):
            raise InvariantViolation(f"determinant cross-check failed on random matrix #{i} (seed {cfg.seed})")
    return f"determinant cross-check: {cfg.random_checks} random matrices agree (seed {cfg.seed})\n"


def cmd_hankel(cfg: RunConfig) -> int:
    preamble = _random_det_checks(cfg) if cfg.random_checks else ""
    per_point = _map(cfg.identity, cfg)
    _emit_reports(per_point, cfg, verbose=True, preamble=preamble if cfg.fmt == "text" else "")
    return 0


COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "triangle": cmd_triangle,
    "dowling": cmd_dowling,
    "verify": cmd_verify,
    "congruence": cmd_congruence,
    "hankel": cmd_hankel,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, action="append", help="m value (repeatable; default 1)")
    common.add_argument("--r", type=int, action="append", help="r value (repeatable; default 1)")
    common.add_argument("--t", type=int, action="append", help="t value (repeatable; default 1)")
    common.add_argument("--n-max", type=int, default=3)
    common.add_argument("--form", choices=[f.value for f in Form], default="second")
    common.add_argument("--s", type=int, default=0, help="row/column offset of Whitney Hankel matrices")
    common.add_argument("--n", type=int, default=1, help="Hankel index")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for grid sweeps")

    parser = argparse.ArgumentParser(prog="pqwhitney", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("triangle", parents=[common], help="emit W triangles")
    sub.add_parser("dowling", parents=[common], help="emit Dowling sequences")
    verify = sub.add_parser("verify", parents=[common], help="sweep one identity over the grid")
    verify.add_argument("--identity", choices=IDENTITIES, required=True)
    verify.add_argument("--cross-check", action="store_true", help="also run cofactor determinants")
    sub.add_parser("congruence", parents=[common], help="residues mod pq and the W* congruence")
    hankel = sub.add_parser("hankel", parents=[common], help="Hankel determinant reports")
    hankel.add_argument("--target", choices=sorted(HANKEL_TARGETS), required=True)
    hankel.add_argument("--cross-check", action="store_true", help="also run cofactor determinants")
    hankel.add_argument("--random-checks", type=int, default=0,
                        help="compare both determinant routines on this many seeded random matrices")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
    except ConfigError as exc:
        parser.error(str(exc))  # exits with status 2
    try:
        return COMMANDS[cfg.command](cfg)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
