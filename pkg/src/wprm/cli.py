"""Command-line interface: ``wprm table|hilbert|semigroup|genmat|check``.

Exit codes: 0 success, 1 invalid configuration, 2 enumeration guard
exceeded, 3 ``check`` found a discrepancy.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from .codes import build_code, parameter_table, standard_form
from .errors import TooLarge, WPRMError
from .field import field_new
from .hilbert import index_of_regularity, torus_hilbert_series
from .semigroup import (
    MAX_PERMUTED_WEIGHTS,
    herzog_condition,
    herzog_generators,
    semigroup_new,
    validate_weights,
)
from .validation import BUDGETS, run_checks

EXIT_OK, EXIT_CONFIG, EXIT_GUARD, EXIT_CHECK = 0, 1, 2, 3

FORMATS = ("pretty", "csv", "json")
COMMANDS = ("table", "hilbert", "semigroup", "genmat", "check")


@dataclass
class RunConfig:
    command: str
    q: Optional[int] = None
    weights: tuple[int, ...] = ()
    d_max: int = 0
    d: int = 0
    expand: int = 0
    format: str = "pretty"
    budget: str = "default"
    threads: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise WPRMError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise WPRMError(f"unknown format {self.format!r}")
        if self.command in ("table", "hilbert", "genmat", "semigroup"):
            self.weights = validate_weights(self.weights)
        if self.command in ("table", "hilbert", "genmat"):
            if self.q is None:
                raise WPRMError("--q is required")
            field_new(self.q)
        if self.d_max < 0 or self.d < 0 or self.expand < 0:
            raise WPRMError("degrees and counts must be nonnegative")
        if self.budget not in BUDGETS:
            raise WPRMError(f"unknown budget {self.budget!r}")
        if self.threads < 1:
            raise WPRMError("--threads must be >= 1")


def _dash(x: Optional[int]) -> str:
    return "-" if x is None else str(x)


def _emit_rows(out: TextIO, fmt: str, header: Sequence[str], rows: list[list], json_obj) -> None:
    if fmt == "json":
        json.dump(json_obj, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([[_dash(v) if v is None else v for v in row] for row in rows])
    else:
        cells = [list(header)] + [[_dash(v) if v is None else str(v) for v in row] for row in rows]
        widths = [max(len(str(r[i])) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write("  ".join(str(c).rjust(wd) for c, wd in zip(r, widths)).rstrip() + "\n")


def _cmd_table(cfg: RunConfig, out: TextIO) -> int:
    rows = parameter_table(field_new(cfg.q), cfg.weights, cfg.d_max, threads=cfg.threads)
    _emit_rows(
        out,
        cfg.format,
        ["d", "dim", "delta"],
        [[r.d, r.dimension, r.min_distance] for r in rows],
        [{"d": r.d, "dim": r.dimension, "delta": r.min_distance} for r in rows],
    )
    return EXIT_OK


def _cmd_hilbert(cfg: RunConfig, out: TextIO) -> int:
    hs = torus_hilbert_series(cfg.q, cfg.weights)
    g = semigroup_new(cfg.weights).frobenius
    closed = index_of_regularity(cfg.q, cfg.weights, g)
    coeffs = hs.coefficients(cfg.expand)
    data = hs.to_dict()
    data.update(weights=list(cfg.weights), frobenius=g, regularity_closed_form=closed)
    if cfg.expand:
        data["coefficients"] = coeffs
    if cfg.format == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
        return EXIT_OK
    if cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerow(["numerator", hs.numerator.format()])
        writer.writerow(["denominator", " ".join(f"(1-t^{w})" for w in cfg.weights)])
        writer.writerow(["a_invariant", hs.a_invariant])
        writer.writerow(["regularity", hs.regularity])
        writer.writerow(["regularity_closed_form", closed])
        if cfg.expand:
            writer.writerow(["coefficients", " ".join(map(str, coeffs))])
        return EXIT_OK
    denom = "".join(f"(1 - t^{w})" for w in cfg.weights)
    out.write(f"q = {cfg.q}, weights = {cfg.weights}\n")
    out.write(f"numerator:    {hs.numerator.format()}\n")
    out.write(f"denominator:  {denom}\n")
    out.write(f"a-invariant:  {hs.a_invariant}\n")
    out.write(f"regularity:   {hs.regularity} (closed form {closed})\n")
    if cfg.expand:
        out.write(f"coefficients: {' '.join(map(str, coeffs))}\n")
    return EXIT_OK


def _cmd_semigroup(cfg: RunConfig, out: TextIO) -> int:
    w = cfg.weights
    sg = semigroup_new(w)
    orderings = []
    if 2 <= len(w) <= MAX_PERMUTED_WEIGHTS:
        for perm in itertools.permutations(range(len(w))):
            ordered = [w[j] for j in perm]
            ok = herzog_condition(ordered)
            entry = {"order": ordered, "herzog": ok}
            if ok:
                entry["generators"] = [
                    {"i": h.i, "c": h.c, "r": list(h.r)} for h in herzog_generators(ordered)
                ]
            orderings.append(entry)
    if cfg.format == "json":
        json.dump(
            {"weights": list(w), "gaps": list(sg.gaps), "frobenius": sg.frobenius, "orderings": orderings},
            out,
            indent=2,
        )
        out.write("\n")
        return EXIT_OK
    if cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["order", "herzog"])
        for e in orderings:
            writer.writerow([" ".join(map(str, e["order"])), e["herzog"]])
        return EXIT_OK
    out.write(f"weights:   {w}\n")
    out.write(f"gaps:      {list(sg.gaps)}\n")
    out.write(f"frobenius: {sg.frobenius}\n")
    if len(w) > MAX_PERMUTED_WEIGHTS:
        out.write(f"herzog:    not searched (more than {MAX_PERMUTED_WEIGHTS} weights)\n")
    for e in orderings:
        verdict = "satisfied" if e["herzog"] else "fails"
        out.write(f"herzog {tuple(e['order'])}: {verdict}\n")
    if orderings and not any(e["herzog"] for e in orderings):
        out.write("no ordering satisfies the Herzog condition\n")
    return EXIT_OK


def _cmd_genmat(cfg: RunConfig, out: TextIO) -> int:
    f = field_new(cfg.q)
    code = build_code(f, cfg.weights, cfg.d)
    sf = standard_form(code)
    cells = [[f.format(int(v)) for v in row] for row in sf.matrix]
    if cfg.format == "json":
        json.dump(
            {
                "q": cfg.q,
                "weights": list(cfg.weights),
                "d": cfg.d,
                "length": code.length,
                "dimension": sf.dimension,
                "permutation": list(sf.permutation),
                "matrix": cells,
            },
            out,
            indent=2,
        )
        out.write("\n")
        return EXIT_OK
    if cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([f"c{j}" for j in sf.permutation])
        writer.writerows(cells)
        return EXIT_OK
    width = max(len(c) for row in cells for c in row)
    out.write(f"q = {cfg.q}, weights = {cfg.weights}, d = {cfg.d}: [{code.length}, {sf.dimension}] code\n")
    out.write(f"column permutation: {list(sf.permutation)}\n")
    for row in cells:
        out.write(" ".join(c.rjust(width) for c in row) + "\n")
    return EXIT_OK


def _cmd_check(cfg: RunConfig, out: TextIO) -> int:
    results = run_checks(cfg.budget, threads=cfg.threads, seed=cfg.seed)
    rows = [[r.name, r.passed, r.failed, "PASS" if r.ok else "FAIL"] for r in results]
    _emit_rows(
        out,
        cfg.format,
        ["suite", "passed", "failed", "verdict"],
        rows,
        [
            {"suite": r.name, "passed": r.passed, "failed": r.failed, "failures": r.failures}
            for r in results
        ],
    )
    if cfg.format == "pretty":
        for r in results:
            for msg in r.failures:
                out.write(f"  {r.name}: {msg}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_CHECK


_HANDLERS = {
    "table": _cmd_table,
    "hilbert": _cmd_hilbert,
    "semigroup": _cmd_semigroup,
    "genmat": _cmd_genmat,
    "check": _cmd_check,
}


def run(cfg: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        cfg.validate()
        return _HANDLERS[cfg.command](cfg, out)
    except TooLarge as exc:
        err.write(f"wprm: enumeration guard: {exc}\n")
        return EXIT_GUARD
    except WPRMError as exc:
        err.write(f"wprm: {exc}\n")
        return EXIT_CONFIG


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wprm", description="Weighted projective Reed-Muller codes over a torus.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, need_q=True, need_w=True):
        if need_q:
            p.add_argument("--q", type=int, required=True, help="field order (prime power)")
        if need_w:
            p.add_argument("--weights", type=_weights, required=True, help="e.g. 3,4,5")
        p.add_argument("--format", choices=FORMATS, default="pretty")

    p = sub.add_parser("table", help="(d, dim, delta) rows for d = 0..dmax")
    common(p)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("hilbert", help="Hilbert series and index of regularity")
    common(p)
    p.add_argument("--expand", type=int, default=0, metavar="N", help="print the first N coefficients")

    p = sub.add_parser("semigroup", help="gaps, Frobenius number, Herzog condition per ordering")
    common(p, need_q=False)

    p = sub.add_parser("genmat", help="standard-form generator matrix")
    common(p)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("check", help="closed forms versus brute force over a grid")
    common(p, need_q=False, need_w=False)
    p.add_argument("--budget", choices=sorted(BUDGETS), default="default")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        q=getattr(args, "q", None),
        weights=getattr(args, "weights", ()),
        d_max=getattr(args, "dmax", 0),
        d=getattr(args, "d", 0),
        expand=getattr(args, "expand", 0),
        format=args.format,
        budget=getattr(args, "budget", "default"),
        threads=getattr(args, "threads", 1),
        seed=getattr(args, "seed", 0),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
