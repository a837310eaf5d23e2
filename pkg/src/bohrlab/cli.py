"""Command-line front end: verify instances, build witnesses, search,
tabulate the n/(3n-2) law, and check scalar series.

Exit codes are part of the interface: 0 success, 1 input error, 2
inequality violated, 3 hypotheses fail.  Instance files are JSON with
every complex entry spelled as an [re, im] pair.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .hypotheses import check_hypotheses
from .linalg import DEFAULT_TOL
from .scalar import CoeffSeries, classical_verify, moebius_series
from .search import SearchConfig, search
from .series import (
    AlphaSeries,
    BohrInstance,
    BudgetBelowAlpha0Error,
    SequenceSpec,
    alpha_series,
    check_inequality,
    critical_radius,
)
from .witnesses import general_witness, remark_parameters, remark_two_witness, three_by_three_witness

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATED = 2
EXIT_HYPOTHESES = 3


class DocumentError(ValueError):
    """Malformed instance document; carries the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _matrix_to_literal(a: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in a]


def _matrix_from_literal(node, n: int, path: str) -> np.ndarray:
    if not isinstance(node, list) or len(node) != n:
        raise DocumentError(path, f"expected an array of {n} rows")
    out = np.zeros((n, n), dtype=np.complex128)
    for i, row in enumerate(node):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"{path}[{i}]", f"expected an array of {n} entries")
        for j, entry in enumerate(row):
            ok = (
                isinstance(entry, list)
                and len(entry) == 2
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
            )
            if not ok:
                raise DocumentError(f"{path}[{i}][{j}]", "expected a two-number array [re, im]")
            out[i, j] = complex(entry[0], entry[1])
    return out


def instance_to_document(inst: BohrInstance) -> dict:
    if inst.seq.kind == "constant":
        seq = {"type": "constant", "matrix": _matrix_to_literal(inst.seq.matrices[0])}
    else:
        seq = {"type": "list", "matrices": [_matrix_to_literal(m) for m in inst.seq.matrices]}
    return {
        "n": inst.order,
        "mode": inst.mode,
        "A": _matrix_to_literal(inst.A),
        "S": _matrix_to_literal(inst.S),
        "sequence": seq,
    }


def document_to_instance(doc) -> BohrInstance:
    if not isinstance(doc, dict):
        raise DocumentError("document", "expected a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError("n", f"expected a positive integer, got {n!r}")
    mode = doc.get("mode", "theorem")
    if mode not in ("theorem", "relaxed"):
        raise DocumentError("mode", f"expected 'theorem' or 'relaxed', got {mode!r}")
    for key in ("A", "S", "sequence"):
        if key not in doc:
            raise DocumentError(key, "missing field")
    a = _matrix_from_literal(doc["A"], n, "A")
    s = _matrix_from_literal(doc["S"], n, "S")
    node = doc["sequence"]
    if not isinstance(node, dict):
        raise DocumentError("sequence", "expected an object")
    kind = node.get("type")
    if kind == "constant":
        if "matrix" not in node:
            raise DocumentError("sequence.matrix", "missing field")
        seq = SequenceSpec.constant(_matrix_from_literal(node["matrix"], n, "sequence.matrix"))
    elif kind == "list":
        mats = node.get("matrices")
        if not isinstance(mats, list):
            raise DocumentError("sequence.matrices", "expected an array of matrices")
        seq = SequenceSpec.finite(
            _matrix_from_literal(m, n, f"sequence.matrices[{i}]") for i, m in enumerate(mats)
        )
    else:
        raise DocumentError("sequence.type", f"expected 'constant' or 'list', got {kind!r}")
    return BohrInstance(a, s, seq, mode)


def load_instance(path: str) -> BohrInstance:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError(path, f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return document_to_instance(doc)


def save_instance(inst: BohrInstance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_document(inst), fh, indent=2)
        fh.write("\n")


def _write_output(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _fmt(x: float) -> str:
    return repr(float(x) + 0.0)


def _series_summary(series: AlphaSeries) -> dict:
    return {
        "alpha0": series.alpha0,
        "magnitudes": list(series.magnitudes),
        "tail": series.tail,
        "tail_start": len(series.magnitudes) + 1,
    }


def _report_lines(report) -> list[str]:
    lines = [f"hypotheses ({report.mode}):"]
    for c in report.conditions:
        verdict = "pass" if c.passed else "FAIL"
        lines.append(f"  [{verdict}] {c.name:<24} slack={_fmt(c.slack)}")
    lines.append(f"  overall: {'pass' if report.overall else 'FAIL'}")
    return lines


def _report_json(report) -> dict:
    return {
        "mode": report.mode,
        "overall": report.overall,
        "conditions": [
            {"name": c.name, "pass": c.passed, "slack": c.slack} for c in report.conditions
        ],
    }


def cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    if not (0.0 <= args.r < 1.0):
        print(f"error: r must lie in [0, 1), got {args.r}", file=sys.stderr)
        return EXIT_INPUT
    inst = load_instance(args.input)
    report = check_hypotheses(inst, tol=tol)

    series = None
    radius = None
    check = None
    if report.condition("nonnegative_trace_a").passed:
        series = alpha_series(inst, tol=tol)
        check = check_inequality(inst, args.r, tol=tol)
        try:
            radius = critical_radius(series, float(np.trace(inst.S).real))
        except BudgetBelowAlpha0Error:
            radius = 0.0

    payload = {
        "hypotheses": _report_json(report),
        "alpha_series": _series_summary(series) if series is not None else None,
        "check": None
        if check is None
        else {"r": args.r, "lhs": check.lhs, "rhs": check.rhs, "slack": check.slack, "holds": check.holds},
        "critical_radius": radius,
    }

    if args.format == "json":
        text = json.dumps(payload, indent=2)
    else:
        lines = [f"instance: n={inst.order} mode={inst.mode}"]
        lines += _report_lines(report)
        if series is not None:
            lines.append(
                f"alpha series: alpha0={_fmt(series.alpha0)}"
                + "".join(f" |alpha_{i+1}|={_fmt(m)}" for i, m in enumerate(series.magnitudes))
                + f" tail={_fmt(series.tail)} from m={len(series.magnitudes) + 1}"
            )
            lines.append(
                f"check at r={_fmt(args.r)}: lhs={_fmt(check.lhs)} rhs={_fmt(check.rhs)}"
                f" slack={_fmt(check.slack)} holds={'yes' if check.holds else 'no'}"
            )
            lines.append(f"critical radius: {_fmt(radius)}")
        text = "\n".join(lines)
    print(text)
    _write_output(args, json.dumps(payload, indent=2) if args.format != "json" else text)

    if not report.overall:
        return EXIT_HYPOTHESES
    if check is not None and not check.holds:
        return EXIT_VIOLATED
    return EXIT_OK


def cmd_witness(args) -> int:
    extra: list[str] = []
    if args.family == "general-n":
        if args.n is None:
            print("error: --family general-n requires --n", file=sys.stderr)
            return EXIT_INPUT
        inst = general_witness(args.n)
    elif args.family == "n3":
        inst = three_by_three_witness()
    else:
        if args.r_target is None:
            print("error: --family remark-n2 requires --r-target", file=sys.stderr)
            return EXIT_INPUT
        theta, k = remark_parameters(args.r_target)
        inst = remark_two_witness(args.r_target)
        extra = [f"theta: {_fmt(theta)}", f"k: {k}", f"violated at r: {_fmt(args.r_target)}"]

    tol = args.tol if args.tol is not None else DEFAULT_TOL
    report = check_hypotheses(inst, tol=tol)
    series = alpha_series(inst, tol=tol)
    radius = critical_radius(series, float(np.trace(inst.S).real))

    if args.output:
        save_instance(inst, args.output)

    payload = {
        "family": args.family,
        "n": inst.order,
        "critical_radius": radius,
        "hypotheses": _report_json(report),
    }
    if args.family == "remark-n2":
        theta, k = remark_parameters(args.r_target)
        payload.update({"theta": theta, "k": k, "violated_at": args.r_target})

    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        lines = [f"family: {args.family}", f"n: {inst.order}"] + extra
        lines.append(f"critical radius: {_fmt(radius)}")
        lines.append(f"hypotheses ({report.mode}): {'pass' if report.overall else 'FAIL'}")
        print("\n".join(lines))
    return EXIT_OK


def cmd_radius_search(args) -> int:
    cfg = SearchConfig(
        n=args.n,
        restarts=args.restarts,
        max_iters=args.max_iters,
        seed=args.seed,
        simplex_tol=args.simplex_tol,
    )
    estimate = search(cfg, threads=max(1, args.threads))
    if args.output:
        save_instance(estimate.instance, args.output)

    if args.format == "json":
        payload = {
            "n": cfg.n,
            "restarts": cfg.restarts,
            "max_iters": cfg.max_iters,
            "seed": cfg.seed,
            "r_star": estimate.r_star,
            "evaluations": estimate.evaluations,
            "per_restart_best": list(estimate.per_restart_best),
        }
        print(json.dumps(payload, indent=2))
    else:
        lines = [
            f"n: {cfg.n}",
            f"restarts: {cfg.restarts}",
            f"max_iters: {cfg.max_iters}",
            f"seed: {cfg.seed}",
            f"r_star: {_fmt(estimate.r_star)}",
            f"evaluations: {estimate.evaluations}",
            "per-restart best:",
        ]
        lines += [f"  {i}: {_fmt(v)}" for i, v in enumerate(estimate.per_restart_best)]
        print("\n".join(lines))
    return EXIT_OK


def _table_rows(max_n: int) -> list[tuple[int, float, float, float]]:
    rows = []
    for n in range(2, max_n + 1):
        inst = general_witness(n)
        series = alpha_series(inst)
        bisected = critical_radius(series, float(np.trace(inst.S).real))
        formula = n / (3.0 * n - 2.0)
        rows.append((n, formula, bisected, abs(formula - bisected)))
    return rows


def cmd_table(args) -> int:
    if args.max_n < 2:
        print(f"error: --max-n must be >= 2, got {args.max_n}", file=sys.stderr)
        return EXIT_INPUT
    rows = _table_rows(args.max_n)
    if args.format == "json":
        text = json.dumps(
            [
                {"n": n, "formula": f, "bisection": b, "abs_diff": d}
                for n, f, b, d in rows
            ],
            indent=2,
        )
    elif args.format == "csv":
        lines = ["n,formula,bisection,abs_diff"]
        lines += [f"{n},{_fmt(f)},{_fmt(b)},{_fmt(d)}" for n, f, b, d in rows]
        text = "\n".join(lines)
    else:
        lines = [f"{'n':>5}  {'formula':<22} {'bisection':<22} abs_diff"]
        lines += [f"{n:>5}  {_fmt(f):<22} {_fmt(b):<22} {_fmt(d)}" for n, f, b, d in rows]
        text = "\n".join(lines)
    print(text)
    _write_output(args, text)
    return EXIT_OK


def _parse_coeffs(text: str) -> tuple[complex, ...]:
    out = []
    for i, token in enumerate(text.split(",")):
        token = token.strip()
        if not token:
            raise ValueError(f"coefficient {i} is empty")
        try:
            out.append(complex(token))
        except ValueError as exc:
            raise ValueError(f"coefficient {i}: cannot parse {token!r}") from exc
    return tuple(out)


def cmd_scalar(args) -> int:
    tol = args.tol if args.tol is not None else 1e-9
    if not (0.0 <= args.r < 1.0):
        print(f"error: r must lie in [0, 1), got {args.r}", file=sys.stderr)
        return EXIT_INPUT
    if (args.moebius is None) == (args.coeffs is None):
        print("error: give exactly one of --moebius or --coeffs", file=sys.stderr)
        return EXIT_INPUT
    if args.moebius is not None:
        series = moebius_series(args.moebius)
    else:
        tail = None
        if args.tail is not None:
            tail = (args.tail[0], args.tail[1])
        series = CoeffSeries(_parse_coeffs(args.coeffs), tail)

    result = classical_verify(series, args.r, gridpoints=args.gridpoints, tol=tol)
    payload = {
        "r": args.r,
        "bohr_sum": result.lhs,
        "sup_norm_estimate": result.rhs,
        "holds": result.holds,
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(
            "\n".join(
                [
                    f"bohr sum at r={_fmt(args.r)}: {_fmt(result.lhs)}",
                    f"sup norm estimate ({args.gridpoints} gridpoints): {_fmt(result.rhs)}",
                    f"holds: {'yes' if result.holds else 'no'}",
                ]
            )
        )
    _write_output(args, json.dumps(payload, indent=2))
    return EXIT_OK if result.holds else EXIT_VIOLATED


class _Parser(argparse.ArgumentParser):
    # input errors must exit 1; argparse's default usage-error code is 2,
    # which this interface reserves for "inequality violated"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="numeric tolerance override")
    common.add_argument("--output", default=None, help="write the machine-readable result here")
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="stdout format"
    )
    common.add_argument("--seed", type=int, default=0, help="random seed (search)")
    common.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker threads for search restarts",
    )

    parser = _Parser(prog="bohrlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check an instance file at a radius")
    p.add_argument("input", help="instance document (JSON)")
    p.add_argument("--r", type=float, required=True, help="evaluation radius in [0, 1)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("witness", parents=[common], help="build a canonical extremal instance")
    p.add_argument("--family", choices=("general-n", "n3", "remark-n2"), required=True)
    p.add_argument("--n", type=int, default=None, help="order for general-n")
    p.add_argument("--r-target", type=float, default=None, help="violation radius for remark-n2")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("radius-search", parents=[common], help="search for the extremal radius")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--simplex-tol", type=float, default=1e-9)
    p.set_defaults(fn=cmd_radius_search)

    p = sub.add_parser("table", parents=[common], help="tabulate n/(3n-2) against bisection")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("scalar", parents=[common], help="classical power-series check")
    p.add_argument("--moebius", type=float, default=None, help="parameter a of (a-z)/(1-az)")
    p.add_argument("--coeffs", default=None, help="comma-separated coefficients")
    p.add_argument("--tail", nargs=2, type=float, default=None, metavar=("C", "RHO"))
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--gridpoints", type=int, default=4096)
    p.set_defaults(fn=cmd_scalar)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
