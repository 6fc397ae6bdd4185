"""Command line: ``hyperkin simulate|verify|euler-savary|plot``.

Exit codes: 0 ok, 1 verification failed, 2 bad input or IO, 3 every
sample degenerate, 4 geometric error.
"""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import canonical as cn
from . import motion as mo
from . import svgplot, verify
from .document import MotionDocument, load
from .errors import DocumentError, HyperkinError
from .hypnum import HyperbolicNumber

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_DEGENERATE, EXIT_GEOMETRY = 0, 1, 2, 3, 4

CSV_HEADER = ("t,pole_A_re,pole_A_uni,pole_H_re,pole_H_uni,pole_Hp_re,pole_Hp_uni,"
              "s_dot,r,r_prime,nu_ds")


class InputError(Exception):
    pass


def fmt(x: float) -> str:
    if x == 0.0:
        return "0"
    return f"{x:.12g}"


def _token(exc: Exception) -> str:
    return getattr(exc, "token", "eval_error")


_ROW_ERRORS = (HyperkinError, ArithmeticError, ValueError)


def simulate_rows(doc: MotionDocument) -> tuple[list[str], int]:
    """CSV lines (header first) and the number of rows that hit an error."""
    spec = doc.spec
    lines = [CSV_HEADER]
    failed = 0
    for t in np.linspace(*doc.t_range, doc.samples):
        t = float(t)
        cells = [fmt(t)]
        try:
            p = mo.pole_point(spec, t)
        except _ROW_ERRORS as exc:
            lines.append(",".join(cells + [_token(exc)] * 10))
            failed += 1
            continue
        for z in (p.in_A, p.in_H, p.in_Hp):
            cells += [fmt(z.re), fmt(z.uni)]
        try:
            cd = cn.canonical_data(spec, t)
            cells += [fmt(cd.s_dot), fmt(cd.r), fmt(cd.r_p), fmt(cd.nu_ds)]
        except _ROW_ERRORS as exc:
            cells += [_token(exc)] * 4
            failed += 1
        lines.append(",".join(cells))
    return lines, failed


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc


def cmd_simulate(doc: MotionDocument, out: str | None) -> int:
    lines, failed = simulate_rows(doc)
    text = "\n".join(lines) + "\n"
    if out:
        _write(out, text)
    else:
        sys.stdout.write(text)
    if failed == len(lines) - 1:
        print("every sample is degenerate", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_euler_savary(doc: MotionDocument, t: float, x_rel: HyperbolicNumber) -> int:
    try:
        cd = cn.canonical_data(doc.spec, t)
        pair = cn.conjugate_point(cd, x_rel)
    except (HyperkinError, ArithmeticError) as exc:
        print(f"error: {_token(exc)}: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    print(",".join(fmt(v) for v in (pair.a, pair.alpha, pair.a_p, pair.x_rel_p.re, pair.x_rel_p.uni)))
    return EXIT_OK


def cmd_verify(doc: MotionDocument) -> int:
    results = verify.run_all(doc.spec, *doc.t_range, doc.samples)
    print(verify.format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def plot_svg(doc: MotionDocument, points: list[HyperbolicNumber]) -> str:
    spec = doc.spec
    moving, fixed = [], []
    ts = [float(t) for t in np.linspace(*doc.t_range, max(doc.samples, 101))]
    for t in ts:
        try:
            p = mo.pole_point(spec, t)
            moving.append(p.in_H.as_tuple())
            fixed.append(p.in_Hp.as_tuple())
        except _ROW_ERRORS:
            moving.append(None)
            fixed.append(None)
    trajectories = []
    for x in points:
        line = []
        for t in ts:
            try:
                line.append(mo.trajectory_in_fixed(spec, x, t).as_tuple())
            except _ROW_ERRORS:
                line.append(None)
        trajectories.append((f"{fmt(x.re)},{fmt(x.uni)}", line))
    return svgplot.render([("moving (P)", moving), ("fixed (P')", fixed)], trajectories,
                          title=spec.name or "motion")


def cmd_plot(doc: MotionDocument, out: str | None, points: list[HyperbolicNumber]) -> int:
    text = plot_svg(doc, list(doc.points) + points)
    if out:
        _write(out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def parse_point(text: str) -> HyperbolicNumber:
    try:
        re_, uni = text.split(",")
        return HyperbolicNumber(float(re_), float(uni))
    except ValueError as exc:
        raise InputError(f"bad point {text!r}; expected 're,uni'") from exc


def parse_range(text: str) -> tuple[float, float]:
    try:
        a, b = text.split(":")
        t0, t1 = float(a), float(b)
    except ValueError as exc:
        raise InputError(f"bad range {text!r}; expected 't0:t1'") from exc
    if not (math.isfinite(t0) and math.isfinite(t1) and t0 < t1):
        raise InputError(f"bad range {text!r}; need finite t0 < t1")
    return t0, t1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperkin",
        description="One-parameter planar hyperbolic motion: poles, centrodes, Euler-Savary.",
    )
    parser.add_argument("command", choices=["simulate", "verify", "euler-savary", "plot"])
    parser.add_argument("--spec", required=True, help="motion document (JSON)")
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--t", type=float, help="time instant for euler-savary")
    parser.add_argument("--point", action="append", default=[],
                        help="re,uni; pole-relative X for euler-savary, H-plane point for plot "
                             "(use --point=-1,0 for negative values)")
    parser.add_argument("--range", dest="t_range", help="t0:t1, overrides the document")
    parser.add_argument("--samples", type=int, help="sample count, overrides the document")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc = load(args.spec)
        if args.t_range:
            doc = MotionDocument(doc.spec, parse_range(args.t_range), doc.samples, doc.points)
        if args.samples is not None:
            if args.samples < 2:
                raise InputError("--samples must be at least 2")
            doc = MotionDocument(doc.spec, doc.t_range, args.samples, doc.points)
        points = [parse_point(p) for p in args.point]

        if args.command == "simulate":
            return cmd_simulate(doc, args.out)
        if args.command == "verify":
            return cmd_verify(doc)
        if args.command == "euler-savary":
            if args.t is None or len(points) != 1:
                raise InputError("euler-savary needs --t and exactly one --point")
            return cmd_euler_savary(doc, args.t, points[0])
        return cmd_plot(doc, args.out, points)
    except (DocumentError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
