"""Command-line interface.

Exit status: 0 when every comparison matches, 1 on any MISMATCH, 2 on bad
input or a numeric failure.  All exact quantities are printed as rational
strings "p/q"; floating values are decimal strings at ``--digits``.
E6/E7 use the node ordering of the root-data module (node 1 is the spinor
root, the last node is e1+e2); keep this in mind when comparing labels with
other conventions.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .casimir import CasimirSpec, chi, chi_exponent
from .errors import QSpecDimError, ParameterError
from .flag import catalog, parse_space, spherical_coeffs
from .qforms import QContext, qdim, qdim_exponent
from .reports import all_match, flag_tables, group_tables
from .rootdata import RootSystem, Weight, build_root_system, fraction_str, iter_types, parse_type
from .spectral import (
    ZetaSeries,
    estimate_abscissa,
    flag_series,
    group_series,
    product_series,
    spectral_dim_flag,
    spectral_dim_group,
    spectral_dim_product,
    zeta_truncated,
)
from .weights import weight_system

ZERO_MODE_NOTE = "trivial representation excluded (chi_0 = 0)"


@dataclass(frozen=True)
class RunConfig:
    """Parsed and validated flags shared by all commands."""

    command: str
    lie_type: str | None = None
    rank: int | None = None
    space: str | None = None
    product: str | None = None
    lambda0: str = "adjoint"
    t: Fraction = Fraction(1)
    q: str = "0.5"
    precision: int = 50
    digits: int = 15
    N: int = 40
    fmt: str = "json"

    def __post_init__(self):
        if self.t <= 0:
            raise ParameterError(f"t must be a positive rational, got {self.t}")
        if self.N < 1:
            raise ParameterError("N must be >= 1")
        if self.digits < 1:
            raise ParameterError("digits must be >= 1")
        QContext(self.q, self.precision)

    @property
    def ctx(self) -> QContext:
        return QContext(self.q, self.precision)

    def root_system(self) -> RootSystem:
        if not self.lie_type:
            raise ParameterError("--type is required")
        key, r = parse_type(self.lie_type) if self.rank is None else (self.lie_type.upper(), self.rank)
        return build_root_system(key, r)


def _parse_t(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"t must be a rational like 1/4, got {text!r}") from exc


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ParameterError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_floats(text: str, n: int) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError as exc:
        raise ParameterError(f"expected {n} comma-separated numbers, got {text!r}") from exc
    if len(vals) != n:
        raise ParameterError(f"expected {n} comma-separated numbers, got {text!r}")
    return vals


def lambda0_of(rs: RootSystem, choice: str):
    """'fundamental', 'adjoint' or 'labels=1,0,...'."""
    if choice.startswith("labels="):
        w = rs.from_labels(_parse_ints(choice[len("labels="):]))
        if not rs.is_dominant(w) or w.is_zero():
            raise ParameterError("Lambda_0 labels must be dominant and nonzero")
        return w
    if choice not in ("fundamental", "adjoint"):
        raise ParameterError(f"--lambda0 must be fundamental, adjoint or labels=..., got {choice!r}")
    return choice


def _dec(x, digits: int) -> str:
    if x == mpmath.inf:
        return "inf"
    return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-5, max_fixed=8)


def _dominant_labels(rs: RootSystem, text: str) -> Weight:
    labels = _parse_ints(text)
    if len(labels) != rs.rank:
        raise ParameterError(f"{rs.name} needs {rs.rank} labels, got {len(labels)}")
    if any(x < 0 for x in labels):
        raise ParameterError("labels must be non-negative")
    return rs.from_labels(labels)


# output helpers

def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence], out) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buf.getvalue())


def _emit_table(header: Sequence[str], rows: Sequence[Sequence], out) -> None:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _emit_records(cfg: RunConfig, header: Sequence[str], rows: Sequence[Sequence], doc, out) -> None:
    if cfg.fmt == "csv":
        _emit_csv(header, rows, out)
    elif cfg.fmt == "table":
        _emit_table(header, rows, out)
    else:
        _emit_json(doc, out)


# commands

def cmd_dump_roots(cfg: RunConfig, args, out) -> int:
    _emit_json(cfg.root_system().to_json(), out)
    return 0


def cmd_weights(cfg: RunConfig, args, out) -> int:
    rs = cfg.root_system()
    ws = weight_system(rs, _dominant_labels(rs, args.labels))
    doc = ws.to_json()
    rows = [[" ".join(map(str, w["labels"])), " ".join(w["coords"]), w["mult"]] for w in doc["weights"]]
    _emit_records(cfg, ["labels", "coords", "mult"], rows, doc, out)
    return 0


def cmd_qdim(cfg: RunConfig, args, out) -> int:
    rs = cfg.root_system()
    ctx = cfg.ctx
    lam = _dominant_labels(rs, args.labels)
    with mpmath.mp.workdps(ctx.precision):
        value = qdim(ctx, rs, lam)
        expo = qdim_exponent(rs, lam)
        ratio = value * ctx.power(expo)
    _emit_json(
        {
            "type": rs.name,
            "labels": _parse_ints(args.labels),
            "q": cfg.q,
            "precision": cfg.precision,
            "qdim": _dec(value, cfg.digits),
            "exponent": fraction_str(expo),
            "normalized": _dec(ratio, cfg.digits),
        },
        out,
    )
    return 0


def cmd_chi(cfg: RunConfig, args, out) -> int:
    rs = cfg.root_system()
    ctx = cfg.ctx
    spec = CasimirSpec.build(rs, lambda0_of(rs, cfg.lambda0), cfg.t)
    lam = _dominant_labels(rs, args.labels)
    with mpmath.mp.workdps(ctx.precision):
        value = chi(ctx, spec, lam)
        expo = chi_exponent(spec, lam)
        ratio = value * ctx.power(expo)
    _emit_json(
        {
            "type": rs.name,
            "lambda0": list(rs.int_labels(spec.lambda0)),
            "t": fraction_str(cfg.t),
            "labels": _parse_ints(args.labels),
            "q": cfg.q,
            "chi": _dec(value, cfg.digits),
            "exponent": fraction_str(expo),
            "normalized": _dec(ratio, cfg.digits),
            "zero_mode": lam.is_zero(),
        },
        out,
    )
    return 0


def _table_rows(report: dict) -> list[list[str]]:
    who = report.get("space") or report["group"]
    rows = [[who, r["table"], " ".join(r["computed"]), " ".join(r["expected"]), r["status"]] for r in report["rows"]]
    if "qdim_asym" in report:
        a = report["qdim_asym"]
        rows.append([who, "qdim_asym", a["lhs"], str(a["d"]), a["status"]])
    return rows


def cmd_tables(cfg: RunConfig, args, out) -> int:
    reports = []
    if args.all:
        reports += [group_tables(rs) for rs in iter_types(8)]
        reports += [flag_tables(fs, "both") for fs in catalog()]
    elif cfg.space:
        reports.append(flag_tables(parse_space(cfg.space), cfg.lambda0 if args.lambda0_given else "both"))
    else:
        reports.append(group_tables(cfg.root_system()))
    ok = all(all_match(r) for r in reports)
    rows = [row for r in reports for row in _table_rows(r)]
    doc = {"status": "MATCH" if ok else "MISMATCH", "reports": reports}
    _emit_records(cfg, ["object", "table", "computed", "expected", "status"], rows, doc, out)
    return 0 if ok else 1


def cmd_spaces(cfg: RunConfig, args, out) -> int:
    if args.action == "list":
        spaces = list(catalog())
        rows = [[fs.name, fs.ambient.name, fs.n, fs.classical_dim] for fs in spaces]
        doc = [fs.to_json() for fs in spaces]
        _emit_records(cfg, ["space", "group", "n", "d"], rows, doc, out)
        return 0
    if not cfg.space:
        raise ParameterError("spaces coeffs needs --space")
    fs = parse_space(cfg.space)
    sc = spherical_coeffs(fs, lambda0_of(fs.ambient, cfg.lambda0))
    doc = {"space": fs.name, "group": fs.ambient.name, "lambda0": cfg.lambda0, **sc.to_json(), "d": fs.classical_dim}
    _emit_json(doc, out)
    return 0


def _product_factors(cfg: RunConfig):
    names = [x for x in cfg.product.split(",") if x.strip()]
    if not names:
        raise ParameterError("--product needs a comma-separated list like A1,A1")
    factors = []
    for name in names:
        rs = build_root_system(*parse_type(name))
        factors.append((rs, lambda0_of(rs, cfg.lambda0), cfg.t))
    return factors


def _series(cfg: RunConfig) -> ZetaSeries:
    if cfg.product:
        return product_series(_product_factors(cfg), cfg.ctx)
    if cfg.space:
        fs = parse_space(cfg.space)
        return flag_series(fs, lambda0_of(fs.ambient, cfg.lambda0), cfg.t, cfg.ctx)
    rs = cfg.root_system()
    return group_series(rs, lambda0_of(rs, cfg.lambda0), cfg.t, cfg.ctx)


def _subject(cfg: RunConfig) -> dict:
    if cfg.product:
        return {"product": cfg.product}
    if cfg.space:
        return {"space": parse_space(cfg.space).name}
    return {"type": cfg.root_system().name}


def cmd_specdim(cfg: RunConfig, args, out) -> int:
    doc = {**_subject(cfg), "lambda0": cfg.lambda0, "t": fraction_str(cfg.t)}
    if cfg.product:
        p = spectral_dim_product(_product_factors(cfg))
    elif cfg.space:
        fs = parse_space(cfg.space)
        p = spectral_dim_flag(fs, lambda0_of(fs.ambient, cfg.lambda0), cfg.t)
        doc["d"] = fs.classical_dim
    else:
        rs = cfg.root_system()
        p = spectral_dim_group(rs, lambda0_of(rs, cfg.lambda0), cfg.t)
    doc["p"] = fraction_str(p)
    doc["zero_modes"] = ZERO_MODE_NOTE
    _emit_json(doc, out)
    return 0


def _s_values(args) -> list[Fraction]:
    if args.sweep:
        parts = args.sweep.split(":")
        if len(parts) != 3:
            raise ParameterError("--sweep takes lo:hi:step")
        lo, hi, step = (Fraction(x) for x in parts)
        if step <= 0 or hi < lo:
            raise ParameterError("--sweep needs lo <= hi and step > 0")
        vals, s = [], lo
        while s <= hi:
            vals.append(s)
            s += step
        return vals
    if args.s is None:
        raise ParameterError("zeta needs --s or --sweep")
    return [Fraction(args.s)]


def cmd_zeta(cfg: RunConfig, args, out) -> int:
    series = _series(cfg)
    rows = []
    for s in _s_values(args):
        value, tail = zeta_truncated(series, s, cfg.N)
        rows.append([fraction_str(s), _dec(value, cfg.digits), _dec(tail, cfg.digits)])
    doc = {
        **_subject(cfg),
        "lambda0": cfg.lambda0,
        "t": fraction_str(cfg.t),
        "q": cfg.q,
        "N": cfg.N,
        "zero_modes": ZERO_MODE_NOTE,
        "values": [{"s": s, "zeta_N": v, "tail_bound": b} for s, v, b in rows],
    }
    _emit_records(cfg, ["s", "zeta_N", "tail_bound"], rows, doc, out)
    return 0


def cmd_abscissa(cfg: RunConfig, args, out) -> int:
    series = _series(cfg)
    lo, hi = _parse_floats(args.bracket, 2)
    est = estimate_abscissa(series, (lo, hi), args.tol, args.mode)
    exact = series.abscissa_exact()
    doc = {
        **_subject(cfg),
        "lambda0": cfg.lambda0,
        "t": fraction_str(cfg.t),
        "q": cfg.q,
        "mode": args.mode,
        "estimate": f"{est:.6f}",
        "tol": repr(args.tol),
        "exact": fraction_str(exact),
        "status": "MATCH" if abs(est - float(exact)) <= args.tol else "MISMATCH",
        "zero_modes": ZERO_MODE_NOTE,
    }
    _emit_json(doc, out)
    return 0 if doc["status"] == "MATCH" else 1


def cmd_weyl_law(cfg: RunConfig, args, out) -> int:
    spaces = [parse_space(cfg.space)] if cfg.space else list(catalog())
    rows, docs, ok = [], [], True
    for fs in spaces:
        p = spectral_dim_flag(fs, lambda0_of(fs.ambient, cfg.lambda0), cfg.t)
        expected = Fraction(fs.classical_dim) / (4 * cfg.t) if cfg.lambda0 == "adjoint" else None
        status = "n/a" if expected is None else ("MATCH" if p == expected else "MISMATCH")
        ok = ok and status != "MISMATCH"
        entry = {"space": fs.name, "d": fs.classical_dim, "p": fraction_str(p), "status": status}
        row = [fs.name, fs.classical_dim, fraction_str(p), status]
        if args.numeric:
            series = flag_series(fs, lambda0_of(fs.ambient, cfg.lambda0), cfg.t, cfg.ctx)
            pf = float(p)
            est = estimate_abscissa(series, (pf / 2, pf * 1.5 + 1), args.tol, "ratio")
            entry["numeric"] = f"{est:.6f}"
            num_ok = abs(est - pf) <= args.tol
            entry["numeric_status"] = "MATCH" if num_ok else "MISMATCH"
            ok = ok and num_ok
            row += [entry["numeric"], entry["numeric_status"]]
        rows.append(row)
        docs.append(entry)
    header = ["space", "d", "p", "status"] + (["numeric", "numeric_status"] if args.numeric else [])
    doc = {"t": fraction_str(cfg.t), "lambda0": cfg.lambda0, "status": "MATCH" if ok else "MISMATCH", "spaces": docs}
    _emit_records(cfg, header, rows, doc, out)
    return 0 if ok else 1


COMMANDS = {
    "dump-roots": cmd_dump_roots,
    "weights": cmd_weights,
    "qdim": cmd_qdim,
    "chi": cmd_chi,
    "tables": cmd_tables,
    "spaces": cmd_spaces,
    "specdim": cmd_specdim,
    "zeta": cmd_zeta,
    "abscissa": cmd_abscissa,
    "weyl-law": cmd_weyl_law,
}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="lie_type", help="A, B, C, D with --rank, or A3, E6, E7")
    p.add_argument("--rank", type=int)
    p.add_argument("--space", help="catalog entry such as AIII(2,1), BDI(5), CI(3), EIII")
    p.add_argument("--product", help="comma-separated simple groups, e.g. A1,A1")
    p.add_argument("--lambda0", default=None, help="fundamental | adjoint | labels=n1,...")
    p.add_argument("--t", default=None, help="positive rational, e.g. 1/4 (default 1, weyl-law 1/4)")
    p.add_argument("--q", default="0.5", help="deformation parameter in (0, 1)")
    p.add_argument("--precision", type=int, default=50, help="working decimal digits")
    p.add_argument("--digits", type=int, default=15, help="printed decimal digits")
    p.add_argument("--N", type=int, default=40, help="truncation bound per index")
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "table"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qspecdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        _common(p)
        if name in ("weights", "qdim", "chi"):
            p.add_argument("--labels", required=True, help="Dynkin labels n1,...,nr")
        if name == "tables":
            p.add_argument("--all", action="store_true", help="every type and catalog entry")
        if name == "spaces":
            p.add_argument("action", choices=("list", "coeffs"))
        if name == "zeta":
            p.add_argument("--s", help="real exponent (rational string)")
            p.add_argument("--sweep", help="lo:hi:step over s")
        if name == "abscissa":
            p.add_argument("--bracket", default="0.5,10", help="lo,hi")
            p.add_argument("--tol", type=float, default=1e-3)
            p.add_argument("--mode", choices=("exact", "ratio", "raw"), default="exact")
        if name == "weyl-law":
            p.add_argument("--numeric", action="store_true", help="confirm p by numeric bisection")
            p.add_argument("--tol", type=float, default=1e-3)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    args.lambda0_given = args.lambda0 is not None
    if args.lambda0 is None:
        args.lambda0 = "adjoint"
    if args.t is None:
        args.t = "1/4" if args.command == "weyl-law" else "1"
    try:
        cfg = RunConfig(
            command=args.command,
            lie_type=args.lie_type,
            rank=args.rank,
            space=args.space,
            product=args.product,
            lambda0=args.lambda0,
            t=_parse_t(args.t),
            q=args.q,
            precision=args.precision,
            digits=args.digits,
            N=args.N,
            fmt=args.fmt,
        )
        return COMMANDS[args.command](cfg, args, out)
    except QSpecDimError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
