"""Truncated zeta values and tail bounds across s, as CSV for plotting.

Sweeps s from just above the abscissa outward for a few standard series and
shows the tail bound switching from +inf to finite at s = p.

    python scripts/zeta_sweep.py --N 30 > sweep.csv
"""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from qspecdim.flag import build_flag
from qspecdim.qforms import QContext
from qspecdim.rootdata import build_root_system
from qspecdim.spectral import flag_series, group_series, product_series, zeta_truncated


@dataclass(frozen=True)
class SweepConfig:
    q: str = "0.5"
    precision: int = 50
    N: int = 30
    offsets: tuple[Fraction, ...] = tuple(Fraction(k, 4) for k in range(-2, 9))


def series_list(ctx):
    a1 = build_root_system("A", 1)
    return [
        ("A1 fund t=1", group_series(a1, "fundamental", 1, ctx)),
        ("A1xA1 fund t=1", product_series([(a1, "fundamental", 1)] * 2, ctx)),
        ("AIII(2,1) adj t=1/4", flag_series(build_flag("AIII", 2, 1), "adjoint", Fraction(1, 4), ctx)),
        ("CI(2) adj t=1/4", flag_series(build_flag("CI", 2), "adjoint", Fraction(1, 4), ctx)),
    ]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=SweepConfig.N)
    ap.add_argument("--q", default=SweepConfig.q)
    args = ap.parse_args(argv)
    cfg = SweepConfig(q=args.q, N=args.N)
    ctx = QContext(cfg.q, cfg.precision)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["series", "p", "s", "zeta_N", "tail_bound"])
    for label, series in series_list(ctx):
        p = series.abscissa_exact()
        for off in cfg.offsets:
            s = p + off
            value, tail = zeta_truncated(series, s, cfg.N)
            writer.writerow([label, str(p), str(s), mpmath.nstr(value, 12), "inf" if tail == mpmath.inf else mpmath.nstr(tail, 4)])
    return 0


if __name__ == "__main__":
    sys.exit(main())
