"""Drift of the normalized qdim and eigenvalue along rays, as CSV.

For each rank-<=2 type, q, ray and (for eigenvalues) Lambda_0 and t, prints
the window [min, max] over 10 <= n <= 40 and the relative change between
n = 20 and n = 40.

    python scripts/ratio_drift.py --what qdim > qdim_drift.csv
    python scripts/ratio_drift.py --what chi --q 0.5
"""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from qspecdim.casimir import CasimirSpec, chi, chi_exponent
from qspecdim.qforms import QContext, qdim, qdim_exponent
from qspecdim.rootdata import build_root_system


@dataclass(frozen=True)
class DriftConfig:
    what: str = "qdim"
    types: tuple[str, ...] = ("A1", "A2", "B2", "C2")
    qs: tuple[str, ...] = ("0.3", "0.5", "0.8")
    ts: tuple[Fraction, ...] = (Fraction(1, 4), Fraction(1))
    n_lo: int = 10
    n_hi: int = 40
    n_mid: int = 20
    precision: int = 50


def _rs(name: str):
    return build_root_system(name[0], int(name[1:]))


def _normalized(cfg, ctx, rs, ray, n, spec=None):
    lam = ray * n
    if spec is None:
        return qdim(ctx, rs, lam) * ctx.power(qdim_exponent(rs, lam))
    return chi(ctx, spec, lam) * ctx.power(chi_exponent(spec, lam))


def rows(cfg: DriftConfig):
    for name in cfg.types:
        rs = _rs(name)
        rays = {"omega1": rs.fundamental_weights[0], "rho": rs.rho}
        specs = [(None, None, None)]
        if cfg.what == "chi":
            specs = [(l0, t, CasimirSpec.build(rs, l0, t)) for l0 in ("fundamental", "adjoint") for t in cfg.ts]
        for l0, t, spec in specs:
            for q in cfg.qs:
                ctx = QContext(q, cfg.precision)
                with mpmath.workdps(cfg.precision):
                    for ray_name, ray in rays.items():
                        vals = {n: _normalized(cfg, ctx, rs, ray, n, spec) for n in range(cfg.n_lo, cfg.n_hi + 1)}
                        drift = abs(vals[cfg.n_hi] - vals[cfg.n_mid]) / vals[cfg.n_mid]
                        yield [
                            name, l0 or "", "" if t is None else str(t), q, ray_name,
                            mpmath.nstr(min(vals.values()), 8), mpmath.nstr(max(vals.values()), 8),
                            mpmath.nstr(drift, 4),
                        ]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--what", choices=("qdim", "chi"), default="qdim")
    ap.add_argument("--q", action="append", help="repeatable; default 0.3, 0.5, 0.8")
    args = ap.parse_args(argv)
    cfg = DriftConfig(what=args.what, qs=tuple(args.q) if args.q else DriftConfig.qs)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["type", "lambda0", "t", "q", "ray", "min", "max", "rel_drift_20_40"])
    for row in rows(cfg):
        writer.writerow(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
