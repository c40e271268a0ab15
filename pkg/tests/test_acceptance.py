"""Acceptance criteria 1-10, one test each.

Each test records a PASS/FAIL line (printed in the terminal summary) and then
asserts.  Run alone with ``pytest tests/test_acceptance.py``.
"""
from __future__ import annotations

import time
from fractions import Fraction

import mpmath

from qspecdim import closed_forms
from qspecdim.casimir import CasimirSpec, chi, chi_exponent, chi_terms
from qspecdim.flag import catalog, check_qdim_asym, spherical_coeffs
from qspecdim.oracle import character_multiplicities
from qspecdim.qforms import QContext, qdim, qdim_exponent
from qspecdim.rootdata import build_root_system, coeffs_against, iter_types
from qspecdim.spectral import (
    estimate_abscissa,
    flag_series,
    group_series,
    product_series,
    raw_growth,
    spectral_dim_flag,
    spectral_dim_product,
)
from qspecdim.flag import build_flag
from qspecdim.weights import classical_dim, enumerate_dominant, weight_system

NUMERIC_TYPES = [("A", 1), ("A", 2), ("B", 2), ("C", 2)]
QS = ["0.3", "0.5", "0.8"]
WINDOW = range(10, 41)


def _rays(rs):
    return {"omega1": rs.fundamental_weights[0], "rho": rs.rho}


def _fmt_failures(fails, limit=6):
    head = "; ".join(fails[:limit])
    return head + (f"; ... ({len(fails)} total)" if len(fails) > limit else "")


def test_criterion_01_group_tables(record):
    start = time.perf_counter()
    bad = []
    for rs in iter_types(8):
        key, r = rs.lie_type, rs.rank
        checks = [
            (coeffs_against(rs, rs.two_rho), closed_forms.scal_g(key, r)),
            (coeffs_against(rs, rs.fundamental_weight()), closed_forms.inn_fund(key, r)),
            (coeffs_against(rs, rs.theta), closed_forms.inn_adj(key, r)),
        ]
        bad += [rs.name for got, want in checks if list(got) != list(want)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    record(1, ok, f"{len(list(iter_types(8)))} types, mismatches={bad}, {elapsed:.2f}s")
    assert ok


def test_criterion_02_spherical_tables(record):
    start = time.perf_counter()
    bad, count = [], 0
    for fs in catalog():
        count += 1
        a = spherical_coeffs(fs, "adjoint")
        f = spherical_coeffs(fs, "fundamental")
        if list(a.a_S) != closed_forms.scal_sph(fs):
            bad.append(f"{fs.name}:scal")
        if list(a.b_S) != closed_forms.sph_adj(fs):
            bad.append(f"{fs.name}:adj")
        if list(f.b_S) != closed_forms.sph_fund(fs):
            bad.append(f"{fs.name}:fund")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    record(2, ok, f"{count} spaces, mismatches={bad}, {elapsed:.2f}s")
    assert ok


def test_criterion_03_qdim_asymptotic_identity(record):
    bad = [fs.name for fs in catalog() if not check_qdim_asym(fs)[0]]
    record(3, not bad, f"mismatches={bad}")
    assert not bad


def test_criterion_04_weyl_law_symbolic(record):
    bad = []
    for fs in catalog():
        for t in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
            p = spectral_dim_flag(fs, "adjoint", t)
            if p != Fraction(fs.classical_dim) / (4 * t):
                bad.append(f"{fs.name} t={t}")
        if spectral_dim_flag(fs, "adjoint", Fraction(1, 4)) != fs.classical_dim:
            bad.append(f"{fs.name} p!=d")
        if fs.family in ("AIII", "CI", "DIII"):
            for t in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
                if spectral_dim_flag(fs, "fundamental", t) != Fraction(fs.classical_dim) / (2 * t):
                    bad.append(f"{fs.name} fund t={t}")
    record(4, not bad, f"mismatches={bad}")
    assert not bad


def test_criterion_05_qdim_ratio_stabilizes(record):
    fails, worst = [], 0.0
    for key in NUMERIC_TYPES:
        rs = build_root_system(*key)
        for q in QS:
            ctx = QContext(q)
            with mpmath.workdps(ctx.precision):
                for name, ray in _rays(rs).items():
                    vals = {n: qdim(ctx, rs, ray * n) * ctx.power(qdim_exponent(rs, ray * n)) for n in WINDOW}
                    lo, hi = min(vals.values()), max(vals.values())
                    drift = abs(vals[40] - vals[20]) / vals[20]
                    worst = max(worst, float(drift))
                    tag = f"{rs.name} q={q} {name}"
                    if not (lo > 0 and mpmath.isfinite(hi)):
                        fails.append(f"{tag} window [{mpmath.nstr(lo, 4)}, {mpmath.nstr(hi, 4)}]")
                    elif drift >= mpmath.mpf("1e-6"):
                        fails.append(f"{tag} drift {mpmath.nstr(drift, 3)}")
    record(5, not fails, f"worst drift {worst:.3g}; " + (_fmt_failures(fails) if fails else "all within 1e-6"))
    assert not fails, fails


def test_criterion_06_eigenvalue_ratio_stabilizes(record):
    fails, worst = [], 0.0
    for key in NUMERIC_TYPES:
        rs = build_root_system(*key)
        for l0 in ("fundamental", "adjoint"):
            for t in (Fraction(1, 4), Fraction(1)):
                spec = CasimirSpec.build(rs, l0, t)
                for q in QS:
                    ctx = QContext(q)
                    with mpmath.workdps(ctx.precision):
                        for name, ray in _rays(rs).items():
                            vals = {}
                            for n in WINDOW:
                                lam = ray * n
                                vals[n] = chi(ctx, spec, lam) * ctx.power(chi_exponent(spec, lam))
                            lo, hi = min(vals.values()), max(vals.values())
                            drift = abs(vals[40] - vals[20]) / vals[20]
                            worst = max(worst, float(drift))
                            tag = f"{rs.name} {l0[:3]} t={t} q={q} {name}"
                            if not (lo > 0 and mpmath.isfinite(hi)):
                                fails.append(f"{tag} window")
                            elif drift >= mpmath.mpf("1e-4"):
                                fails.append(f"{tag} drift {mpmath.nstr(drift, 3)}")
    total = len(NUMERIC_TYPES) * 2 * 2 * len(QS) * 2
    record(6, not fails, f"{total - len(fails)}/{total} rays within 1e-4; worst drift {worst:.3g}; " + _fmt_failures(fails))
    assert not fails, fails


def test_criterion_07_abscissa_estimates(record):
    ctx = QContext("1/2", precision=50)
    cases = [
        ("A1 group fund t=1", group_series(build_root_system("A", 1), "fundamental", 1, ctx), 2),
        ("AIII(2,1) adj t=1/4", flag_series(build_flag("AIII", 2, 1), "adjoint", Fraction(1, 4), ctx), 4),
        ("CI(2) adj t=1/4", flag_series(build_flag("CI", 2), "adjoint", Fraction(1, 4), ctx), 6),
    ]
    parts, ok = [], True
    for label, series, expected in cases:
        start = time.perf_counter()
        est = estimate_abscissa(series, (0.5, 10.0), 1e-3, "ratio")
        elapsed = time.perf_counter() - start
        good = abs(est - expected) <= 1e-3 and elapsed < 30
        ok = ok and good
        parts.append(f"{label}: {est:.5f} vs {expected} ({elapsed:.2f}s)")
    record(7, ok, "; ".join(parts))
    assert ok


def test_criterion_08_product_rule(record):
    a1 = build_root_system("A", 1)
    factors = [(a1, "fundamental", 1), (a1, "fundamental", 1)]
    p = spectral_dim_product(factors)
    series = product_series(factors, QContext("1/2"))
    below = raw_growth(series, Fraction(39, 10), 40)
    above = raw_growth(series, Fraction(41, 10), 40)
    exact_below = series.converges_exact(Fraction(39, 10))
    exact_above = series.converges_exact(Fraction(41, 10))
    ok = (
        p == 4
        and below["diverges"] and not exact_below
        and not above["diverges"] and exact_above
    )
    record(8, ok, f"p={p}; sigma(3.9)={below['sigma']:+.4f}, sigma(4.1)={above['sigma']:+.4f}")
    assert ok


def test_criterion_09_freudenthal_vs_oracle(record):
    grid = {("A", 1): 199, ("A", 2): 20, ("A", 3): 10, ("B", 2): 16, ("C", 2): 16, ("D", 4): 4}
    bad, modules = [], 0
    for key, bound in grid.items():
        rs = build_root_system(*key)
        for lam in enumerate_dominant(rs, bound):
            dim = classical_dim(rs, lam)
            if dim > 200:
                continue
            modules += 1
            ws = weight_system(rs, lam)
            if dict(ws.mults) != character_multiplicities(rs, lam) or ws.dim != dim:
                bad.append(f"{rs.name}{rs.int_labels(lam)}")
        # the label bound must be large enough to reach every module of dimension <= 200
        for k in range(rs.rank):
            edge = [0] * rs.rank
            edge[k] = bound + 1
            assert classical_dim(rs, rs.from_labels(edge)) > 200
    record(9, not bad, f"{modules} modules, disagreements={bad}")
    assert not bad


def test_criterion_10_trivial_eigenvalue(record):
    ctx = QContext("0.5")
    bad, count = [], 0
    with mpmath.workdps(ctx.precision):
        for rs in iter_types(8):
            zero = rs.from_labels([0] * rs.rank)
            for l0 in ("fundamental", "adjoint"):
                count += 1
                spec = CasimirSpec.build(rs, l0, Fraction(1, 4))
                scale = mpmath.fsum(abs(v) for *_, v in chi_terms(ctx, spec, zero))
                value = chi(ctx, spec, zero)
                if abs(value) > scale * mpmath.mpf(10) ** (10 - ctx.precision):
                    bad.append(f"{rs.name} {l0}: {mpmath.nstr(value, 5)}")
    record(10, not bad, f"{count} (type, Lambda_0) pairs, nonzero={bad}")
    assert not bad
