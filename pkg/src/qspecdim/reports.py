"""Side-by-side comparison of computed coefficient tables with the closed forms."""
from __future__ import annotations

from fractions import Fraction

from . import closed_forms
from .flag import FlagSpace, check_qdim_asym, spherical_coeffs
from .rootdata import RootSystem, coeffs_against, fraction_str

__all__ = ["compare_row", "group_tables", "flag_tables", "all_match"]


def compare_row(name: str, computed, expected) -> dict:
    computed = [Fraction(x) for x in computed]
    expected = [Fraction(x) for x in expected]
    return {
        "table": name,
        "computed": [fraction_str(x) for x in computed],
        "expected": [fraction_str(x) for x in expected],
        "status": "MATCH" if computed == expected else "MISMATCH",
    }


def group_tables(rs: RootSystem) -> dict:
    """(Lambda, 2 rho), (Lambda, Lambda_F), (Lambda, theta) in the labels n_k."""
    key, r = rs.lie_type, rs.rank
    rows = [
        compare_row("scal_g", coeffs_against(rs, rs.two_rho), closed_forms.scal_g(key, r)),
        compare_row("inn_fund", coeffs_against(rs, rs.fundamental_weight()), closed_forms.inn_fund(key, r)),
        compare_row("inn_adj", coeffs_against(rs, rs.theta), closed_forms.inn_adj(key, r)),
    ]
    return {"group": rs.name, "rows": rows}


def flag_tables(fs: FlagSpace, lambda0_choice: str = "adjoint") -> dict:
    """Spherical coefficient tables for one catalog entry.

    The (Lambda_S, 2 rho) row and the qdim-asymptotic identity are always
    included; the b_S row follows ``lambda0_choice`` ('adjoint', 'fundamental'
    or 'both').
    """
    choices = ("adjoint", "fundamental") if lambda0_choice == "both" else (lambda0_choice,)
    sc = spherical_coeffs(fs, "adjoint")
    rows = [compare_row("scal_sph", sc.a_S, closed_forms.scal_sph(fs))]
    for choice in choices:
        b = spherical_coeffs(fs, choice).b_S
        ref = closed_forms.sph_adj(fs) if choice == "adjoint" else closed_forms.sph_fund(fs)
        rows.append(compare_row(f"sph_{'adj' if choice == 'adjoint' else 'fund'}", b, ref))
    _, asym = check_qdim_asym(fs)
    return {
        "space": fs.name,
        "group": fs.ambient.name,
        "d": fs.classical_dim,
        "theta_sq": fraction_str(sc.theta_sq),
        "rows": rows,
        "qdim_asym": asym,
    }


def all_match(report: dict) -> bool:
    ok = all(row["status"] == "MATCH" for row in report["rows"])
    if "qdim_asym" in report:
        ok = ok and report["qdim_asym"]["status"] == "MATCH"
    return ok
