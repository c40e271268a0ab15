"""Closed-form coefficient tables, typed in by hand.

These are the reference side of every table comparison; nothing here is
computed from the root data.  Each function returns the coefficient list
c_k of a linear form sum_k c_k n_k (or sum_k c_k m_k for spherical weights).
"""
from __future__ import annotations

from fractions import Fraction as F

from .flag import FlagSpace

__all__ = ["scal_g", "inn_fund", "inn_adj", "scal_sph", "sph_fund", "sph_adj"]


def scal_g(lie_type: str, r: int) -> list[F]:
    """(Lambda, 2 rho)."""
    if lie_type == "A":
        return [F(k * (r + 1 - k)) for k in range(1, r + 1)]
    if lie_type == "B":
        return [F(k * (2 * r - k)) for k in range(1, r)] + [F(r * r, 2)]
    if lie_type == "C":
        return [F(k * (2 * r + 1 - k)) for k in range(1, r + 1)]
    if lie_type == "D":
        return [F(k * (2 * r - 1 - k)) for k in range(1, r - 1)] + [F(r * (r - 1), 2)] * 2
    if lie_type == "E6":
        return [F(x) for x in (16, 30, 42, 30, 16, 22)]
    if lie_type == "E7":
        return [F(x) for x in (34, 66, 96, 75, 52, 27, 49)]
    raise KeyError(lie_type)


def inn_fund(lie_type: str, r: int) -> list[F]:
    """(Lambda, Lambda_F)."""
    if lie_type == "A":
        return [F(r + 1 - k, r + 1) for k in range(1, r + 1)]
    if lie_type == "B":
        return [F(1)] * (r - 1) + [F(1, 2)]
    if lie_type == "C":
        return [F(1)] * r
    if lie_type == "D":
        return [F(1)] * (r - 2) + [F(1, 2)] * 2
    if lie_type == "E6":
        return [F(4, 3), F(5, 3), F(2), F(4, 3), F(2, 3), F(1)]
    if lie_type == "E7":
        return [F(1), F(2), F(3), F(5, 2), F(2), F(3, 2), F(3, 2)]
    raise KeyError(lie_type)


def inn_adj(lie_type: str, r: int) -> list[F]:
    """(Lambda, theta)."""
    if lie_type == "A":
        return [F(1)] * r
    if lie_type == "B":
        return [F(1)] + [F(2)] * (r - 2) + [F(1)]
    if lie_type == "C":
        return [F(2)] * r
    if lie_type == "D":
        return [F(1)] + [F(2)] * (r - 3) + [F(1)] * 2
    if lie_type == "E6":
        return [F(x) for x in (1, 2, 3, 2, 1, 2)]
    if lie_type == "E7":
        return [F(x) for x in (2, 3, 4, 3, 2, 1, 2)]
    raise KeyError(lie_type)


def _n_and_r(fs: FlagSpace) -> tuple[int, int]:
    return fs.n, fs.ambient.rank


def scal_sph(fs: FlagSpace) -> list[F]:
    """(Lambda_S, 2 rho)."""
    n, r = _n_and_r(fs)
    if fs.family == "AIII":
        return [F(2 * k * (r + 1 - k)) for k in range(1, n + 1)]
    if fs.family == "BDI":
        (p,) = fs.params
        return [F(2 * p), F(2 * (p - 1))]
    if fs.family == "CI":
        return [F(2 * k * (2 * r + 1 - k)) for k in range(1, r + 1)]
    if fs.family == "DIII":
        ell = r // 2
        shift = -1 if r % 2 == 0 else 1
        return [F(2 * k * (4 * ell + shift - 2 * k)) for k in range(1, ell + 1)]
    if fs.family == "EIII":
        return [F(32), F(22)]
    if fs.family == "EVII":
        return [F(34), F(52), F(54)]
    raise KeyError(fs.family)


def sph_fund(fs: FlagSpace) -> list[F]:
    """(Lambda_S, Lambda_F)."""
    n, _ = _n_and_r(fs)
    table = {
        "AIII": [F(1)] * n,
        "BDI": [F(2), F(1)],
        "CI": [F(2)] * n,
        "DIII": [F(1)] * n,
        "EIII": [F(2), F(1)],
        "EVII": [F(1), F(2), F(3)],
    }
    return table[fs.family]


def sph_adj(fs: FlagSpace) -> list[F]:
    """(Lambda_S, theta)."""
    n, _ = _n_and_r(fs)
    table = {
        "AIII": [F(2)] * n,
        "BDI": [F(2), F(2)],
        "CI": [F(4)] * n,
        "DIII": [F(2)] * n,
        "EIII": [F(2), F(2)],
        "EVII": [F(2), F(2), F(2)],
    }
    return table[fs.family]
