"""Compact irreducible Hermitian symmetric spaces G/K and their spherical weights."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ParameterError
from .rootdata import RootSystem, Weight, build_root_system, coeffs_against, fraction_str

__all__ = [
    "FAMILIES",
    "FlagSpace",
    "SphericalCoeffs",
    "build_flag",
    "parse_space",
    "spherical_coeffs",
    "check_qdim_asym",
    "catalog",
]

FAMILIES = ("AIII", "BDI", "CI", "DIII", "EIII", "EVII")


@dataclass(frozen=True)
class FlagSpace:
    family: str
    params: tuple[int, ...]
    ambient: RootSystem
    expansion: tuple[tuple[int, ...], ...]  # c_kj: mu_k = sum_j c_kj omega_j
    classical_dim: int
    degenerate: bool = False

    @property
    def name(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}({','.join(map(str, self.params))})"

    @property
    def spherical_weights(self) -> tuple[Weight, ...]:
        return tuple(self.ambient.from_labels(row) for row in self.expansion)

    @property
    def n(self) -> int:
        return len(self.expansion)

    def weight_of(self, m) -> Weight:
        """Lambda_S = sum_k m_k mu_k."""
        if len(m) != self.n:
            raise ParameterError(f"{self.name} has {self.n} spherical weights, got {len(m)} coefficients")
        labels = [sum(mk * row[j] for mk, row in zip(m, self.expansion)) for j in range(self.ambient.rank)]
        return self.ambient.from_labels(labels)

    def to_json(self) -> dict:
        return {
            "space": self.name,
            "group": self.ambient.name,
            "d": self.classical_dim,
            "spherical_weights": [list(row) for row in self.expansion],
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class SphericalCoeffs:
    a_S: tuple[Fraction, ...]
    b_S: tuple[Fraction, ...]
    theta_sq: Fraction

    def to_json(self) -> dict:
        return {
            "a_S": [fraction_str(x) for x in self.a_S],
            "b_S": [fraction_str(x) for x in self.b_S],
            "theta_sq": fraction_str(self.theta_sq),
        }


def _unit(r: int, *pairs: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * r
    for node, c in pairs:
        v[node - 1] += c
    return tuple(v)


def build_flag(family: str, *params: int, allow_degenerate: bool = False) -> FlagSpace:
    """Catalog entry for ``family`` with its rank parameters.

    AIII takes (p, q), BDI takes p (the q = 2 series), CI and DIII take r,
    EIII and EVII take none.  ``allow_degenerate`` relaxes AIII to p >= q.
    """
    fam = family.upper()
    params = tuple(int(x) for x in params)
    degenerate = False

    def need(k):
        if len(params) != k:
            raise ParameterError(f"{fam} takes {k} parameter(s), got {params}")

    if fam == "AIII":
        need(2)
        p, q = params
        if not (p > q >= 1):
            if allow_degenerate and p == q >= 1:
                degenerate = True
            else:
                raise ParameterError(f"AIII needs p > q >= 1, got p={p}, q={q}")
        r = p + q - 1
        if r < 1:
            raise ParameterError("AIII needs p + q >= 2")
        rs = build_root_system("A", r)
        exp = [_unit(r, (k, 1), (r + 1 - k, 1)) for k in range(1, q + 1)]
        d = 2 * p * q
    elif fam == "BDI":
        need(1)
        (p,) = params
        if p < 3:
            raise ParameterError(f"BDI(q=2) needs p >= 3, got {p}")
        if p % 2:
            r = (p + 1) // 2
            rs = build_root_system("B", r)
            # for B_2 the exterior square of the vector module has highest weight 2 omega_2
            mu2 = _unit(r, (2, 2)) if r == 2 else _unit(r, (2, 1))
        else:
            r = p // 2 + 1
            rs = build_root_system("D", r)
            # for D_3 the exterior square has highest weight omega_2 + omega_3
            mu2 = _unit(r, (2, 1), (3, 1)) if r == 3 else _unit(r, (2, 1))
        exp = [_unit(r, (1, 2)), mu2]
        d = 2 * p
    elif fam == "CI":
        need(1)
        (r,) = params
        if r < 2:
            raise ParameterError(f"CI needs r >= 2, got {r}")
        rs = build_root_system("C", r)
        exp = [_unit(r, (k, 2)) for k in range(1, r + 1)]
        d = r * (r + 1)
    elif fam == "DIII":
        need(1)
        (r,) = params
        if r < 3:
            raise ParameterError(f"DIII needs r >= 3, got {r}")
        rs = build_root_system("D", r)
        ell = r // 2
        exp = [_unit(r, (2 * k, 1)) for k in range(1, ell)]
        exp.append(_unit(r, (r, 2)) if r % 2 == 0 else _unit(r, (r - 1, 1), (r, 1)))
        d = r * (r - 1)
    elif fam == "EIII":
        need(0)
        rs = build_root_system("E6")
        exp = [_unit(6, (1, 1), (5, 1)), _unit(6, (6, 1))]
        d = 32
    elif fam == "EVII":
        need(0)
        rs = build_root_system("E7")
        exp = [_unit(7, (1, 1)), _unit(7, (5, 1)), _unit(7, (6, 2))]
        d = 54
    else:
        raise ParameterError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return FlagSpace(fam, params, rs, tuple(exp), d, degenerate)


def parse_space(spec: str, allow_degenerate: bool = False) -> FlagSpace:
    """Parse 'AIII(2,1)', 'BDI(5)', 'CI(3)', 'EIII', also 'AIII:2,1'."""
    s = spec.strip().upper().replace(" ", "")
    for sep in ("(", ":"):
        if sep in s:
            fam, rest = s.split(sep, 1)
            rest = rest.rstrip(")")
            try:
                params = [int(x) for x in rest.split(",") if x]
            except ValueError as exc:
                raise ParameterError(f"cannot parse space {spec!r}") from exc
            return build_flag(fam, *params, allow_degenerate=allow_degenerate)
    return build_flag(s, allow_degenerate=allow_degenerate)


def spherical_coeffs(fs: FlagSpace, lambda0_choice="adjoint") -> SphericalCoeffs:
    """Coefficients of (Lambda_S, 2 rho) and (Lambda_S, Lambda_0) in the m_k."""
    rs = fs.ambient
    lambda0 = rs.lambda0(lambda0_choice)

    def substitute(coeffs):
        return tuple(sum((c * x for c, x in zip(row, coeffs)), Fraction(0)) for row in fs.expansion)

    return SphericalCoeffs(
        a_S=substitute(coeffs_against(rs, rs.two_rho)),
        b_S=substitute(coeffs_against(rs, lambda0)),
        theta_sq=rs.theta.dot(rs.theta),
    )


def check_qdim_asym(fs: FlagSpace) -> tuple[bool, dict]:
    """Exact check of (2/(theta,theta)) max a_k^S = d."""
    sc = spherical_coeffs(fs, "adjoint")
    lhs = 2 / sc.theta_sq * max(sc.a_S)
    report = {
        "space": fs.name,
        "max_a_S": fraction_str(max(sc.a_S)),
        "theta_sq": fraction_str(sc.theta_sq),
        "lhs": fraction_str(lhs),
        "d": fs.classical_dim,
    }
    ok = lhs == fs.classical_dim
    report["status"] = "MATCH" if ok else "MISMATCH"
    return ok, report


def catalog(aiii_max: int = 7, bdi_max: int = 9, ci_max: int = 6, diii_max: int = 7) -> Iterator[FlagSpace]:
    """The grid of catalog entries used by the reproduction tables."""
    for total in range(3, aiii_max + 1):
        for q in range(1, total):
            p = total - q
            if p > q:
                yield build_flag("AIII", p, q)
    for p in range(3, bdi_max + 1):
        yield build_flag("BDI", p)
    for r in range(2, ci_max + 1):
        yield build_flag("CI", r)
    for r in range(3, diii_max + 1):
        yield build_flag("DIII", r)
    yield build_flag("EIII")
    yield build_flag("EVII")
