"""Eigenvalues of the central elements C_t on irreducible modules.

C_t is the q-trace over a fixed module V(Lambda_0) of the square of
((R^T R)^t - (R^T R)^-t)/(q - q^-1).  On V(Lambda) it acts by

    chi_Lambda(C_t) = sum_lambda mult(lambda) a_{t,lambda}^2 qdim(Lambda+lambda)/qdim(Lambda)

with lambda running over the weights of V(Lambda_0) and
a_{t,lambda} = [t e_lambda]_q, e_lambda = 2(Lambda,lambda) + (lambda,lambda+2rho)
- (Lambda_0,Lambda_0+2rho).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mp

from .errors import NumericError, ParameterError
from .qforms import QContext, _mpf, qdim
from .rootdata import RootSystem, Weight
from .weights import WeightSystem, weight_system

__all__ = ["CasimirSpec", "r_lambda", "a_t_lambda", "chi", "chi_terms", "chi_exponent", "chi_ratio"]


def _as_fraction(t) -> Fraction:
    try:
        return Fraction(t)
    except (ValueError, TypeError) as exc:
        raise ParameterError(f"t must be a rational number, got {t!r}") from exc


@dataclass(frozen=True)
class CasimirSpec:
    rs: RootSystem
    lambda0: Weight
    t: Fraction
    ws0: WeightSystem = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "t", _as_fraction(self.t))
        if self.t <= 0:
            raise ParameterError(f"t must be positive, got {self.t}")
        self.rs.check_weight(self.lambda0)
        if not self.rs.is_dominant(self.lambda0):
            raise ParameterError("Lambda_0 must be dominant")
        object.__setattr__(self, "ws0", weight_system(self.rs, self.lambda0))

    @classmethod
    def build(cls, rs: RootSystem, lambda0="adjoint", t=1) -> "CasimirSpec":
        return cls(rs, rs.lambda0(lambda0), _as_fraction(t))

    @property
    def base_shift(self) -> Fraction:
        """(Lambda_0, Lambda_0 + 2 rho)."""
        return self.lambda0.dot(self.lambda0 + self.rs.two_rho)


def r_lambda(spec: CasimirSpec, Lambda: Weight, lam: Weight) -> Fraction:
    """Exponent e with r_lambda = q^e."""
    rs = spec.rs
    rs.check_weight(Lambda)
    if not spec.ws0.mult(lam):
        raise ParameterError(f"{lam!r} is not a weight of V(Lambda_0)")
    return 2 * Lambda.dot(lam) + lam.dot(lam + rs.two_rho) - spec.base_shift


def _a_t(ctx: QContext, t: Fraction, e: Fraction) -> mpmath.mpf:
    lq = ctx.log_q
    return mpmath.sinh(_mpf(t * e) * lq) / mpmath.sinh(lq)


def a_t_lambda(ctx: QContext, spec: CasimirSpec, Lambda: Weight, lam: Weight) -> mpmath.mpf:
    """(q^{t e} - q^{-t e})/(q - q^{-1})."""
    e = r_lambda(spec, Lambda, lam)
    with mp.workdps(ctx.precision):
        return _a_t(ctx, spec.t, e)


def chi_terms(ctx: QContext, spec: CasimirSpec, Lambda: Weight) -> list[tuple[Weight, int, Fraction, mpmath.mpf]]:
    """Per-weight contributions (lambda, mult, e_lambda, mult * a^2 * qdim ratio)."""
    rs = spec.rs
    rs.check_weight(Lambda)
    if not rs.is_dominant(Lambda):
        raise ParameterError("chi is defined on dominant weights")
    out = []
    with mp.workdps(ctx.precision):
        base = qdim(ctx, rs, Lambda)
        for lam, m in spec.ws0.items():
            e = 2 * Lambda.dot(lam) + lam.dot(lam + rs.two_rho) - spec.base_shift
            if e == 0:
                out.append((lam, m, e, mpmath.mpf(0)))
                continue
            a = _a_t(ctx, spec.t, e)
            out.append((lam, m, e, m * a * a * qdim(ctx, rs, Lambda + lam) / base))
    return out


def chi(ctx: QContext, spec: CasimirSpec, Lambda: Weight) -> mpmath.mpf:
    """chi_Lambda(C_t); non-negative, and 0 exactly on the trivial module.

    Raises NumericError when cancellation between signed terms leaves no
    significant digits for a nonzero Lambda, or the sum comes out negative
    beyond rounding.
    """
    terms = chi_terms(ctx, spec, Lambda)
    with mp.workdps(ctx.precision):
        total = mpmath.fsum(v for *_, v in terms)
        scale = mpmath.fsum(abs(v) for *_, v in terms)
        slack = scale * mpmath.mpf(10) ** (10 - ctx.precision)
        if total < -slack:
            raise NumericError(
                f"chi{spec.rs.labels(Lambda)} = {mpmath.nstr(total, 8)} is negative beyond rounding (scale {mpmath.nstr(scale, 8)})"
            )
        if not Lambda.is_zero() and total <= slack:
            raise NumericError(
                f"chi{spec.rs.labels(Lambda)} lost all significant digits (value {mpmath.nstr(total, 8)}, "
                f"term scale {mpmath.nstr(scale, 8)}, precision {ctx.precision}); raise precision"
            )
        return +total


def chi_exponent(spec: CasimirSpec, Lambda: Weight) -> Fraction:
    """4 t (Lambda, Lambda_0): chi grows like q^{-4t(Lambda, Lambda_0)}."""
    spec.rs.check_weight(Lambda)
    return 4 * spec.t * Lambda.dot(spec.lambda0)


def chi_ratio(ctx: QContext, spec: CasimirSpec, Lambda: Weight) -> mpmath.mpf:
    """chi_Lambda(C_t) * q^{4t(Lambda, Lambda_0)}."""
    value = chi(ctx, spec, Lambda)
    with mp.workdps(ctx.precision):
        return value * ctx.power(chi_exponent(spec, Lambda))
