"""Quantum dimensions at a real deformation parameter 0 < q < 1.

All q-powers have exact rational exponents and are evaluated as
exp(x ln q) in mpmath at the context's working precision, so exponents in
the thousands neither overflow nor underflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import mpmath
from mpmath import mp

from .errors import ParameterError
from .rootdata import RootSystem, Weight

__all__ = ["QContext", "qdim", "qdim_exponent", "qdim_ratio", "qdim_ratio_window", "qnumber"]


@dataclass(frozen=True)
class QContext:
    """Deformation parameter q (kept as a decimal string) and working precision."""

    q_str: str
    precision: int = 50

    def __post_init__(self):
        if self.precision < 10:
            raise ParameterError("precision must be at least 10 digits")
        with mp.workdps(self.precision):
            try:
                q = self.q
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise ParameterError(f"cannot parse q={self.q_str!r}") from exc
            if not 0 < q < 1:
                raise ParameterError(f"q must lie strictly inside (0, 1), got {self.q_str}")

    @classmethod
    def of(cls, q, precision: int = 50) -> "QContext":
        if isinstance(q, QContext):
            return q
        if isinstance(q, Fraction):
            q = f"{q.numerator}/{q.denominator}"
        return cls(str(q), precision)

    @property
    def q(self) -> mpmath.mpf:
        if "/" in self.q_str:
            p, d = self.q_str.split("/")
            return mpmath.mpf(p) / mpmath.mpf(d)
        return mpmath.mpf(self.q_str)

    @property
    def log_q(self) -> mpmath.mpf:
        return mpmath.log(self.q)

    def power(self, x: Fraction) -> mpmath.mpf:
        """q**x for an exact rational x."""
        return mpmath.exp(_mpf(x) * self.log_q)

    def eps(self) -> mpmath.mpf:
        return mpmath.mpf(10) ** (-self.precision)


def _mpf(x: Fraction) -> mpmath.mpf:
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def qnumber(ctx: QContext, x: Fraction) -> mpmath.mpf:
    """[x]_q = (q^x - q^-x)/(q - q^-1)."""
    with mp.workdps(ctx.precision):
        lq = ctx.log_q
        return mpmath.sinh(_mpf(x) * lq) / mpmath.sinh(lq)


def _sinh_factor(ctx: QContext, x: Fraction, y: Fraction) -> mpmath.mpf:
    # (q^x - q^-x)/(q^y - q^-y)
    lq = ctx.log_q
    return mpmath.sinh(_mpf(x) * lq) / mpmath.sinh(_mpf(y) * lq)


def qdim(ctx: QContext, rs: RootSystem, highest: Weight) -> mpmath.mpf:
    """Quantum dimension product over positive roots.

    Any lattice weight is accepted.  For a non-dominant argument the product
    formula is evaluated as written, which gives 0 when highest+rho is
    orthogonal to a root and otherwise +-qdim of the dot-conjugate dominant
    weight.
    """
    rs.check_weight(highest)
    shifted = highest + rs.rho
    with mp.workdps(ctx.precision):
        result = mpmath.mpf(1)
        for a in rs.positive_roots:
            x = shifted.dot(a)
            if x == 0:
                return mpmath.mpf(0)
            result *= _sinh_factor(ctx, x, rs.rho.dot(a))
        return +result


def qdim_exponent(rs: RootSystem, highest: Weight) -> Fraction:
    """(highest, 2 rho): qdim grows like q^{-(highest, 2 rho)}."""
    rs.check_weight(highest)
    return highest.dot(rs.two_rho)


def qdim_ratio_window(ctx: QContext, rs: RootSystem, ray: Weight, n_range: Iterable[int]):
    """Empirical [min, max] of qdim(n ray) * q^{(n ray, 2 rho)} over ``n_range``."""
    ns = list(n_range)
    if not ns or min(ns) < 1:
        raise ParameterError("n_range must be a non-empty range of positive integers")
    if ray.is_zero() or not rs.is_dominant(ray):
        raise ParameterError("ray must be a nonzero dominant weight")
    with mp.workdps(ctx.precision):
        values = [qdim(ctx, rs, ray * n) * ctx.power(qdim_exponent(rs, ray * n)) for n in ns]
        return min(values), max(values)


def qdim_ratio(ctx: QContext, rs: RootSystem, highest: Weight) -> mpmath.mpf:
    """qdim(highest) * q^{(highest, 2 rho)}, the normalized quantity of the asymptotic bound."""
    with mp.workdps(ctx.precision):
        return qdim(ctx, rs, highest) * ctx.power(qdim_exponent(rs, highest))
