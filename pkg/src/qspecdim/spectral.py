"""Spectral dimensions and truncated zeta series.

A series is indexed by a multi-index n (Dynkin labels for a group, spherical
coordinates m for a flag space, concatenated per factor for a product).  Its
term is

    prod_i qdim(Lambda_i)^w_i * (sum_i chi_{Lambda_i}(C_t))^{-s/2}

with w_i = 2 for groups (V tensor V*) and w_i = 1 for flag spaces
(multiplicity-free).  The trivial representation has chi = 0 and is always
dropped from the sum.

Asymptotically each term behaves like q^{E(n)} with

    E(n) = 2 s max_i t_i (B_i . n_i) - sum_i w_i (A_i . n_i)

where A_i, B_i are the coefficient vectors of (Lambda, 2 rho) and
(Lambda, Lambda_0).  E is linear on the cones where one factor attains the
max, so the series converges exactly when E > 0 on the extreme rays of those
cones: single coordinate axes, and "balanced" rays that pick one axis in each
of several factors, scaled so the t_i b_i n_i coincide.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

import mpmath
import numpy as np
from mpmath import mp

from .casimir import CasimirSpec, chi
from .errors import BracketError, DegenerateError, NumericError, ParameterError
from .flag import FlagSpace, spherical_coeffs
from .qforms import QContext, qdim
from .rootdata import RootSystem, coeffs_against

__all__ = [
    "ZetaFactor",
    "ZetaSeries",
    "group_series",
    "flag_series",
    "product_series",
    "spectral_dim_group",
    "spectral_dim_flag",
    "spectral_dim_product",
    "zeta_truncated",
    "raw_growth",
    "estimate_abscissa",
]


def _positive_b(b: Sequence[Fraction]) -> None:
    if any(x <= 0 for x in b):
        raise DegenerateError(f"coefficients of (Lambda, Lambda_0) must be positive, got {[str(x) for x in b]}")


def spectral_dim_group(rs: RootSystem, lambda0_choice="adjoint", t=1) -> Fraction:
    """(1/t) max_k a_k / b_k."""
    t = Fraction(t)
    if t <= 0:
        raise ParameterError("t must be positive")
    a = coeffs_against(rs, rs.two_rho)
    b = coeffs_against(rs, rs.lambda0(lambda0_choice))
    _positive_b(b)
    return max(x / y for x, y in zip(a, b)) / t


def spectral_dim_flag(fs: FlagSpace, lambda0_choice="adjoint", t=1) -> Fraction:
    """(1/(2t)) max_k a_k^S / b_k^S."""
    t = Fraction(t)
    if t <= 0:
        raise ParameterError("t must be positive")
    sc = spherical_coeffs(fs, lambda0_choice)
    _positive_b(sc.b_S)
    return max(x / y for x, y in zip(sc.a_S, sc.b_S)) / (2 * t)


def spectral_dim_product(factors: Sequence[tuple]) -> Fraction:
    """Sum of the factor spectral dimensions; factors are (rs, lambda0, t) triples."""
    if len(factors) < 1:
        raise ParameterError("need at least one factor")
    return sum((spectral_dim_group(rs, l0, t) for rs, l0, t in factors), Fraction(0))


@dataclass(frozen=True)
class ZetaFactor:
    """One simple factor: a group (w=2) or a flag space (w=1)."""

    kind: str
    spec: CasimirSpec
    expansion: tuple[tuple[int, ...], ...]  # rows: label vector of each index direction
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    label: str

    @property
    def w(self) -> int:
        return 2 if self.kind == "group" else 1

    @property
    def t(self) -> Fraction:
        return self.spec.t

    @property
    def dim(self) -> int:
        return len(self.expansion)

    def labels_of(self, n: Sequence[int]) -> tuple[int, ...]:
        r = self.spec.rs.rank
        return tuple(sum(nk * row[j] for nk, row in zip(n, self.expansion)) for j in range(r))

    def abscissa(self) -> Fraction:
        return max(Fraction(self.w) * x / (2 * self.t * y) for x, y in zip(self.a, self.b))


@dataclass
class ZetaSeries:
    kind: str
    factors: tuple[ZetaFactor, ...]
    ctx: QContext
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return sum(f.dim for f in self.factors)

    @property
    def label(self) -> str:
        return " x ".join(f.label for f in self.factors)

    def split(self, n: Sequence[int]) -> list[tuple[int, ...]]:
        out, i = [], 0
        for f in self.factors:
            out.append(tuple(n[i:i + f.dim]))
            i += f.dim
        return out

    def is_zero_mode(self, n: Sequence[int]) -> bool:
        return not any(n)

    def _factor_data(self, fi: int, n_i: tuple[int, ...]):
        key = (fi, n_i)
        hit = self._cache.get(key)
        if hit is None:
            f = self.factors[fi]
            rs = f.spec.rs
            lam = rs.from_labels(f.labels_of(n_i))
            with mp.workdps(self.ctx.precision):
                hit = (qdim(self.ctx, rs, lam), chi(self.ctx, f.spec, lam))
            self._cache[key] = hit
        return hit

    def weight_factor(self, n: Sequence[int]) -> mpmath.mpf:
        """prod_i qdim(Lambda_i)^w_i."""
        with mp.workdps(self.ctx.precision):
            out = mpmath.mpf(1)
            for fi, (f, n_i) in enumerate(zip(self.factors, self.split(n))):
                out *= self._factor_data(fi, n_i)[0] ** f.w
            return out

    def eigenvalue(self, n: Sequence[int]) -> mpmath.mpf:
        with mp.workdps(self.ctx.precision):
            return mpmath.fsum(self._factor_data(fi, n_i)[1] for fi, n_i in enumerate(self.split(n)))

    def term(self, n: Sequence[int], s) -> mpmath.mpf:
        if self.is_zero_mode(n):
            raise ParameterError("the trivial representation is excluded (chi = 0)")
        with mp.workdps(self.ctx.precision):
            ev = self.eigenvalue(n)
            if ev <= 0:
                raise NumericError(f"non-positive eigenvalue at index {tuple(n)}")
            return self.weight_factor(n) * ev ** (-_real(s) / 2)

    def log_eigen_exponent(self, n: Sequence[int]) -> Fraction:
        """-4 max_i t_i (Lambda_i, Lambda_0,i): chi ~ q^{this} (single factor: exact exponent)."""
        return -4 * max(f.t * _dot(f.b, n_i) for f, n_i in zip(self.factors, self.split(n)))

    def weight_exponent(self, n: Sequence[int]) -> Fraction:
        """-sum_i w_i (Lambda_i, 2 rho): the weight factor ~ q^{this}."""
        return -sum((f.w * _dot(f.a, n_i) for f, n_i in zip(self.factors, self.split(n))), Fraction(0))

    def exponent(self, n: Sequence[int], s) -> Fraction:
        """Asymptotic decay exponent E(n): term ~ q^{E(n)}."""
        s = Fraction(s)
        return -s / 2 * self.log_eigen_exponent(n) + self.weight_exponent(n)

    def critical_directions(self) -> list[tuple[int, ...]]:
        """Extreme rays on which the sign of E decides convergence."""
        offsets = []
        i = 0
        for f in self.factors:
            offsets.append(i)
            i += f.dim
        rays = []
        for size in range(1, len(self.factors) + 1):
            for subset in combinations(range(len(self.factors)), size):
                for axes in product(*(range(self.factors[fi].dim) for fi in subset)):
                    weights = [self.factors[fi].t * self.factors[fi].b[k] for fi, k in zip(subset, axes)]
                    scale = reduce(math.lcm, (x.numerator for x in weights), 1)
                    v = [0] * self.rank
                    for fi, k, wt in zip(subset, axes, weights):
                        comp = scale / wt
                        assert comp.denominator == 1
                        v[offsets[fi] + k] = int(comp)
                    g = reduce(math.gcd, v)
                    rays.append(tuple(x // g for x in v))
        return rays

    def abscissa_exact(self) -> Fraction:
        """inf{s : E > 0 on every critical ray}, exact."""
        best = Fraction(0)
        for v in self.critical_directions():
            best = max(best, -self.weight_exponent(v) / (-self.log_eigen_exponent(v) / 2))
        return best

    def converges_exact(self, s) -> bool:
        return all(self.exponent(v, Fraction(s)) > 0 for v in self.critical_directions())

    def direction_ratio(self, v: Sequence[int], s, n: int = 200) -> mpmath.mpf:
        """term((n+1) v) / term(n v), which tends to q^{E(v)}."""
        with mp.workdps(self.ctx.precision):
            hi = self.term([(n + 1) * x for x in v], s)
            lo = self.term([n * x for x in v], s)
            return hi / lo

    def converges_ratio(self, s, n: int = 200) -> bool:
        return all(self.direction_ratio(v, s, n) < 1 for v in self.critical_directions())

    def tail_rates(self, s) -> list[Fraction]:
        """Per-coordinate exponents g with term <~ C q^{g . n} (weighted AM-GM for products)."""
        s = Fraction(s)
        ps = [f.abscissa() for f in self.factors]
        total = sum(ps)
        rates = []
        for f, p in zip(self.factors, ps):
            theta = p / total if len(self.factors) > 1 else Fraction(1)
            rates.extend(2 * s * f.t * theta * bk - f.w * ak for ak, bk in zip(f.a, f.b))
        return rates


def _real(s) -> mpmath.mpf:
    if isinstance(s, Fraction):
        return mpmath.mpf(s.numerator) / s.denominator
    return mpmath.mpf(s)


def _dot(u: Sequence[Fraction], v: Sequence[int]) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(u, v)), Fraction(0))


def _group_factor(rs: RootSystem, lambda0_choice, t) -> ZetaFactor:
    spec = CasimirSpec.build(rs, lambda0_choice, t)
    a = tuple(coeffs_against(rs, rs.two_rho))
    b = tuple(coeffs_against(rs, spec.lambda0))
    _positive_b(b)
    ident = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    return ZetaFactor("group", spec, ident, a, b, rs.name)


def group_series(rs: RootSystem, lambda0_choice="adjoint", t=1, ctx: QContext | None = None) -> ZetaSeries:
    ctx = ctx or QContext.of("0.5")
    return ZetaSeries("group", (_group_factor(rs, lambda0_choice, t),), ctx)


def flag_series(fs: FlagSpace, lambda0_choice="adjoint", t=Fraction(1, 4), ctx: QContext | None = None) -> ZetaSeries:
    ctx = ctx or QContext.of("0.5")
    spec = CasimirSpec.build(fs.ambient, lambda0_choice, t)
    sc = spherical_coeffs(fs, lambda0_choice)
    _positive_b(sc.b_S)
    factor = ZetaFactor("flag", spec, fs.expansion, sc.a_S, sc.b_S, fs.name)
    return ZetaSeries("flag", (factor,), ctx)


def product_series(factors: Sequence[tuple], ctx: QContext | None = None) -> ZetaSeries:
    """Product of simple groups; ``factors`` are (rs, lambda0, t) triples."""
    if len(factors) < 1:
        raise ParameterError("need at least one factor")
    ctx = ctx or QContext.of("0.5")
    return ZetaSeries("product", tuple(_group_factor(rs, l0, t) for rs, l0, t in factors), ctx)


def _box(rank: int, bound: int) -> Iterator[tuple[int, ...]]:
    return product(range(bound + 1), repeat=rank)


def zeta_truncated(series: ZetaSeries, s, bound: int):
    """Partial sum over the box [0, bound]^rank (zero mode dropped) and a tail bound.

    The tail bound is C * (sum of prod_k rho_k^{n_k} outside the box) with
    rho_k = q^{g_k} from ``tail_rates`` and C the largest ratio of a computed
    term to its geometric model over the box; it is +inf when some rho_k >= 1.
    """
    if bound < 1:
        raise ParameterError("truncation bound must be >= 1")
    ctx = series.ctx
    rates = series.tail_rates(s)
    with mp.workdps(ctx.precision):
        terms = []
        c_max = mpmath.mpf(0)
        for n in _box(series.rank, bound):
            if series.is_zero_mode(n):
                continue
            term = series.term(n, s)
            terms.append(term)
            model = ctx.power(_dot(rates, n))
            c_max = max(c_max, term / model)
        value = mpmath.fsum(terms)
        if any(g <= 0 for g in rates):
            return value, mpmath.inf
        rhos = [ctx.power(g) for g in rates]
        full = mpmath.fprod(1 / (1 - r) for r in rhos)
        # full * (1 - prod(1 - rho^(N+1))) without cancellation
        outside = -mpmath.expm1(mpmath.fsum(mpmath.log1p(-(r ** (bound + 1))) for r in rhos))
        return value, c_max * full * outside


def raw_growth(series: ZetaSeries, s, bound: int = 60) -> dict:
    """Empirical growth of shell sums S_N = sum_{max(n) = N} term(n).

    Fits log S_N = c + sigma N + kappa log N over the upper half of the shells;
    sigma >= 0 means the partial sums do not settle (divergence).
    """
    ctx = series.ctx
    with mp.workdps(ctx.precision):
        shells = {}
        lo = max(2, bound // 2)
        for big in range(lo, bound + 1):
            acc = []
            for n in _box(series.rank, big):
                if max(n) == big:
                    acc.append(series.term(n, s))
            shells[big] = mpmath.fsum(acc)
        xs = np.array(sorted(shells), dtype=float)
        ys = np.array([float(mpmath.log(shells[int(x)])) for x in xs])
    design = np.column_stack([np.ones_like(xs), xs, np.log(xs)])
    coef, *_ = np.linalg.lstsq(design, ys, rcond=None)
    sigma = float(coef[1])
    return {"sigma": sigma, "per_step_ratio": math.exp(sigma), "diverges": sigma >= 0, "shells": len(xs)}


def estimate_abscissa(series: ZetaSeries, bracket=(0.5, 4.0), tol: float = 1e-3, mode: str = "exact") -> float:
    """Bisect the divergence predicate on ``bracket`` down to ``tol``.

    mode 'exact' compares the rational exponents E(v) on the critical rays,
    'ratio' measures term((n+1)v)/term(nv) numerically on the same rays, and
    'raw' uses the shell-sum growth fit (slow; small ranks only).
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise ParameterError("bracket must satisfy s_lo < s_hi")
    if tol <= 0:
        raise ParameterError("tol must be positive")
    predicates: dict[str, Callable[[Fraction], bool]] = {
        "exact": series.converges_exact,
        "ratio": series.converges_ratio,
        "raw": lambda s: not raw_growth(series, s)["diverges"],
    }
    try:
        converges = predicates[mode]
    except KeyError:
        raise ParameterError(f"unknown mode {mode!r}") from None

    def conv(x: float) -> bool:
        return converges(Fraction(x))

    if conv(lo):
        raise BracketError(f"series already converges at s_lo={lo}")
    if not conv(hi):
        raise BracketError(f"series still diverges at s_hi={hi}")
    while hi - lo > 2 * tol:
        mid = (lo + hi) / 2
        if conv(mid):
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2
