"""Weight systems of irreducible modules.

Multiplicities come from Freudenthal's recursion evaluated on dominant
weights only; the rest of the weight multiset is filled in by Weyl orbits.
Internally weights are integer Dynkin-label tuples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm
from typing import Iterator, Mapping

from .errors import ParameterError, ResourceError
from .rootdata import RootSystem, Weight, _solve

__all__ = [
    "DEFAULT_DIM_CAP",
    "WeightSystem",
    "weight_system",
    "classical_dim",
    "enumerate_dominant",
    "dominant_conjugate",
    "weyl_orbit",
]

DEFAULT_DIM_CAP = 10**6

Labels = tuple[int, ...]


def _require_dominant(rs: RootSystem, highest: Weight) -> Labels:
    rs.check_weight(highest)
    labels = rs.int_labels(highest)
    if any(n < 0 for n in labels):
        raise ParameterError(f"highest weight {labels} is not dominant")
    return labels


def classical_dim(rs: RootSystem, highest: Weight) -> int:
    """Weyl dimension formula prod_{alpha>0} (highest+rho, alpha)/(rho, alpha)."""
    _require_dominant(rs, highest)
    shifted = highest + rs.rho
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= shifted.dot(a) / rs.rho.dot(a)
    assert num.denominator == 1
    return int(num)


def enumerate_dominant(rs: RootSystem, bound: int) -> Iterator[Weight]:
    """All sum n_k omega_k with 0 <= n_k <= bound, in lexicographic label order."""
    if bound < 0:
        return
    for labels in product(range(bound + 1), repeat=rs.rank):
        yield rs.from_labels(labels)


class _LabelForm:
    """Integer-scaled inner product on Dynkin-label vectors."""

    def __init__(self, rs: RootSystem):
        gram = rs.omega_gram
        self.scale = lcm(*(x.denominator for row in gram for x in row))
        self.gram = tuple(tuple(int(x * self.scale) for x in row) for row in gram)
        self.rank = rs.rank

    def dual(self, v: Labels) -> Labels:
        g = self.gram
        return tuple(sum(g[i][j] * v[j] for j in range(self.rank)) for i in range(self.rank))

    def ip(self, u: Labels, v: Labels) -> int:
        return sum(a * b for a, b in zip(u, self.dual(v)))


def _simple_root_labels(rs: RootSystem) -> tuple[Labels, ...]:
    return tuple(tuple(row) for row in rs.cartan_matrix)


def dominant_conjugate(rs: RootSystem, labels: Labels) -> Labels:
    """Reflect an integral label vector into the dominant chamber."""
    alphas = _simple_root_labels(rs)
    lab = list(labels)
    while True:
        for i, n in enumerate(lab):
            if n < 0:
                ai = alphas[i]
                lab = [x - n * y for x, y in zip(lab, ai)]
                break
        else:
            return tuple(lab)


def weyl_orbit(rs: RootSystem, labels: Labels) -> list[Labels]:
    alphas = _simple_root_labels(rs)
    seen = {tuple(labels)}
    frontier = [tuple(labels)]
    while frontier:
        nxt = []
        for lab in frontier:
            for i, n in enumerate(lab):
                if n:
                    img = tuple(x - n * y for x, y in zip(lab, alphas[i]))
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
        frontier = nxt
    return sorted(seen, reverse=True)


@dataclass(frozen=True)
class WeightSystem:
    """Weights of V(highest) with multiplicities, keyed by Dynkin labels."""

    rs: RootSystem
    highest_labels: Labels
    mults: Mapping[Labels, int]
    dominant: Mapping[Labels, int] = field(repr=False)

    @property
    def highest(self) -> Weight:
        return self.rs.from_labels(self.highest_labels)

    @property
    def entries(self) -> dict[Weight, int]:
        return {self.rs.from_labels(lab): m for lab, m in self.mults.items()}

    @property
    def dim(self) -> int:
        return sum(self.mults.values())

    def mult(self, w: Weight | Labels) -> int:
        lab = self.rs.int_labels(w) if isinstance(w, Weight) else tuple(w)
        return self.mults.get(lab, 0)

    def items(self) -> list[tuple[Weight, int]]:
        """(weight, multiplicity) pairs sorted by descending labels."""
        return [(self.rs.from_labels(lab), self.mults[lab]) for lab in sorted(self.mults, reverse=True)]

    def to_json(self) -> dict:
        return {
            "type": self.rs.name,
            "highest_labels": list(self.highest_labels),
            "dim": self.dim,
            "weights": [
                {"labels": list(lab), "coords": self.rs.from_labels(lab).to_json(), "mult": self.mults[lab]}
                for lab in sorted(self.mults, reverse=True)
            ],
        }


def _dominant_weights(rs: RootSystem, top: Labels, pos: tuple[Labels, ...]) -> list[Labels]:
    found = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in pos:
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) >= 0 and nu not in found:
                    found.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return list(found)


def weight_system(rs: RootSystem, highest: Weight, dim_cap: int = DEFAULT_DIM_CAP) -> WeightSystem:
    """Full weight multiset of V(highest) via Freudenthal's formula."""
    top = _require_dominant(rs, highest)
    dim = classical_dim(rs, highest)
    if dim > dim_cap:
        raise ResourceError(f"dim V{top} = {dim} exceeds the cap {dim_cap}")
    return _weight_system_cached(rs, top)


@lru_cache(maxsize=256)
def _weight_system_cached(rs: RootSystem, top: Labels) -> WeightSystem:
    form = _LabelForm(rs)
    pos = rs.positive_root_labels
    pos_dual = [form.dual(a) for a in pos]
    rho = (1,) * rs.rank
    rho_dual = form.dual(rho)

    # depth of top - mu in simple roots, for processing order
    inv = _height_functional(rs)

    def depth(mu: Labels) -> Fraction:
        diff = [x - y for x, y in zip(top, mu)]
        return sum((c * d for c, d in zip(inv, diff)), Fraction(0))

    def norm_shift(mu: Labels) -> int:
        d = form.dual(mu)
        return sum(a * b for a, b in zip(mu, d)) + 2 * sum(a * b for a, b in zip(mu, rho_dual))

    dom = sorted(_dominant_weights(rs, top, pos), key=depth)
    top_norm = norm_shift(top)
    mult: dict[Labels, int] = {top: 1}
    conj_cache: dict[Labels, Labels] = {}

    def lookup(nu: Labels) -> int:
        c = conj_cache.get(nu)
        if c is None:
            c = dominant_conjugate(rs, nu)
            conj_cache[nu] = c
        return mult.get(c, 0)

    for mu in dom[1:]:
        total = 0
        for a, ad in zip(pos, pos_dual):
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, a))
                m = lookup(nu)
                if not m:
                    break
                total += m * sum(x * y for x, y in zip(nu, ad))
        denom = top_norm - norm_shift(mu)
        value, rem = divmod(2 * total, denom)
        if rem or value <= 0:
            raise ArithmeticError(f"Freudenthal recursion failed at {mu}: {2 * total}/{denom}")
        mult[mu] = value

    full: dict[Labels, int] = {}
    for mu, m in mult.items():
        for nu in weyl_orbit(rs, mu):
            full[nu] = m
    return WeightSystem(rs, top, full, dict(mult))


@lru_cache(maxsize=64)
def _height_functional(rs: RootSystem) -> tuple[Fraction, ...]:
    """Row vector h with h . labels(x) = height of x in simple-root coordinates."""
    r = rs.rank
    # labels = A^T c  =>  c = (A^T)^{-1} labels, height = 1^T c
    a_t = [[Fraction(rs.cartan_matrix[k][j]) for k in range(r)] for j in range(r)]
    ident = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    inv = _solve(a_t, ident)
    return tuple(sum(inv[k][j] for k in range(r)) for j in range(r))
