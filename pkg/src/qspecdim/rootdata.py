"""Root systems of types A-E7 in orthonormal ambient coordinates.

Conventions: short roots have squared length 2, simple roots are numbered
along the Dynkin diagram with the E6/E7 branch node last (node 6 of E6 and
node 7 of E7 hang off node 3).  All coordinates are exact ``Fraction``s.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import ParameterError

__all__ = [
    "LIE_TYPES",
    "Weight",
    "RootSystem",
    "build_root_system",
    "inner",
    "coeffs_against",
    "fraction_str",
]

LIE_TYPES = ("A", "B", "C", "D", "E6", "E7")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def fraction_str(x: Fraction) -> str:
    """Render as ``"p/q"`` (or ``"p"`` for integers); used by every JSON writer."""
    x = _frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Weight:
    """An exact vector in the ambient Euclidean space."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_frac(c) for c in self.coords))

    @classmethod
    def zero(cls, dim: int) -> "Weight":
        return cls((Fraction(0),) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: "Weight") -> None:
        if self.dim != other.dim:
            raise ParameterError(f"ambient dimension mismatch: {self.dim} != {other.dim}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, c) -> "Weight":
        c = _frac(c)
        return Weight(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: "Weight") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> list[str]:
        return [fraction_str(c) for c in self.coords]

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(fraction_str(c) for c in self.coords) + ")"


def inner(w1: Weight, w2: Weight) -> Fraction:
    """Normalized invariant form (orthonormal ambient basis)."""
    return w1.dot(w2)


def _e(i: int, n: int) -> Weight:
    v = [Fraction(0)] * n
    v[i - 1] = Fraction(1)
    return Weight(tuple(v))


def _vec(n: int, entries: dict[int, Fraction | int]) -> Weight:
    v = [Fraction(0)] * n
    for i, c in entries.items():
        v[i - 1] = _frac(c)
    return Weight(tuple(v))


def _solve(matrix: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan over Q: return X with matrix @ X = rhs (matrix square, invertible)."""
    n = len(matrix)
    m = len(rhs[0])
    aug = [list(map(_frac, matrix[i])) + list(map(_frac, rhs[i])) for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:n + m] for row in aug]


@dataclass(frozen=True)
class RootSystem:
    lie_type: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    theta: Weight
    fundamental_weights: tuple[Weight, ...] = field(init=False)
    rho: Weight = field(init=False)
    cartan_matrix: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        simple = self.simple_roots
        r = len(simple)
        cartan = []
        for a in simple:
            row = []
            for b in simple:
                v = 2 * a.dot(b) / b.dot(b)
                if v.denominator != 1:
                    raise ParameterError("non-integral Cartan entry")
                row.append(int(v))
            cartan.append(tuple(row))
        object.__setattr__(self, "cartan_matrix", tuple(cartan))
        # omega_i lies in the span of the simple roots: omega_i = sum_k c_ik alpha_k
        # with sum_k c_ik (alpha_k, alpha_j^vee) = delta_ij.
        gram = [[a.dot(self.coroot(j)) for j in range(r)] for a in simple]
        # gram[k][j] = (alpha_k, alpha_j^vee); we need C @ gram = I, i.e. gram^T @ C^T = I
        gram_t = [[gram[k][j] for k in range(r)] for j in range(r)]
        ident = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
        c_t = _solve(gram_t, ident)
        fws = []
        for i in range(r):
            w = Weight.zero(self.ambient_dim)
            for k in range(r):
                w = w + simple[k] * c_t[k][i]
            fws.append(w)
        object.__setattr__(self, "fundamental_weights", tuple(fws))
        rho = Weight.zero(self.ambient_dim)
        for w in fws:
            rho = rho + w
        object.__setattr__(self, "rho", rho)

    @property
    def name(self) -> str:
        return self.lie_type if self.lie_type.startswith("E") else f"{self.lie_type}{self.rank}"

    def coroot(self, j: int) -> Weight:
        a = self.simple_roots[j]
        return a * (Fraction(2) / a.dot(a))

    def labels(self, w: Weight) -> tuple[Fraction, ...]:
        """Dynkin labels n_k = (w, alpha_k^vee)."""
        return tuple(w.dot(self.coroot(k)) for k in range(self.rank))

    def int_labels(self, w: Weight) -> tuple[int, ...]:
        labs = self.labels(w)
        if any(x.denominator != 1 for x in labs):
            raise ParameterError(f"{w!r} is not on the weight lattice")
        return tuple(int(x) for x in labs)

    def from_labels(self, labels: Sequence) -> Weight:
        if len(labels) != self.rank:
            raise ParameterError(f"expected {self.rank} Dynkin labels, got {len(labels)}")
        w = Weight.zero(self.ambient_dim)
        for n, om in zip(labels, self.fundamental_weights):
            if n:
                w = w + om * _frac(n)
        return w

    def is_dominant(self, w: Weight) -> bool:
        return all(x >= 0 for x in self.labels(w))

    def check_weight(self, w: Weight) -> None:
        if w.dim != self.ambient_dim:
            raise ParameterError(
                f"weight of dimension {w.dim} does not live in the {self.ambient_dim}-dim space of {self.name}"
            )

    @cached_property
    def two_rho(self) -> Weight:
        return self.rho * 2

    @cached_property
    def omega_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """(omega_i, omega_j); the inner product in Dynkin-label coordinates."""
        fw = self.fundamental_weights
        return tuple(tuple(a.dot(b) for b in fw) for a in fw)

    @cached_property
    def positive_root_labels(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.int_labels(a) for a in self.positive_roots)

    def simple_root_coeffs(self, w: Weight) -> tuple[Fraction, ...]:
        """Coefficients of w in the basis of simple roots (w must lie in their span)."""
        labs = self.labels(w)
        # labels = sum_k c_k (alpha_k, alpha_j^vee) = (C^T c)_j with C the Cartan matrix
        a_t = [[Fraction(self.cartan_matrix[k][j]) for k in range(self.rank)] for j in range(self.rank)]
        sol = _solve(a_t, [[x] for x in labs])
        return tuple(row[0] for row in sol)

    def fundamental_weight(self) -> Weight:
        """Highest weight Lambda_F of the 'fundamental' module used throughout."""
        idx = {"E7": 5}.get(self.lie_type, 0)
        return self.fundamental_weights[idx]

    def lambda0(self, choice) -> Weight:
        """Resolve a Lambda_0 choice: 'fundamental', 'adjoint', or an explicit Weight."""
        if isinstance(choice, Weight):
            self.check_weight(choice)
            return choice
        if choice == "fundamental":
            return self.fundamental_weight()
        if choice == "adjoint":
            return self.theta
        raise ParameterError(f"unknown Lambda_0 choice {choice!r}")

    def to_json(self) -> dict:
        return {
            "type": self.lie_type,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "simple_roots": [a.to_json() for a in self.simple_roots],
            "positive_roots": [a.to_json() for a in self.positive_roots],
            "fundamental_weights": [w.to_json() for w in self.fundamental_weights],
            "rho": self.rho.to_json(),
            "theta": self.theta.to_json(),
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
        }


def _classical(lie_type: str, r: int) -> tuple[int, list[Weight], list[Weight], Weight]:
    if lie_type == "A":
        n = r + 1
        simple = [_vec(n, {i: 1, i + 1: -1}) for i in range(1, r + 1)]
        pos = [_vec(n, {i: 1, j: -1}) for i, j in combinations(range(1, n + 1), 2)]
        return n, simple, pos, _vec(n, {1: 1, n: -1})
    n = r
    chain = [_vec(n, {i: 1, i + 1: -1}) for i in range(1, r)]
    pm = [_vec(n, {i: 1, j: s}) for i, j in combinations(range(1, n + 1), 2) for s in (-1, 1)]
    if lie_type == "B":
        return n, chain + [_e(r, n)], pm + [_e(i, n) for i in range(1, n + 1)], _vec(n, {1: 1, 2: 1})
    if lie_type == "C":
        return n, chain + [_e(r, n) * 2], pm + [_e(i, n) * 2 for i in range(1, n + 1)], _e(1, n) * 2
    if lie_type == "D":
        return n, chain + [_vec(n, {r - 1: 1, r: 1})], pm, _vec(n, {1: 1, 2: 1})
    raise ParameterError(f"unsupported Lie type {lie_type!r}")


def _exceptional(lie_type: str) -> tuple[int, list[Weight], list[Weight], Weight]:
    n = 8
    half = Fraction(1, 2)
    m = 5 if lie_type == "E6" else 6  # coordinates carrying free signs
    spinor = _vec(n, {1: half, **{j: -half for j in range(2, 8)}, 8: half})
    chain = [_vec(n, {i: -1, i + 1: 1}) for i in range(1, m)]
    simple = [spinor] + chain + [_vec(n, {1: 1, 2: 1})]
    pos = [_vec(n, {i: 1, j: s}) for j, i in combinations(range(1, m + 1), 2) for s in (-1, 1)]
    parity = 0 if lie_type == "E6" else 1  # even / odd number of minus signs
    tail = {6: -half, 7: -half, 8: half} if lie_type == "E6" else {7: -half, 8: half}
    for signs in product((1, -1), repeat=m):
        if signs.count(-1) % 2 == parity:
            pos.append(_vec(n, {**{j + 1: half * s for j, s in enumerate(signs)}, **tail}))
    if lie_type == "E6":
        theta = _vec(n, {**{j: half for j in range(1, 6)}, 6: -half, 7: -half, 8: half})
    else:
        pos.append(_vec(n, {7: -1, 8: 1}))
        theta = _vec(n, {7: -1, 8: 1})
    return n, simple, pos, theta


def build_root_system(lie_type: str, rank: int | None = None) -> RootSystem:
    """Construct the root system of ``lie_type`` (``A``-``D`` need ``rank``)."""
    lie_type = str(lie_type).upper()
    if lie_type in ("E6", "E7"):
        expected = int(lie_type[1])
        if rank is not None and rank != expected:
            raise ParameterError(f"{lie_type} has rank {expected}, not {rank}")
        dim, simple, pos, theta = _exceptional(lie_type)
        rank = expected
    elif lie_type in _MIN_RANK:
        if rank is None or int(rank) < _MIN_RANK[lie_type]:
            raise ParameterError(f"type {lie_type} needs rank >= {_MIN_RANK[lie_type]}, got {rank}")
        rank = int(rank)
        dim, simple, pos, theta = _classical(lie_type, rank)
    else:
        raise ParameterError(f"unsupported Lie type {lie_type!r}; expected one of {LIE_TYPES}")
    return RootSystem(lie_type, rank, dim, tuple(simple), tuple(pos), theta)


def coeffs_against(rs: RootSystem, target: Weight) -> list[Fraction]:
    """c_k = (omega_k, target), so that (Lambda, target) = sum_k c_k n_k."""
    rs.check_weight(target)
    return [w.dot(target) for w in rs.fundamental_weights]


def parse_type(spec: str) -> tuple[str, int | None]:
    """'A3' -> ('A', 3), 'E6' -> ('E6', None)."""
    s = spec.strip().upper()
    if s in ("E6", "E7"):
        return s, None
    if s[:1] in _MIN_RANK and s[1:].isdigit():
        return s[:1], int(s[1:])
    raise ParameterError(f"cannot parse Lie type {spec!r}")


def iter_types(max_rank: int = 8) -> Iterable[RootSystem]:
    """Every supported root system up to ``max_rank`` (plus E6, E7)."""
    for t in ("A", "B", "C", "D"):
        for r in range(_MIN_RANK[t], max_rank + 1):
            yield build_root_system(t, r)
    yield build_root_system("E6")
    yield build_root_system("E7")
