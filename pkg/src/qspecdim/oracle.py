"""Independent weight-multiplicity oracle for verification only.

Evaluates the Weyl character formula as a formal division: the alternating
sum over the Weyl orbit of highest+rho, shifted by -rho, is divided in turn
by each factor (1 - e^{-alpha}) of the Weyl denominator.  Nothing in the
library calls this; it exists so tests can check the Freudenthal recursion
against a route that shares no code with it.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .rootdata import RootSystem, Weight

Labels = tuple[int, ...]


def _signed_regular_orbit(rs: RootSystem, start: Labels) -> dict[Labels, int]:
    alphas = [tuple(row) for row in rs.cartan_matrix]
    signs = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for lab in frontier:
            for i, n in enumerate(lab):
                img = tuple(x - n * y for x, y in zip(lab, alphas[i]))
                if img not in signs:
                    signs[img] = -signs[lab]
                    nxt.append(img)
        frontier = nxt
    return signs


def _divide(poly: dict[Labels, int], alpha: Labels, pairing) -> dict[Labels, int]:
    """Exact quotient of poly by (1 - e^{-alpha}): g(mu) = sum_{k>=0} f(mu + k alpha)."""
    aa = pairing(alpha, alpha)
    lines: dict[Labels, dict[int, int]] = defaultdict(dict)
    for mu, c in poly.items():
        k = (pairing(mu, alpha) / aa).__floor__()
        rep = tuple(x - k * y for x, y in zip(mu, alpha))
        lines[rep][k] = lines[rep].get(k, 0) + c
    out: dict[Labels, int] = {}
    for rep, coeffs in lines.items():
        acc = 0
        lo = min(coeffs)
        for k in range(max(coeffs), lo - 1, -1):
            acc += coeffs.get(k, 0)
            if acc:
                out[tuple(x + k * y for x, y in zip(rep, alpha))] = acc
        if acc:
            raise ArithmeticError("Weyl numerator not divisible by the denominator factor")
    return out


def character_multiplicities(rs: RootSystem, highest: Weight) -> dict[Labels, int]:
    top = rs.int_labels(highest)
    if min(top, default=0) < 0:
        raise ValueError("highest weight must be dominant")
    gram = rs.omega_gram

    def pairing(u, v) -> Fraction:
        return sum((gram[i][j] * u[i] * v[j] for i in range(rs.rank) for j in range(rs.rank)), Fraction(0))

    shifted = tuple(n + 1 for n in top)
    poly = {tuple(x - 1 for x in lab): sgn for lab, sgn in _signed_regular_orbit(rs, shifted).items()}
    for alpha in rs.positive_root_labels:
        poly = _divide(poly, alpha, pairing)
    return {lab: c for lab, c in poly.items() if c}
