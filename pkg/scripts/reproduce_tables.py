"""Reproduce every coefficient table and the Weyl-law column in one go.

Exits nonzero if any computed row differs from its closed form.

    python scripts/reproduce_tables.py
"""
from __future__ import annotations

import sys
from fractions import Fraction

from qspecdim.flag import catalog
from qspecdim.reports import all_match, flag_tables, group_tables
from qspecdim.rootdata import iter_types
from qspecdim.spectral import spectral_dim_flag


def main() -> int:
    ok = True
    for rs in iter_types(8):
        rep = group_tables(rs)
        ok &= all_match(rep)
        print(rs.name.ljust(5), "  ".join(f"{r['table']}={' '.join(r['computed'])} {r['status']}" for r in rep["rows"]))
    print()
    print(f"{'space':10} {'d':>3}  {'p(1/4)':>6} {'p(1/2)':>6} {'p(1)':>6}  tables")
    for fs in catalog():
        rep = flag_tables(fs, "both")
        ok &= all_match(rep)
        ps = [spectral_dim_flag(fs, "adjoint", Fraction(1, k)) for k in (4, 2, 1)]
        ok &= ps[0] == fs.classical_dim
        status = "MATCH" if all_match(rep) else "MISMATCH"
        print(f"{fs.name:10} {fs.classical_dim:>3}  " + " ".join(f"{str(p):>6}" for p in ps) + f"  {status}")
    print("\nall MATCH" if ok else "\nMISMATCH present")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
