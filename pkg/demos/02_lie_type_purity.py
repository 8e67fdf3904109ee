"""Purity in small-rank groups of Lie type.

PSL_2(q) has the three faces {p}, pi((q-1)/d), pi((q+1)/d); it is pure only
when all three have the same size, which happens at six values of q.  The
Suzuki groups are pure for the two smallest fields, and the Ree groups never
are.  Rank two brings in a few surprises, such as PSL_3(169).
"""
from __future__ import annotations

from primecomplex.analysis import purity_report, purity_scan
from primecomplex.groups import psl3_complex, pure2_parameter_screen, ree2g2_purity


def main() -> None:
    pure = [r.spec.params[0] for r in purity_scan("PSL2", 4, 1000) if r.pure]
    print("PSL2(q) pure for prime powers q <= 1000:", pure)

    sz = [r.spec.params[0] for r in purity_scan("Sz", 1, 8) if r.pure]
    print("Sz(2^(2m+1)) pure for m in", sz)

    print("\nRee groups 2G2(3^(2m+1)), each with a pair of faces of different size:")
    for m in range(1, 7):
        r = ree2g2_purity(m)
        a, b = (sorted(x) for x in r.witness)
        print(f"  m={m}: {a} vs {b}  ({r.reason})")

    print("\nCandidates for PSL3(q) pure of size 2 (odd q <= 200):", pure2_parameter_screen("PSL3Odd", 200))
    for spec in ("PSL3(9)", "PSL3(13)", "PSL3(16)", "PSL3(169)"):
        print(f"  {spec}: {purity_report(spec).describe()}")
    print("  maximal faces of PSL3(169):", psl3_complex(169).maximal)


if __name__ == "__main__":
    main()
