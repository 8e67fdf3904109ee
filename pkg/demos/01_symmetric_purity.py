"""When is the prime simplicial complex of S_n or A_n pure?

A set of primes is a face for S_n exactly when the primes fit side by side
as disjoint cycles, i.e. their sum is at most n (for A_n a 2 costs 4, since
a transposition must be paired).  Purity then asks whether every maximal
such set has the same size.  The scan below finds the few n for which it
does and shows, for a couple of impure n, the first pair of maximal faces of
different sizes.  It finishes with the prime-sum inequality that drives the
general argument.
"""
from __future__ import annotations

import argparse

from primecomplex.analysis import pn_check, purity_report, purity_scan
from primecomplex.groups import symmetric_complex
from primecomplex.oracle import sn_spectrum
from primecomplex.complexes import from_spectrum


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=200)
    args = ap.parse_args()

    for family in ("Sym", "Alt"):
        pure = [r.spec.params[0] for r in purity_scan(family, 1, args.limit) if r.pure]
        print(f"{family}(n), n <= {args.limit}: pure exactly for n in {pure}")

    print("\nThe face rule agrees with the cycle-type spectrum, e.g. for S_8:")
    print("  rule:    ", symmetric_complex(8).maximal)
    print("  spectrum:", from_spectrum(sn_spectrum(8)).maximal)

    for spec in ("Sym(9)", "Sym(10)", "Alt(12)", "Sym(200)"):
        print(f"\n{spec}: {purity_report(spec).describe()}")

    print("\nP(n): with k the largest count of leading primes summing to <= n,")
    print("n is smaller than (sum of the first k-1 primes) + (largest prime <= n).")
    for n in (10, 50, 129, 1000):
        c = pn_check(n)
        print(f"  n={n:5d}  k={c.k:2d}  f(n)={c.f:5d}  holds={c.holds}")


if __name__ == "__main__":
    main()
