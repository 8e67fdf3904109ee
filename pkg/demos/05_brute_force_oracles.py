"""Checking closed forms against brute force.

Small groups are enumerated outright: matrices over GF(q), permutation
closures, and cycle types.  Their spectra give complexes with no reference
to the closed-form rules, so agreement here is a genuine cross-check.
"""
from __future__ import annotations

import time
from itertools import combinations
from math import prod

from primecomplex.complexes import from_spectrum
from primecomplex.groups import psl2_complex, psl3_complex, torus_simplex_criterion
from primecomplex.oracle import (
    an_spectrum,
    matrix_group_spectrum,
    perm_group_spectrum,
    product_spectrum,
    swap_extension_generators,
    symmetric_generators,
)


def main() -> None:
    for q in (4, 5, 7, 8, 9, 11, 13, 16):
        t = time.perf_counter()
        ok = from_spectrum(matrix_group_spectrum(2, q, "psl")) == psl2_complex(q)
        print(f"PSL2({q:2}) closed form == enumeration: {ok}  ({time.perf_counter() - t:.2f}s)")
    for q in (3, 4):
        print(f"PSL3({q}) closed form == enumeration:", from_spectrum(matrix_group_spectrum(3, q, "psl")) == psl3_complex(q))

    s = matrix_group_spectrum(4, 2, "psl")
    print("\nPSL4(2) spectrum equals that of A8:", s == an_spectrum(8))
    for rs in [c for k in (1, 2, 3) for c in combinations((3, 5, 7), k)]:
        truth = any(m % prod(rs) == 0 for m in s)
        print(f"  {rs}: torus criterion {torus_simplex_criterion(4, 2, rs)}, enumeration {truth}")

    print("\nSwapping the factors of S x S adds no new face:")
    for n in (3, 4):
        gens = symmetric_generators(n)
        base = perm_group_spectrum(gens)
        ext = from_spectrum(perm_group_spectrum(swap_extension_generators(gens)))
        print(f"  S{n}: {ext == from_spectrum(product_spectrum(base, base))}, maximal faces {ext.maximal}")


if __name__ == "__main__":
    main()
