"""PSL_2(173) x PSL_2(283): from prime graphs to the characteristic screen.

The two factors have tiny, disconnected prime graphs.  The complex of the
product is their join, with nine maximal faces.  Any group with the same
complex has a restricted set of primes, and the multiplicative-order screen
shows which characteristics could host a simple section without importing a
new prime.  Bold entries (flag True) mean p^i - 1 escapes the allowed set.
"""
from __future__ import annotations

from primecomplex.analysis import characteristic_screen, screen_candidates
from primecomplex.fileio import emit_dot
from primecomplex.groups import psl2_complex


def main() -> None:
    a, b = psl2_complex(173), psl2_complex(283)
    for q, c in ((173, a), (283, b)):
        print(f"prime graph of PSL2({q}):")
        print(emit_dot(c.prime_graph(), name=f"PSL2({q})"))
    j = a.join(b)
    print(f"join: {len(j.maximal)} maximal faces, largest of size {j.max_size}")
    for s in j.maximal:
        print("  ", s)

    allowed = sorted(j.vertices)
    print("\nallowed primes:", allowed)
    print("candidate characteristics:", screen_candidates(allowed))
    cols = [r for r in allowed]
    print("\n p \\ r " + "".join(f"{r:>7}" for r in cols))
    rows = {(row.p, row.r): row for row in characteristic_screen(allowed)}
    for p in screen_candidates(allowed):
        cells = []
        for r in cols:
            row = rows.get((p, r))
            cells.append("     --" if row is None else f"{row.order:>6}{'*' if row.bad else ' '}")
        print(f"{p:>6} " + "".join(cells))
    print("(* marks an order whose p^i - 1 has a prime outside the allowed set)")


if __name__ == "__main__":
    main()
