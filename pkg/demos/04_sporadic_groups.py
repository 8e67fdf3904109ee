"""Sporadic groups from their shipped spectra.

Each fixture is the set of element orders of a sporadic group (or a related
group).  The complex follows from the radicals of those orders.  The script
prints the size table and then the coincidences and near misses used when
deciding recognisability.
"""
from __future__ import annotations

from primecomplex.analysis import doubling_witness, power_unrecognisable_from, table_sporadic_sizes
from primecomplex.complexes import from_spectrum
from primecomplex.fileio import load_fixture


def cx(name: str):
    return from_spectrum(load_fixture(name).orders)


def main() -> None:
    print(f"{'group':8} max  min")
    for row in table_sporadic_sizes():
        print(f"{row.group:8} {row.max_size:3}  {row.min_maximal_size:3}")

    print("\nHN and Fi22 each have an isolated vertex:")
    for name in ("HN", "Fi22"):
        print(f"  {name}: {[s for s in cx(name).maximal if len(s) == 1]}")

    print("\nEqual complexes:")
    for a, b in (("Fi22", "Suz.2"), ("HS.2", "McL"), ("Sp6(2)", "J2"), ("HS", "PSU6(2)"), ("M11", "PSL2(11)")):
        print(f"  {a} vs {b}: {cx(a) == cx(b)}")
    print("  HN vs HN.2:", cx("HN") == cx("HN.2"), "(HN.2 has an element of order 42)")

    print("\nMaximal faces that miss the prime 2:")
    for name in ("Co3", "McL", "J2", "M12"):
        print(f"  {name}: {doubling_witness(cx(name))}")

    print("\nCover numbers (least power G^m flagged unrecognisable):")
    for name in ("M12", "J2", "Co3", "McL"):
        print(f"  {name}: {power_unrecognisable_from('fixture:' + name)}")


if __name__ == "__main__":
    main()
