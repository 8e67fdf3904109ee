"""Purity scans, recognisability ingredients and table reproduction."""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Iterator

import numpy as np

from .complexes import PrimeComplex, Simplex, from_spectrum
from .errors import InvalidInput, MissingFixture
from .fileio import list_fixtures, load_fixture
from .groups import GroupSpec, alternating_rule, complex_of, symmetric_rule
from .numtheory import is_prime_power, prime_powers_upto, multiplicative_order, prime_set, primes_upto


@dataclass(frozen=True)
class PurityReport:
    spec: GroupSpec
    pure: bool
    max_size: int
    min_maximal_size: int
    witness: tuple[Simplex, Simplex] | None

    def __post_init__(self):
        assert self.pure == (self.witness is None) == (self.max_size == self.min_maximal_size)

    def describe(self) -> str:
        if self.pure:
            return f"pure (all maximal simplices size {self.max_size})"
        a, b = self.witness
        return (
            f"impure (maximal simplex sizes {self.min_maximal_size}..{self.max_size};"
            f" witness {_brace(a)} vs {_brace(b)})"
        )


def _brace(s: Iterable[int]) -> str:
    return "{" + ",".join(str(p) for p in s) + "}"


def _first_unequal_pair(maximal: Iterator[Simplex]) -> tuple[Simplex, Simplex] | None:
    """First maximal face paired with the first later one of another size."""
    first = next(maximal, None)
    if first is None:
        return None
    for s in maximal:
        if len(s) != len(first):
            return first, s
    return None


def purity_report(spec: GroupSpec | str, fixtures_dir=None) -> PurityReport:
    """Purity of the complex with sizes and, if impure, the lexicographically
    first pair of maximal simplices of different sizes."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    if spec.family in ("Sym", "Alt"):
        # avoid building the whole complex: sizes by knapsack, witness by an
        # ordered search that stops at the first size change
        rule = (symmetric_rule if spec.family == "Sym" else alternating_rule)(spec.params[0])
        hi, lo = rule.max_size, rule.min_maximal_size
        witness = None if hi == lo else _first_unequal_pair(rule.iter_maximal())
        return PurityReport(spec, hi == lo, hi, lo, witness)
    c = complex_of(spec, fixtures_dir)
    witness = _first_unequal_pair(iter(c.maximal))
    return PurityReport(spec, c.is_pure, c.max_size, c.min_maximal_size, witness)


_SCAN_MIN = {"Sym": 1, "Alt": 1, "PSL2": 4, "PSL3": 2, "PSU3": 3, "Sz": 1}
_PRIME_POWER_FAMILIES = {"PSL2", "PSL3", "PSU3"}


def scan_parameters(family: str, lo: int, hi: int) -> list[int]:
    """Valid parameters for ``family`` in [lo, hi]; field families keep only prime powers."""
    if family not in _SCAN_MIN:
        raise InvalidInput(f"cannot scan family {family!r}; choose from {sorted(_SCAN_MIN)}")
    values = range(max(lo, _SCAN_MIN[family]), hi + 1)
    if family in _PRIME_POWER_FAMILIES:
        return [q for q in values if is_prime_power(q) is not None]
    return list(values)


def purity_scan(family: str, lo: int, hi: int) -> list[PurityReport]:
    return [purity_report(GroupSpec(family, (x,))) for x in scan_parameters(family, lo, hi)]


@dataclass(frozen=True)
class PnCheck:
    holds: bool
    k: int
    f: int


@lru_cache(maxsize=None)
def _prime_prefix(limit: int) -> tuple[list[int], np.ndarray]:
    ps = primes_upto(limit).tolist()
    return ps, np.cumsum([0] + ps)


def pn_check(n: int) -> PnCheck:
    """k = most leading primes with sum <= n; f = sum of the first k-1 primes
    plus the largest prime <= n; the statement holds when n < f."""
    if n < 5:
        raise InvalidInput(f"need n >= 5, got {n}")
    limit = 1 << max(10, (n - 1).bit_length())
    ps, prefix = _prime_prefix(limit)
    k = int(np.searchsorted(prefix, n, side="right")) - 1
    largest = ps[bisect_right(ps, n) - 1]
    f = int(prefix[k - 1]) + largest
    return PnCheck(n < f, k, f)


def doubling_witness(c: PrimeComplex) -> tuple[Simplex, ...] | None:
    """None when every maximal simplex already absorbs the prime 2, else the
    maximal simplices that do not."""
    defect = c.doubling_defect()
    return defect or None


def power_unrecognisable_from(spec: GroupSpec | str, fixtures_dir=None) -> int:
    """Least m from which G^m is flagged unrecognisable (the cover number)."""
    return complex_of(spec, fixtures_dir).cover_number()


@dataclass(frozen=True)
class ScreenRow:
    p: int
    r: int
    order: int
    bad: bool


def _escapes(value: int, allowed: Iterable[int]) -> bool:
    """Whether ``value`` has a prime divisor outside ``allowed``."""
    for r in allowed:
        while value % r == 0:
            value //= r
    return value > 1


def screen_candidates(allowed: Iterable[int]) -> list[int]:
    """Primes p in ``allowed`` with every prime divisor of p - 1 also allowed."""
    allowed = sorted(set(allowed))
    return [p for p in allowed if not _escapes(p - 1, allowed)]


def characteristic_screen(allowed: Iterable[int]) -> list[ScreenRow]:
    """For each candidate characteristic p and each other allowed prime r, the
    order i of p mod r and whether p^i - 1 has a prime divisor outside the set."""
    allowed = sorted(set(allowed))
    cands = screen_candidates(allowed)
    if not cands:
        raise InvalidInput(f"no candidate characteristic in {allowed}")
    rows = []
    for p in cands:
        for r in allowed:
            if r != p:
                i = multiplicative_order(p, r)
                rows.append(ScreenRow(p, r, i, _escapes(p**i - 1, allowed)))
    return rows


@dataclass(frozen=True)
class SimpleGroupOrderEntry:
    label: str
    restriction: str
    admits: Callable[[int], bool]
    order: Callable[[int], int]


def _pm2_mod5(q: int) -> bool:
    return q % 5 in (2, 3)


def _is_odd_power_of_3(q: int) -> bool:
    pe = is_prime_power(q)
    return pe is not None and pe[0] == 3 and pe[1] % 2 == 1


def _rank2_order(eps: int) -> Callable[[int], int]:
    return lambda q: q**3 * (q**3 - eps) * (q * q - 1) // gcd(3, q - eps)


def coprime5_catalog() -> list[SimpleGroupOrderEntry]:
    """Families of nonabelian simple groups whose orders avoid the prime 5."""
    pp = lambda q: is_prime_power(q) is not None  # noqa: E731
    return [
        SimpleGroupOrderEntry(
            "PSL2(q)", "3 < q = +-2 mod 5",
            lambda q: pp(q) and q > 3 and _pm2_mod5(q),
            lambda q: q * (q * q - 1) // gcd(2, q - 1),
        ),
        SimpleGroupOrderEntry(
            "PSL3(q)", "2 < q = +-2 mod 5", lambda q: pp(q) and q > 2 and _pm2_mod5(q), _rank2_order(1)
        ),
        SimpleGroupOrderEntry(
            "PSU3(q)", "2 < q = +-2 mod 5", lambda q: pp(q) and q > 2 and _pm2_mod5(q), _rank2_order(-1)
        ),
        SimpleGroupOrderEntry(
            "G2(q)", "2 < q = +-2 mod 5",
            lambda q: pp(q) and q > 2 and _pm2_mod5(q),
            lambda q: q**6 * (q**6 - 1) * (q * q - 1),
        ),
        SimpleGroupOrderEntry(
            "2G2(q)", "3 < q = 3^(2k+1)",
            lambda q: q > 3 and _is_odd_power_of_3(q),
            lambda q: q**3 * (q**3 + 1) * (q - 1),
        ),
        SimpleGroupOrderEntry(
            "3D4(q)", "q = +-2 mod 5",
            lambda q: pp(q) and _pm2_mod5(q),
            lambda q: q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q * q - 1),
        ),
    ]


def catalog_entry(label: str) -> SimpleGroupOrderEntry:
    for e in coprime5_catalog():
        if e.label == label:
            return e
    raise InvalidInput(f"no catalog entry {label!r}")


def order_coprime_to(entry: SimpleGroupOrderEntry | str, q: int, prime: int) -> bool:
    if isinstance(entry, str):
        entry = catalog_entry(entry)
    if not entry.admits(q):
        raise InvalidInput(f"q = {q} violates the restriction {entry.restriction} for {entry.label}")
    return entry.order(q) % prime != 0


SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "He", "Ru", "Suz", "O'N",
    "HN", "Fi22", "M", "B", "Th", "Ly", "McL", "Fi24'", "Fi23", "Co2", "Co1", "Co3",
)


@dataclass(frozen=True)
class SporadicRow:
    group: str
    max_size: int
    min_maximal_size: int


def table_sporadic_sizes(fixtures_dir=None, names: Iterable[str] | None = None) -> list[SporadicRow]:
    """(group, largest simplex size, smallest maximal simplex size) for each
    sporadic group with a fixture, in the usual listing order."""
    if names is None:
        present = {s.name: s for s in list_fixtures(fixtures_dir)}
        spectra = [present[n] for n in SPORADIC_NAMES if n in present]
        if not spectra:
            raise MissingFixture("no sporadic fixtures found")
    else:
        spectra = [load_fixture(n, fixtures_dir) for n in names]
    rows = []
    for s in spectra:
        c = from_spectrum(s.orders)
        rows.append(SporadicRow(s.name, c.max_size, c.min_maximal_size))
    return rows


def q2_two_prime_scan(limit: int) -> list[int]:
    """Prime powers q <= limit for which q^2 - 1 has exactly two prime divisors."""
    return [q for q in prime_powers_upto(limit) if len(prime_set(q - 1) | prime_set(q + 1)) == 2]
