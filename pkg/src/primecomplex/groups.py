"""Closed-form prime simplicial complexes for the group families studied here,
and the maximal-torus machinery for groups of Lie type."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterable, Iterator

import numpy as np

from .complexes import PrimeComplex, Simplex, from_spectrum
from .errors import InvalidInput, ParseError, PscError, UnsupportedFamily
from .numtheory import (
    is_mersenne_prime,
    is_prime,
    is_prime_power,
    multiplicative_order,
    prime_set,
    primes_upto,
)


def _prime_power(q: int, least: int = 2) -> tuple[int, int]:
    pe = is_prime_power(q)
    if pe is None or q < least:
        raise InvalidInput(f"{q} is not a prime power >= {least}")
    return pe


# --------------------------------------------------------------------------
# symmetric and alternating groups

@dataclass(frozen=True)
class WeightedPrimeRule:
    """Faces are the prime sets of total weight at most ``n``.

    For S_n every prime weighs itself (an element of order p1*...*pk needs
    that many points).  For A_n the prime 2 weighs 4, since an even
    permutation of even order needs two transpositions.
    """

    n: int
    items: tuple[tuple[int, int], ...]  # (prime, weight), ascending prime

    def weight(self, face: Iterable[int]) -> int:
        w = dict(self.items)
        return sum(w[p] for p in face)

    def allows(self, face: Iterable[int]) -> bool:
        face = set(face)
        if not face <= {p for p, _ in self.items}:
            return False
        return self.weight(face) <= self.n

    def is_maximal(self, face: Iterable[int]) -> bool:
        face = set(face)
        if not self.allows(face):
            return False
        total = self.weight(face)
        return all(total + w > self.n for p, w in self.items if p not in face)

    @cached_property
    def _suffix_min(self) -> tuple[int, ...]:
        out, cur = [], None
        for _, w in reversed(self.items):
            cur = w if cur is None else min(cur, w)
            out.append(cur)
        return tuple(reversed(out))

    def iter_maximal(self) -> Iterator[Simplex]:
        """Maximal faces in lexicographic order (include-first DFS over ascending primes)."""
        items, n, smin = self.items, self.n, self._suffix_min
        chosen: list[int] = []

        def dfs(i: int, total: int, excluded: int | None) -> Iterator[Simplex]:
            if i == len(items) or total + smin[i] > n:
                lightest_out = excluded
                if i < len(items):
                    lightest_out = smin[i] if excluded is None else min(excluded, smin[i])
                if lightest_out is None or total + lightest_out > n:
                    yield tuple(chosen)
                return
            p, w = items[i]
            if total + w <= n:
                chosen.append(p)
                yield from dfs(i + 1, total + w, excluded)
                chosen.pop()
            yield from dfs(i + 1, total, w if excluded is None else min(excluded, w))

        if items:
            yield from dfs(0, 0, None)

    @property
    def max_size(self) -> int:
        total = count = 0
        for w in sorted(w for _, w in self.items):
            if total + w > self.n:
                break
            total += w
            count += 1
        return count

    @property
    def min_maximal_size(self) -> int:
        """Smallest maximal face, via a 0/1 knapsack over weight-sorted items.

        A maximal face contains the j lightest items, omits item j, and tops
        up from heavier items to a total in (n - w_j, n].
        """
        if not self.items:
            return 0
        ws = sorted(w for _, w in self.items)
        n = self.n
        if sum(ws) <= n:
            return len(ws)
        big = len(ws) + 1
        dp = np.full(n + 1, big, dtype=np.int64)  # fewest items reaching each total
        dp[0] = 0
        best = big
        prefix = np.cumsum([0] + ws)
        for j in range(len(ws) - 1, -1, -1):
            # dp covers items j+1 .. end here
            pre = int(prefix[j])
            if pre <= n:
                lo = max(0, n - ws[j] - pre + 1)
                hi = n - pre
                if lo <= hi:
                    best = min(best, j + int(dp[lo : hi + 1].min()))
            w = ws[j]
            if w <= n:
                dp[w:] = np.minimum(dp[w:], dp[: n + 1 - w] + 1)
        return best

    def complex(self) -> PrimeComplex:
        maximal = tuple(self.iter_maximal())
        if maximal == ((),):
            return PrimeComplex.empty()
        return PrimeComplex(tuple(sorted({p for s in maximal for p in s})), maximal)


def symmetric_rule(n: int) -> WeightedPrimeRule:
    if n < 1:
        raise InvalidInput(f"S_n needs n >= 1, got {n}")
    return WeightedPrimeRule(n, tuple((p, p) for p in primes_upto(n).tolist()))


def alternating_rule(n: int) -> WeightedPrimeRule:
    if n < 1:
        raise InvalidInput(f"A_n needs n >= 1, got {n}")
    items = [(p, 4 if p == 2 else p) for p in primes_upto(n).tolist()]
    return WeightedPrimeRule(n, tuple((p, w) for p, w in items if w <= n))


def symmetric_complex(n: int) -> PrimeComplex:
    return symmetric_rule(n).complex()


def alternating_complex(n: int) -> PrimeComplex:
    return alternating_rule(n).complex()


def nilpotent_complex(primes: Iterable[int]) -> PrimeComplex:
    primes = set(primes)
    if not primes or not all(is_prime(p) for p in primes):
        raise InvalidInput(f"need a nonempty set of primes, got {sorted(primes)}")
    return PrimeComplex.complete(primes)


# --------------------------------------------------------------------------
# groups of Lie type

def psl2_complex(q: int) -> PrimeComplex:
    """PSL_2(q): the characteristic is isolated, the split and nonsplit tori
    of orders (q -+ 1)/d give the remaining maximal faces."""
    p, _ = _prime_power(q, 4)
    d = gcd(2, q - 1)
    return PrimeComplex.build([{p}, prime_set((q - 1) // d), prime_set((q + 1) // d)])


def _rank_two_complex(q: int, eps: int) -> PrimeComplex:
    p, _ = _prime_power(q, 2 if eps == 1 else 3)
    a = gcd(3, q - eps)
    return PrimeComplex.build(
        [
            {p} | prime_set((q - eps) // a),
            prime_set((q - eps) ** 2 // a),
            prime_set((q * q - 1) // a),
            prime_set((q * q + eps * q + 1) // a),
        ]
    )


def psl3_complex(q: int) -> PrimeComplex:
    return _rank_two_complex(q, 1)


def psu3_complex(q: int) -> PrimeComplex:
    return _rank_two_complex(q, -1)


def suzuki_complex(m: int) -> PrimeComplex:
    """2B2(q), q = 2^(2m+1): involution centralizers are 2-groups and the
    three cyclic tori are self-centralizing."""
    if m < 1:
        raise InvalidInput(f"need m >= 1, got {m}")
    q, s = 2 ** (2 * m + 1), 2 ** (m + 1)
    return PrimeComplex.build([{2}, prime_set(q - 1), prime_set(q - s + 1), prime_set(q + s + 1)])


@dataclass(frozen=True)
class ReePurity:
    m: int
    pure: bool
    witness: tuple[frozenset[int], frozenset[int]]
    reason: str


def ree2g2_purity(m: int) -> ReePurity:
    """Decide purity of 2G2(3^(2m+1)) with a concrete pair of faces.

    {2, 3} is a maximal face, so the complex could only be pure with every
    maximal face of size 2.  A torus with at least three prime divisors gives
    a larger face; a prime-power torus of order q -+ sqrt(3q) + 1 gives a
    maximal face of size 1.
    """
    if m < 1:
        raise InvalidInput(f"need m >= 1, got {m}")
    q, s = 3 ** (2 * m + 1), 3 ** (m + 1)
    two_three = frozenset({2, 3})
    tori = {"q-1": q - 1, "q+1": q + 1, "q-sqrt(3q)+1": q - s + 1, "q+sqrt(3q)+1": q + s + 1}
    for label, order in tori.items():
        ps = prime_set(order)
        if len(ps) >= 3:
            return ReePurity(m, False, (two_three, ps), f"torus of order {label} = {order} has {len(ps)} prime divisors")
    for label in ("q-sqrt(3q)+1", "q+sqrt(3q)+1"):
        ps = prime_set(tori[label])
        if len(ps) == 1:
            return ReePurity(m, False, (two_three, ps), f"torus of order {label} = {tori[label]} is a prime power")
    raise PscError(f"no impurity witness found for 2G2(3^{2 * m + 1})")


@dataclass(frozen=True)
class TorusOrder:
    n: int
    q: int
    partition: tuple[int, ...]
    value: int


def torus_order(n: int, q: int, partition: Iterable[int]) -> TorusOrder:
    """Order of the maximal torus of PSL_n(q) attached to a partition of n."""
    _prime_power(q)
    parts = tuple(sorted(partition, reverse=True))
    if not parts or any(k < 1 for k in parts) or sum(parts) != n:
        raise InvalidInput(f"{parts} is not a partition of {n}")
    num = prod(q**k - 1 for k in parts)
    den = gcd(n, q - 1) * (q - 1)
    if num % den:
        raise AssertionError(f"torus order not integral for {(n, q, parts)}")
    return TorusOrder(n, q, parts, num // den)


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _torus_moduli(n: int, q: int, rs: Iterable[int]) -> dict[int, int]:
    _prime_power(q)
    if n < 2:
        raise InvalidInput(f"need n >= 2, got {n}")
    out = {}
    for r in set(rs):
        if r == 2 or not is_prime(r) or q % r == 0:
            raise InvalidInput(f"{r} must be an odd prime coprime to {q}")
        e = multiplicative_order(q, r)
        if e < 2:
            raise InvalidInput(f"{r} divides q - 1; the torus criterion needs e(r, q) >= 2")
        out[r] = e
    return out


def torus_partition_witness(n: int, q: int, rs: Iterable[int], reading: str = "order") -> tuple[int, ...] | None:
    """A partition of n with, for every r, a part divisible by e(r, q)
    (``reading="order"``) or by r itself (``reading="prime"``); None if none exists."""
    moduli = _torus_moduli(n, q, rs)
    if reading == "prime":
        moduli = {r: r for r in moduli}
    elif reading != "order":
        raise InvalidInput(f"unknown reading {reading!r}")
    for part in partitions(n):
        if all(any(k % e == 0 for k in part) for e in moduli.values()):
            return part
    return None


def torus_simplex_criterion(n: int, q: int, rs: Iterable[int], reading: str = "order") -> bool:
    """Whether the odd primes ``rs`` (none dividing q - 1) lie in a common
    face of PSL_n(q), decided from partitions of n."""
    return torus_partition_witness(n, q, rs, reading) is not None


def torus_criterion_readings(n: int, q: int, rs: Iterable[int]) -> dict[str, bool]:
    """Both readings of the partition condition, for diagnosing where they differ."""
    rs = tuple(rs)
    return {r: torus_simplex_criterion(n, q, rs, r) for r in ("order", "prime")}


class Pure2Family(enum.Enum):
    PSL3_ODD = "PSL3Odd"
    PSU3_ODD = "PSU3Odd"
    PSU3_CHAR2 = "PSU3Char2"


def pure2_parameter_screen(kind: Pure2Family | str, limit: int) -> list[int]:
    """Field sizes q <= limit meeting the arithmetic conditions a pure complex
    with maximal faces of size 2 forces on PSL_3(q) / PSU_3(q)."""
    kind = Pure2Family(kind)
    if limit < 1:
        raise InvalidInput(f"need limit >= 1, got {limit}")
    out = []
    if kind is Pure2Family.PSU3_CHAR2:
        e = 2
        while 2**e <= limit:
            q = 2**e
            if is_prime(e) and is_mersenne_prime(q - 1) and (q + 1) % 3 == 0:
                out.append(q)
            e += 1
        return out
    k = 1
    while True:
        q = 3 * 2**k + 1 if kind is Pure2Family.PSL3_ODD else 3 * 2**k - 1
        if q > limit:
            return out
        if is_prime(q) and not (kind is Pure2Family.PSL3_ODD and k % 3 == 1):
            out.append(q)
        k += 1


def rank_bound(k: int, small_field: bool = False) -> int:
    """Largest Lie rank compatible with a pure complex of maximal face size k."""
    if k < 1:
        raise InvalidInput(f"need k >= 1, got {k}")
    return (k + 4) * (k + 5) // 2 - 1 if small_field else (k + 1) * (k + 2) // 2 - 1


# --------------------------------------------------------------------------
# group descriptions

_FAMILIES = {
    "sym": "Sym", "alt": "Alt", "nil": "Nil", "psl2": "PSL2", "psl3": "PSL3",
    "psu3": "PSU3", "sz": "Sz", "2g2": "2G2", "psl": "PSL",
}


@dataclass(frozen=True)
class GroupSpec:
    """A group named by family and parameters, a fixture, or a direct product.

    Textual forms: ``Sym(9)``, ``Alt(10)``, ``Nil(2,3,5)``, ``PSL2(173)``,
    ``PSL3(9)``, ``PSU3(8)``, ``Sz(1)``, ``2G2(2)``, ``PSL(4,2)``,
    ``fixture:M12`` and products joined by ``*``.
    """

    family: str
    params: tuple = ()

    def __str__(self) -> str:
        if self.family == "Product":
            return "*".join(str(s) for s in self.params)
        if self.family == "Fixture":
            return f"fixture:{self.params[0]}"
        return f"{self.family}({','.join(str(x) for x in self.params)})"

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        terms = [t.strip() for t in text.split("*")]
        specs = [cls._parse_term(t) for t in terms]
        return specs[0] if len(specs) == 1 else cls("Product", tuple(specs))

    @classmethod
    def _parse_term(cls, term: str) -> "GroupSpec":
        if term.lower().startswith("fixture:"):
            name = term.split(":", 1)[1].strip()
            if not name:
                raise ParseError("empty fixture name")
            return cls("Fixture", (name,))
        m = re.fullmatch(r"(\w+)\(([\d,\s]*)\)", term)
        if not m or m.group(1).lower() not in _FAMILIES:
            raise ParseError(f"cannot parse group {term!r}")
        args = tuple(int(x) for x in m.group(2).split(",") if x.strip())
        spec = cls(_FAMILIES[m.group(1).lower()], args)
        spec.validate()
        return spec

    def validate(self) -> None:
        f, a = self.family, self.params
        arity = {"Sym": 1, "Alt": 1, "PSL2": 1, "PSL3": 1, "PSU3": 1, "Sz": 1, "2G2": 1, "PSL": 2}
        if f in arity and len(a) != arity[f]:
            raise ParseError(f"{f} takes {arity[f]} parameter(s), got {len(a)}")
        if f == "Nil" and not a:
            raise ParseError("Nil needs at least one prime")


def complex_of(spec: GroupSpec | str, fixtures_dir=None) -> PrimeComplex:
    """The prime simplicial complex of a described group."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    f, a = spec.family, spec.params
    if f == "Sym":
        return symmetric_complex(a[0])
    if f == "Alt":
        return alternating_complex(a[0])
    if f == "Nil":
        return nilpotent_complex(a)
    if f == "PSL2":
        return psl2_complex(a[0])
    if f == "PSL3":
        return psl3_complex(a[0])
    if f == "PSU3":
        return psu3_complex(a[0])
    if f == "Sz":
        return suzuki_complex(a[0])
    if f == "Product":
        out = PrimeComplex.empty()
        for s in a:
            out = out.join(complex_of(s, fixtures_dir))
        return out
    if f == "Fixture":
        from .fileio import load_fixture

        return from_spectrum(load_fixture(a[0], fixtures_dir).orders)
    if f == "2G2":
        raise UnsupportedFamily("only the purity decision is implemented for 2G2; see ree2g2_purity")
    if f == "PSL":
        raise UnsupportedFamily("PSL(n, q) supports only torus_simplex_criterion")
    raise UnsupportedFamily(f"unknown family {f!r}")
