"""Exact integer arithmetic: primality, factorization, multiplicative orders,
primitive prime divisors and a handful of special prime classifications.

Everything works on Python ints, so values such as ``q**n - 1`` stay exact.
Numbers below ``SIEVE_LIMIT`` are factored from a smallest-prime-factor table;
larger ones go through trial division and Brent's variant of Pollard rho.
"""
from __future__ import annotations

import enum
import os
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod

import numpy as np

from .errors import InvalidInput, ResourceLimit

SIEVE_LIMIT = 1 << 21
TRIAL_BOUND = 1 << 16
DEFAULT_EFFORT = 2_000_000

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


# --------------------------------------------------------------------------
# sieves

@lru_cache(maxsize=4)
def _spf_table(limit: int) -> np.ndarray:
    spf = np.arange(limit + 1, dtype=np.int32)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            block = spf[p * p :: p]
            unmarked = block == np.arange(p * p, limit + 1, p, dtype=np.int32)
            block[unmarked] = p
    return spf


def _spf() -> np.ndarray:
    return _spf_table(SIEVE_LIMIT)


@lru_cache(maxsize=8)
def _prime_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


def _mask_at_least(n: int) -> np.ndarray:
    # round up so repeated calls with nearby bounds share one sieve
    size = 1 << max(10, int(n).bit_length())
    return _prime_mask(size)


def primes_upto(n: int) -> np.ndarray:
    """All primes ``<= n`` as an int64 array."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    return np.flatnonzero(_mask_at_least(n)[: n + 1]).astype(np.int64)


def prime_powers_upto(limit: int, start: int = 2) -> list[int]:
    """Sorted prime powers ``q`` with ``start <= q <= limit``."""
    out = []
    for p in primes_upto(limit).tolist():
        q = p
        while q <= limit:
            if q >= start:
                out.append(q)
            q *= p
    out.sort()
    return out


def largest_prime_upto(n: int) -> int:
    ps = primes_upto(n)
    if len(ps) == 0:
        raise InvalidInput(f"no prime <= {n}")
    return int(ps[-1])


# --------------------------------------------------------------------------
# primality

def _miller_rabin(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameters; n odd and not a square.
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x: int) -> int:
        return (x + n) // 2 % n if x % 2 else x // 2 % n

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test, deterministic below 3.3e24 (so on the whole 64-bit
    range); above that a Baillie-PSW test is used."""
    if n < 2:
        return False
    if n <= SIEVE_LIMIT:
        return int(_spf()[n]) == n
    for p in _MR_BASES:
        if n % p == 0:
            return False
    if n < _MR_DETERMINISTIC_BOUND:
        return all(_miller_rabin(n, a) for a in _MR_BASES)
    if not _miller_rabin(n, 2):
        return False
    r = isqrt(n)
    if r * r == n:
        return False
    return _strong_lucas(n)


# --------------------------------------------------------------------------
# factorization

@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> frozenset[int]:
        return frozenset(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


def _effort_budget(effort: int | None) -> int:
    if effort is not None:
        return effort
    env = os.environ.get("PSC_FACTOR_EFFORT")
    return int(env) if env else DEFAULT_EFFORT


@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    return tuple(primes_upto(TRIAL_BOUND).tolist())


def _factor_small(n: int, out: dict[int, int]) -> None:
    spf = _spf()
    while n > 1:
        p = int(spf[n])
        n //= p
        out[p] = out.get(p, 0) + 1


class _Budget:
    def __init__(self, total: int):
        self.left = total

    def spend(self, k: int, n: int) -> None:
        self.left -= k
        if self.left < 0:
            raise ResourceLimit(f"factorization effort exhausted on a {n.bit_length()}-bit cofactor")


def _brent(n: int, budget: _Budget, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                step = min(m, r - k)
                for _ in range(step):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget.spend(step, n)
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, effort: int | None = None) -> Factorization:
    """Complete prime factorization of ``n >= 1``.

    ``effort`` bounds the total number of rho iterations (default from
    ``PSC_FACTOR_EFFORT``); :class:`ResourceLimit` is raised beyond it.
    """
    n = int(n)
    if n < 1:
        raise InvalidInput(f"cannot factor {n}")
    found: dict[int, int] = {}
    if n <= SIEVE_LIMIT:
        _factor_small(n, found)
        return Factorization(n, tuple(sorted(found.items())))

    m = n
    for p in _trial_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    budget = _Budget(_effort_budget(effort))
    rng = random.Random(n)
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if x <= SIEVE_LIMIT:
            _factor_small(x, found)
        elif is_prime(x):
            found[x] = found.get(x, 0) + 1
        else:
            d = _brent(x, budget, rng)
            stack.extend((d, x // d))
    return Factorization(n, tuple(sorted(found.items())))


def prime_set(n: int, effort: int | None = None) -> frozenset[int]:
    """The set of distinct primes dividing ``n`` (empty for 1)."""
    return factorize(n, effort).primes


def radical(n: int) -> int:
    return prod(prime_set(n))


def is_prime_power(n: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``n == p**k`` and ``k >= 1``, or None."""
    if n < 2:
        return None
    f = factorize(n).factors
    return f[0] if len(f) == 1 else None


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


# --------------------------------------------------------------------------
# orders and primitive divisors

def multiplicative_order(q: int, r: int) -> int:
    """Least ``i >= 1`` with ``q**i == 1 (mod r)`` for a prime ``r`` not dividing ``q``.

    ``r | q**m - 1`` holds exactly when the result divides ``m``.
    """
    if not is_prime(r):
        raise InvalidInput(f"modulus {r} is not prime")
    if q % r == 0:
        raise InvalidInput(f"{r} divides {q}")
    order = r - 1
    for p, _ in factorize(r - 1):
        while order % p == 0 and pow(q, order // p, r) == 1:
            order //= p
    return order


def _mobius(n: int) -> int:
    f = factorize(n).factors
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def cyclotomic_value(n: int, a: int) -> int:
    """Phi_n(a), evaluated exactly from the Mobius product over divisors."""
    num = den = 1
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(n // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    return num // den


class ZsigmondyException(enum.Enum):
    NONE = "none"
    A2_N1_OR_6 = "a=2, n in {1, 6}"
    N2_FERMAT_LIKE = "n=2, a+1 a power of two"


@dataclass(frozen=True)
class PpdResult:
    base: int
    exponent: int
    primitive_divisors: frozenset[int]
    exception: ZsigmondyException


def primitive_prime_divisors(a: int, n: int) -> PpdResult:
    """Primes dividing ``a**n - 1`` but no ``a**k - 1`` with ``k < n``.

    These all divide the cyclotomic value Phi_n(a), so only that number is
    factored.  The exception flag marks the cases Zsigmondy's theorem excludes.
    """
    if a < 2 or n < 1:
        raise InvalidInput(f"need a >= 2 and n >= 1, got a={a}, n={n}")
    phi = cyclotomic_value(n, a)
    ppds = frozenset(r for r in prime_set(phi) if multiplicative_order(a, r) == n)
    if a == 2 and n in (1, 6):
        exc = ZsigmondyException.A2_N1_OR_6
    elif n == 2 and _is_power_of_two(a + 1):
        exc = ZsigmondyException.N2_FERMAT_LIKE
    else:
        exc = ZsigmondyException.NONE
    return PpdResult(a, n, ppds, exc)


# --------------------------------------------------------------------------
# special primes and classifications

def is_fermat_prime(p: int) -> bool:
    """``p`` prime of the form ``2**(2**x) + 1``."""
    if p < 3 or not _is_power_of_two(p - 1):
        return False
    k = (p - 1).bit_length() - 1
    return _is_power_of_two(k) and is_prime(p)


def is_mersenne_prime(p: int) -> bool:
    """``p`` prime of the form ``2**l - 1`` with ``l`` prime."""
    if p < 3 or not _is_power_of_two(p + 1):
        return False
    return is_prime((p + 1).bit_length() - 1) and is_prime(p)


class ConsecutivePrimePowers(enum.Enum):
    FERMAT_PAIR = "(2^k, 2^k+1), Fermat prime above"
    MERSENNE_PAIR = "(2^l-1, 2^l), Mersenne prime below"
    EIGHT_NINE = "(8, 9)"
    NOT_BOTH_PRIME_POWERS = "not both prime powers"


def classify_consecutive_prime_powers(n: int) -> ConsecutivePrimePowers:
    if n < 2:
        raise InvalidInput(f"need n >= 2, got {n}")
    if is_prime_power(n) is None or is_prime_power(n + 1) is None:
        return ConsecutivePrimePowers.NOT_BOTH_PRIME_POWERS
    if n == 8:
        return ConsecutivePrimePowers.EIGHT_NINE
    if _is_power_of_two(n) and is_fermat_prime(n + 1):
        return ConsecutivePrimePowers.FERMAT_PAIR
    if _is_power_of_two(n + 1) and is_mersenne_prime(n):
        return ConsecutivePrimePowers.MERSENNE_PAIR
    raise AssertionError(f"({n}, {n + 1}) breaks the consecutive prime power classification")


def q2_has_two_prime_divisors(q: int) -> bool:
    """True iff ``q**2 - 1`` has exactly two distinct prime divisors."""
    if q < 4 or is_prime_power(q) is None:
        raise InvalidInput(f"{q} is not a prime power >= 4")
    return len(prime_set(q - 1) | prime_set(q + 1)) == 2


def sum_primes_upto(n: int) -> int:
    return int(primes_upto(n).sum()) if n >= 2 else 0


class DiophantineCase(enum.Enum):
    LISTED_239 = "239^2 - 2*13^4 = -1"
    LISTED_3_TO_5 = "3^5 - 2*11^2 = 1"
    SQUARE_CASE = "a = b = 2"
    NO_SOLUTION = "not a solution"


def diophantine_exception(p: int, a: int, r: int, b: int) -> DiophantineCase:
    """Classify ``p**a - 2*r**b = +-1`` for primes ``p, r`` and exponents ``a, b > 1``."""
    if not (is_prime(p) and is_prime(r)) or a < 2 or b < 2:
        raise InvalidInput(f"need primes p, r and exponents > 1, got {(p, a, r, b)}")
    if abs(p**a - 2 * r**b) != 1:
        return DiophantineCase.NO_SOLUTION
    if (p, a, r, b) == (239, 2, 13, 4):
        return DiophantineCase.LISTED_239
    if (p, a, r, b) == (3, 5, 11, 2):
        return DiophantineCase.LISTED_3_TO_5
    if a == b == 2:
        return DiophantineCase.SQUARE_CASE
    raise AssertionError(f"unlisted solution {(p, a, r, b)}")
