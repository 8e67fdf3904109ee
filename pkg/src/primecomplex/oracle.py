"""Brute-force ground truth: exact spectra of small concrete groups.

Nothing here uses the closed-form rules in :mod:`primecomplex.groups`.  The
spectra come from cycle types, exhaustive matrix enumeration over small finite
fields, or closure of permutation generators.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from itertools import permutations, product
from math import lcm
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidInput, ResourceLimit
from .numtheory import is_prime_power

Spectrum = frozenset  # of positive ints

PARTITION_CAP = 30
MATRIX_CAP = 1 << 24
ORDER_CAP = 10**6
_CHUNK = 1 << 15


# --------------------------------------------------------------------------
# symmetric and alternating groups from cycle types

def _partitions(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def _check_degree(n: int, cap: int) -> None:
    if n < 1:
        raise InvalidInput(f"need n >= 1, got {n}")
    if n > cap:
        raise ResourceLimit(f"degree {n} exceeds the partition cap {cap}")


def sn_spectrum(n: int, cap: int = PARTITION_CAP) -> Spectrum:
    """Element orders of S_n: lcms of the parts of each partition of n."""
    _check_degree(n, cap)
    return frozenset(reduce(lcm, p, 1) for p in _partitions(n, n))


def an_spectrum(n: int, cap: int = PARTITION_CAP) -> Spectrum:
    """Element orders of A_n: cycle types with an even number of even cycles."""
    _check_degree(n, cap)
    return frozenset(
        reduce(lcm, p, 1) for p in _partitions(n, n) if sum(1 for k in p if k % 2 == 0) % 2 == 0
    )


def product_spectrum(s1: Iterable[int], s2: Iterable[int]) -> Spectrum:
    """Element orders of a direct product, given those of the factors."""
    s2 = set(s2)
    return frozenset(lcm(a, b) for a in set(s1) for b in s2)


# --------------------------------------------------------------------------
# finite fields and matrix groups

@dataclass(frozen=True)
class GF:
    """GF(q) for small q, with elements encoded as 0..q-1 (base-p digits of a
    polynomial in the generator) and full addition/multiplication tables."""

    q: int

    def __post_init__(self):
        pe = is_prime_power(self.q)
        if pe is None:
            raise InvalidInput(f"{self.q} is not a prime power")
        if self.q > 16:
            raise ResourceLimit(f"field order {self.q} exceeds 16")

    @property
    def p(self) -> int:
        return is_prime_power(self.q)[0]

    @property
    def e(self) -> int:
        return is_prime_power(self.q)[1]

    def _digits(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.e)]

    def _encode(self, digits: Sequence[int]) -> int:
        return sum(int(d) * self.p**i for i, d in enumerate(digits))

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        """Coefficients (low to high) of a monic irreducible polynomial of degree e."""
        p, e = self.p, self.e
        for tail in product(range(p), repeat=e):
            poly = list(tail) + [1]
            if e == 1 or not _has_factor(poly, p):
                return tuple(poly)
        raise AssertionError("no irreducible polynomial found")

    @cached_property
    def add(self) -> np.ndarray:
        q, p = self.q, self.p
        t = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            da = self._digits(a)
            for b in range(q):
                t[a, b] = self._encode([(x + y) % p for x, y in zip(da, self._digits(b))])
        return t

    @cached_property
    def mul(self) -> np.ndarray:
        q, p, e, mod = self.q, self.p, self.e, self.modulus
        t = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            da = self._digits(a)
            for b in range(q):
                db = self._digits(b)
                prod_ = [0] * (2 * e - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod_[i + j] = (prod_[i + j] + x * y) % p
                for k in range(2 * e - 2, e - 1, -1):  # reduce by the monic modulus
                    c = prod_[k]
                    if c:
                        for i in range(e + 1):
                            prod_[k - e + i] = (prod_[k - e + i] - c * mod[i]) % p
                t[a, b] = self._encode(prod_[:e])
        return t

    @cached_property
    def neg(self) -> np.ndarray:
        return np.argmin(self.add, axis=1).astype(np.uint8)  # a + neg[a] = 0 is the unique zero per row


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a.pop()
    return a


def _has_factor(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            if not any(_poly_mod(poly, list(tail) + [1], p)):
                return True
    return False


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


@dataclass(frozen=True)
class MatrixOverGF:
    """A single n x n matrix over GF(q); the vectorized enumeration below
    does not use it, so it doubles as an independent spot check."""

    n: int
    q: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise InvalidInput("entries must be n x n")
        if any(not 0 <= x < self.q for r in self.entries for x in r):
            raise InvalidInput(f"entries must lie in 0..{self.q - 1}")

    def __matmul__(self, other: "MatrixOverGF") -> "MatrixOverGF":
        F, n = field(self.q), self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = int(F.add[acc, F.mul[self.entries[i][k], other.entries[k][j]]])
                row.append(acc)
            rows.append(tuple(row))
        return MatrixOverGF(n, self.q, tuple(rows))

    def is_scalar(self) -> bool:
        d = self.entries[0][0]
        return all(x == (d if i == j else 0) for i, r in enumerate(self.entries) for j, x in enumerate(r))

    def order(self, projective: bool = False, cap: int = ORDER_CAP) -> int:
        """Least k with g^k = 1 (or g^k scalar when ``projective``)."""
        g = self
        for k in range(1, cap + 1):
            if g.is_scalar() and (projective or g.entries[0][0] == 1):
                return k
            g = g @ self
        raise ResourceLimit(f"order exceeds {cap}")


class Variant(enum.Enum):
    GL = "gl"
    SL = "sl"
    PSL = "psl"


def _matrices(n: int, q: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, n * n), dtype=np.uint8)
    for t in range(n * n):
        out[:, t] = idx % q
        idx //= q
    return out.reshape(-1, n, n)


def _det(F: GF, a: np.ndarray) -> np.ndarray:
    n = a.shape[1]
    det = np.zeros(a.shape[0], dtype=np.uint8)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = np.ones(a.shape[0], dtype=np.uint8)
        for i, j in enumerate(perm):
            term = F.mul[term, a[:, i, j]]
        if inversions % 2:
            term = F.neg[term]
        det = F.add[det, term]
    return det


def _matmul(F: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    m = F.mul[a[:, :, :, None], b[:, None, :, :]]  # [g, i, k, j]
    acc = m[:, :, 0, :]
    for k in range(1, a.shape[1]):
        acc = F.add[acc, m[:, :, k, :]]
    return acc


def _scalar_value(a: np.ndarray) -> np.ndarray:
    """Diagonal value where the matrix is scalar, -1 elsewhere."""
    n = a.shape[1]
    diag = a[:, np.arange(n), np.arange(n)]
    off = a.copy()
    off[:, np.arange(n), np.arange(n)] = 0
    ok = (off.reshape(a.shape[0], -1) == 0).all(axis=1) & (diag == diag[:, :1]).all(axis=1)
    return np.where(ok, diag[:, 0].astype(np.int64), -1)


def _orders(F: GF, g: np.ndarray, projective: bool, cap: int) -> np.ndarray:
    orders = np.zeros(g.shape[0], dtype=np.int64)
    live = np.arange(g.shape[0])
    power = g.copy()
    for k in range(1, cap + 1):
        sv = _scalar_value(power)
        done = sv >= 0 if projective else sv == 1
        orders[live[done]] = k
        keep = ~done
        if not keep.any():
            return orders
        live, power, g = live[keep], power[keep], g[keep]
        power = _matmul(F, power, g)
    raise ResourceLimit(f"element order exceeds {cap}")


def matrix_group_elements(n: int, q: int, variant: Variant | str = Variant.GL) -> np.ndarray:
    """All elements of GL_n(q) or SL_n(q) as a (count, n, n) uint8 array.

    For PSL the SL representatives are returned; orders are then taken
    modulo scalars.
    """
    variant = Variant(variant)
    F = _check_matrix_bounds(n, q)
    total = q ** (n * n)
    kept = []
    for start in range(0, total, _CHUNK):
        a = _matrices(n, q, start, min(total, start + _CHUNK))
        d = _det(F, a)
        kept.append(a[d != 0] if variant is Variant.GL else a[d == 1])
    return np.concatenate(kept)


def _check_matrix_bounds(n: int, q: int) -> GF:
    if n < 1 or is_prime_power(q) is None:
        raise InvalidInput(f"need n >= 1 and q a prime power, got n={n}, q={q}")
    if n > 4 or q > 16 or q ** (n * n) > MATRIX_CAP:
        raise ResourceLimit(f"enumerating {q}^{n * n} matrices exceeds the cap (n <= 4, q^(n^2) <= 2^24)")
    return field(q)


def matrix_group_spectrum(n: int, q: int, variant: Variant | str = Variant.PSL) -> Spectrum:
    """Element orders of GL_n(q), SL_n(q) or PSL_n(q) by exhaustive enumeration."""
    variant = Variant(variant)
    F = _check_matrix_bounds(n, q)
    elems = matrix_group_elements(n, q, variant)
    out: set[int] = set()
    for start in range(0, elems.shape[0], _CHUNK):
        chunk = elems[start : start + _CHUNK]
        out.update(np.unique(_orders(F, chunk, variant is Variant.PSL, q**n)).tolist())
    return frozenset(int(x) for x in out)


# --------------------------------------------------------------------------
# permutation groups

@dataclass(frozen=True)
class Permutation:
    """Bijection of {0, ..., n-1}; ``(a * b)(x) = a(b(x))``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InvalidInput(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(n))
        for c in cycles:
            for i, x in enumerate(c):
                img[x] = c[(i + 1) % len(c)]
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def cycle_lengths(self) -> list[int]:
        seen = [False] * self.degree
        out = []
        for x in range(self.degree):
            if not seen[x]:
                k, y = 0, x
                while not seen[y]:
                    seen[y] = True
                    y = self.images[y]
                    k += 1
                out.append(k)
        return out

    def order(self) -> int:
        return reduce(lcm, self.cycle_lengths(), 1)


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[x] for x in b)


def perm_group_elements(generators: Sequence[Permutation], order_cap: int = ORDER_CAP) -> list[Permutation]:
    """The group generated by ``generators``, by breadth-first closure."""
    if not generators:
        raise InvalidInput("need at least one generator")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise InvalidInput("generators have different degrees")
    gens = [g.images for g in generators]
    start = tuple(range(degree))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > order_cap:
                    raise ResourceLimit(f"group order exceeds the cap {order_cap}")
                queue.append(y)
    return [Permutation(x) for x in sorted(seen)]


def perm_group_spectrum(generators: Sequence[Permutation], order_cap: int = ORDER_CAP) -> Spectrum:
    return frozenset(g.order() for g in perm_group_elements(generators, order_cap))


def perm_group_array(generators: Sequence[Permutation], order_cap: int = ORDER_CAP) -> tuple[np.ndarray, np.ndarray]:
    """Elements as rows of image arrays, with their orders."""
    elems = perm_group_elements(generators, order_cap)
    return np.array([g.images for g in elems], dtype=np.int64), np.array([g.order() for g in elems])


def centralizing_mask(elements: np.ndarray, g: Permutation) -> np.ndarray:
    """Rows h of ``elements`` with h g = g h."""
    img = np.asarray(g.images)
    return (img[elements] == elements[:, img]).all(axis=1)


def centralizer_spectrum(
    generators: Sequence[Permutation], g: Permutation, order_cap: int = ORDER_CAP
) -> Spectrum:
    """Element orders of the centralizer of ``g`` in the generated group."""
    elems, orders = perm_group_array(generators, order_cap)
    return frozenset(int(k) for k in np.unique(orders[centralizing_mask(elems, g)]))


def symmetric_generators(n: int) -> list[Permutation]:
    if n < 2:
        return [Permutation.identity(max(n, 1))]
    return [Permutation.from_cycles(n, (0, 1)), Permutation.from_cycles(n, tuple(range(n)))]


def alternating_generators(n: int) -> list[Permutation]:
    if n < 3:
        return [Permutation.identity(max(n, 1))]
    return [Permutation.from_cycles(n, (0, 1, i)) for i in range(2, n)]


def dihedral_generators(m: int) -> list[Permutation]:
    """Symmetries of an m-gon, degree m."""
    return [
        Permutation(tuple((i + 1) % m for i in range(m))),
        Permutation(tuple((-i) % m for i in range(m))),
    ]


def direct_product_generators(
    gens_a: Sequence[Permutation], gens_b: Sequence[Permutation]
) -> list[Permutation]:
    """A x B acting on the disjoint union of the two point sets."""
    da, db = gens_a[0].degree, gens_b[0].degree
    left = [Permutation(g.images + tuple(range(da, da + db))) for g in gens_a]
    right = [Permutation(tuple(range(da)) + tuple(da + x for x in g.images)) for g in gens_b]
    return left + right


def swap_extension_generators(gens: Sequence[Permutation]) -> list[Permutation]:
    """S x S extended by the involution exchanging the two coordinates."""
    d = gens[0].degree
    swap = Permutation(tuple(range(d, 2 * d)) + tuple(range(d)))
    return direct_product_generators(gens, gens) + [swap]
