"""Prime simplicial complexes, stored as antichains of maximal faces.

A complex is kept in canonical form: vertices ascending, each maximal simplex
an ascending tuple, maximal simplices sorted lexicographically.  Membership of
an arbitrary face is inclusion in some maximal face.  Internally faces are
also encoded as integer bitmasks over the vertex list, which keeps antichain
reduction and set cover cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import InvalidInput, InvariantViolation
from .numtheory import prime_set

Simplex = tuple[int, ...]


def reduce_to_antichain(faces: Iterable[Iterable[int]]) -> tuple[Simplex, ...]:
    """Keep only the inclusion-maximal faces (empty faces are dropped)."""
    sets = {frozenset(int(p) for p in f) for f in faces}
    sets.discard(frozenset())
    by_size = sorted(sets, key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for s in by_size:
        if not any(s < k for k in kept):
            kept.append(s)
    return tuple(sorted(tuple(sorted(s)) for s in kept))


@dataclass(frozen=True)
class PrimeComplex:
    """Downward-closed family of prime sets, given by its maximal faces."""

    vertices: tuple[int, ...]
    maximal: tuple[Simplex, ...]

    def __post_init__(self):
        canon = reduce_to_antichain(self.maximal)
        if canon != tuple(self.maximal):
            raise InvariantViolation("maximal simplices are not a canonical antichain; use PrimeComplex.build")
        covered = sorted({p for s in canon for p in s})
        if tuple(self.vertices) != tuple(covered):
            raise InvariantViolation(f"vertices {self.vertices} do not match the union of maximal simplices")

    @classmethod
    def build(cls, faces: Iterable[Iterable[int]]) -> "PrimeComplex":
        """Complex generated by ``faces`` (any faces, any order, repeats allowed)."""
        maximal = reduce_to_antichain(faces)
        return cls(tuple(sorted({p for s in maximal for p in s})), maximal)

    @classmethod
    def empty(cls) -> "PrimeComplex":
        return cls((), ())

    @classmethod
    def complete(cls, primes: Iterable[int]) -> "PrimeComplex":
        return cls.build([primes])

    # -- bitmask view ------------------------------------------------------

    @cached_property
    def _index(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.vertices)}

    @cached_property
    def _masks(self) -> tuple[int, ...]:
        return tuple(self._mask(s) for s in self.maximal)

    def _mask(self, face: Iterable[int]) -> int:
        m = 0
        for p in face:
            m |= 1 << self._index[p]
        return m

    # -- queries -----------------------------------------------------------

    def contains(self, face: Iterable[int]) -> bool:
        face = set(face)
        if not face <= set(self.vertices):
            return False
        m = self._mask(face)
        return not face or any(m & mm == m for mm in self._masks)

    def __contains__(self, face) -> bool:
        return self.contains(face)

    @property
    def max_size(self) -> int:
        return max((len(s) for s in self.maximal), default=0)

    @property
    def min_maximal_size(self) -> int:
        return min((len(s) for s in self.maximal), default=0)

    @property
    def is_pure(self) -> bool:
        return len({len(s) for s in self.maximal}) <= 1

    def faces(self) -> set[Simplex]:
        """Every nonempty face.  Exponential in the maximal face size."""
        out = set()
        for s in self.maximal:
            for k in range(1, len(s) + 1):
                out.update(combinations(s, k))
        return out

    def join(self, other: "PrimeComplex") -> "PrimeComplex":
        """Complex of the direct product: unions of one face from each side."""
        if not self.maximal:
            return other
        if not other.maximal:
            return self
        return PrimeComplex.build(set(a) | set(b) for a in self.maximal for b in other.maximal)

    def prime_graph(self) -> "PrimeGraph":
        edges = set()
        for s in self.maximal:
            edges.update(combinations(s, 2))
        return PrimeGraph(self.vertices, tuple(sorted(edges)))

    def doubling_defect(self) -> tuple[Simplex, ...]:
        """Maximal simplices without 2 that do not extend by 2.

        An empty result means adjoining an elementary abelian 2-group as a
        direct factor leaves the complex unchanged.
        """
        if 2 not in self.vertices:
            raise InvalidInput("2 is not a vertex of the complex")
        return tuple(s for s in self.maximal if 2 not in s and not self.contains(s + (2,)))

    def cover_number(self) -> int:
        """Least number of maximal simplices whose union is the vertex set."""
        if not self.vertices:
            raise InvalidInput("cover number of the empty complex is undefined")
        return exact_set_cover(self._masks, (1 << len(self.vertices)) - 1)


def exact_set_cover(masks: Iterable[int], universe: int) -> int:
    """Minimum number of ``masks`` whose union is ``universe`` (branch and bound)."""
    masks = [m for m in set(masks) if m]
    if not universe:
        return 0
    union = 0
    for m in masks:
        union |= m
    if union & universe != universe:
        raise InvalidInput("the sets do not cover the universe")

    covering = {}
    bit = 1
    while bit <= universe:
        if bit & universe:
            covering[bit] = [m for m in masks if m & bit]
        bit <<= 1

    # greedy upper bound
    best = 0
    left = universe
    while left:
        left &= ~max(masks, key=lambda m: (m & left).bit_count())
        best += 1

    largest = max(m.bit_count() for m in masks)

    def search(left: int, used: int) -> None:
        nonlocal best
        if not left:
            best = min(best, used)
            return
        # lower bound from the largest set size
        if used + -(-left.bit_count() // largest) >= best:
            return
        # branch on the uncovered element with fewest options
        pivot = min((b for b in covering if b & left), key=lambda b: len(covering[b]))
        for m in sorted(covering[pivot], key=lambda m: -(m & left).bit_count()):
            search(left & ~m, used + 1)

    search(universe, 0)
    return best


def from_spectrum(orders: Iterable[int]) -> PrimeComplex:
    """Complex whose faces are the prime supports of the given element orders."""
    return PrimeComplex.build(prime_set(m) for m in set(orders))


def join(*complexes: PrimeComplex) -> PrimeComplex:
    out = PrimeComplex.empty()
    for c in complexes:
        out = out.join(c)
    return out


def equal(a: PrimeComplex, b: PrimeComplex) -> bool:
    return a.vertices == b.vertices and a.maximal == b.maximal


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        vs = set(self.vertices)
        for p, r in self.edges:
            if p == r or p not in vs or r not in vs:
                raise InvariantViolation(f"bad edge {(p, r)}")

    @cached_property
    def _adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for p, r in self.edges:
            adj[p].add(r)
            adj[r].add(p)
        return adj

    def adjacent(self, p: int, r: int) -> bool:
        return r in self._adjacency[p]

    def complement(self) -> "PrimeGraph":
        edges = tuple(e for e in combinations(self.vertices, 2) if not self.adjacent(*e))
        return PrimeGraph(self.vertices, edges)

    def universal_vertices(self) -> frozenset[int]:
        n = len(self.vertices)
        return frozenset(v for v, nb in self._adjacency.items() if len(nb) == n - 1)

    def is_triangle_free(self) -> bool:
        adj = self._adjacency
        return not any(adj[p] & adj[r] for p, r in self.edges)

    def is_colourable(self, k: int) -> bool:
        adj = self._adjacency
        order = sorted(self.vertices, key=lambda v: -len(adj[v]))
        colour: dict[int, int] = {}

        def place(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            taken = {colour[u] for u in adj[v] if u in colour}
            for c in range(k):
                if c not in taken:
                    colour[v] = c
                    if place(i + 1):
                        return True
                    del colour[v]
            return False

        return place(0)

    def coclique_max(self) -> int:
        """Independence number, by exhaustive branching."""
        adj = self._adjacency

        def best(cands: frozenset[int]) -> int:
            if not cands:
                return 0
            v = max(cands, key=lambda u: len(adj[u] & cands))
            if not adj[v] & cands:
                return len(cands)
            return max(1 + best(cands - adj[v] - {v}), best(cands - {v}))

        return best(frozenset(self.vertices))

    def is_solvable_realizable(self) -> bool:
        """Whether the complement is triangle-free and 3-colourable, the
        criterion for being the prime graph of a solvable group."""
        comp = self.complement()
        return comp.is_triangle_free() and comp.is_colourable(3)
