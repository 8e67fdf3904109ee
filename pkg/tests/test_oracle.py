from __future__ import annotations

import random
from itertools import product
from math import lcm

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from primecomplex.complexes import from_spectrum
from primecomplex.errors import InvalidInput, ResourceLimit
from primecomplex.numtheory import prime_set
from primecomplex.oracle import (
    MatrixOverGF,
    Permutation,
    alternating_generators,
    an_spectrum,
    centralizer_spectrum,
    centralizing_mask,
    dihedral_generators,
    direct_product_generators,
    field,
    matrix_group_elements,
    matrix_group_spectrum,
    perm_group_array,
    perm_group_elements,
    perm_group_spectrum,
    product_spectrum,
    sn_spectrum,
    swap_extension_generators,
    symmetric_generators,
)


def _divisor_closed(s) -> bool:
    return all(d in s for m in s for d in range(1, m + 1) if m % d == 0)


# -- cycle types ---------------------------------------------------------------------------

def test_sn_an_examples():
    assert sn_spectrum(4) == {1, 2, 3, 4}
    assert sn_spectrum(5) == {1, 2, 3, 4, 5, 6}
    assert sn_spectrum(1) == {1}
    assert an_spectrum(5) == {1, 2, 3, 5}
    assert 15 in an_spectrum(8) and 35 not in an_spectrum(8)
    assert an_spectrum(3) == {1, 3}
    with pytest.raises(InvalidInput):
        sn_spectrum(0)
    with pytest.raises(ResourceLimit):
        an_spectrum(31)


def test_spectra_are_divisor_closed():
    for n in range(1, 21):
        assert _divisor_closed(sn_spectrum(n))
        assert _divisor_closed(an_spectrum(n))


@pytest.mark.parametrize("n", range(2, 8))
def test_cycle_type_spectra_match_closure(n):
    assert perm_group_spectrum(symmetric_generators(n)) == sn_spectrum(n)
    if n >= 3:
        assert perm_group_spectrum(alternating_generators(n)) == an_spectrum(n)


def test_group_orders_from_closure():
    assert len(perm_group_elements(symmetric_generators(5))) == 120
    assert len(perm_group_elements(alternating_generators(6))) == 360
    assert len(perm_group_elements(dihedral_generators(4))) == 8


# -- finite fields and matrices ----------------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms(q):
    F = field(q)
    add, mul = F.add.astype(int), F.mul.astype(int)
    r = range(q)
    assert all(add[a, 0] == a and mul[a, 1] == a for a in r)
    assert all(add[a, b] == add[b, a] and mul[a, b] == mul[b, a] for a in r for b in r)
    for a, b, c in product(r, repeat=3):
        assert add[add[a, b], c] == add[a, add[b, c]]
        assert mul[mul[a, b], c] == mul[a, mul[b, c]]
        assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]
    assert all(sorted(mul[a, 1:]) == list(range(1, q)) for a in range(1, q))
    assert all(add[a, F.neg[a]] == 0 for a in r)
    # the multiplicative group is cyclic of order q - 1
    orders = []
    for a in range(1, q):
        x, k = a, 1
        while x != 1:
            x, k = mul[x, a], k + 1
        orders.append(k)
    assert max(orders) == q - 1


def test_matrix_examples():
    assert matrix_group_spectrum(3, 2, "psl") == {1, 2, 3, 4, 7}
    s = matrix_group_spectrum(4, 2, "psl")
    assert 15 in s and 35 not in s
    assert matrix_group_spectrum(2, 2, "gl") == {1, 2, 3}


def test_psl4_2_matches_a8():
    s = matrix_group_spectrum(4, 2, "psl")
    assert s == an_spectrum(8)
    assert {frozenset(prime_set(m)) for m in s} == {frozenset(prime_set(m)) for m in an_spectrum(8)}


@pytest.mark.parametrize(
    "n,q,gl,sl",
    [(2, 2, 6, 6), (2, 3, 48, 24), (2, 4, 180, 60), (3, 2, 168, 168), (2, 5, 480, 120), (3, 3, 11232, 5616)],
)
def test_matrix_group_orders(n, q, gl, sl):
    assert len(matrix_group_elements(n, q, "gl")) == gl
    assert len(matrix_group_elements(n, q, "sl")) == sl


def test_matrix_bounds():
    with pytest.raises(ResourceLimit):
        matrix_group_spectrum(5, 2)
    with pytest.raises(ResourceLimit):
        matrix_group_spectrum(3, 7)  # 7^9 > 2^24
    with pytest.raises(ResourceLimit):
        matrix_group_spectrum(2, 17)
    with pytest.raises(InvalidInput):
        matrix_group_spectrum(2, 6)


def test_single_matrix_orders_agree_with_vectorized():
    rng = random.Random(3)
    for n, q, variant in [(2, 4, "gl"), (3, 3, "sl"), (2, 9, "psl"), (3, 4, "psl")]:
        elems = matrix_group_elements(n, q, "gl" if variant == "gl" else "sl")
        from primecomplex.oracle import _orders

        picks = rng.sample(range(len(elems)), 40)
        vec = _orders(field(q), elems[picks], variant == "psl", q**n)
        for i, k in zip(picks, vec):
            m = MatrixOverGF(n, q, tuple(tuple(int(x) for x in row) for row in elems[i]))
            assert m.order(projective=variant == "psl") == k


def test_matrix_over_gf_validation():
    with pytest.raises(InvalidInput):
        MatrixOverGF(2, 3, ((1, 0), (0, 3)))
    assert MatrixOverGF(2, 3, ((2, 0), (0, 2))).is_scalar()


# -- permutations --------------------------------------------------------------------------------

def test_permutation_basics():
    c = Permutation.from_cycles(5, (0, 1, 2, 3, 4))
    assert perm_group_spectrum([c]) == {1, 5}
    assert c.order() == 5 and (c * c.inverse()) == Permutation.identity(5)
    assert Permutation.from_cycles(6, (0, 1), (2, 3, 4)).order() == 6
    with pytest.raises(InvalidInput):
        Permutation((0, 0, 1))
    assert perm_group_spectrum(alternating_generators(5)) == {1, 2, 3, 5}


def test_closure_cap():
    with pytest.raises(ResourceLimit):
        perm_group_elements(symmetric_generators(7), order_cap=1000)


@given(st.permutations(range(7)), st.permutations(range(7)))
@settings(max_examples=100, deadline=None)
def test_order_by_cycles_matches_iteration(a, b):
    p, q = Permutation(tuple(a)), Permutation(tuple(b))
    x = p * q
    k, y = 1, x
    while y != Permutation.identity(7):
        y, k = y * x, k + 1
    assert x.order() == k


def test_product_spectrum_examples():
    assert product_spectrum({1, 2}, {1, 3}) == {1, 2, 3, 6}
    s5 = sn_spectrum(5)
    assert {12, 15, 20, 30} <= product_spectrum(s5, s5)
    assert product_spectrum(s5, {1}) == s5


@pytest.mark.parametrize(
    "ga,gb",
    [
        (symmetric_generators(3), symmetric_generators(4)),
        (alternating_generators(5), dihedral_generators(5)),
        (dihedral_generators(4), symmetric_generators(3)),
        ([Permutation.from_cycles(3, (0, 1, 2))], alternating_generators(4)),
    ],
)
def test_product_spectrum_matches_realized_product(ga, gb):
    assert perm_group_spectrum(direct_product_generators(ga, gb)) == product_spectrum(
        perm_group_spectrum(ga), perm_group_spectrum(gb)
    )


def test_centralizer_examples():
    s4 = symmetric_generators(4)
    assert centralizer_spectrum(s4, Permutation.from_cycles(4, (0, 1))) == {1, 2}
    a4 = alternating_generators(4)
    assert centralizer_spectrum(a4, Permutation.identity(4)) == {1, 2, 3}
    assert centralizer_spectrum(symmetric_generators(5), Permutation.from_cycles(5, (0, 1, 2, 3, 4))) == {1, 5}


def _psl3_2_on_points() -> list[Permutation]:
    """PSL3(2) acting on the seven nonzero vectors of GF(2)^3."""
    pts = [v for v in product(range(2), repeat=3) if any(v)]
    index = {v: i for i, v in enumerate(pts)}

    def act(m):
        return Permutation(
            tuple(index[tuple(sum(m[i][j] * v[j] for j in range(3)) % 2 for i in range(3))] for v in pts)
        )

    return [act(((1, 1, 0), (0, 1, 0), (0, 0, 1))), act(((0, 0, 1), (1, 0, 0), (0, 1, 0))),
            act(((1, 0, 0), (0, 1, 1), (0, 0, 1)))]


CENTRALIZER_CORPUS = (
    [(f"S{n}", symmetric_generators(n)) for n in range(2, 8)]
    + [(f"A{n}", alternating_generators(n)) for n in range(3, 8)]
    + [("PSL3(2)", _psl3_2_on_points())]
)


def _centralizer_faces(gens):
    elems, orders = perm_group_array(gens)
    G = from_spectrum(orders.tolist())
    via_centralizers = set()  # (p, maximal face of C(g) containing p) over order-p elements g
    for row, k in zip(elems, orders.tolist()):
        if k > 1 and prime_set(k) == {k}:
            C = from_spectrum(orders[centralizing_mask(elems, Permutation(tuple(row.tolist())))].tolist())
            via_centralizers.update((k, s) for s in C.maximal if k in s)
    return G, via_centralizers


@pytest.mark.parametrize("name,gens", CENTRALIZER_CORPUS, ids=[c[0] for c in CENTRALIZER_CORPUS])
def test_centralizer_criterion(name, gens):
    G, via = _centralizer_faces(gens)
    assert perm_group_spectrum(gens) >= {1}
    for p in G.vertices:
        in_group = {s for s in G.maximal if p in s}
        from_cent = {s for q, s in via if q == p}
        # every maximal face through p is seen in some centralizer of an order-p element
        assert in_group <= from_cent
        # the converse holds once the face has a prime besides p
        assert {s for s in from_cent if len(s) > 1} == {s for s in in_group if len(s) > 1}


def test_centralizer_converse_fails_for_singletons():
    # in S5 a double transposition has a 2-group centralizer, yet {2} is not maximal
    gens = symmetric_generators(5)
    g = Permutation.from_cycles(5, (0, 1), (2, 3))
    assert from_spectrum(centralizer_spectrum(gens, g)).maximal == ((2,),)
    assert (2,) not in from_spectrum(sn_spectrum(5)).maximal


def test_centralizer_converse_fails_in_s10():
    # three disjoint 3-cycles: centralizer C3 wr S3 has maximal face {2,3}; S10 has {2,3,5}
    cyc = [Permutation.from_cycles(10, (0, 1, 2)), Permutation.from_cycles(10, (3, 4, 5)),
           Permutation.from_cycles(10, (6, 7, 8))]
    blocks = [Permutation.from_cycles(10, (0, 3), (1, 4), (2, 5)),
              Permutation.from_cycles(10, (0, 6), (1, 7), (2, 8))]
    g = cyc[0] * cyc[1] * cyc[2]
    C = perm_group_elements(cyc + blocks)
    assert len(C) == 162 and all(h * g == g * h for h in C)
    assert from_spectrum(h.order() for h in C).maximal == ((2, 3),)
    assert 30 in sn_spectrum(10)


SWAP_CASES = [("S3", symmetric_generators(3)), ("D4", dihedral_generators(4)), ("S4", symmetric_generators(4))]


@pytest.mark.parametrize("name,gens", SWAP_CASES, ids=[c[0] for c in SWAP_CASES])
def test_swap_extension_keeps_complex(name, gens):
    s = perm_group_spectrum(gens)
    ext = perm_group_elements(swap_extension_generators(gens))
    assert len(ext) == 2 * len(perm_group_elements(gens)) ** 2
    assert from_spectrum(g.order() for g in ext) == from_spectrum(product_spectrum(s, s))
