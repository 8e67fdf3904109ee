from __future__ import annotations

from math import gcd

import pytest
import sympy

from primecomplex.analysis import (
    SPORADIC_NAMES,
    PurityReport,
    catalog_entry,
    characteristic_screen,
    coprime5_catalog,
    doubling_witness,
    order_coprime_to,
    pn_check,
    power_unrecognisable_from,
    purity_report,
    purity_scan,
    q2_two_prime_scan,
    scan_parameters,
    screen_candidates,
    table_sporadic_sizes,
)
from primecomplex.complexes import PrimeComplex, from_spectrum
from primecomplex.errors import InvalidInput
from primecomplex.fileio import load_fixture
from primecomplex.groups import GroupSpec, symmetric_rule, alternating_rule

SCREEN_SET = {2, 3, 29, 43, 47, 71, 173, 283}

# (p, r) -> (i, bold); "--" cells (p == r) are absent
SCREEN_TABLE = {
    2: {3: (2, 0), 29: (28, 1), 43: (14, 1), 47: (23, 1), 71: (35, 1), 173: (172, 1), 283: (94, 1)},
    3: {2: (1, 0), 29: (28, 1), 43: (42, 1), 47: (23, 1), 71: (35, 1), 173: (172, 1), 283: (282, 1)},
    173: {2: (1, 0), 3: (2, 0), 29: (2, 0), 43: (1, 0), 47: (23, 1), 71: (70, 1), 283: (282, 1)},
    283: {2: (1, 0), 3: (1, 0), 29: (14, 1), 43: (21, 1), 47: (1, 0), 71: (2, 0), 173: (172, 1)},
}


def _fixture_complex(name: str) -> PrimeComplex:
    return from_spectrum(load_fixture(name).orders)


# -- purity reports -----------------------------------------------------------------------

def test_purity_report_examples():
    r = purity_report("Sym(9)")
    assert r.pure and r.max_size == 2 and r.describe() == "pure (all maximal simplices size 2)"
    r = purity_report("PSL3(169)")
    assert not r.pure
    assert r.witness == ((2, 3, 7), (2, 5, 7, 17))
    assert r.describe() == "impure (maximal simplex sizes 2..4; witness {2,3,7} vs {2,5,7,17})"
    assert purity_report("PSL2(4)").describe() == "pure (all maximal simplices size 1)"


def test_hn_sizes_from_its_spectrum():
    # the commonly quoted row for HN is (3, 2), but 19 is an isolated vertex
    r = purity_report("fixture:HN")
    assert (r.max_size, r.min_maximal_size) == (3, 1)
    assert (19,) in _fixture_complex("HN").maximal
    assert (13,) in _fixture_complex("Fi22").maximal


def test_report_invariant_is_enforced():
    with pytest.raises(AssertionError):
        PurityReport(GroupSpec("Sym", (5,)), True, 2, 1, None)


@pytest.mark.parametrize("family", ["Sym", "Alt"])
def test_fast_path_matches_full_complex(family):
    for n in range(1, 40):
        fast = purity_report(GroupSpec(family, (n,)))
        rule = (symmetric_rule if family == "Sym" else alternating_rule)(n)
        c = rule.complex()
        assert (fast.pure, fast.max_size, fast.min_maximal_size) == (c.is_pure, c.max_size, c.min_maximal_size)
        if not fast.pure:
            a, b = fast.witness
            assert a == c.maximal[0] and len(a) != len(b) and b in c.maximal


def test_sym_witnesses_are_maximal_to_200():
    for n in range(5, 201):
        if n == 9:
            continue
        a, b = purity_report(GroupSpec("Sym", (n,))).witness
        rule = symmetric_rule(n)
        assert rule.is_maximal(a) and rule.is_maximal(b) and len(a) != len(b)


def test_scan_parameters():
    assert scan_parameters("PSL2", 1, 12) == [4, 5, 7, 8, 9, 11]
    assert scan_parameters("Sym", 0, 3) == [1, 2, 3]
    with pytest.raises(InvalidInput):
        scan_parameters("G2", 1, 5)


def test_small_scans():
    assert [r.spec.params[0] for r in purity_scan("Sym", 1, 30) if r.pure] == [1, 2, 3, 4, 9]
    assert [r.spec.params[0] for r in purity_scan("PSL2", 4, 50) if r.pure] == [4, 5, 7, 8, 9, 17]
    assert [r.spec.params[0] for r in purity_scan("Sz", 1, 5) if r.pure] == [1, 2]


# -- P(n) ---------------------------------------------------------------------------------

def _pn_oracle(n: int) -> tuple[bool, int, int]:
    ps = list(sympy.primerange(2, n + 1))
    k, total = 0, 0
    while total + sympy.prime(k + 1) <= n:
        total += sympy.prime(k + 1)
        k += 1
    f = sum(sympy.prime(i) for i in range(1, k)) + ps[-1]
    return n < f, k, f


def test_pn_examples():
    assert pn_check(100) == pn_check(100).__class__(True, 9, 174)
    assert (pn_check(11).k, pn_check(11).f) == (3, 16)
    with pytest.raises(InvalidInput):
        pn_check(4)


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9, 10, 17, 58, 129, 130, 1000, 4321])
def test_pn_matches_oracle(n):
    c = pn_check(n)
    assert (c.holds, c.k, c.f) == _pn_oracle(n)


def test_pn_holds_through_ten_thousand():
    assert all(pn_check(n).holds for n in range(10, 10**4 + 1))


# -- doubling, cover numbers ------------------------------------------------------------

def test_doubling_witness():
    assert doubling_witness(_fixture_complex("McL")) == ((11,),)
    assert doubling_witness(_fixture_complex("Co3")) == ((3, 7), (23,))
    assert doubling_witness(PrimeComplex.complete({2, 3, 5})) is None


def test_power_unrecognisable_from():
    assert power_unrecognisable_from("Nil(2,3)") == 1
    assert power_unrecognisable_from("PSL2(173)") == 3
    assert power_unrecognisable_from("fixture:J2") == 3
    assert power_unrecognisable_from("fixture:M12") == 3


# -- screening --------------------------------------------------------------------------

def test_screen_candidates():
    assert screen_candidates(SCREEN_SET) == [2, 3, 173, 283]
    with pytest.raises(InvalidInput):
        characteristic_screen({5, 11})


def test_screen_table():
    got = {(row.p, row.r): (row.order, int(row.bad)) for row in characteristic_screen(SCREEN_SET)}
    want = {(p, r): v for p, cells in SCREEN_TABLE.items() for r, v in cells.items()}
    assert got == want


def test_screen_bold_flags_against_factorization():
    for row in characteristic_screen(SCREEN_SET):
        assert pow(row.p, row.order, row.r) == 1
        value = row.p**row.order - 1
        smooth = 1
        for r in SCREEN_SET:
            smooth *= r ** sympy.multiplicity(r, value)
        assert row.bad == (smooth != value)


# -- catalog -----------------------------------------------------------------------------

def test_catalog_orders_avoid_five():
    for entry in coprime5_catalog():
        hits = [q for q in range(2, 101) if entry.admits(q)]
        assert hits, entry.label
        assert all(order_coprime_to(entry, q, 5) for q in hits)


def test_catalog_orders_against_known_values():
    assert catalog_entry("PSL2(q)").order(7) == 168
    assert catalog_entry("PSL3(q)").order(3) == 5616
    assert catalog_entry("PSU3(q)").order(3) == 6048
    assert catalog_entry("G2(q)").order(3) == 4245696
    assert catalog_entry("2G2(q)").order(27) == 10073444472
    assert catalog_entry("3D4(q)").order(2) == 211341312


def test_catalog_restrictions():
    assert not order_coprime_to("3D4(q)", 2, 7)
    with pytest.raises(InvalidInput):
        order_coprime_to("2G2(q)", 9, 5)
    with pytest.raises(InvalidInput):
        order_coprime_to("PSL2(q)", 5, 5)
    with pytest.raises(InvalidInput):
        catalog_entry("E8(q)")
    # q = +-1 mod 5 would put 5 into q^2 - 1
    assert all(((q * q - 1) % 5 == 0) == (q % 5 in (1, 4)) for q in range(2, 100) if gcd(q, 5) == 1)


# -- sporadic groups and fixtures ---------------------------------------------------------

def _sizes_by_radicals(orders) -> tuple[int, int]:
    rads = {frozenset(sympy.primefactors(m)) for m in orders if m > 1}
    maximal = [r for r in rads if not any(r < s for s in rads)]
    return max(map(len, maximal)), min(map(len, maximal))


def test_sporadic_rows_match_radical_oracle():
    rows = table_sporadic_sizes()
    assert [r.group for r in rows] == list(SPORADIC_NAMES)
    for row in rows:
        assert (row.max_size, row.min_maximal_size) == _sizes_by_radicals(load_fixture(row.group).orders)
        assert row.max_size > row.min_maximal_size  # none is pure


def test_table_with_explicit_names():
    assert [r.group for r in table_sporadic_sizes(names=["J2", "McL"])] == ["J2", "McL"]


def test_explicit_simplex_lists():
    assert _fixture_complex("M12").maximal == ((2, 3), (2, 5), (11,))
    assert _fixture_complex("J2").maximal == ((2, 3), (2, 5), (3, 5), (7,))
    assert _fixture_complex("Co3").maximal == ((2, 3, 5), (2, 7), (2, 11), (3, 7), (23,))
    assert _fixture_complex("McL").maximal == ((2, 3, 5), (2, 7), (11,))


def test_fixture_coincidences():
    assert _fixture_complex("Fi22") == _fixture_complex("Suz.2")
    assert _fixture_complex("HS.2") == _fixture_complex("McL")
    assert _fixture_complex("Sp6(2)") == _fixture_complex("J2")
    assert 42 in load_fixture("HN.2").orders and 42 not in load_fixture("HN").orders
    assert 42 in load_fixture("Fi22.2").orders and 42 not in load_fixture("Fi22").orders
    # the second group sharing the prime graph also shares the complex
    assert _fixture_complex("HS") == _fixture_complex("PSU6(2)")
    assert _fixture_complex("M11") == _fixture_complex("PSL2(11)")
    assert _fixture_complex("HN").prime_graph() == _fixture_complex("HN.2").prime_graph()
    assert _fixture_complex("HN") != _fixture_complex("HN.2")


def test_q2_two_prime_scan():
    assert q2_two_prime_scan(10**4) == [4, 5, 7, 8, 9, 17]
