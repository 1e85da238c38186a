import cmath
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittghost.arith import divisors, euler_phi, lcm_all
from wittghost.congruence import check_dold_plus
from wittghost.cyclo import (
    cyclo_fit,
    cyclo_product,
    cyclo_to_euler,
    cyclotomic_polynomial,
    doldplus_cyclotomic_check,
    euler_to_cyclo,
    ghost_from_cyclo,
    periodicity_check,
    ramanujan_sum,
    rigidity_exponents,
)
from wittghost.errors import DomainError, Indeterminate, NotCyclotomic
from wittghost.ghost import coeffs_from_euler, ghost, ghost_from_euler, sigma_from_coeffs

N = 24

cyclo_maps = st.dictionaries(st.integers(1, 12), st.integers(-5, 5).filter(bool), max_size=5)


def test_ramanujan_examples():
    assert all(ramanujan_sum(1, n) == 1 for n in range(1, 20))
    assert ramanujan_sum(6, 1) == 1
    assert [ramanujan_sum(6, n) for n in range(1, 7)] == [1, -1, -2, -1, 1, 2]
    with pytest.raises(DomainError):
        ramanujan_sum(0, 3)


def test_ramanujan_matches_root_of_unity_sum():
    for m in range(1, 13):
        for n in range(1, 13):
            direct = sum(cmath.exp(2j * cmath.pi * k * n / m) for k in range(1, m + 1) if gcd(k, m) == 1)
            assert abs(direct - ramanujan_sum(m, n)) < 1e-9


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_ghost_from_cyclo_examples():
    assert ghost_from_cyclo({1: -1}, N) == ghost([-1] * N)
    assert ghost_from_cyclo({2: 1}, N) == ghost([(-1) ** n for n in range(1, N + 1)])
    s = ghost_from_cyclo({1: -1, 2: -1}, N)
    assert s == ghost([-2 if n % 2 == 0 else 0 for n in range(1, N + 1)])
    assert s == ghost_from_euler({2: -1}, N)


def test_forward_product_matches_ramanujan_ghost():
    for e in ({2: 1}, {1: 1, 6: -6}, {3: 2, 4: -1, 5: 1}):
        assert sigma_from_coeffs(cyclo_product(e, 30)) == ghost_from_cyclo(e, 30)


def test_cyclo_fit_examples():
    s = ghost([-36 if n % 6 == 0 else 0 for n in range(1, N + 1)])
    e = cyclo_fit(s, 6)
    assert e == {1: -6, 2: -6, 3: -6, 6: -6}
    assert ghost_from_cyclo(e, N) == s
    assert cyclo_fit(ghost([-1] * N), 1) == {1: -1}
    with pytest.raises(NotCyclotomic):
        cyclo_fit(ghost([-(2**n - 1) for n in range(1, N + 1)]), 6)
    with pytest.raises(Indeterminate):
        cyclo_fit(ghost([1, 2, 3]), 6)


def test_cyclo_fit_rejects_non_integer_exponents():
    # s_n = [2 | n] is 2-periodic but needs exponent 1/2
    with pytest.raises(NotCyclotomic):
        cyclo_fit(ghost([int(n % 2 == 0) for n in range(1, N + 1)]), 2)


def test_exponent_conversions():
    assert euler_to_cyclo({6: -6}) == {1: -6, 2: -6, 3: -6, 6: -6}
    assert cyclo_to_euler({1: 1}) == {1: 1}
    assert coeffs_from_euler(cyclo_to_euler({1: 1}), 12) == cyclo_product({1: 1}, 12)
    assert euler_to_cyclo({}) == {}
    with pytest.raises(DomainError):
        euler_to_cyclo(lambda n: 1)


def test_rigidity_view_is_negated():
    assert rigidity_exponents({2: 3, 5: -1}) == {2: -3, 5: 1}


def test_doldplus_cyclotomic_examples():
    assert doldplus_cyclotomic_check(euler_to_cyclo({6: -6})).passed
    report = doldplus_cyclotomic_check(euler_to_cyclo({2: -1}))
    assert [w.p for w in report.witnesses] == [2]
    assert doldplus_cyclotomic_check({1: 7}).passed


def test_periodicity_examples():
    assert periodicity_check(ghost_from_cyclo({2: 1}, N), 2)
    assert periodicity_check(ghost([-36 if n % 6 == 0 else 0 for n in range(1, N + 1)]), 6)
    assert not periodicity_check(ghost(range(1, N + 1)), 5)


def test_ramanujan_orthogonality_table():
    for m in range(1, 61):
        for d in divisors(m):
            for e in divisors(m):
                total = sum(ramanujan_sum(d, n) * ramanujan_sum(e, n) for n in range(1, m + 1))
                assert total == (m * euler_phi(d) if d == e else 0)


def test_ramanujan_multiplicativity_table():
    for m1 in range(1, 31):
        for m2 in range(1, 31):
            if gcd(m1, m2) == 1:
                for n in range(1, 61):
                    assert ramanujan_sum(m1 * m2, n) == ramanujan_sum(m1, n) * ramanujan_sum(m2, n)


@given(cyclo_maps)
def test_fit_round_trip(e):
    M = lcm_all(e) if e else 1
    s = ghost_from_cyclo(e, max(M, 2 * 12))
    assert cyclo_fit(s, M) == dict(sorted(e.items()))
    assert periodicity_check(s, M)


@given(cyclo_maps)
def test_normalized_product_is_integral(e):
    a = cyclo_product(e, 30)
    assert a[0] == 1 and a.is_integral()


@given(cyclo_maps)
def test_exponent_conversions_invert(e):
    f = cyclo_to_euler(e)
    assert euler_to_cyclo(f) == dict(sorted(e.items()))
    assert coeffs_from_euler(f, 30) == cyclo_product(e, 30)


@given(cyclo_maps)
def test_primewise_criterion_matches_direct_check(e):
    # exponents live on n <= 12, so a 48-term window covers every a with p^a m <= 48
    direct = check_dold_plus(ghost_from_cyclo(e, 48)).passed
    assert doldplus_cyclotomic_check(e).passed == direct
