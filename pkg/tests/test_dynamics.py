import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from wittghost.congruence import check_dold_tower
from wittghost.dynamics import (
    charpoly,
    det_one_minus,
    doubling_fix,
    fix_from_matrix,
    orbit_counts,
    product_law_check,
    toral_fix,
    zeta_det_identity_check,
    zeta_from_fix,
)
from wittghost.errors import NotHyperbolicAtLevel
from wittghost.ghost import ghost, sigma_from_coeffs
from wittghost.ladders import frobenius_ladder_check, frobenius_step_check
from wittghost.residues import ResidueData, find_recurrence, rational_reconstruct
from wittghost.series import series, series_inv, series_mul

FIB = ((1, 1), (1, 0))
N = 32


def test_fix_examples():
    assert list(fix_from_matrix(FIB, 6)) == [1, 3, 4, 7, 11, 18]
    assert list(fix_from_matrix([[1]], 5)) == [1] * 5
    assert list(fix_from_matrix([[2]], 5)) == [2, 4, 8, 16, 32]


def test_zeta_examples():
    assert zeta_from_fix(doubling_fix(N)) == series_mul(series([1, -1], N), series_inv(series([1, -2], N)))
    assert list(zeta_from_fix(ghost([0] * 6))) == [1] + [0] * 6
    assert zeta_from_fix(fix_from_matrix(FIB, N)) == series_inv(series([1, -1, -1], N))


def test_det_identity_examples():
    assert list(det_one_minus(FIB, 4)) == [1, -1, -1, 0, 0]
    assert zeta_det_identity_check(FIB, N)
    assert list(det_one_minus([[1]], 3)) == [1, -1, 0, 0]
    assert zeta_det_identity_check([[1]], N)


def test_random_det_identities():
    rng = random.Random(3)
    for _ in range(20):
        m = [[rng.randint(0, 1) for _ in range(3)] for _ in range(3)]
        assert zeta_det_identity_check(m, N)


def test_charpoly_matches_sympy():
    rng = random.Random(11)
    x = sympy.Symbol("x")
    for _ in range(10):
        m = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)]
        expected = sympy.Matrix(m).charpoly(x).all_coeffs()
        assert charpoly(m) == [int(c) for c in expected]


def test_orbit_examples():
    lucas = orbit_counts(fix_from_matrix(FIB, 8))
    assert [lucas.counts[n] for n in range(1, 9)] == [1, 1, 1, 1, 2, 2, 4, 5]
    assert lucas.nonnegative and lucas.verdict == "realizable"
    doubling = orbit_counts(doubling_fix(8))
    assert [doubling.counts[n] for n in range(1, 5)] == [1, 1, 2, 3]
    assert orbit_counts(ghost([0] * 5)).counts == {}
    assert orbit_counts(ghost([1, 2])).verdict == "not a fixed-point sequence"


def test_product_law_examples():
    point = ghost([1] * N)
    assert product_law_check(point, point, N)
    assert product_law_check(doubling_fix(N), point, N)
    assert product_law_check(fix_from_matrix(FIB, N), doubling_fix(N), N)


def test_toral_examples():
    assert list(toral_fix([[2, 1], [1, 1]], 5)) == [1, 5, 16, 45, 121]
    assert list(toral_fix([[2]], 6)) == [2**n - 1 for n in range(1, 7)]
    with pytest.raises(NotHyperbolicAtLevel) as info:
        toral_fix([[1, 0], [0, 1]], 4)
    assert info.value.level == 1


def test_doubling_residues():
    assert rational_reconstruct(sigma_from_coeffs(zeta_from_fix(doubling_fix(N)))) == ResidueData(
        [(2, 0, 1), (1, 0, -1)]
    )


def test_product_ghost_has_recurrence_of_product_poles():
    # L_n (2^n - 1) = (2 phi)^n + (2 psi)^n - phi^n - psi^n, four distinct roots
    fix = [a * b for a, b in zip(fix_from_matrix(FIB, N), doubling_fix(N))]
    coeffs = find_recurrence(ghost(fix))
    assert len(coeffs) == 4


matrices = st.integers(1, 4).flatmap(
    lambda d: st.lists(st.lists(st.integers(0, 1), min_size=d, max_size=d), min_size=d, max_size=d)
)


@given(matrices)
def test_shift_ghosts_are_dold_and_signed(m):
    fix = fix_from_matrix(m, N)
    assert check_dold_tower(fix).passed
    assert orbit_counts(fix).integral
    assert sigma_from_coeffs(zeta_from_fix(fix)) == -fix


@given(st.lists(st.lists(st.integers(-2, 3), min_size=2, max_size=2), min_size=2, max_size=2))
def test_toral_ghosts_are_dold(m):
    try:
        fix = toral_fix(m, 20)
    except NotHyperbolicAtLevel:
        return
    assert orbit_counts(fix).integral


@given(matrices, matrices)
def test_product_law_random_pairs(m1, m2):
    assert product_law_check(fix_from_matrix(m1, N), fix_from_matrix(m2, N), N)


@given(matrices, st.sampled_from([2, 3]))
def test_zeta_ladders(m, p):
    zeta = zeta_from_fix(fix_from_matrix(m, 64))
    assert frobenius_ladder_check(zeta, p, 1).passed
    assert frobenius_step_check(zeta, p, 2).passed
