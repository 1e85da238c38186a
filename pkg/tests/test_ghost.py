from fractions import Fraction

from hypothesis import given

from wittghost.dynamics import doubling_fix
from wittghost.ghost import (
    coeffs_from_euler,
    euler_from_coeffs,
    euler_from_ghost,
    ghost,
    ghost_from_euler,
    master_recurrence_residuals,
    sigma_from_coeffs,
    sigma_inverse,
)
from wittghost.series import series, series_inv, series_mul

from conftest import euler_maps, unit_series

N = 12


def test_sigma_examples():
    assert sigma_from_coeffs(series([1], N)) == ghost([0] * N)
    assert sigma_from_coeffs(series([1] * (N + 1))) == ghost([-1] * N)
    doubling = series([1] + [2 ** (n - 1) for n in range(1, N + 1)])
    assert sigma_from_coeffs(doubling) == ghost([-(2**n - 1) for n in range(1, N + 1)])


def test_sigma_inverse_examples():
    assert list(sigma_inverse(ghost([0] * N))) == [1] + [0] * N
    assert list(sigma_inverse(ghost([-1] * N))) == [1] * (N + 1)
    zeta = sigma_inverse(-doubling_fix(N))
    assert list(zeta) == [1] + [2 ** (n - 1) for n in range(1, N + 1)]
    # (1-q)/(1-2q) directly
    assert zeta == series_mul(series([1, -1], N), series_inv(series([1, -2], N)))


def test_ghost_from_euler_examples():
    assert ghost_from_euler({1: -1}, N) == ghost([-1] * N)
    assert ghost_from_euler({6: -6}, 18) == ghost([-36 if n % 6 == 0 else 0 for n in range(1, 19)])
    s = ghost_from_euler({2: 1, 3: 1}, 6)
    assert (s[1], s[2], s[3], s[6]) == (0, 2, 3, 5)


def test_euler_from_ghost_examples():
    assert euler_from_ghost(ghost([-1] * N)) == {1: -1}
    lucas = ghost([1, 3, 4, 7, 11, 18, 29, 47])
    assert [euler_from_ghost(lucas)[n] for n in range(1, 9)] == [1, 1, 1, 1, 2, 2, 4, 5]
    assert euler_from_ghost(ghost([int(n % 2 == 0) for n in range(1, N + 1)])) == {2: Fraction(1, 2)}


def test_euler_from_coeffs_examples():
    f = euler_from_coeffs(series([1, -1, -1], 8))
    assert [f[n] for n in range(1, 9)] == [1, 1, 1, 1, 2, 2, 4, 5]
    assert euler_from_coeffs(series([1, 0, 0, -2, 0, 0, 1], 12)) == {3: 2}
    mixed = series_mul(series([1, -1], N), series_inv(series([1, 0, -1], N)))
    assert euler_from_coeffs(mixed) == {1: 1, 2: -1}


def test_coeffs_from_euler_examples():
    assert list(coeffs_from_euler({}, 5)) == [1, 0, 0, 0, 0, 0]
    a = coeffs_from_euler({1: -3, 2: -1}, N)
    cube = series_inv(series_mul(series_mul(series([1, -1], N), series([1, -1], N)), series([1, -1], N)))
    assert a == series_mul(cube, series_inv(series([1, 0, -1], N)))
    half = coeffs_from_euler({2: Fraction(1, 2)}, 6)
    assert list(half)[:5] == [1, 0, Fraction(-1, 2), 0, Fraction(-1, 8)]
    assert all(d & (d - 1) == 0 for d in half.denominators())


def test_rational_exponents_delegate_to_ghost_path():
    a = coeffs_from_euler({2: Fraction(1, 2), 3: -1}, N)
    assert euler_from_coeffs(a) == {2: Fraction(1, 2), 3: -1}


@given(euler_maps(max_index=24, bound=9))
def test_euler_round_trip(f):
    f = {d: v for d, v in f.items() if v}
    a = coeffs_from_euler(f, 48)
    assert euler_from_coeffs(a) == f
    assert euler_from_ghost(sigma_from_coeffs(a)) == f


@given(unit_series(), unit_series())
def test_sigma_is_additive(a, b):
    A, B = series(a), series(b)
    assert sigma_from_coeffs(series_mul(A, B)) == sigma_from_coeffs(A) + sigma_from_coeffs(B)


@given(unit_series(20))
def test_master_recurrence_vanishes(a):
    A = series(a)
    S = sigma_from_coeffs(A)
    assert all(r == 0 for r in master_recurrence_residuals(A, S))
    assert sigma_inverse(S) == A


@given(unit_series(20))
def test_two_exponent_algorithms_agree(a):
    A = series(a)
    assert euler_from_coeffs(A) == euler_from_ghost(sigma_from_coeffs(A))
