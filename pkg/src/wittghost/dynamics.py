"""Artin-Mazur zeta functions from fixed-point counts.

``zeta_f(q) = exp(sum Fix_n q^n / n)``, so the ghost of ``zeta_f`` is ``-Fix``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import as_fraction
from .errors import DomainError, NotHyperbolicAtLevel
from .ghost import GhostSeq, euler_from_ghost, sigma_from_coeffs, sigma_inverse
from .series import TruncSeries, series, series_inv, series_mul
from .witt import hadamard, witt_product_series

__all__ = [
    "IntMatrix",
    "OrbitCounts",
    "matrix",
    "charpoly",
    "det_one_minus",
    "fix_from_matrix",
    "zeta_from_fix",
    "zeta_det_identity_check",
    "orbit_counts",
    "product_law_check",
    "toral_fix",
    "doubling_fix",
]

IntMatrix = tuple  # tuple of equal-length tuples of ints


def matrix(rows: Sequence[Sequence]) -> IntMatrix:
    out = tuple(tuple(_int(v) for v in row) for row in rows)
    if not out or any(len(row) != len(out) for row in out):
        raise DomainError("matrix must be square and non-empty")
    return out


def _int(v) -> int:
    f = as_fraction(v)
    if f.denominator != 1:
        raise DomainError(f"matrix entry {v} is not an integer")
    return int(f)


def _matmul(x: IntMatrix, y: IntMatrix) -> IntMatrix:
    cols = list(zip(*y))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in x)


def _identity(d: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def charpoly(m: IntMatrix) -> list[int]:
    """Coefficients ``[1, c_1, ..., c_d]`` of ``det(xI - M)`` by Faddeev-LeVerrier."""
    m = matrix(m)
    d = len(m)
    coeffs = [1]
    aux = _identity(d)  # M_k with M_1 = I
    for k in range(1, d + 1):
        prod = _matmul(m, aux)
        trace = sum(prod[i][i] for i in range(d))
        c = -Fraction(trace, k)
        if c.denominator != 1:
            raise AssertionError("Faddeev-LeVerrier produced a non-integer coefficient")
        coeffs.append(int(c))
        aux = tuple(tuple(prod[i][j] + (int(c) if i == j else 0) for j in range(d)) for i in range(d))
    return coeffs


def det_one_minus(m: IntMatrix, order: int) -> TruncSeries:
    """``det(I - qM) = 1 + c_1 q + ... + c_d q^d`` from the characteristic polynomial."""
    return series(charpoly(m), order)


def _det(m: IntMatrix) -> int:
    return (-1) ** len(m) * charpoly(m)[-1]


def fix_from_matrix(m: IntMatrix, order: int) -> GhostSeq:
    """``Fix_n = tr(M^n)``."""
    m = matrix(m)
    d = len(m)
    out, power = [], _identity(d)
    for _ in range(order):
        power = _matmul(power, m)
        out.append(sum(power[i][i] for i in range(d)))
    return GhostSeq(tuple(out))


def doubling_fix(order: int) -> GhostSeq:
    """Fixed points of the doubling map on the circle: ``2^n - 1``."""
    return GhostSeq(tuple(2**n - 1 for n in range(1, order + 1)))


def zeta_from_fix(fix: GhostSeq) -> TruncSeries:
    return sigma_inverse(-fix)


def zeta_det_identity_check(m: IntMatrix, order: int) -> bool:
    """``zeta * det(I - qM) = 1`` through ``order``."""
    zeta = zeta_from_fix(fix_from_matrix(m, order))
    prod = series_mul(zeta, det_one_minus(m, order))
    return list(prod) == [1] + [0] * order


@dataclass(frozen=True)
class OrbitCounts:
    counts: dict  # d -> number of periodic orbits of least period d
    integral: bool
    nonnegative: bool

    @property
    def verdict(self) -> str:
        if not self.integral:
            return "not a fixed-point sequence"
        return "realizable" if self.nonnegative else "virtual"


def orbit_counts(fix: GhostSeq) -> OrbitCounts:
    """``P_d`` with ``Fix_n = sum_{d|n} d P_d``."""
    counts = euler_from_ghost(fix)
    integral = all(v.denominator == 1 for v in counts.values())
    return OrbitCounts(counts, integral, all(v >= 0 for v in counts.values()))


def product_law_check(fix_f: GhostSeq, fix_g: GhostSeq, order: int) -> bool:
    """Product system: ``sigma(zeta_{fxg}) = -(sigma zeta_f * sigma zeta_g)`` and ``zeta_{fxg} = (zeta_f [x] zeta_g)^{-1}``."""
    fix_f, fix_g = fix_f.truncate(order), fix_g.truncate(order)
    zeta_prod = zeta_from_fix(hadamard(fix_f, fix_g))
    zf, zg = zeta_from_fix(fix_f), zeta_from_fix(fix_g)
    ghost_side = sigma_from_coeffs(zeta_prod) == -hadamard(sigma_from_coeffs(zf), sigma_from_coeffs(zg))
    series_side = zeta_prod == series_inv(witt_product_series(zf, zg))
    return ghost_side and series_side


def toral_fix(m: IntMatrix, order: int) -> GhostSeq:
    """``Fix_n = |det(I - M^n)|``; a zero determinant raises :class:`NotHyperbolicAtLevel`."""
    m = matrix(m)
    d = len(m)
    ident = _identity(d)
    out, power = [], ident
    for n in range(1, order + 1):
        power = _matmul(power, m)
        diff = tuple(tuple(ident[i][j] - power[i][j] for j in range(d)) for i in range(d))
        det = _det(diff)
        if det == 0:
            raise NotHyperbolicAtLevel(n)
        out.append(abs(det))
    return GhostSeq(tuple(out))
