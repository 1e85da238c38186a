"""Ramanujan sums and cyclotomic exponent coordinates.

A cyclotomic product is ``A = prod_m Phi_m(q)^{e(m)}`` with ``Phi_1`` taken as
``1 - q`` so that ``A(0) = 1``. Its ghost is ``s(n) = sum_m e(m) c_m(n)``, where
``c_m`` is the Ramanujan sum.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping

from .arith import as_fraction, divisors, euler_phi, factorize, is_integral, lcm_all, mobius
from .congruence import CongruenceReport, Witness
from .errors import DomainError, Indeterminate, NotCyclotomic
from .ghost import GhostSeq
from .series import TruncSeries, one, series_inv, series_mul, series

__all__ = [
    "ramanujan_sum",
    "cyclotomic_polynomial",
    "cyclo_product",
    "ghost_from_cyclo",
    "cyclo_fit",
    "cyclo_to_euler",
    "euler_to_cyclo",
    "rigidity_exponents",
    "doldplus_cyclotomic_check",
    "periodicity_check",
]


@lru_cache(maxsize=None)
def _ramanujan(m: int, n: int) -> int:
    g = gcd(m, n)
    return sum(mobius(m // d) * d for d in divisors(g))


def ramanujan_sum(m: int, n: int) -> int:
    """``c_m(n) = sum_{d | gcd(m,n)} mu(m/d) d``."""
    if m < 1 or n < 1:
        raise DomainError("Ramanujan sums need m, n >= 1")
    return _ramanujan(m, n)


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    # x^m - 1 divided by Phi_d for every proper divisor d; coefficients lowest first
    num = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        den = _cyclotomic(d)
        quot = [0] * (len(num) - len(den) + 1)
        rem = list(num)
        for i in range(len(quot) - 1, -1, -1):
            quot[i] = rem[i + len(den) - 1]  # divisor is monic
            for j, c in enumerate(den):
                rem[i + j] -= quot[i] * c
        num = quot
    return tuple(num)


def cyclotomic_polynomial(m: int) -> list[int]:
    """Coefficients of ``Phi_m(x)``, lowest degree first (``Phi_1 = x - 1``)."""
    if m < 1:
        raise DomainError("cyclotomic index must be >= 1")
    return list(_cyclotomic(m))


def _normalized_factor(m: int, order: int) -> TruncSeries:
    coeffs = [1, -1] if m == 1 else cyclotomic_polynomial(m)
    return series(coeffs, order)


def _check_exponents(e: Mapping) -> dict:
    out = {}
    for m, v in e.items():
        if not isinstance(m, int) or m < 1:
            raise DomainError(f"cyclotomic index must be a positive integer, got {m!r}")
        v = as_fraction(v)
        if v:
            out[m] = v
    return dict(sorted(out.items()))


def cyclo_product(e: Mapping, order: int) -> TruncSeries:
    """``prod_m Phi_m^{e(m)}`` with ``Phi_1 -> 1 - q``; integer exponents only."""
    acc = one(order)
    for m, v in _check_exponents(e).items():
        if v.denominator != 1:
            raise DomainError("cyclotomic exponents must be integers to build the product")
        factor = _normalized_factor(m, order)
        if v < 0:
            factor = series_inv(factor)
        for _ in range(abs(int(v))):
            acc = series_mul(factor, acc)
    return acc


def ghost_from_cyclo(e: Mapping, order: int) -> GhostSeq:
    """``s(n) = sum_m e(m) c_m(n)``; each ``c_m`` is tabulated over one period."""
    e = _check_exponents(e)
    total = [Fraction(0)] * order
    for m, v in e.items():
        table = [_ramanujan(m, r or m) for r in range(m)]
        total = [t + v * table[n % m] for n, t in enumerate(total, start=1)]
    return GhostSeq(tuple(total))


def cyclo_fit(s: GhostSeq, period: int) -> dict:
    """Cyclotomic exponents on the divisors of ``period`` reproducing ``s`` exactly.

    The ghost must be periodic and depend on n only through ``gcd(n, period)``;
    the exponents then come from Ramanujan orthogonality,
    ``e(d) = (1/(M phi(d))) sum_{g|M} phi(M/g) s(g) c_d(g)``.
    """
    n_max, M = s.order, period
    if M < 1:
        raise DomainError("period must be >= 1")
    if n_max < M:
        raise Indeterminate(f"window {n_max} is shorter than the period {M}")
    for n in range(M + 1, n_max + 1):
        if s[n] != s[n - M]:
            raise NotCyclotomic(f"not {M}-periodic", n)
    for n in range(1, M + 1):
        g = gcd(n, M)
        if s[n] != s[g]:
            raise NotCyclotomic(f"value depends on more than gcd(n, {M})", n)
    fitted = {}
    divs = divisors(M)
    for d in divs:
        acc = sum((euler_phi(M // g) * s[g] * _ramanujan(d, g) for g in divs), Fraction(0))
        val = acc / (M * euler_phi(d))
        if val.denominator != 1:
            raise NotCyclotomic(f"exponent at {d} is {val}, not an integer")
        if val:
            fitted[d] = val
    rebuilt = ghost_from_cyclo(fitted, n_max)
    for n in range(1, n_max + 1):
        if rebuilt[n] != s[n]:
            raise NotCyclotomic("fitted product does not reproduce the ghost", n)
    return fitted


def euler_to_cyclo(f: Mapping) -> dict:
    """``e(m) = sum_k f(km)`` for finitely supported Euler exponents."""
    if not isinstance(f, Mapping):
        raise DomainError("Euler exponents must be a finitely supported mapping")
    f = {d: as_fraction(v) for d, v in f.items() if v}
    e: dict = {}
    for d, v in f.items():
        for m in divisors(d):
            e[m] = e.get(m, Fraction(0)) + v
    return {m: v for m, v in sorted(e.items()) if v}


def cyclo_to_euler(e: Mapping, order: int | None = None) -> dict:
    """``f(n) = sum_k mu(k) e(kn)``; the support is finite, so ``order`` only trims."""
    e = _check_exponents(e)
    top = max(e, default=0)
    f = {}
    for n in range(1, top + 1):
        acc = sum((mobius(k) * e.get(k * n, 0) for k in range(1, top // n + 1)), Fraction(0))
        if acc and (order is None or n <= order):
            f[n] = acc
    return f


def rigidity_exponents(e: Mapping) -> dict:
    """The view ``E_m = -e(m)``, for products written as ``prod Phi_m^{-E_m}``."""
    return {m: -v for m, v in _check_exponents(e).items()}


def doldplus_cyclotomic_check(e: Mapping) -> CongruenceReport:
    """Prime-wise test: ``p | e(m)`` for every prime ``p | m`` on the support."""
    e = _check_exponents(e)
    witnesses = []
    for m, v in e.items():
        if not is_integral(v):
            raise DomainError("cyclotomic exponents must be integers")
        for p, a in factorize(m).items():
            if int(v) % p:
                witnesses.append(Witness(p, a, m, p, v, Fraction(0)))
    return CongruenceReport("dold-plus-cyclotomic", lcm_all(e) if e else 1, tuple(witnesses))


def periodicity_check(s: GhostSeq, period: int) -> bool:
    """``s_{n+M} = s_n`` wherever both sides are in the window."""
    if period < 1:
        raise DomainError("period must be >= 1")
    return all(s[n] == s[n - period] for n in range(period + 1, s.order + 1))
