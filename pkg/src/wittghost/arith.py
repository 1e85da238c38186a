"""Exact arithmetic-function kernels.

Everything here works on Python ints and :class:`fractions.Fraction`; nothing
ever rounds. Factorizations use trial division behind an ``lru_cache``, which is
plenty for the desk-scale indices (n <= 10**6) used throughout the package.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = [
    "as_fraction",
    "is_integral",
    "factorize",
    "divisors",
    "mobius",
    "euler_phi",
    "is_prime",
    "primes_up_to",
    "vp",
    "lcm",
    "lcm_all",
    "gen_binomial",
    "solve_linear",
]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction; floats are refused."""
    if isinstance(x, bool):
        raise DomainError("booleans are not numbers here")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not an exact rational: {x!r}") from exc
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise DomainError(f"refusing inexact or unknown numeric type {type(x).__name__}")


def is_integral(x) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    integral = getattr(x, "is_integral", None)
    if integral is not None:
        return integral()
    return as_fraction(x).denominator == 1


def _check_positive(n: int, what: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"{what} must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"{what} must be >= 1, got {n}")


@lru_cache(maxsize=None)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
    p = 5
    step = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
        p += step
        step = 6 - step
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{p: exponent}``; ``factorize(1) == {}``."""
    _check_positive(n)
    return dict(_factor(n))


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, k in _factor(n):
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in ascending order."""
    _check_positive(n)
    return list(_divisors(n))


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    f = _factor(n)
    if any(k > 1 for _, k in f):
        return 0
    return -1 if len(f) % 2 else 1


def mobius(n: int) -> int:
    _check_positive(n)
    return _mobius(n)


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    r = n
    for p, _ in _factor(n):
        r -= r // p
    return r


def euler_phi(n: int) -> int:
    _check_positive(n)
    return _phi(n)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factor(n) == ((n, 1),)


@lru_cache(maxsize=64)
def _sieve(n: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_up_to(n: int) -> list[int]:
    return list(_sieve(n))


def vp(x, p: int) -> float | int:
    """p-adic valuation of a nonzero rational; ``inf`` for zero."""
    x = as_fraction(x)
    if x == 0:
        return float("inf")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out


def gen_binomial(e: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient ``C(e, k)`` for rational ``e``."""
    out = Fraction(1)
    for i in range(k):
        out = out * (e - i) / (i + 1)
    return out


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    rows = [[as_fraction(v) for v in row] + [as_fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise DomainError("singular linear system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [row[n] for row in rows]
