"""The ghost map and its inverse, plus Euler-exponent coordinates.

Conventions used everywhere in the package:

* ``sigma(A) = -q A'(q) / A(q) = sum_{n>=1} s_n q^n`` (ghost sequence).
* ``A = prod_{d>=1} (1 - q^d)^{f(d)}`` (Euler exponents), so that
  ``s_n = sum_{d|n} d f(d)``.

Ghost coefficients and series coefficients are linked by
``n a(n) = -sum_{i=1}^n s_i a(n-i)``, which is what :func:`sigma_from_coeffs`
solves for ``s_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .arith import as_fraction, divisors, is_integral, mobius
from .errors import DomainError
from .series import TruncSeries, binomial_factor, one, series_exp, series_mul

__all__ = [
    "GhostSeq",
    "ghost",
    "ghost_from_function",
    "prune",
    "sigma_from_coeffs",
    "sigma_inverse",
    "ghost_from_euler",
    "euler_from_ghost",
    "euler_from_coeffs",
    "coeffs_from_euler",
    "master_recurrence_residuals",
]


def _coerce(v):
    if hasattr(v, "conj"):  # quadratic-ring element
        return v
    return as_fraction(v)


@dataclass(frozen=True)
class GhostSeq:
    """Ghost values ``s_1..s_N``; indexing is 1-based (``S[1]`` is ``s_1``)."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_coerce(v) for v in self.values))

    @property
    def order(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, n: int):
        if not isinstance(n, int) or n < 1 or n > len(self.values):
            raise IndexError(f"ghost index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def truncate(self, order: int) -> GhostSeq:
        if order > self.order:
            raise DomainError(f"ghost known through {self.order}, asked for {order}")
        return GhostSeq(self.values[:order])

    def is_integral(self) -> bool:
        return all(is_integral(v) for v in self.values)

    def __add__(self, other: GhostSeq) -> GhostSeq:
        return GhostSeq(tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> GhostSeq:
        return GhostSeq(tuple(-a for a in self.values))

    def __sub__(self, other: GhostSeq) -> GhostSeq:
        return self + (-other)

    def scale(self, k) -> GhostSeq:
        k = as_fraction(k)
        return GhostSeq(tuple(v * k for v in self.values))

    def __repr__(self) -> str:
        shown = ", ".join(str(v) for v in self.values[:8])
        tail = ", ..." if len(self.values) > 8 else ""
        return f"GhostSeq([{shown}{tail}], order={self.order})"


def ghost(values: Iterable) -> GhostSeq:
    return GhostSeq(tuple(values))


def ghost_from_function(fn: Callable[[int], object], order: int) -> GhostSeq:
    return GhostSeq(tuple(fn(n) for n in range(1, order + 1)))


def prune(f: Mapping) -> dict:
    """Drop zero entries and sort by key; the canonical sparse-exponent form."""
    return {k: v for k, v in sorted(f.items()) if v != 0}


def sigma_from_coeffs(a: TruncSeries) -> GhostSeq:
    """Ghost sequence of ``A`` through ``A.order`` via the master recurrence."""
    if a[0] != 1:
        raise DomainError("sigma needs constant term 1")
    n_max = a.order
    s = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = -n * a[n]
        for i in range(1, n):
            if s[i] and a[n - i]:
                acc -= s[i] * a[n - i]
        s[n] = acc
    return GhostSeq(tuple(s[1:]))


def master_recurrence_residuals(a: TruncSeries, s: GhostSeq) -> list:
    """``n a(n) + sum_{i=1}^n s_i a(n-i)`` for n = 1..N; all zero for a genuine pair."""
    n_max = min(a.order, s.order)
    return [
        n * a[n] + sum((s[i] * a[n - i] for i in range(1, n + 1)), Fraction(0))
        for n in range(1, n_max + 1)
    ]


def sigma_inverse(s: GhostSeq) -> TruncSeries:
    """``exp(-sum s_n q^n / n)``."""
    log_coeffs = [Fraction(0)] + [-as_fraction(v) / n for n, v in enumerate(s.values, start=1)]
    return series_exp(TruncSeries(tuple(log_coeffs)))


def _zero_like(f: Mapping):
    for v in f.values():
        return v * 0
    return Fraction(0)


def ghost_from_euler(f: Mapping, order: int) -> GhostSeq:
    """``s_n = sum_{d|n} d f(d)`` for n = 1..order."""
    zero = _zero_like(f)
    items = [(d, _coerce(v)) for d, v in f.items() if d <= order]
    s = [zero] * (order + 1)
    for d, v in items:
        if d < 1:
            raise DomainError(f"Euler exponent index must be >= 1, got {d}")
        term = v * d
        for n in range(d, order + 1, d):
            s[n] = s[n] + term
    return GhostSeq(tuple(s[1:]))


def euler_from_ghost(s: GhostSeq) -> dict:
    """Moebius inversion ``f(n) = (1/n) sum_{d|n} mu(d) s_{n/d}`` over the fraction field.

    Non-integral values are returned as data; whether they occur is exactly the
    Dold question.
    """
    out = {}
    for n in range(1, s.order + 1):
        acc = None
        for d in divisors(n):
            mu = mobius(d)
            if mu:
                term = s[n // d] * mu
                acc = term if acc is None else acc + term
        val = acc / n
        if val != 0:
            out[n] = val
    return out


def coeffs_from_euler(f: Mapping, order: int) -> TruncSeries:
    """``prod_d (1 - q^d)^{f(d)}`` through ``q^order``; rational exponents allowed."""
    acc = one(order)
    for d, e in sorted(f.items()):
        if d < 1:
            raise DomainError(f"Euler exponent index must be >= 1, got {d}")
        e = as_fraction(e)
        if d > order or e == 0:
            continue
        acc = series_mul(binomial_factor(d, e, order), acc)
    return acc


def euler_from_coeffs(a: TruncSeries) -> dict:
    """Euler exponents of ``A`` by stripping factors ``(1 - q^n)^{f(n)}`` one degree at a time.

    This is an algorithm independent of :func:`euler_from_ghost`. When a stripped
    exponent comes out non-integral the routine hands over to
    ``euler_from_ghost(sigma_from_coeffs(A))``.
    """
    if a[0] != 1:
        raise DomainError("Euler exponents need constant term 1")
    n_max = a.order
    b = a
    out = {}
    for n in range(1, n_max + 1):
        bn = b[n]
        if bn == 0:
            continue
        if bn.denominator != 1:
            return euler_from_ghost(sigma_from_coeffs(a))
        # B = 1 + b_n q^n + ...  ==>  f(n) = -b_n; divide out (1 - q^n)^{f(n)}
        out[n] = -bn
        b = series_mul(binomial_factor(n, bn, n_max), b)
    return out
