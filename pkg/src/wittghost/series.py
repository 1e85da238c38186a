"""Truncated formal power series with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .arith import as_fraction
from .errors import DomainError

DEFAULT_ORDER = 64

__all__ = [
    "DEFAULT_ORDER",
    "TruncSeries",
    "series",
    "one",
    "series_add",
    "series_mul",
    "series_inv",
    "series_log",
    "series_exp",
    "series_pow",
    "substitute_power",
    "binomial_factor",
]


@dataclass(frozen=True)
class TruncSeries:
    """Coefficients ``a(0..N)`` of a power series known exactly through ``q^N``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise DomainError(f"cannot extend a series known through {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def denominators(self) -> set[int]:
        return {c.denominator for c in self.coeffs}

    def __add__(self, other: TruncSeries) -> TruncSeries:
        return series_add(self, other)

    def __neg__(self) -> TruncSeries:
        return TruncSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return series_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        k = as_fraction(other)
        return TruncSeries(tuple(k * c for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e) -> TruncSeries:
        return series_pow(self, e)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"TruncSeries([{shown}{tail}], order={self.order})"


def series(coeffs: Iterable, order: int | None = None) -> TruncSeries:
    """Build a series from leading coefficients, zero-padding (or cutting) to ``order``."""
    cs = [as_fraction(c) for c in coeffs]
    if order is None:
        order = len(cs) - 1
    if order < 0:
        raise DomainError("order must be >= 0")
    cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
    return TruncSeries(tuple(cs))


def one(order: int = DEFAULT_ORDER) -> TruncSeries:
    return series([1], order)


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    return TruncSeries(tuple(a[i] + b[i] for i in range(n + 1)))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product, valid through ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    nz = [(i, x) for i, x in enumerate(ac[: n + 1]) if x]
    out = [Fraction(0)] * (n + 1)
    for i, x in nz:
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncSeries(tuple(out))


def series_inv(a: TruncSeries) -> TruncSeries:
    if a[0] == 0:
        raise DomainError("series with zero constant term is not invertible")
    n = a.order
    inv0 = 1 / a[0]
    out = [inv0]
    for k in range(1, n + 1):
        acc = sum((a[i] * out[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
        out.append(-acc * inv0)
    return TruncSeries(tuple(out))


def series_log(a: TruncSeries) -> TruncSeries:
    """``log A`` for ``A(0) = 1``, from the coefficient recurrence of ``A' = A L'``."""
    if a[0] != 1:
        raise DomainError("log needs constant term 1")
    n = a.order
    # k*l_k = k*a_k - sum_{j=1}^{k-1} j*l_j*a_{k-j}
    jl = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        acc = k * a[k]
        for j in range(1, k):
            if jl[j] and a[k - j]:
                acc -= jl[j] * a[k - j]
        jl[k] = acc
    return TruncSeries((Fraction(0),) + tuple(jl[k] / k for k in range(1, n + 1)))


def series_exp(l: TruncSeries) -> TruncSeries:
    """``exp L`` for ``L(0) = 0``, from ``k*b_k = sum_{j=1}^k j*l_j*b_{k-j}``."""
    if l[0] != 0:
        raise DomainError("exp needs zero constant term")
    n = l.order
    jl = [j * l[j] for j in range(n + 1)]
    out = [Fraction(1)]
    for k in range(1, n + 1):
        acc = sum((jl[j] * out[k - j] for j in range(1, k + 1) if jl[j]), Fraction(0))
        out.append(acc / k)
    return TruncSeries(tuple(out))


def _int_pow(a: TruncSeries, e: int) -> TruncSeries:
    result = one(a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_pow(a: TruncSeries, e) -> TruncSeries:
    """``A**e`` for rational ``e``.

    Integer exponents use binary powering (and inversion when negative), so any
    nonzero constant term is fine. Other exponents need ``A(0) = 1`` and are
    computed as ``exp(e * log A)``.
    """
    e = as_fraction(e)
    if e.denominator == 1:
        k = e.numerator
        if k >= 0:
            return _int_pow(a, k)
        return series_inv(_int_pow(a, -k))
    if a[0] != 1:
        raise DomainError("non-integer powers need constant term 1")
    return series_exp(series_log(a) * e)


def substitute_power(a: TruncSeries, k: int) -> TruncSeries:
    """``A(q^k)`` through the same order as ``A``."""
    if not isinstance(k, int) or k < 1:
        raise DomainError("substitution power must be a positive integer")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for j in range(n // k + 1):
        out[j * k] = a[j]
    return TruncSeries(tuple(out))


def binomial_factor(d: int, e, order: int) -> TruncSeries:
    """``(1 - q^d)^e`` for rational ``e`` by the (generalized) binomial theorem."""
    if d < 1:
        raise DomainError("factor degree must be >= 1")
    e = as_fraction(e)
    out = [Fraction(0)] * (order + 1)
    c = Fraction(1)
    for j in range(order // d + 1):
        out[j * d] = c if j % 2 == 0 else -c
        c = c * (e - j) / (j + 1)
    return TruncSeries(tuple(out))

