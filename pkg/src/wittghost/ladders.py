"""Frobenius ladders, progression zeros and valuation transfer over the integers."""
from __future__ import annotations

from dataclasses import dataclass

from .arith import vp
from .errors import DomainError, HypothesisNotMet
from .ghost import sigma_from_coeffs
from .series import TruncSeries, series_inv, series_mul, series_pow, substitute_power

__all__ = [
    "LadderReport",
    "frobenius_ladder_check",
    "progression_zero_check",
    "ladder_quotient",
    "frobenius_step_check",
    "coprime_zero_check",
    "valuation_transfer_check",
]


@dataclass(frozen=True)
class LadderReport:
    """Outcome of a coefficientwise congruence; ``failures`` holds ``(n, lhs, rhs)`` reduced mod ``p^a``."""

    p: int
    a: int
    checked_range: int
    failures: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "verdict": "pass" if self.passed else "fail",
            "checked_range": self.checked_range,
            "failures": [[n, str(x), str(y)] for n, x, y in self.failures],
        }


def _mul_mod(x: list[int], y: list[int], modulus: int) -> list[int]:
    n = len(x)
    out = [0] * n
    for i, xi in enumerate(x):
        if xi:
            for j in range(n - i):
                out[i + j] += xi * y[j]
    return [c % modulus for c in out]


def _pow_mod(coeffs: list[int], e: int, modulus: int) -> list[int]:
    """Truncated power of an integer series with every coefficient reduced mod ``modulus``."""
    result = [1 % modulus] + [0] * (len(coeffs) - 1)
    base = [c % modulus for c in coeffs]
    while e:
        if e & 1:
            result = _mul_mod(result, base, modulus)
        e >>= 1
        if e:
            base = _mul_mod(base, base, modulus)
    return result


def _residues(a_series: TruncSeries) -> list[int]:
    return [int(c) for c in a_series.coeffs]


def _check_input(a_series: TruncSeries, p: int, level: int) -> int:
    if not a_series.is_integral():
        raise DomainError("ladder checks need integer coefficients")
    if a_series[0] != 1:
        raise DomainError("ladder checks need constant term 1")
    if p < 2 or level < 1:
        raise DomainError("need a prime p and a level a >= 1")
    power = p**level
    if power > a_series.order:
        raise DomainError(f"p^a = {power} exceeds the window {a_series.order}")
    return power


def frobenius_ladder_check(a_series: TruncSeries, p: int, level: int) -> LadderReport:
    """``A(q)^{p^a} == A(q^{p^a}) (mod p^a)`` coefficient by coefficient."""
    power = _check_input(a_series, p, level)
    lhs = _pow_mod(_residues(a_series), power, power)
    rhs = [c % power for c in _residues(substitute_power(a_series, power))]
    failures = tuple((n, lhs[n], rhs[n]) for n in range(a_series.order + 1) if (lhs[n] - rhs[n]) % power)
    return LadderReport(p, level, a_series.order, failures)


def progression_zero_check(a_series: TruncSeries, p: int, level: int) -> LadderReport:
    """``[q^n] A^{p^a} == 0 (mod p^a)`` for every ``n`` not divisible by ``p^a``."""
    power = _check_input(a_series, p, level)
    lhs = _pow_mod(_residues(a_series), power, power)
    failures = tuple((n, lhs[n], 0) for n in range(1, a_series.order + 1) if n % power and lhs[n])
    return LadderReport(p, level, a_series.order, failures)


def ladder_quotient(a_series: TruncSeries, p: int, level: int) -> TruncSeries:
    """``A^{p^a} / A(q^{p^a})``, which is ``1 (mod p^a)`` when the ladder holds."""
    power = _check_input(a_series, p, level)
    return series_mul(series_pow(a_series, power), series_inv(substitute_power(a_series, power)))


def frobenius_step_check(a_series: TruncSeries, p: int, level: int) -> LadderReport:
    """``A(q)^{p^a} == A(q^p)^{p^{a-1}} (mod p^a)``, the one-rung-at-a-time ladder."""
    power = _check_input(a_series, p, level)
    lhs = _pow_mod(_residues(a_series), power, power)
    rhs = _pow_mod(_residues(substitute_power(a_series, p)), power // p, power)
    failures = tuple((n, lhs[n], rhs[n]) for n in range(a_series.order + 1) if (lhs[n] - rhs[n]) % power)
    return LadderReport(p, level, a_series.order, failures)


def coprime_zero_check(a_series: TruncSeries, p: int, level: int) -> LadderReport:
    """``[q^n] A^{p^a} == 0 (mod p^a)`` for every ``n`` prime to ``p``."""
    power = _check_input(a_series, p, level)
    lhs = _pow_mod(_residues(a_series), power, power)
    failures = tuple((n, lhs[n], 0) for n in range(1, a_series.order + 1) if n % p and lhs[n])
    return LadderReport(p, level, a_series.order, failures)


def valuation_transfer_check(a_series: TruncSeries, p: int, r: int) -> bool:
    """If ``p^r | s_i`` for all ``i`` prime to ``p``, then ``p^r | a(n)`` for all ``n`` prime to ``p``.

    Raises :class:`HypothesisNotMet` when the ghost condition fails.
    """
    if not a_series.is_integral() or a_series[0] != 1:
        raise DomainError("valuation transfer needs an integral series with constant term 1")
    s = sigma_from_coeffs(a_series)
    for i in range(1, s.order + 1):
        if i % p and vp(s[i], p) < r:
            raise HypothesisNotMet(f"p^{r} does not divide s_{i} = {s[i]}", i)
    return all(vp(a_series[n], p) >= r for n in range(1, a_series.order + 1) if n % p)
