"""Dold-type congruence verifiers over the integers.

Every check ranges over indices ``<= N`` (the ghost's order) and reports
``verified through N``; nothing here claims an infinite family holds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .arith import divisors, is_integral, mobius, primes_up_to
from .errors import DomainError
from .ghost import GhostSeq

__all__ = [
    "Witness",
    "CongruenceReport",
    "tower_indices",
    "check_dold_tower",
    "check_gauss_mobius",
    "check_dold_plus",
    "check_s_integral",
]


@dataclass(frozen=True)
class Witness:
    """One failed congruence ``lhs == rhs (mod modulus)``.

    For tower checks ``lhs = s_{p^a m}`` and ``rhs = s_{p^{a-1} m}``. For the
    Moebius form ``p = a = 0``, ``m = n``, ``lhs`` is the Moebius sum and ``rhs = 0``.
    ``ideal`` names the modulus when it is a prime-ideal power.
    """

    p: int
    a: int
    m: int
    modulus: int
    lhs: object
    rhs: object
    ideal: str | None = None

    @property
    def diff(self):
        return self.lhs - self.rhs

    @property
    def key(self) -> tuple:
        return (self.p, self.a, self.m, self.ideal or "")

    def as_dict(self) -> dict:
        out = {
            "p": self.p,
            "a": self.a,
            "m": self.m,
            "modulus": self.modulus,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "diff": str(self.diff),
        }
        if self.ideal is not None:
            out["ideal"] = self.ideal
        return out


@dataclass(frozen=True)
class CongruenceReport:
    kind: str
    checked_range: int
    witnesses: tuple = ()
    skipped: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "witnesses", tuple(sorted(self.witnesses, key=lambda w: w.key)))

    @property
    def passed(self) -> bool:
        return not self.witnesses

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "verdict": self.verdict,
            "checked_range": self.checked_range,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }
        if self.skipped:
            out["skipped"] = [str(s) for s in self.skipped]
        return out


def _integer_values(s: GhostSeq) -> list[int]:
    out = [0]
    for n, v in enumerate(s.values, start=1):
        if not is_integral(v):
            raise DomainError(f"ghost value s_{n} = {v} is not an integer")
        out.append(int(v))
    return out


def tower_indices(n_max: int, primes: Iterable[int] | None = None, levels: Iterable[int] | None = None):
    """Yield ``(p, a, m)`` with ``p^a m <= n_max`` and ``p`` not dividing ``m``."""
    primes = primes_up_to(n_max) if primes is None else sorted(primes)
    allowed = None if levels is None else set(levels)
    for p in primes:
        pa, a = p, 1
        while pa <= n_max:
            if allowed is None or a in allowed:
                for m in range(1, n_max // pa + 1):
                    if m % p:
                        yield p, a, m
            pa *= p
            a += 1


def _tower(s: GhostSeq, kind: str, extra: int, primes=None, skip=(), levels=None) -> CongruenceReport:
    vals = _integer_values(s)
    n_max = s.order
    skip = set(skip)
    witnesses = []
    for p, a, m in tower_indices(n_max, primes, levels):
        if p in skip:
            continue
        pa = p**a
        modulus = pa * p**extra
        hi, lo = vals[pa * m], vals[pa // p * m]
        if (hi - lo) % modulus:
            witnesses.append(Witness(p, a, m, modulus, Fraction(hi), Fraction(lo)))
    return CongruenceReport(kind, n_max, tuple(witnesses))


def check_dold_tower(s: GhostSeq, primes: Iterable[int] | None = None) -> CongruenceReport:
    """``s_{p^a m} == s_{p^{a-1} m} (mod p^a)`` for every reachable ``(p, a, m)``."""
    return _tower(s, "dold", 0, primes)


def check_dold_plus(
    s: GhostSeq, primes: Iterable[int] | None = None, levels: Iterable[int] | None = None
) -> CongruenceReport:
    """The strengthened tower with modulus ``p^{a+1}``.

    ``primes`` and ``levels`` restrict which ``p`` and ``a`` are examined.
    """
    return _tower(s, "dold-plus", 1, primes, levels=levels)


def check_s_integral(s: GhostSeq, bad_primes: Iterable[int] = ()) -> CongruenceReport:
    """Dold tower at every prime outside ``bad_primes``."""
    return _tower(s, "s-integral", 0, skip=bad_primes)


def check_gauss_mobius(s: GhostSeq) -> CongruenceReport:
    """``sum_{d|n} mu(n/d) s_d == 0 (mod n)`` for n = 1..N."""
    vals = _integer_values(s)
    witnesses = []
    for n in range(1, s.order + 1):
        total = sum(mobius(n // d) * vals[d] for d in divisors(n))
        if total % n:
            witnesses.append(Witness(0, 0, n, n, Fraction(total), Fraction(0)))
    return CongruenceReport("gauss", s.order, tuple(witnesses))
