"""Arithmetic in Z[sqrt D]: elements, prime ideals, ideal congruences and norm descent.

Elements carry rational coordinates so that Moebius inversion can produce
non-integral exponents as data. Ideal machinery is restricted to
``D = 2, 3 (mod 4)``, where ``Z[sqrt D]`` is the maximal order, and to unramified
primes. Split primes are handled through the homomorphism ``sqrt D -> r_a`` into
``Z/p^a`` with ``r_a`` a Hensel-lifted square root of ``D``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

from sympy.ntheory import sqrt_mod

from .arith import as_fraction, divisors, factorize, mobius, primes_up_to, vp
from .congruence import CongruenceReport, Witness
from .errors import DomainError, InvariantViolation, Unsupported
from .ghost import GhostSeq, ghost_from_euler

__all__ = [
    "QuadElem",
    "PrimeIdeal",
    "QuadExponents",
    "NormDescent",
    "quad",
    "splitting_type",
    "prime_ideals",
    "hensel_lift_root",
    "valuation",
    "ideal_congruent",
    "norm_tower_check",
    "euler_from_ghost_quad",
    "norm_descent",
    "conjugate_product_check",
    "ideal_dold_mobius_check",
    "quad_series_from_euler",
    "quad_series_from_factors",
    "quad_frobenius_ladder",
]


@lru_cache(maxsize=None)
def _check_discriminant(d: int) -> None:
    if not isinstance(d, int) or d in (0, 1):
        raise DomainError(f"D must be a squarefree integer other than 0 and 1, got {d!r}")
    if d != -1 and any(k > 1 for k in factorize(abs(d)).values()):
        raise DomainError(f"D = {d} is not squarefree")


class QuadElem:
    """``a + b sqrt(D)`` with exact rational coordinates."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b, D: int):
        _check_discriminant(D)
        self.a = as_fraction(a)
        self.b = as_fraction(b)
        self.D = D

    def _lift(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.D != self.D:
                raise DomainError(f"ring mismatch: sqrt({self.D}) vs sqrt({other.D})")
            return other
        return QuadElem(as_fraction(other), 0, self.D)

    def __add__(self, other):
        o = self._lift(other)
        return QuadElem(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.D)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return QuadElem(self.a * o.a + self.D * self.b * o.b, self.a * o.b + self.b * o.a, self.D)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QuadElem):
            o = self._lift(other)
            n = o.norm()
            if n == 0:
                raise ZeroDivisionError("division by zero in quadratic ring")
            return self * o.conj() * (1 / n)
        k = as_fraction(other)
        return QuadElem(self.a / k, self.b / k, self.D)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("only non-negative integer powers")
        out, base = QuadElem(1, 0, self.D), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.D) == (other.a, other.b, other.D)
        try:
            return self.b == 0 and self.a == as_fraction(other)
        except DomainError:
            return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def conj(self) -> QuadElem:
        return QuadElem(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.D * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def denominator(self) -> int:
        return self.a.denominator * self.b.denominator // gcd(self.a.denominator, self.b.denominator)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.D})"
        if self.a == 0:
            return f"{self.b}*{root}"
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}*{root}"

    def __repr__(self):
        return f"QuadElem({self.a}, {self.b}, D={self.D})"


def quad(a, b, D: int) -> QuadElem:
    return QuadElem(a, b, D)


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of ``Z[sqrt D]`` above ``p``; for split primes ``root`` fixes which one."""

    p: int
    kind: str  # "split" | "inert" | "ramified"
    D: int
    root: int | None = None

    @property
    def residue_norm(self) -> int:
        return self.p * self.p if self.kind == "inert" else self.p

    @property
    def label(self) -> str:
        if self.kind == "split":
            return f"({self.p}, sqrt({self.D})-{self.root})"
        if self.kind == "inert":
            return f"({self.p})"
        return f"({self.p}, sqrt({self.D}))+ramified"

    def conjugate(self) -> PrimeIdeal:
        if self.kind != "split":
            return self
        return PrimeIdeal(self.p, "split", self.D, (self.p - self.root) % self.p)


def _check_order(D: int) -> None:
    _check_discriminant(D)
    if D % 4 == 1:
        raise Unsupported(f"D = {D} = 1 mod 4: Z[sqrt D] is not the maximal order")


def splitting_type(p: int, D: int) -> PrimeIdeal:
    """Classify ``p`` in ``Z[sqrt D]``; for split primes return the ideal with the smaller root."""
    _check_order(D)
    if p < 2 or factorize(p) != {p: 1}:
        raise DomainError(f"{p} is not prime")
    if p == 2 or D % p == 0:
        return PrimeIdeal(p, "ramified", D)
    if pow(D % p, (p - 1) // 2, p) == 1:
        return PrimeIdeal(p, "split", D, min(sqrt_mod(D % p, p, all_roots=True)))
    return PrimeIdeal(p, "inert", D)


def prime_ideals(D: int, norm_bound: int, include_ramified: bool = True) -> list[PrimeIdeal]:
    """All prime ideals of residue norm ``<= norm_bound``, both conjugates for split primes."""
    out = []
    for p in primes_up_to(norm_bound):
        P = splitting_type(p, D)
        if P.kind == "split":
            out.extend([P, P.conjugate()])
        elif P.kind == "inert":
            if P.residue_norm <= norm_bound:
                out.append(P)
        elif include_ramified:
            out.append(P)
    return out


def _require_unramified(P: PrimeIdeal) -> None:
    if P.kind == "ramified":
        raise Unsupported(f"ramified prime above {P.p} is not supported in ideal congruences")


def hensel_lift_root(P: PrimeIdeal, a: int) -> int:
    """``r_a`` with ``r_a^2 = D (mod p^a)`` and ``r_a = r (mod p)``."""
    if P.kind != "split":
        raise DomainError(f"Hensel lift needs a split prime, got {P.kind}")
    if a < 1:
        raise DomainError("level must be >= 1")
    r, mod = P.root, P.p
    while mod < P.p**a:
        mod = min(mod * mod, P.p**a)
        r = (r - (r * r - P.D) * pow(2 * r, -1, mod)) % mod
    return r


def _image(x: QuadElem, P: PrimeIdeal, a: int) -> int:
    mod = P.p**a
    r = hensel_lift_root(P, a)
    num = (x.a.numerator * pow(x.a.denominator, -1, mod) + x.b.numerator * pow(x.b.denominator, -1, mod) * r)
    return num % mod


def valuation(x: QuadElem, P: PrimeIdeal) -> float | int:
    """``v_P(x)``, computed from p-adic valuations of coordinates and the norm."""
    _require_unramified(P)
    if not x:
        return float("inf")
    k = min(vp(x.a, P.p), vp(x.b, P.p))
    if P.kind == "inert":
        return k
    scale = Fraction(P.p) ** k
    unit = QuadElem(x.a / scale, x.b / scale, x.D)
    # unit is not divisible by p, so at most one of P, P' divides it
    if _image(unit, P, 1) == 0:
        return k + vp(unit.norm(), P.p)
    return k


def ideal_congruent(x: QuadElem, y: QuadElem, P: PrimeIdeal, a: int) -> bool:
    """``x == y (mod P^a)``."""
    _require_unramified(P)
    z = x - y
    if P.kind == "inert":
        return vp(z.a, P.p) >= a and vp(z.b, P.p) >= a
    if z.a.denominator % P.p or z.b.denominator % P.p:
        return valuation(z, P) >= a
    return _image(z, P, a) == 0


def _as_quad(v, D: int) -> QuadElem:
    return v if isinstance(v, QuadElem) else QuadElem(as_fraction(v), 0, D)


def _ring(s: GhostSeq) -> int:
    for v in s.values:
        if isinstance(v, QuadElem):
            return v.D
    raise DomainError("ghost has no quadratic entries; pass D explicitly")


def norm_tower_check(s: GhostSeq, P: PrimeIdeal, D: int | None = None) -> CongruenceReport:
    """``s_{q^a m} == s_{q^{a-1} m} (mod P^a)`` with ``q = N(P)``, all ``q^a m <= N``."""
    _require_unramified(P)
    D = P.D if D is None else D
    q = P.residue_norm
    n_max = s.order
    witnesses = []
    qa, a = q, 1
    while qa <= n_max:
        for m in range(1, n_max // qa + 1):
            if m % P.p == 0:
                continue
            hi, lo = _as_quad(s[qa * m], D), _as_quad(s[qa // q * m], D)
            if not ideal_congruent(hi, lo, P, a):
                witnesses.append(Witness(P.p, a, m, qa, hi, lo, ideal=P.label))
        qa *= q
        a += 1
    return CongruenceReport("norm-tower", n_max, tuple(witnesses))


@dataclass(frozen=True)
class QuadExponents:
    """Exponents ``c(n)`` recovered from a quadratic ghost, with the integrality verdict."""

    values: dict
    nonintegral: dict  # n -> denominator of c(n)

    @property
    def integral(self) -> bool:
        return not self.nonintegral


def euler_from_ghost_quad(s: GhostSeq, D: int | None = None) -> QuadExponents:
    """Moebius inversion coordinatewise: ``c(n) = (1/n) sum_{d|n} mu(d) s_{n/d}``."""
    D = _ring(s) if D is None else D
    values, bad = {}, {}
    for n in range(1, s.order + 1):
        acc = QuadElem(0, 0, D)
        for d in divisors(n):
            mu = mobius(d)
            if mu:
                acc = acc + _as_quad(s[n // d], D) * mu
        c = acc / n
        if c:
            values[n] = c
        if not c.is_integral():
            bad[n] = c.denominator()
    return QuadExponents(values, bad)


@dataclass(frozen=True)
class NormDescent:
    norms: GhostSeq  # u(n) = N(s(n))
    exponents: dict  # c_Z, integral whenever the input has integral exponents
    indivisible: tuple  # every n <= N with n not dividing u(n)

    @property
    def divisible(self) -> bool:
        return not self.indivisible


def norm_descent(s: GhostSeq, D: int | None = None) -> NormDescent:
    """Coefficientwise norms of a Dold ghost over ``Z[sqrt D]`` and their Euler exponents.

    The norms form a Dold ghost over Z, so the descended exponents must be
    integers; a non-integral one raises :class:`InvariantViolation`. Whether
    ``n | u(n)`` is recorded in ``indivisible`` without being enforced.
    """
    D = _ring(s) if D is None else D
    if not euler_from_ghost_quad(s, D).integral:
        raise DomainError("norm descent needs a ghost with integral quadratic exponents")
    u = [_as_quad(v, D).norm() for v in s.values]
    c_z = {}
    for n in range(1, len(u) + 1):
        val = sum((mobius(n // d) * u[d - 1] for d in divisors(n)), Fraction(0)) / n
        if val.denominator != 1:
            raise InvariantViolation(f"descended exponent c_Z({n}) = {val} is not an integer")
        if val:
            c_z[n] = val
    indivisible = tuple(n for n, un in enumerate(u, start=1) if un % n)
    return NormDescent(GhostSeq(tuple(u)), c_z, indivisible)


def conjugate_product_check(c: Mapping[int, QuadElem], D: int, order: int) -> bool:
    """``sum_{d|n} d c_Z(d)`` equals the product of the two conjugate ghosts at every n."""
    c = {d: _as_quad(v, D) for d, v in c.items()}
    first = ghost_from_euler(c, order)
    second = ghost_from_euler({d: v.conj() for d, v in c.items()}, order)
    rebuilt = ghost_from_euler(norm_descent(first, D).exponents, order)
    for n in range(1, order + 1):
        prod = _as_quad(first[n], D) * _as_quad(second[n], D)
        if prod.b != 0 or rebuilt[n] != prod.a:
            return False
    return True


def _ideal_factorizations(primes: list[PrimeIdeal], bound: int):
    """Yield ideals ``[(P, e), ...]`` of norm ``<= bound`` built from ``primes``."""

    def rec(i: int, norm: int, acc: list):
        if i == len(primes):
            if acc:
                yield list(acc), norm
            return
        yield from rec(i + 1, norm, acc)
        P = primes[i]
        e, nn = 1, norm * P.residue_norm
        while nn <= bound:
            acc.append((P, e))
            yield from rec(i + 1, nn, acc)
            acc.pop()
            e += 1
            nn *= P.residue_norm

    yield from rec(0, 1, [])


def ideal_dold_mobius_check(s: GhostSeq, norm_bound: int, D: int | None = None) -> CongruenceReport:
    """``sum_{d|n} mu(n/d) s_{N(d)} == 0 (mod n)`` over ideals ``n`` of norm ``<= norm_bound``.

    Composite moduli are tested one prime-power component at a time. Ideals that
    would need a ramified prime are skipped and listed in ``skipped``.
    """
    D = _ring(s) if D is None else D
    if norm_bound > s.order:
        raise DomainError(f"norm bound {norm_bound} exceeds ghost order {s.order}")
    primes = prime_ideals(D, norm_bound, include_ramified=True)
    skipped = tuple(P.label for P in primes if P.kind == "ramified")
    usable = [P for P in primes if P.kind != "ramified"]
    witnesses = []
    for factors, norm in _ideal_factorizations(usable, norm_bound):
        # Moebius over divisors d: each exponent drops by 0 or 1
        total = QuadElem(0, 0, D)
        for mask in range(1 << len(factors)):
            dn, sign = 1, 1
            for i, (P, e) in enumerate(factors):
                drop = (mask >> i) & 1
                dn *= P.residue_norm ** (e - drop)
                if drop:
                    sign = -sign
            total = total + _as_quad(s[dn], D) * sign
        label = "*".join(f"{P.label}^{e}" for P, e in factors)
        for P, e in factors:
            if not ideal_congruent(total, QuadElem(0, 0, D), P, e):
                witnesses.append(Witness(P.p, e, norm, P.residue_norm**e, total, QuadElem(0, 0, D), ideal=label))
    return CongruenceReport("ideal-dold", norm_bound, tuple(witnesses), skipped)


def _qmul(x: list, y: list) -> list:
    n = min(len(x), len(y))
    D = x[0].D
    out = [QuadElem(0, 0, D) for _ in range(n)]
    for i, xi in enumerate(x[:n]):
        if not xi:
            continue
        for j in range(n - i):
            if y[j]:
                out[i + j] = out[i + j] + xi * y[j]
    return out


def _qpow(x: list, k: int) -> list:
    D = x[0].D
    out = [QuadElem(1, 0, D)] + [QuadElem(0, 0, D)] * (len(x) - 1)
    base = x
    while k:
        if k & 1:
            out = _qmul(out, base)
        k >>= 1
        if k:
            base = _qmul(base, base)
    return out


def quad_series_from_euler(c: Mapping[int, QuadElem], D: int, order: int) -> list:
    """Coefficients of ``prod_d (1 - q^d)^{c(d)}`` with generalized binomials over Q(sqrt D)."""
    acc = [QuadElem(1, 0, D)] + [QuadElem(0, 0, D)] * order
    for d, e in sorted(c.items()):
        e = _as_quad(e, D)
        factor = [QuadElem(0, 0, D)] * (order + 1)
        coeff = QuadElem(1, 0, D)
        for j in range(order // d + 1):
            factor[j * d] = coeff if j % 2 == 0 else -coeff
            coeff = coeff * (e - j) / (j + 1)
        acc = _qmul(factor, acc)
    return acc


def quad_series_from_factors(factors: Iterable[tuple[int, QuadElem]], D: int, order: int) -> list:
    """Coefficients of ``prod (1 - alpha q^d)`` over the given ``(d, alpha)`` pairs."""
    acc = [QuadElem(1, 0, D)] + [QuadElem(0, 0, D)] * order
    for d, alpha in factors:
        factor = [QuadElem(0, 0, D)] * (order + 1)
        factor[0] = QuadElem(1, 0, D)
        if d <= order:
            factor[d] = -_as_quad(alpha, D)
        acc = _qmul(factor, acc)
    return acc


def quad_frobenius_ladder(coeffs: list, P: PrimeIdeal, a: int) -> bool:
    """``A^{q^a} == A(q^{q^a}) (mod P^a)`` coefficientwise, ``q = N(P)``."""
    _require_unramified(P)
    if not coeffs or coeffs[0] != 1:
        raise DomainError("ladder needs constant term 1")
    D = P.D
    coeffs = [_as_quad(c, D) for c in coeffs]
    for n, c in enumerate(coeffs):
        if c.a.denominator % P.p == 0 or c.b.denominator % P.p == 0:
            raise DomainError(f"coefficient {n} = {c} is not integral at {P.label}")
    n_max = len(coeffs) - 1
    power = P.residue_norm**a
    if power > n_max:
        raise DomainError(f"q^a = {power} exceeds the window {n_max}")
    lhs = _qpow(coeffs, power)
    zero = QuadElem(0, 0, D)
    rhs = [coeffs[n // power] if n % power == 0 else zero for n in range(n_max + 1)]
    return all(ideal_congruent(x, y, P, a) for x, y in zip(lhs, rhs))
