"""Residue data for rational ghosts, recurrence detection, Newton power sums, necklaces.

A residue term ``(alpha, m, c)`` stands for the ghost contribution
``s_n = -c * C(n+m-1, m) * alpha^n``. For ``m = 0`` this is the ghost of
``(1 - alpha q)^{-c}``, so integral residues at simple poles mean a rational
preimage.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

import sympy

from .arith import as_fraction, solve_linear
from .errors import DomainError, Indeterminate, NotRationalSpectrum
from .ghost import GhostSeq, euler_from_ghost

__all__ = [
    "ResidueData",
    "RecurrenceData",
    "kernel_value",
    "ghost_from_residues",
    "berlekamp_massey",
    "find_recurrence",
    "rational_reconstruct",
    "classify",
    "power_sums_from_polynomial",
    "reciprocal_polynomial",
    "necklace_exponents",
    "recurrence_from_residues",
    "CLASSES",
]

CLASSES = (
    "ZeroRational",
    "PolynomialGhost",
    "RationalPreimage",
    "RationalGhostNonintegralResidues",
    "RationalGhostTranscendentalPreimage",
    "NonRationalSpectrum",
    "Indeterminate",
)


def kernel_value(alpha: Fraction, m: int, n: int) -> Fraction:
    """``C(n+m-1, m) * alpha^n``, the n-th coefficient of the order-m kernel at alpha."""
    return comb(n + m - 1, m) * alpha**n


def _normalize(terms: Iterable) -> tuple:
    merged: dict = {}
    for alpha, m, c in terms:
        alpha, c = as_fraction(alpha), as_fraction(c)
        if alpha == 0:
            raise DomainError("pole location alpha must be nonzero")
        if not isinstance(m, int) or m < 0:
            raise DomainError(f"kernel order must be a non-negative integer, got {m!r}")
        merged[(alpha, m)] = merged.get((alpha, m), Fraction(0)) + c
    return tuple((a, m, c) for (a, m), c in sorted(merged.items()) if c != 0)


@dataclass(frozen=True)
class ResidueData:
    """Finite pole data, plus finitely many initial ghost corrections.

    ``polynomial_part`` maps n to an extra ``s_n`` term; it is nonzero only when
    the ghost has a polynomial component.
    """

    terms: tuple = ()
    polynomial_part: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize(self.terms))
        poly = {int(n): as_fraction(v) for n, v in self.polynomial_part.items()}
        object.__setattr__(self, "polynomial_part", {n: v for n, v in sorted(poly.items()) if v})

    def __eq__(self, other):
        if isinstance(other, ResidueData):
            return self.terms == other.terms and self.polynomial_part == other.polynomial_part
        return NotImplemented

    def __hash__(self):
        return hash((self.terms, tuple(self.polynomial_part.items())))

    def __bool__(self):
        return bool(self.terms) or bool(self.polynomial_part)

    @property
    def poles(self) -> set:
        return {a for a, _, _ in self.terms}

    @property
    def residues_integral(self) -> bool:
        return all(c.denominator == 1 for _, _, c in self.terms)

    @property
    def simple_poles(self) -> bool:
        return all(m == 0 for _, m, _ in self.terms)

    @property
    def poles_roots_of_unity(self) -> bool:
        return all(a in (1, -1) for a, _, _ in self.terms)

    def pole_orders(self) -> dict:
        """``alpha -> highest kernel order + 1`` (the pole order of the ghost at ``1/alpha``)."""
        out: dict = {}
        for a, m, _ in self.terms:
            out[a] = max(out.get(a, 0), m + 1)
        return out

    def as_list(self) -> list:
        return [[str(a), m, str(c)] for a, m, c in self.terms]

    def __repr__(self):
        body = ", ".join(f"({a}, {m}, {c})" for a, m, c in self.terms)
        extra = f", polynomial_part={self.polynomial_part}" if self.polynomial_part else ""
        return f"ResidueData([{body}]{extra})"


def ghost_from_residues(r: ResidueData, order: int) -> GhostSeq:
    vals = []
    for n in range(1, order + 1):
        acc = r.polynomial_part.get(n, Fraction(0))
        for alpha, m, c in r.terms:
            acc -= c * kernel_value(alpha, m, n)
        vals.append(acc)
    return GhostSeq(tuple(vals))


def berlekamp_massey(seq: Sequence) -> tuple[list[Fraction], list[int]]:
    """Shortest recurrence ``s_k = sum_j c_j s_{k-j}`` over Q for ``seq``.

    Returns the coefficients ``c_1..c_L`` and the linear complexity of every prefix.
    """
    s = [as_fraction(x) for x in seq]
    conn = [Fraction(1)]  # 1 - c_1 x - ... - c_L x^L
    prev = [Fraction(1)]
    length, shift, prev_disc = 0, 1, Fraction(1)
    complexity = []
    for k, sk in enumerate(s):
        disc = sk + sum((conn[j] * s[k - j] for j in range(1, length + 1)), Fraction(0))
        if disc == 0:
            shift += 1
        else:
            coef = disc / prev_disc
            new = conn + [Fraction(0)] * max(0, len(prev) + shift - len(conn))
            for j, pj in enumerate(prev):
                new[j + shift] -= coef * pj
            if 2 * length <= k:
                prev, prev_disc = conn, disc
                length = k + 1 - length
                shift = 1
            else:
                shift += 1
            conn = new
        complexity.append(length)
    conn = conn + [Fraction(0)] * (length + 1 - len(conn))
    return [-c for c in conn[1 : length + 1]], complexity


def find_recurrence(s: GhostSeq) -> list[Fraction]:
    """Minimal recurrence coefficients, provided the finite window settles the question.

    Stable means the linear complexity was constant over the last quarter of the
    prefixes and ``2L`` fits in the rest of the window.
    """
    n_max = s.order
    coeffs, complexity = berlekamp_massey(s.values)
    tail = -(-n_max // 4)
    length = len(coeffs)
    if n_max == 0 or len(set(complexity[n_max - tail :])) > 1 or 2 * length > n_max - tail:
        raise Indeterminate(f"recurrence of order {length} not settled by {n_max} terms")
    return coeffs


@dataclass(frozen=True)
class RecurrenceData:
    """``s_{n+t} = c_1 s_{n+t-1} + ... + c_t s_n`` with the first ``t`` terms."""

    coefficients: tuple
    initial: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(as_fraction(c) for c in self.coefficients))
        object.__setattr__(self, "initial", tuple(as_fraction(c) for c in self.initial))

    @property
    def characteristic(self) -> list[Fraction]:
        """Monic characteristic polynomial, highest degree first."""
        return [Fraction(1)] + [-c for c in self.coefficients]

    def generate(self, order: int) -> GhostSeq:
        vals = list(self.initial[:order])
        while len(vals) < order:
            vals.append(sum((c * vals[-j] for j, c in enumerate(self.coefficients, start=1)), Fraction(0)))
        return GhostSeq(tuple(vals))


def _poly_mul(p: list, q: list) -> list:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def recurrence_from_residues(r: ResidueData) -> RecurrenceData:
    """Characteristic polynomial ``x^z prod (x - alpha)^{order}``, ``z`` covering the polynomial part."""
    char = [Fraction(1)]
    for alpha, order in sorted(r.pole_orders().items()):
        for _ in range(order):
            char = _poly_mul(char, [Fraction(1), -alpha])
    z = max(r.polynomial_part, default=0)
    char = char + [Fraction(0)] * z
    t = len(char) - 1
    coeffs = [-c for c in char[1:]]
    return RecurrenceData(tuple(coeffs), ghost_from_residues(r, t).values if t else ())


def _rational_roots(char: list[Fraction]):
    """Split a monic polynomial (highest first) into rational roots and a residual factor."""
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in char], x, domain="QQ")
    _, factors = poly.factor_list()
    roots, residual = {}, sympy.Poly(1, x, domain="QQ")
    for fac, mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            root = Fraction(int((-b / a).p), int((-b / a).q))
            roots[root] = roots.get(root, 0) + mult
        else:
            residual = residual * fac**mult
    res = [Fraction(int(c.p), int(c.q)) for c in residual.monic().all_coeffs()]
    return roots, res


def rational_reconstruct(s: GhostSeq) -> ResidueData:
    """Residue data reproducing ``s`` exactly through its order.

    Raises :class:`NotRationalSpectrum` when the recurrence polynomial has an
    irreducible factor of degree >= 2, and :class:`Indeterminate` when the window
    is too short to pin the recurrence down.
    """
    coeffs = find_recurrence(s)
    if not coeffs:
        return ResidueData(())
    char = [Fraction(1)] + [-c for c in coeffs]
    roots, residual = _rational_roots(char)
    zero_mult = roots.pop(Fraction(0), 0)
    if len(residual) > 1:
        raise NotRationalSpectrum(residual, RecurrenceData(tuple(coeffs), s.values[: len(coeffs)]))
    basis = [(alpha, m) for alpha, mult in sorted(roots.items()) for m in range(mult)]
    r = len(basis)
    # exponential-polynomial part fitted on n = z+1 .. z+r; values below z+1 are polynomial part
    rows = [[-kernel_value(alpha, m, n) for alpha, m in basis] for n in range(zero_mult + 1, zero_mult + r + 1)]
    rhs = [s[n] for n in range(zero_mult + 1, zero_mult + r + 1)]
    residues = solve_linear(rows, rhs) if r else []
    terms = [(alpha, m, c) for (alpha, m), c in zip(basis, residues)]
    partial = ResidueData(terms)
    fitted = ghost_from_residues(partial, min(zero_mult, s.order)) if zero_mult else None
    poly = {n: s[n] - fitted[n] for n in range(1, min(zero_mult, s.order) + 1)} if fitted else {}
    out = ResidueData(terms, poly)
    if ghost_from_residues(out, s.order) != s:
        raise Indeterminate("fitted residue data does not reproduce the window")
    return out


def classify(s: GhostSeq) -> str:
    """Sort a ghost into one of :data:`CLASSES` using its window."""
    if all(v == 0 for v in s.values):
        return "ZeroRational"
    try:
        r = rational_reconstruct(s)
    except Indeterminate:
        return "Indeterminate"
    except NotRationalSpectrum:
        return "NonRationalSpectrum"
    if not r.terms:
        return "PolynomialGhost"
    if r.polynomial_part or not r.simple_poles:
        return "RationalGhostTranscendentalPreimage"
    if r.residues_integral:
        return "RationalPreimage"
    return "RationalGhostNonintegralResidues"


def _monic_integer(poly: Sequence) -> list[int]:
    cs = [as_fraction(c) for c in poly]
    if len(cs) < 2:
        raise DomainError("polynomial must have degree >= 1")
    if cs[0] != 1:
        raise DomainError(f"polynomial must be monic, leading coefficient is {cs[0]}")
    if any(c.denominator != 1 for c in cs):
        raise DomainError("polynomial must have integer coefficients")
    return [int(c) for c in cs]


def power_sums_from_polynomial(poly: Sequence, order: int) -> GhostSeq:
    """Power sums ``p_k`` of the roots of ``x^n + c_1 x^{n-1} + ... + c_n`` (coefficients highest first).

    Newton's identities: ``p_k + c_1 p_{k-1} + ... + c_{k-1} p_1 + k c_k = 0`` (with
    ``c_k = 0`` for ``k > n``).
    """
    cs = _monic_integer(poly)
    deg = len(cs) - 1
    p = [0] * (order + 1)
    for k in range(1, order + 1):
        acc = k * cs[k] if k <= deg else 0
        for j in range(1, min(k - 1, deg) + 1):
            acc += cs[j] * p[k - j]
        p[k] = -acc
    return GhostSeq(tuple(p[1:]))


def reciprocal_polynomial(poly: Sequence) -> list[int]:
    """``R(x) = x^n P(1/x)`` as coefficients lowest first, i.e. ``1 + c_1 x + ... + c_n x^n``."""
    return _monic_integer(poly)


def necklace_exponents(s: GhostSeq) -> tuple[dict, str]:
    """Moebius-inverted orbit counts and realizability: ``exact``, ``relative`` or ``none``."""
    if not s.is_integral():
        raise DomainError("necklace exponents need an integer sequence")
    c = euler_from_ghost(s)
    if any(v.denominator != 1 for v in c.values()):
        return c, "none"
    if all(v >= 0 for v in c.values()):
        return c, "exact"
    return c, "relative"
