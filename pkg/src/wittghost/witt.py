"""The products on Euler products: series product, ghost Hadamard product and Witt product.

The Witt product is the transport of the Hadamard product through the ghost
map. On Euler exponents it is given by the gcd-lcm formula
``h(n) = sum_{lcm(a,b)=n} gcd(a,b) f(a) g(b)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Mapping

from .arith import as_fraction, lcm, solve_linear
from .errors import DomainError
from .ghost import GhostSeq, ghost_from_euler, sigma_from_coeffs, sigma_inverse
from .residues import ResidueData
from .series import TruncSeries

__all__ = [
    "hadamard",
    "witt_product_exponents",
    "witt_product_prime_power",
    "witt_product_series",
    "verify_ghost_multiplicativity",
    "kernel_product_weights",
    "hadamard_kernels",
]


def hadamard(s: GhostSeq, t: GhostSeq) -> GhostSeq:
    """Termwise product through the shorter order."""
    return GhostSeq(tuple(a * b for a, b in zip(s.values, t.values)))


def witt_product_exponents(f: Mapping, g: Mapping, order: int) -> dict:
    """gcd-lcm double sum over the supports, kept for ``n <= order``."""
    h: dict = {}
    fs = [(a, as_fraction(v)) for a, v in f.items() if v and a <= order]
    gs = [(b, as_fraction(v)) for b, v in g.items() if v and b <= order]
    for a, fa in fs:
        for b, gb in gs:
            n = lcm(a, b)
            if n <= order:
                h[n] = h.get(n, Fraction(0)) + gcd(a, b) * fa * gb
    return {n: v for n, v in sorted(h.items()) if v}


def witt_product_prime_power(f: Mapping, g: Mapping, p: int, k: int) -> Fraction:
    """``h(p^k) = sum_{max(i,j)=k} p^{min(i,j)} f(p^i) g(p^j)``; only prime powers have lcm ``p^k``."""
    total = Fraction(0)
    for i in range(k + 1):
        for j in range(k + 1):
            if max(i, j) == k:
                total += p ** min(i, j) * as_fraction(f.get(p**i, 0)) * as_fraction(g.get(p**j, 0))
    return total


def witt_product_series(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """``sigma^{-1}(sigma(A) * sigma(B))`` with the termwise product in the middle."""
    return sigma_inverse(hadamard(sigma_from_coeffs(a), sigma_from_coeffs(b)))


def verify_ghost_multiplicativity(f: Mapping, g: Mapping, order: int) -> bool:
    h = witt_product_exponents(f, g, order)
    gh, gf, gg = (ghost_from_euler(x, order) for x in (h, f, g))
    return all(gh[n] == gf[n] * gg[n] for n in range(1, order + 1))


@lru_cache(maxsize=None)
def kernel_product_weights(m: int, l: int) -> tuple[Fraction, ...]:
    """Weights ``w_k`` with ``C(n+m-1,m) C(n+l-1,l) = sum_k w_k C(n+k-1,k)``, k = 0..m+l.

    Both sides are polynomials in n of degree m+l, so matching them at
    n = 1..m+l+1 determines the weights.
    """
    size = m + l + 1
    rows = [[comb(n + k - 1, k) for k in range(size)] for n in range(1, size + 1)]
    rhs = [comb(n + m - 1, m) * comb(n + l - 1, l) for n in range(1, size + 1)]
    return tuple(solve_linear(rows, rhs))


def hadamard_kernels(p: ResidueData, q: ResidueData) -> ResidueData:
    """Residue data of ``ghost(P) * ghost(Q)`` computed pole by pole.

    Every output pole is a product ``alpha * beta`` of input poles.
    """
    if p.polynomial_part or q.polynomial_part:
        raise DomainError("kernel product needs pure pole data")
    terms = []
    for alpha, m, c in p.terms:
        for beta, l, d in q.terms:
            # (-c K)(-d K') = c d sum_k w_k K_k, stored as residue -c d w_k
            for k, w in enumerate(kernel_product_weights(m, l)):
                if w:
                    terms.append((alpha * beta, k, -c * d * w))
    return ResidueData(terms)
