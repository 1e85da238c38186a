"""Compare the norm tower, the ideal Moebius check and exponent integrality on s_n = u^n.

Default unit is 1 + sqrt 2; pass --a --b --D for another element of Z[sqrt D].
"""
import argparse

from wittghost.ghost import ghost
from wittghost.quad import (
    euler_from_ghost_quad,
    ideal_dold_mobius_check,
    norm_tower_check,
    prime_ideals,
    quad,
)


def main(argv=None):
    parser = argparse.ArgumentParser(description="tower vs ideal congruences")
    parser.add_argument("--a", type=int, default=1)
    parser.add_argument("--b", type=int, default=1)
    parser.add_argument("--D", type=int, default=2)
    parser.add_argument("--order", type=int, default=81)
    parser.add_argument("--bound", type=int, default=100)
    args = parser.parse_args(argv)

    u = quad(args.a, args.b, args.D)
    s = ghost([u**n for n in range(1, args.order + 1)])
    primes = prime_ideals(args.D, args.bound, include_ramified=False)
    tower_fail = [P.label for P in primes if not norm_tower_check(s, P).passed]
    print(f"u = {u}, window {args.order}")
    print(f"norm tower: {len(primes) - len(tower_fail)}/{len(primes)} unramified primes pass", tower_fail or "")
    print(f"ideal Moebius check (norm <= {args.order}):", "pass" if ideal_dold_mobius_check(s, args.order).passed else "fail")
    c = euler_from_ghost_quad(s)
    print("non-integral exponents:", {n: d for n, d in sorted(c.nonintegral.items())[:8]})
    for n in sorted(c.nonintegral)[:3]:
        print(f"  c({n}) = {c.values[n]}")


if __name__ == "__main__":
    main()
