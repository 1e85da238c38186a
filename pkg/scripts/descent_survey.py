"""Descend quadratic Dold ghosts to the integers and list where n fails to divide u(n).

The descended exponents are always integers; divisibility of u(n) by n is not.
"""
import argparse
import random
from collections import Counter

from wittghost.ghost import ghost_from_euler
from wittghost.quad import norm_descent, quad


def main(argv=None):
    parser = argparse.ArgumentParser(description="norm descent survey")
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--order", type=int, default=48)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    sample = norm_descent(ghost_from_euler({2: quad(0, 1, 5)}, 12))
    print("c = {2: sqrt 5}")
    print("  u(n):", [str(v) for v in sample.norms.values])
    print("  cZ:", {n: str(v) for n, v in sample.exponents.items()})
    print("  n not dividing u(n):", sample.indivisible)

    rng = random.Random(args.seed)
    first = Counter()
    clean = 0
    for _ in range(args.trials):
        D = rng.choice([2, 3, 5, 6, 7])
        c = {rng.randint(1, 12): quad(rng.randint(-9, 9), rng.randint(-9, 9), D) for _ in range(rng.randint(1, 4))}
        result = norm_descent(ghost_from_euler(c, args.order), D)
        if result.indivisible:
            first[result.indivisible[0]] += 1
        else:
            clean += 1
    print(f"\n{args.trials} random maps, window {args.order}")
    print(f"  all n | u(n): {clean}")
    print("  first failing index:", dict(sorted(first.items())))


if __name__ == "__main__":
    main()
