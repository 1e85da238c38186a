"""Failure rates of the stated ladders against the stepwise ladder on random Euler products.

    python scripts/ladder_rates.py --trials 200 --order 64
"""
import argparse
import random
from dataclasses import dataclass

from wittghost.ghost import coeffs_from_euler
from wittghost.ladders import (
    coprime_zero_check,
    frobenius_ladder_check,
    frobenius_step_check,
    progression_zero_check,
)

CHECKS = {
    "ladder": frobenius_ladder_check,
    "progression": progression_zero_check,
    "step": frobenius_step_check,
    "coprime": coprime_zero_check,
}


@dataclass
class Config:
    trials: int = 200
    order: int = 64
    support: int = 16
    bound: int = 6
    primes: tuple = (2, 3, 5)
    max_level: int = 3
    seed: int = 0


def random_product(rng: random.Random, cfg: Config):
    f = {rng.randint(1, cfg.support): rng.randint(-cfg.bound, cfg.bound) for _ in range(rng.randint(1, 6))}
    return coeffs_from_euler(f, cfg.order)


def run(cfg: Config) -> dict:
    rng = random.Random(cfg.seed)
    grid = [(p, a) for p in cfg.primes for a in range(1, cfg.max_level + 1) if p**a <= cfg.order]
    counts = {(p, a, name): 0 for p, a in grid for name in CHECKS}
    for _ in range(cfg.trials):
        series = random_product(rng, cfg)
        for p, a in grid:
            for name, check in CHECKS.items():
                if not check(series, p, a).passed:
                    counts[(p, a, name)] += 1
    return counts


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=Config.trials)
    parser.add_argument("--order", type=int, default=Config.order)
    parser.add_argument("--seed", type=int, default=Config.seed)
    args = parser.parse_args(argv)
    cfg = Config(trials=args.trials, order=args.order, seed=args.seed)
    counts = run(cfg)
    names = list(CHECKS)
    print(f"{'p':>3} {'a':>3} " + " ".join(f"{n:>12}" for n in names))
    for p, a in sorted({(p, a) for p, a, _ in counts}):
        row = " ".join(f"{counts[(p, a, n)] / cfg.trials:12.1%}" for n in names)
        print(f"{p:>3} {a:>3} {row}")


if __name__ == "__main__":
    main()
