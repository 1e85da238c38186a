"""Round-trip random cyclotomic exponent maps through ghosts, Euler exponents and back.

Also fits periodic ghosts and reports the Dold+ verdict for each map.
"""
import argparse
import random

from wittghost.arith import lcm_all
from wittghost.cyclo import (
    cyclo_fit,
    cyclo_to_euler,
    doldplus_cyclotomic_check,
    euler_to_cyclo,
    ghost_from_cyclo,
)


def main(argv=None):
    parser = argparse.ArgumentParser(description="cyclotomic round trips")
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--max-index", type=int, default=12)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    stats = {"maps": 0, "euler": 0, "fit": 0, "doldplus": 0}
    while stats["maps"] < args.trials:
        e = {rng.randint(1, args.max_index): rng.randint(-4, 4) for _ in range(rng.randint(1, 4))}
        e = {m: v for m, v in e.items() if v}
        if not e:
            continue
        stats["maps"] += 1
        period = lcm_all(e)
        s = ghost_from_cyclo(e, 3 * period)
        stats["euler"] += euler_to_cyclo(cyclo_to_euler(e)) == e
        stats["fit"] += cyclo_fit(s, period) == e
        verdict = doldplus_cyclotomic_check(e).passed
        stats["doldplus"] += verdict
        if args.verbose:
            print(f"e={e} period={period} dold+={'pass' if verdict else 'fail'}")
    print(f"maps: {stats['maps']}")
    print(f"euler round trip: {stats['euler']}")
    print(f"period fit round trip: {stats['fit']}")
    print(f"Dold+ passes: {stats['doldplus']}")


if __name__ == "__main__":
    main()
