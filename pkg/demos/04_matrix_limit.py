#!/usr/bin/env python3
"""Watch products of rectangular Gaussian blocks converge to their limit.

Fixes the dimension ratios (1, 1.5, 0.5), so the product has two
rectangular factors, and runs the same seeded experiment at increasing
matrix sizes.  The predicted limits come from the exact moment
polynomials evaluated at the ratios; the Monte Carlo means should close
in on them as n grows, with z-scores staying at noise level.

Takes a few seconds; shrink TRIALS or the size list to speed it up.
"""

from fussnarayana.exact import limit_moment_poly
from fussnarayana.rmt import DimensionProfile, McConfig, run_experiment

RATIOS = (1.0, 1.5, 0.5)
K_MAX = 3
TRIALS = 100
SEED = 7


def main() -> None:
    p = len(RATIOS) - 1
    targets = [
        limit_moment_poly(p, k).evaluate(list(RATIOS)) for k in range(1, K_MAX + 1)
    ]
    print(f"ratios {RATIOS}, predicted limits: {[float(t) for t in targets]}")
    print()
    print(f"{'n':>5}  " + "  ".join(f"{'dev k=' + str(k):>12}" for k in range(1, K_MAX + 1)))
    last = None
    for n in (50, 100, 200, 400):
        config = McConfig(
            profile=DimensionProfile.from_targets(RATIOS, n),
            k_max=K_MAX,
            trials=TRIALS,
            seed=SEED,
        )
        result = run_experiment(config)
        devs = [abs(stat.mean - stat.target) for stat in result.moments]
        print(f"{n:>5}  " + "  ".join(f"{d:>12.6f}" for d in devs))
        last = result
    print()
    print(f"at the largest size (ensemble={last.config.ensemble}):")
    for stat in last.moments:
        print(
            f"  k={stat.k}: mean {stat.mean:.6f}  target {float(stat.target):.6f}"
            f"  se {stat.se:.6f}  z {stat.z:+.2f}"
        )


if __name__ == "__main__":
    main()
