"""Exact pr on seeded random graphs, next to the bounds that frame it."""
import math

from mincoprime.experiments import random_pr_experiment

for n in (8, 10, 12):
    rep = random_pr_experiment(n, 0.5, 10, seed=7)
    print(f"G({n}, 0.5), 10 trials:")
    for row in rep.rows:
        x = row.extra
        print(f"  alpha={x['alpha']} omega={x['omega']}  lower {x['independence_bound']:>2}"
              f"  pr {row.pr:>2}  upper {x['upper_bound']}")
    agg = rep.aggregates
    print(f"  not prime in {agg['nonprime_fraction']:.0%} of trials; "
          f"mean pr / (n log n) = {agg['mean_pr_over_nlogn']} (n log n = {n * math.log(n):.1f})\n")
