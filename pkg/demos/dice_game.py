"""The dice game: independence numbers of uniform random rooted trees.

Roll an n-sided die until the throws so far contain at least n - a distinct
values for some prefix length a; that a is distributed exactly like the
independence number of a uniform rooted tree on n vertices.  This script
checks the exact equality at small n, then watches the mean settle onto
rho = 0.5671... and the histogram onto its normal limit.
"""

from slithercode import (
    chi_square,
    clt_check,
    constants,
    dice_trial,
    exact_dice_distribution,
    exact_rooted_distribution,
    run_trials,
)

print("exact check, all n^(n-1) throw sequences vs all n^(n-1) codes:")
for n in (2, 3, 4, 5, 6):
    dice = exact_dice_distribution(n)
    tree = exact_rooted_distribution(n, "independence")
    tag = "equal" if dice.counts == tree.counts else "DIFFER"
    print(f"  n={n}: {dict(sorted(dice.counts.items()))}  ({tag})")

print("\nsimulated mean/n against rho:")
rho = constants().rho
for n in (10, 100, 1000):
    hist = run_trials(lambda rng: dice_trial(n, rng), 20_000, seed=7,
                      n=n, parameter="alpha")
    print(f"  n={n:5d}: mean/n = {hist.mean() / n:.5f}   rho = {rho:.5f}")

hist = run_trials(lambda rng: dice_trial(6, rng), 20_000, seed=7, n=6, parameter="alpha")
fit = chi_square(hist, exact_dice_distribution(6))
print(f"\nchi-square of 20000 trials at n=6 vs the exact law: "
      f"stat {fit.statistic:.2f} vs threshold {fit.threshold:.2f} -> "
      f"{'ok' if fit.ok else 'reject'}")

print("\ncentral limit check at n=1000 (slow part, ~2s):")
rep = clt_check(1000, 20_000, seed=7)
print(f"  mean/n      {rep.mean_over_n:.6f}  (rho    {rep.rho:.6f})")
print(f"  variance/n  {rep.variance_over_n:.6f}  (sigma2 {rep.sigma2:.6f})")
print(f"  KS distance to N(rho n, sigma2 n): {rep.ks_distance:.4f}")
print(f"  KS distance to the fitted normal:  {rep.ks_fitted:.4f}")

# a crude text histogram of the standardized counts
mu, sd = rep.mean, rep.variance ** 0.5
hist = run_trials(lambda rng: dice_trial(1000, rng), 20_000, seed=7,
                  n=1000, parameter="alpha")
print("\n  value  count")
lo, hi = int(mu - 3 * sd), int(mu + 3 * sd)
peak = max(hist.counts.values())
for v in range(lo, hi + 1, 3):
    c = sum(hist.counts.get(u, 0) for u in (v, v + 1, v + 2))
    print(f"  {v:5d}  {'#' * max(1, round(40 * c / (3 * peak))) if c else ''}")
