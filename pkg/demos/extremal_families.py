"""The sequences that make the bounds exact.

Every bound in the package is sharp: this script generates the attaining
configuration for each one and verifies the attainment numerically.
"""

from oddsrule import (
    lower_extremal_case1,
    lower_extremal_case2,
    lower_near_extremal_case3,
    threshold,
    upper_extremal,
    win_probability,
)


def win(seq):
    return win_probability(seq, threshold(seq)).value


# Upper bound R_s/(1+R_s): attained only by piling the whole odds mass
# on the threshold index.
cfg = upper_extremal(n=5, s=3, R_s=1.0)
print("upper bound:     p =", list(cfg.seq.p))
print(f"  V_n = {win(cfg.seq):.12f} = target {cfg.target_bound:.12f}")

# Sub-unit sums (case 1): spreading the odds evenly is the worst case.
cfg = lower_extremal_case1(n=4, R_1=0.6)
print("\ncase-1 floor:    p =", [round(x, 6) for x in cfg.seq.p])
print(f"  V_n = {win(cfg.seq):.12f} = target {cfg.target_bound:.12f}")

# Unit sums (case 2): the equal window with odds 1/(n-s+1) each.
cfg = lower_extremal_case2(n=6, s=3)
print("\ncase-2 floor:    p =", [round(x, 6) for x in cfg.seq.p])
print(f"  V_n = {win(cfg.seq):.12f} = target {cfg.target_bound:.12f}")

# Large sums (case 3): the floor is strict, but a two-level family gets
# arbitrarily close as alpha -> 1.
print("\ncase-3 floor is strict; the family closes in as alpha rises:")
n, s = 5, 3
for alpha in (0.9, 0.99, 0.999, 0.9999):
    cfg = lower_near_extremal_case3(n, s, alpha)
    gap = win(cfg.seq) - cfg.target_bound
    print(f"  alpha = {alpha:<7}  V_n - target = {gap:.3e}")
print("the gap shrinks like (1 - alpha)^2 and never touches zero")
