"""The odds rule, step by step.

Given independent trials with known success probabilities, the optimal
way to stop on the *last* success is: convert probabilities to odds, sum
the odds from the back until they reach 1, and from that index on take
the first success that shows up.
"""

from oddsrule import (
    lindley_threshold,
    secretary_sequence,
    threshold,
    validate_probabilities,
    win_probability,
)

# A job board posts interviews over five days; the chance that a given
# day's candidate is worth hiring varies.  We want to hire on the last
# good candidate (hiring earlier means possibly missing a better one,
# waiting past the last one means hiring nobody).
p = [0.1, 0.5, 0.4, 0.25, 0.2]
seq = validate_probabilities(p)

print("probabilities:", list(seq.p))
print("odds         :", [round(r, 4) for r in seq.r])
print("suffix sums  :", [round(R, 4) for R in seq.R])

t = threshold(seq)
print(f"\nthe suffix sums first reach 1 at index s = {t.s} (R_s = {t.R_s:.4f})")
print("rule: skip everything before day", t.s, "- then stop at the first success")

w = win_probability(seq, t)
print(f"\nwin probability V_n = {w.value:.6f}")
print(f"same value via the odds-ratio form: {w.product_form:.6f}")

# The classical best-choice ("secretary") problem is the special case
# p_j = 1/j: the j-th candidate of a random ranking is a running best
# with probability 1/j.  Stopping on the last running best is exactly
# stopping on the overall best.
print("\n--- best-choice special case ---")
for n in (5, 10, 20, 50, 100):
    sec = secretary_sequence(n)
    ts = threshold(sec)
    v = win_probability(sec, ts).value
    print(
        f"n = {n:3d}: observe {ts.s - 1:2d} candidates, then leap "
        f"(s = {ts.s}, matches the harmonic-sum rule: "
        f"{lindley_threshold(n)}), win probability {v:.5f}"
    )
print("\nas n grows, s/n approaches 1/e and the win probability falls to 1/e")
