"""Probability sequences at which the sharp bounds are attained.

Each generator returns the sequence together with the bound value it
attains (``attainment = "exact"``) or approaches from above
(``attainment = "limiting"``).  Entries before the threshold are set to
0: the success probability and the bounds depend only on the window
[s, n], and zeros are the canonical prefix that leaves the threshold
where it was requested.

The generators guarantee ``threshold(seq).s`` equals the requested ``s``.
Because the odds are re-derived from the rounded probabilities, the
window head sometimes needs a nudge of a few ulps so that the suffix
odds sum crosses 1 exactly (e.g. m equal odds of nominal value 1/m can
round to one ulp below 1); the nudge moves the attained value by far
less than the 1e-12 equality tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .bounds import lower_bound, upper_bound
from .core import OddsSequence, odds_to_prob, threshold, validate_probabilities
from .errors import InconsistentInput

DEFAULT_ALPHA = 1.0 - 1e-3


@dataclass(frozen=True)
class GenerationParameters:
    n: int
    s: int
    R_s: float
    alpha: float | None = None


@dataclass(frozen=True)
class ExtremalConfig:
    seq: OddsSequence
    target_bound: float
    attainment: Literal["exact", "limiting"]
    parameters: GenerationParameters


def _build_at_threshold(
    p: list[float], s: int, require_unit_sum: bool = False
) -> OddsSequence:
    # Nudge p_s upward by single ulps until the derived suffix odds sums
    # put the threshold at s (and, when asked, until R_s itself reaches
    # 1: at s = 1 the threshold cannot distinguish R_1 = 1 from a sum one
    # ulp short).  One step is the common case; bail out loudly rather
    # than loop if something is structurally wrong.
    seq = validate_probabilities(p)
    for _ in range(64):
        if threshold(seq).s == s and not (require_unit_sum and seq.R[s - 1] < 1.0):
            return seq
        p[s - 1] = math.nextafter(p[s - 1], 1.0)
        seq = validate_probabilities(p)
    raise RuntimeError(
        f"could not place threshold at s = {s}; got {threshold(seq).s}"
    )


def upper_extremal(n: int, s: int, R_s: float) -> ExtremalConfig:
    """Single-entry window attaining the upper bound: p_s = R_s/(1+R_s),
    every other probability 0."""
    if not 1 <= s <= n:
        raise InconsistentInput(f"need 1 <= s <= n, got s = {s}, n = {n}")
    if math.isnan(R_s) or R_s <= 0.0:
        raise InconsistentInput(f"need R_s > 0, got {R_s!r}")
    if s > 1 and R_s < 1.0:
        raise InconsistentInput(
            f"R_s = {R_s!r} < 1 cannot produce a threshold at s = {s} > 1"
        )
    p = [0.0] * n
    p[s - 1] = odds_to_prob(R_s)
    if s > 1:
        seq = _build_at_threshold(p, s)
    else:
        seq = validate_probabilities(p)  # threshold is 1 regardless
    t = threshold(seq)
    return ExtremalConfig(
        seq=seq,
        target_bound=upper_bound(t),
        attainment="exact",
        parameters=GenerationParameters(n=n, s=s, R_s=R_s),
    )


def lower_extremal_case1(n: int, R_1: float) -> ExtremalConfig:
    """Constant sequence attaining the sub-unit lower bound:
    p_j = R_1/(n + R_1), so every odds equals R_1/n."""
    if n < 1:
        raise InconsistentInput(f"need n >= 1, got {n}")
    if math.isnan(R_1) or not 0.0 < R_1 < 1.0:
        raise InconsistentInput(
            f"need 0 < R_1 < 1 (endpoints belong to other cases), got {R_1!r}"
        )
    p = [R_1 / (n + R_1)] * n
    seq = validate_probabilities(p)
    t = threshold(seq)
    low = lower_bound(n, 1, t.R_s)
    return ExtremalConfig(
        seq=seq,
        target_bound=low.value,
        attainment="exact",
        parameters=GenerationParameters(n=n, s=1, R_s=R_1),
    )


def lower_extremal_case2(n: int, s: int) -> ExtremalConfig:
    """Equal window attaining the unit-sum lower bound:
    p_j = 1/(n-s+2) for j >= s, which puts every window odds at
    1/(n-s+1) and the suffix sum at exactly 1."""
    if not 1 <= s <= n:
        raise InconsistentInput(f"need 1 <= s <= n, got s = {s}, n = {n}")
    m = n - s + 1
    p = [0.0] * (s - 1) + [1.0 / (m + 1)] * m
    seq = _build_at_threshold(p, s, require_unit_sum=True)
    t = threshold(seq)
    low = lower_bound(n, s, t.R_s)
    return ExtremalConfig(
        seq=seq,
        target_bound=low.value,
        attainment="exact",
        parameters=GenerationParameters(n=n, s=s, R_s=1.0),
    )


def lower_near_extremal_case3(
    n: int, s: int, alpha: float = DEFAULT_ALPHA
) -> ExtremalConfig:
    """Family approaching the strict lower bound as alpha -> 1.

    The window head takes odds 2 - 2*alpha + 1/(n-s) and the tail equal
    odds alpha/(n-s), so the tail suffix sum is alpha < 1 while the full
    window sum exceeds 1 + 1/(n-s).  The attained value stays strictly
    above the bound and the gap shrinks like (1-alpha)^2.
    """
    if not 1 <= s < n:
        raise InconsistentInput(
            f"need 1 <= s < n (the strict case is empty at s = n), "
            f"got s = {s}, n = {n}"
        )
    if math.isnan(alpha) or not 0.0 < alpha < 1.0:
        raise InconsistentInput(f"need alpha in (0, 1), got {alpha!r}")
    m = n - s
    head = (1.0 + (2.0 - 2.0 * alpha) * m) / (1.0 + (3.0 - 2.0 * alpha) * m)
    tail = alpha / (m + alpha)
    p = [0.0] * (s - 1) + [head] + [tail] * m
    seq = validate_probabilities(p)
    t = threshold(seq)
    if t.s != s:
        raise InconsistentInput(
            f"alpha = {alpha!r} is too close to 1 to keep the threshold "
            f"at s = {s} in double precision"
        )
    low = lower_bound(n, s, t.R_s)
    return ExtremalConfig(
        seq=seq,
        target_bound=low.value,
        attainment="limiting",
        parameters=GenerationParameters(
            n=n, s=s, R_s=2.0 - alpha + 1.0 / m, alpha=alpha
        ),
    )


def equal_odds_sequence(n: int, s: int, R_s: float) -> OddsSequence:
    """Probe sequence with odds R_s/(n-s+1) spread equally over [s, n].

    When R_s > 1 + 1/(n-s) this profile is self-contradictory: the tail
    sum R_{s+1} already exceeds 1, so the actual threshold lands above
    the nominal s.  The sequence is still valid input; it exists so that
    tests can demonstrate the contradiction numerically.
    """
    if not 1 <= s <= n:
        raise InconsistentInput(f"need 1 <= s <= n, got s = {s}, n = {n}")
    if math.isnan(R_s) or R_s < 0.0:
        raise InconsistentInput(f"need R_s >= 0, got {R_s!r}")
    r = R_s / (n - s + 1)
    p = [0.0] * (s - 1) + [odds_to_prob(r)] * (n - s + 1)
    return validate_probabilities(p)
