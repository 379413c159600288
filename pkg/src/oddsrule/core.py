"""Core model for stopping on the last success of independent indicators.

A trial sequence is described by success probabilities ``p_1 .. p_n``.  The
optimal way to stop on the *last* success is an odds rule: convert each
probability to odds ``r_j = p_j / (1 - p_j)``, sum the odds from the back,
and let ``s`` be the largest index where the suffix sum still reaches 1
(or 1 if it never does).  The rule then stops at the first success at
index ``s`` or later, and its success probability is

    V_n = prod_{j=s..n} (1 - p_j) * sum_{l=s..n} r_l.

This module builds the validated sequence (odds and suffix sums included),
locates the threshold, and evaluates V_n in three algebraically equivalent
ways that serve as mutual cross-checks.

All public indices are 1-based, matching the usual mathematical
convention; the tuples stored on the dataclasses are ordinary 0-based
Python containers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptySequence, IndexOutOfRange, NotANumber, OutOfRange

# |R_l - 1| below this marks the threshold decision as numerically touchy.
BOUNDARY_EPS = 1e-9

# Direct products switch to the log domain below this magnitude.
UNDERFLOW_GUARD = 1e-300


def prob_to_odds(p: float) -> float:
    """Odds p/(1-p); +inf for a sure success (p = 1)."""
    if p >= 1.0:
        return math.inf
    return p / (1.0 - p)


def odds_to_prob(r: float) -> float:
    """Inverse of :func:`prob_to_odds`: r/(1+r), with inf mapping to 1."""
    if math.isinf(r):
        return 1.0
    return r / (1.0 + r)


@dataclass(frozen=True)
class OddsSequence:
    """Validated success probabilities with derived odds and suffix sums.

    ``r[j]`` is the odds of entry ``j`` (+inf where p = 1) and ``R[l-1]``
    holds the suffix sum ``r_l + ... + r_n``.  Instances are immutable and
    safe to share between threads; construct them via
    :func:`validate_probabilities`.
    """

    p: tuple[float, ...]
    r: tuple[float, ...]
    R: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.p)

    def odds_finite_on(self, k: int) -> bool:
        """True when no entry of the window [k, n] is a sure success."""
        return all(math.isfinite(x) for x in self.r[k - 1 :])


@dataclass(frozen=True)
class ThresholdResult:
    """Threshold index ``s`` plus the suffix odds sum at ``s``.

    ``boundary_flag`` warns that some finite suffix sum sits within 1e-9
    of 1, where the (exact, epsilon-free) comparison deciding ``s`` is
    sensitive to last-ulp rounding of the inputs.
    """

    s: int
    R_s: float
    boundary_flag: bool


@dataclass(frozen=True)
class WinProbability:
    """Success probability of the odds rule.

    ``value`` always holds the expanded sum-of-products evaluation, which
    stays finite even when the window contains a sure success.
    ``product_form`` is the odds-ratio evaluation R_s / prod(1 + r_j),
    present only when every odds in the window is finite.
    """

    value: float
    product_form: float | None


def _suffix_odds_sums(odds: Sequence[float]) -> list[float]:
    # Right-to-left summation keeping the exact running sum as a list of
    # non-overlapping partials (Shewchuk's growing expansion), so every
    # stored suffix sum is the true sum rounded once.  The threshold
    # comparison R_l >= 1 is taken on these correctly rounded values; an
    # ordinary running sum can land on the wrong side of 1.
    n = len(odds)
    sums = [0.0] * n
    partials: list[float] = []
    infinite = False
    for j in range(n - 1, -1, -1):
        x = odds[j]
        if infinite or math.isinf(x):
            infinite = True
            sums[j] = math.inf
            continue
        i = 0
        for y in partials:
            if abs(x) < abs(y):
                x, y = y, x
            hi = x + y
            lo = y - (hi - x)
            if lo:
                partials[i] = lo
                i += 1
            x = hi
        partials[i:] = [x]
        sums[j] = math.fsum(partials)
    return sums


def validate_probabilities(p: Sequence[float]) -> OddsSequence:
    """Check p_1..p_n and materialize odds and suffix odds sums.

    Raises EmptySequence for n = 0, NotANumber / OutOfRange (with the
    offending 1-based index) for bad entries.
    """
    probs = [float(x) for x in p]
    if not probs:
        raise EmptySequence("need at least one probability")
    for i, x in enumerate(probs, start=1):
        if math.isnan(x) or math.isinf(x):
            raise NotANumber(i, x)
        if not 0.0 <= x <= 1.0:
            raise OutOfRange(i, x)
    odds = [prob_to_odds(x) for x in probs]
    return OddsSequence(
        p=tuple(probs), r=tuple(odds), R=tuple(_suffix_odds_sums(odds))
    )


def threshold(seq: OddsSequence) -> ThresholdResult:
    """Largest l with R_l >= 1, or 1 when no suffix sum reaches 1.

    The comparison is exact IEEE >=, no epsilon; ``boundary_flag`` is the
    advertised sensitivity warning.
    """
    s = 1
    for l in range(seq.n, 0, -1):
        if seq.R[l - 1] >= 1.0:
            s = l
            break
    boundary = any(
        math.isfinite(x) and abs(x - 1.0) < BOUNDARY_EPS for x in seq.R
    )
    return ThresholdResult(s=s, R_s=seq.R[s - 1], boundary_flag=boundary)


def _check_window(seq: OddsSequence, k: int) -> None:
    if not 1 <= k <= seq.n:
        raise IndexOutOfRange(k, seq.n)


def win_prob_expanded(seq: OddsSequence, k: int) -> float:
    """Window win probability as the expanded sum of products.

    sum_{l=k..n} p_l * prod_{j in [k,n], j != l} (1 - p_j): the chance
    that the window [k, n] holds exactly one success, i.e. that the rule
    "stop at the first success at or after k" stops on the last success.
    Finite and correct even when some p_j = 1.
    """
    _check_window(seq, k)
    p = seq.p[k - 1 :]
    q = [1.0 - x for x in p]
    m = len(p)
    pre = [1.0] * (m + 1)
    for i in range(m):
        pre[i + 1] = pre[i] * q[i]
    suf = [1.0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suf[i] = q[i] * suf[i + 1]
    total = math.fsum(p[i] * pre[i] * suf[i + 1] for i in range(m))
    # Term-level rounding can overshoot 1 by ulps on near-degenerate
    # windows; the true value is a probability.
    return min(total, 1.0)


def win_prob_product_sum(seq: OddsSequence, k: int) -> float:
    """Window win probability as prod(1 - p_j) * R_k.

    Requires all odds on [k, n] finite (otherwise the product is 0 and
    the sum infinite, which this form cannot resolve).
    """
    _check_window(seq, k)
    if not seq.odds_finite_on(k):
        raise ValueError("product*sum form undefined: window contains p = 1")
    R_k = seq.R[k - 1]
    q = [1.0 - x for x in seq.p[k - 1 :]]
    prod = 1.0
    underflow = False
    for x in q:
        prod *= x
        if 0.0 < prod < UNDERFLOW_GUARD:
            underflow = True
            break
    if not underflow:
        return prod * R_k
    if R_k == 0.0:
        return 0.0
    # Log-domain rescue: the product alone can underflow while the final
    # value is still representable (huge R_k).
    return math.exp(math.fsum(math.log(x) for x in q) + math.log(R_k))


def win_prob_odds_ratio(seq: OddsSequence, k: int) -> float:
    """Window win probability as R_k / prod(1 + r_j).

    Same finiteness requirement as :func:`win_prob_product_sum`.
    """
    _check_window(seq, k)
    if not seq.odds_finite_on(k):
        raise ValueError("odds-ratio form undefined: window contains p = 1")
    R_k = seq.R[k - 1]
    denom = 1.0
    for x in seq.r[k - 1 :]:
        denom *= 1.0 + x
    if math.isinf(denom):
        if R_k == 0.0:
            return 0.0
        return math.exp(
            math.log(R_k) - math.fsum(math.log1p(x) for x in seq.r[k - 1 :])
        )
    return R_k / denom


def win_probability(seq: OddsSequence, t: ThresholdResult) -> WinProbability:
    """Success probability of the odds rule with threshold ``t``.

    ``value`` comes from the expanded form; ``product_form`` is the
    odds-ratio recomputation, omitted when the window holds a sure
    success.  The two agree within 1e-12 whenever both are defined.
    """
    value = win_prob_expanded(seq, t.s)
    product_form = (
        win_prob_odds_ratio(seq, t.s) if seq.odds_finite_on(t.s) else None
    )
    return WinProbability(value=value, product_form=product_form)


def secretary_sequence(n: int) -> OddsSequence:
    """Record-indicator probabilities p_j = 1/j for a random permutation.

    The j-th item of a uniformly random ranking is a running best with
    probability exactly 1/j, independently across j; stopping on the last
    running best recovers the classical best-choice problem.
    """
    if n < 1:
        raise EmptySequence("secretary sequence needs n >= 1")
    return validate_probabilities([1.0 / j for j in range(1, n + 1)])


def lindley_threshold(n: int) -> int:
    """Classical threshold for the best-choice problem via harmonic sums.

    Returns the k with a_{k-1} >= 1 > a_k where a_k = 1/k + ... + 1/(n-1)
    (empty sum = 0, a_0 = +inf).  Deliberately computed from plain
    left-shifted harmonic sums rather than the odds machinery, so it can
    cross-check ``threshold(secretary_sequence(n))``.
    """
    if n < 1:
        raise EmptySequence("need n >= 1")
    # a[k] = a_k for 1 <= k <= n; a_n = 0 by the empty-sum convention.
    a = [0.0] * (n + 1)
    for k in range(n - 1, 0, -1):
        a[k] = a[k + 1] + 1.0 / k
    for k in range(n, 1, -1):
        if a[k - 1] >= 1.0:
            return k
    return 1  # a_0 = +inf always qualifies
