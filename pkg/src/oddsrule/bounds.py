"""Sharp bounds on the odds rule's success probability.

Given the threshold index s and the suffix odds sum R_s, the success
probability V_n is pinned between

    upper:  R_s / (1 + R_s)

and a lower bound that depends on where R_s falls:

    case 1 (R_s < 1, forces s = 1):   R_1 * (1 + R_1/n)^(-n)
    case 2 (1 <= R_s <= 1 + 1/(n-s)): (1 + 1/(n-s+1))^(-(n-s+1))
    case 3 (R_s > 1 + 1/(n-s)):       (1 + 1/(n-s))^(-(n-s)), strict

Every bound is attained (cases 1-2 and the upper bound exactly, case 3 in
the limit); see :mod:`oddsrule.extremal` for the attaining sequences.
Two older sum-free bounds are provided for comparison: V_n > 1/e and
V_n >= (1 - 1/(n+1))^n, both valid once the full odds sum reaches 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import OddsSequence, ThresholdResult, odds_to_prob, threshold, win_probability
from .errors import InconsistentInput, InternalBoundViolation, NegativeInput, NotANumber

# Slack for "bound satisfied" checks and tolerance for equality detection.
# Exact-equality configurations round to either side of their bound by a
# few ulps, so a strict IEEE comparison would misfire.
EQUALITY_TOL = 1e-12

E_BOUND = math.exp(-1.0)


class LowerBound(NamedTuple):
    case: int
    value: float
    strict: bool


def _compound_decay(m: int) -> float:
    """(1 + 1/m)^(-m), decreasing in m toward 1/e from above.

    Evaluated as exp(-m*log1p(1/m)) to dodge cancellation at large m.
    """
    if m < 1:
        raise InconsistentInput(f"need m >= 1, got {m}")
    return math.exp(-m * math.log1p(1.0 / m))


def upper_bound(t: ThresholdResult) -> float:
    """R_s / (1 + R_s); 1 when the suffix sum is infinite."""
    return odds_to_prob(t.R_s)


def lower_bound(n: int, s: int, R_s: float) -> LowerBound:
    """Case-dispatched lower bound on V_n.

    Case 1 applies for R_s < 1 (only consistent with s = 1); case 2 on
    the closed interval [1, 1 + 1/(n-s)]; case 3 strictly above it.  At
    s = n the separating value 1 + 1/(n-s) is +inf, so case 2 absorbs
    every R_s >= 1.
    """
    if not 1 <= s <= n:
        raise InconsistentInput(f"need 1 <= s <= n, got s = {s}, n = {n}")
    if math.isnan(R_s) or R_s < 0.0:
        raise InconsistentInput(f"need R_s >= 0, got {R_s!r}")
    if R_s < 1.0:
        if s > 1:
            raise InconsistentInput(
                f"R_s = {R_s!r} < 1 contradicts threshold s = {s} > 1"
            )
        value = R_s * math.exp(-n * math.log1p(R_s / n))
        return LowerBound(case=1, value=value, strict=False)
    separator = math.inf if s == n else 1.0 + 1.0 / (n - s)
    if R_s <= separator:
        return LowerBound(case=2, value=_compound_decay(n - s + 1), strict=False)
    return LowerBound(case=3, value=_compound_decay(n - s), strict=True)


def corollary_bound(n: int, s: int) -> float:
    """Lower bound using only n and s: (1 + 1/(n-s+1))^(-(n-s+1)).

    Needs no knowledge of R_s; valid whenever s >= 2 (then R_s >= 1 is
    automatic).  At s = 1 it equals the case-2 value and is reported for
    reference, with applicability labelled separately.
    """
    if not 1 <= s <= n:
        raise InconsistentInput(f"need 1 <= s <= n, got s = {s}, n = {n}")
    return _compound_decay(n - s + 1)


class PriorBounds(NamedTuple):
    e_applicable: bool
    e_value: float
    ai_value: float


def prior_bounds(seq: OddsSequence) -> PriorBounds:
    """The two classical sum-free lower bounds.

    Both require R_1 >= 1: V_n > 1/e, and the sharp
    V_n >= (1 - 1/(n+1))^n (equality at constant p_j = 1/(n+1), the
    Allaart-Islas configuration).
    """
    n = seq.n
    ai = math.exp(n * math.log1p(-1.0 / (n + 1)))
    return PriorBounds(
        e_applicable=seq.R[0] >= 1.0, e_value=E_BOUND, ai_value=ai
    )


def log_product_gap(xs) -> float:
    """sum_j ln(1 + x_j) - ln(1 + sum_j x_j), nonnegative for x_j >= 0.

    Zero exactly when at most one coordinate is nonzero.  Computed as
    log1p(u / (1 + S)) where u = prod(1+x_j) - 1 - S accumulates only
    nonnegative increments, so the result can never round below 0 (the
    naive difference of two logs can, when the true gap is below 1e-16).
    """
    values = [float(x) for x in xs]
    for i, x in enumerate(values, start=1):
        if math.isnan(x) or math.isinf(x):
            raise NotANumber(i, x)
        if x < 0.0:
            raise NegativeInput(f"need nonnegative entries, got {x!r}")
    total = math.fsum(values)
    prodm1 = 0.0  # prod(1+x) - 1 over the processed prefix
    u = 0.0       # prodm1 - (running sum): the second-and-higher order mass
    for x in values:
        u += prodm1 * x
        prodm1 += x + prodm1 * x
        if math.isinf(prodm1):
            # Astronomic gap: the direct formula is safe out here.
            return math.fsum(math.log1p(v) for v in values) - math.log1p(total)
    return math.log1p(u / (1.0 + total))


@dataclass(frozen=True)
class BoundReport:
    """All applicable bounds for one sequence, with satisfaction and
    equality flags (tolerance EQUALITY_TOL).

    ``satisfied`` covers only the applicable bounds and is guaranteed
    all-True: a violation raises InternalBoundViolation instead of being
    reported, since by the theory it can only mean a bug.
    """

    v_n: float
    s: int
    R_s: float
    upper: float
    lower: float
    lower_case: int
    lower_strict: bool
    corollary: float
    corollary_applicable: bool
    e_bound_applicable: bool
    e_bound: float
    allaart_islas: float
    satisfied: dict[str, bool]
    equality: dict[str, bool]


def bound_report(seq: OddsSequence) -> BoundReport:
    """Evaluate every bound against the exact V_n and assert all hold."""
    t = threshold(seq)
    v = win_probability(seq, t).value
    up = upper_bound(t)
    low = lower_bound(seq.n, t.s, t.R_s)
    cor = corollary_bound(seq.n, t.s)
    prior = prior_bounds(seq)

    satisfied = {
        "upper": v <= up + EQUALITY_TOL,
        "lower": v >= low.value - EQUALITY_TOL,
    }
    equality = {
        "upper": abs(v - up) <= EQUALITY_TOL,
        "lower": abs(v - low.value) <= EQUALITY_TOL,
    }
    corollary_applicable = t.s >= 2
    if corollary_applicable:
        satisfied["corollary"] = v >= cor - EQUALITY_TOL
        equality["corollary"] = abs(v - cor) <= EQUALITY_TOL
    if prior.e_applicable:
        satisfied["one_over_e"] = v >= prior.e_value - EQUALITY_TOL
        satisfied["allaart_islas"] = v >= prior.ai_value - EQUALITY_TOL
        equality["allaart_islas"] = abs(v - prior.ai_value) <= EQUALITY_TOL

    values = {
        "upper": up,
        "lower": low.value,
        "corollary": cor,
        "one_over_e": prior.e_value,
        "allaart_islas": prior.ai_value,
    }
    for bound_id, ok in satisfied.items():
        if not ok:
            raise InternalBoundViolation(bound_id, v, values[bound_id])

    return BoundReport(
        v_n=v,
        s=t.s,
        R_s=t.R_s,
        upper=up,
        lower=low.value,
        lower_case=low.case,
        lower_strict=low.strict,
        corollary=cor,
        corollary_applicable=corollary_applicable,
        e_bound_applicable=prior.e_applicable,
        e_bound=prior.e_value,
        allaart_islas=prior.ai_value,
        satisfied=satisfied,
        equality=equality,
    )
