"""Independent verification engines for the odds rule.

Four routes to the same numbers, sharing no code with the closed-form
evaluation in :mod:`oddsrule.core`:

* exact backward induction over *all* adapted stopping rules,
* the exact value of every fixed threshold rule,
* exhaustive enumeration of the 2^n outcome vectors (small n),
* a seeded Monte Carlo simulator with partition-independent streams.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import OddsSequence
from .errors import IndexOutOfRange, TooLarge

EXHAUSTIVE_MAX_N = 20
MC_CHUNK = 1 << 16


@dataclass(frozen=True)
class DPResult:
    """Backward-induction solution of the last-success stopping problem.

    ``continuation[k-1]`` is the value V_k of still being in the game
    before observing trial k (V_{n+1} = 0 is appended), satisfying

        V_k = p_k * max(Q_{k+1}, V_{k+1}) + (1 - p_k) * V_{k+1}

    with Q_k the probability of no success in [k, n].  ``stop_set``
    holds the indices where stopping on an observed success is strictly
    better than continuing; on ties the rule continues (stop-late).
    """

    value: float
    stop_set: frozenset[int]
    continuation: tuple[float, ...]


@dataclass(frozen=True)
class SimulationReport:
    trials: int
    wins: int
    estimate: float
    std_error: float
    seed: int


def dp_optimal_value(seq: OddsSequence) -> DPResult:
    """Optimal success probability over all stopping times, by exact
    backward induction."""
    n = seq.n
    values = [0.0] * (n + 1)  # values[k-1] = V_k, values[n] = V_{n+1} = 0
    stop = []
    q_next = 1.0  # Q_{k+1}
    for k in range(n, 0, -1):
        p_k = seq.p[k - 1]
        v_next = values[k]
        if q_next > v_next:
            stop.append(k)
        values[k - 1] = p_k * max(q_next, v_next) + (1.0 - p_k) * v_next
        q_next *= 1.0 - p_k
    return DPResult(
        value=values[0], stop_set=frozenset(stop), continuation=tuple(values)
    )


def threshold_rule_value(seq: OddsSequence, k: int) -> float:
    """Exact win probability of "stop at the first success at index >= k".

    Runs the window forward, tracking the probability of zero and of
    exactly one success so far; the rule wins precisely when the window
    [k, n] ends with exactly one success.
    """
    if not 1 <= k <= seq.n:
        raise IndexOutOfRange(k, seq.n)
    none = 1.0
    one = 0.0
    for j in range(k - 1, seq.n):
        p_j = seq.p[j]
        q_j = 1.0 - p_j
        one = one * q_j + none * p_j
        none = none * q_j
    return one


def threshold_rule_values(seq: OddsSequence) -> tuple[float, ...]:
    """Win probability of every threshold rule k = 1..n in one sweep.

    Uses the backward recurrence P_k = p_k * Q_{k+1} + (1-p_k) * P_{k+1},
    a different route than :func:`threshold_rule_value`, so the two can
    cross-check each other.
    """
    n = seq.n
    vals = [0.0] * n
    q_next = 1.0
    p_next = 0.0
    for k in range(n, 0, -1):
        p_k = seq.p[k - 1]
        p_next = p_k * q_next + (1.0 - p_k) * p_next
        vals[k - 1] = p_next
        q_next *= 1.0 - p_k
    return tuple(vals)


def exhaustive_value(seq: OddsSequence, k: int) -> float:
    """Ground-truth win probability of the threshold-k rule by weighting
    all 2^n outcome vectors.

    Each outcome gets probability prod p_j^{I_j} (1-p_j)^{1-I_j}; the
    rule is simulated on it (first success at or after k, win iff no
    success strictly later) and the winning weights are summed exactly.
    Capped at n = 20, about a million outcomes.
    """
    n = seq.n
    if n > EXHAUSTIVE_MAX_N:
        raise TooLarge(f"exhaustive enumeration capped at n = {EXHAUSTIVE_MAX_N}, got {n}")
    if not 1 <= k <= n:
        raise IndexOutOfRange(k, n)
    idx = np.arange(1 << n, dtype=np.int64)
    weights = np.ones(1 << n)
    for j in range(n):
        bit = (idx >> j) & 1
        weights *= np.where(bit == 1, seq.p[j], 1.0 - seq.p[j])
    # column-by-column keeps the peak allocation at one bool matrix
    window = np.empty((1 << n, n - k + 1), dtype=bool)
    for i, j in enumerate(range(k - 1, n)):
        window[:, i] = (idx >> j) & 1
    stops = window.any(axis=1)
    first = window.argmax(axis=1)
    counts = np.cumsum(window, axis=1)
    after = counts[:, -1] - np.take_along_axis(counts, first[:, None], axis=1)[:, 0]
    wins = stops & (after == 0)
    return math.fsum(weights[wins].tolist())


def monte_carlo(
    seq: OddsSequence, k: int, trials: int, seed: int
) -> SimulationReport:
    """Simulate the threshold-k rule on sampled indicator vectors.

    Deterministic given (seed, trials) no matter how the work is split:
    trial chunk i always draws from a generator seeded with
    SeedSequence(entropy=seed, spawn_key=(i,)), and chunk boundaries are
    fixed by MC_CHUNK, not by worker count.
    """
    if not 1 <= k <= seq.n:
        raise IndexOutOfRange(k, seq.n)
    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    p = np.asarray(seq.p)
    entropy = int(seed) % (1 << 64)  # SeedSequence wants a nonnegative int
    wins = 0
    done = 0
    chunk = 0
    while done < trials:
        m = min(MC_CHUNK, trials - done)
        rng = np.random.default_rng(
            np.random.SeedSequence(entropy=entropy, spawn_key=(chunk,))
        )
        hits = rng.random((m, seq.n)) < p
        window = hits[:, k - 1 :]
        stops = window.any(axis=1)
        first = window.argmax(axis=1)
        counts = np.cumsum(window, axis=1)
        after = (
            counts[:, -1]
            - np.take_along_axis(counts, first[:, None], axis=1)[:, 0]
        )
        wins += int((stops & (after == 0)).sum())
        done += m
        chunk += 1
    estimate = wins / trials
    std_error = math.sqrt(estimate * (1.0 - estimate) / trials)
    return SimulationReport(
        trials=trials, wins=wins, estimate=estimate, std_error=std_error, seed=seed
    )
