import numpy as np
import pytest

from oddsrule import validate_probabilities

CORPUS_SEED = 20260810
CORPUS_SIZE = 10_000


@pytest.fixture(scope="session")
def corpus():
    """10^4 random sequences: n uniform in 1..50, p_j uniform in [0, 0.95]."""
    rng = np.random.default_rng(CORPUS_SEED)
    seqs = []
    for _ in range(CORPUS_SIZE):
        n = int(rng.integers(1, 51))
        seqs.append(validate_probabilities(rng.uniform(0.0, 0.95, size=n).tolist()))
    return seqs
