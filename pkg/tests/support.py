"""Shared helpers for the test suite."""

import numpy as np

from muculants import (
    PMF,
    FrequencyGrid,
    complex_log,
    complex_muculants,
    eval_charfn,
    validate_pmf,
)

# Rejection floor for random PMFs.  The log pipeline needs |phi| bounded
# away from zero everywhere, not just on the analysis grid, so candidates
# are screened on a fine fixed grid with margin to spare.
MIN_ABS_CF = 0.05
_SCREEN_GRID = FrequencyGrid(2048)


def min_abs_charfn(f: PMF) -> float:
    return float(np.min(np.abs(eval_charfn(f, _SCREEN_GRID).values)))


def grid_muculants(f: PMF, n_points: int, n_max: int):
    """Full numerical route: sample, log, analyze."""
    cf = eval_charfn(f, FrequencyGrid(n_points))
    return complex_muculants(complex_log(cf), n_max)


def random_pmf(rng: np.random.Generator, max_width: int = 8) -> PMF:
    """Random finite-support PMF with min |phi| >= MIN_ABS_CF.

    Draws Dirichlet weights over a short support window at a random
    offset and rejects candidates whose characteristic function dips
    too low.  Every tenth attempt boosts one atom above 0.6, which
    forces |phi| >= 0.2 and guarantees termination.
    """
    for attempt in range(200):
        width = int(rng.integers(1, max_width + 1))
        offset = int(rng.integers(-5, 6))
        probs = rng.dirichlet(np.ones(width + 1))
        if attempt % 10 == 9:
            probs[rng.integers(0, width + 1)] += 2.0
            probs /= probs.sum()
        f = validate_pmf(offset, probs)
        if min_abs_charfn(f) >= MIN_ABS_CF:
            return f
    raise AssertionError("random_pmf failed to find a usable candidate")
