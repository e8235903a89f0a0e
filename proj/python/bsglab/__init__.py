"""Bit-search keystream generator laboratory.

Thin wrapper over the C++ core: string-in/string-out primitives pass
through unchanged, structured results arrive as JSON and are returned
as dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    __version__,
    absg,
    all_primitive_taps,
    bsg,
    gap_pmf,
    is_maximal,
    lfsr_bits,
    mean,
    pmf_probs,
    poly_str,
    primitive_taps,
    rate,
    state_trace,
    variance,
)
from . import _core


def classify(poly, direct_check=True, max_degree=16, threads=0):
    """Shift-class report for a primitive feedback polynomial."""
    return _json.loads(
        _core.classify_json(poly, direct_check, max_degree, threads)
    )


def period_bounds(degree):
    """Window for the mean output period at the given register degree."""
    return _json.loads(_core.period_bounds_json(degree))


def state_dist(n):
    """Exact search-state distribution after n fair input bits."""
    return _json.loads(_core.state_dist_json(n))


def pmf(n):
    """Summary of the emission-count law at input length n."""
    return _json.loads(_core.pmf_json(n))


def simulate(n, trials, seed=0, kind="state", chi2=True, level=0.999, threads=0):
    """Monte Carlo emission counts with optional goodness-of-fit test."""
    return _json.loads(
        _core.simulate_json(n, trials, seed, kind, chi2, level, threads)
    )


__all__ = [
    "__version__",
    "absg",
    "all_primitive_taps",
    "bsg",
    "classify",
    "gap_pmf",
    "is_maximal",
    "lfsr_bits",
    "mean",
    "period_bounds",
    "pmf",
    "pmf_probs",
    "poly_str",
    "primitive_taps",
    "rate",
    "simulate",
    "state_dist",
    "state_trace",
    "variance",
]
