"""Exact verification of congruences for multiple harmonic sums.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface.
"""

from ._core import (
    MhsError,
    __version__,
    bernoulli_number,
    bernoulli_poly,
    catalog,
    composition_sum_bruteforce,
    composition_sum_collapsed,
    evaluate,
    is_prime,
    mhs_exact,
    mhs_mod,
    power_series_sum_mod,
    reduce_rational,
    run_sweep,
    statement_ids,
)

__all__ = [
    "MhsError",
    "__version__",
    "bernoulli_number",
    "bernoulli_poly",
    "catalog",
    "composition_sum_bruteforce",
    "composition_sum_collapsed",
    "evaluate",
    "is_prime",
    "mhs_exact",
    "mhs_mod",
    "power_series_sum_mod",
    "reduce_rational",
    "run_sweep",
    "statement_ids",
]
