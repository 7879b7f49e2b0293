"""Exact descent-count combinatorics with translated-Poisson approximation.

The library computes the distribution of descent counts of random
permutations in exact rational arithmetic, approximates it by a translated
Poisson law, and evaluates closed-form bounds on both the plain and the
modular (residue class) approximation error.  Every bound and moment
identity is backed by an enumeration or high-precision oracle in the test
suite, and the ``eulermod`` command line runs the verification sweeps.
"""

from .bounds import (
    BoundInputs,
    descent_bound_inputs,
    descent_tp_bound,
    generic_tp_bound,
    modular_descent_bound,
    up_step_variance,
)
from .distance import TvResult, tv_descents_vs_tp, tv_distance, tv_distance_events
from .eulerian import (
    BRUTE_FORCE_LIMIT,
    BernoulliSequence,
    EulerianTable,
    ExactIntegerDistribution,
    bernoulli_even_probability,
    bernoulli_numbers,
    brute_force_descent_distribution,
    descent_distribution,
    eulerian_triangle,
    even_count_deviation,
    even_deviation_decay_rates,
    modular_descent_probability,
)
from .exchangeable import (
    ChainSamples,
    PairMomentReport,
    Permutation,
    descents_of_inverse,
    indicator_pair_moments,
    move_to_end,
    pair_oracle,
    sample_chain,
    up_step_indicators,
    up_step_probability,
)
from .poisson import (
    RealDistributionOnIntegers,
    TranslatedPoissonParams,
    poisson_mod_bounds,
    poisson_mod_probability,
    poisson_pmf,
    poisson_window,
    translated_poisson_mod_probability,
    translated_poisson_params,
    translated_poisson_pmf,
    translated_poisson_window,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BRUTE_FORCE_LIMIT",
    "BernoulliSequence",
    "BoundInputs",
    "ChainSamples",
    "EulerianTable",
    "ExactIntegerDistribution",
    "PairMomentReport",
    "Permutation",
    "RealDistributionOnIntegers",
    "TranslatedPoissonParams",
    "TvResult",
    "bernoulli_even_probability",
    "bernoulli_numbers",
    "brute_force_descent_distribution",
    "descent_bound_inputs",
    "descent_distribution",
    "descent_tp_bound",
    "descents_of_inverse",
    "eulerian_triangle",
    "even_count_deviation",
    "even_deviation_decay_rates",
    "generic_tp_bound",
    "indicator_pair_moments",
    "modular_descent_bound",
    "modular_descent_probability",
    "move_to_end",
    "pair_oracle",
    "poisson_mod_bounds",
    "poisson_mod_probability",
    "poisson_pmf",
    "poisson_window",
    "sample_chain",
    "translated_poisson_mod_probability",
    "translated_poisson_params",
    "translated_poisson_pmf",
    "translated_poisson_window",
    "tv_descents_vs_tp",
    "tv_distance",
    "tv_distance_events",
    "up_step_indicators",
    "up_step_probability",
    "up_step_variance",
]
