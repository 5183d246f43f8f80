"""Fourier coefficients of the log characteristic function for integer-valued
random variables, with the machinery that makes them useful: closed forms for
the classical families, convolution-to-addition identities, a cumulant bridge,
minimum-phase/allpass decomposition, and a bootstrap Poissonity test.
"""

from .charfn import (
    CharFnSamples,
    FrequencyGrid,
    LogCharFnSamples,
    complex_log,
    empirical_charfn,
    eval_charfn,
    grid_analysis,
    grid_synthesis,
    support_width,
    unwrap_phase,
)
from .decompose import Decomposition, allpass_sum, decompose, minphase_from_power
from .errors import (
    CharFnVanishes,
    EmptySample,
    GridTooCoarse,
    ImagResidualTooLarge,
    MuculantError,
    NegativeMass,
    NegativeSampleValue,
    NotApplicable,
    NotCausal,
    NotNormalized,
    PreconditionViolated,
    SupportTooSmall,
    TruncationUnsafe,
)
from .inference import (
    PoissonTestResult,
    estimate_muculants,
    grid_for_samples,
    poisson_statistic,
    poisson_test,
)
from .pmf import (
    PMF,
    CumulantVector,
    SignedSequence,
    autocorrelation,
    convolve,
    is_minimum_phase,
    moments_to_cumulants,
    raw_moment,
    validate_pmf,
)
from .transform import (
    MuculantSeq,
    complex_muculants,
    cumulants_from_muculants,
    power_muculants,
    reconstruct_charfn,
    reconstruct_sequence,
    recursive_minphase_muculants,
)
from .zoo import (
    Bernoulli,
    Binomial,
    Degenerate,
    Geometric,
    NegativeBinomial,
    Poisson,
    parse_spec,
    spec_string,
    zoo_charfn,
    zoo_cumulants,
    zoo_muculants,
    zoo_pmf,
)

__version__ = "0.1.0"

__all__ = [
    "Bernoulli",
    "Binomial",
    "CharFnSamples",
    "CharFnVanishes",
    "CumulantVector",
    "Decomposition",
    "Degenerate",
    "EmptySample",
    "FrequencyGrid",
    "Geometric",
    "GridTooCoarse",
    "ImagResidualTooLarge",
    "LogCharFnSamples",
    "MuculantError",
    "MuculantSeq",
    "NegativeBinomial",
    "NegativeMass",
    "NegativeSampleValue",
    "NotApplicable",
    "NotCausal",
    "NotNormalized",
    "PMF",
    "Poisson",
    "PoissonTestResult",
    "PreconditionViolated",
    "SignedSequence",
    "SupportTooSmall",
    "TruncationUnsafe",
    "allpass_sum",
    "autocorrelation",
    "complex_log",
    "complex_muculants",
    "convolve",
    "cumulants_from_muculants",
    "decompose",
    "empirical_charfn",
    "estimate_muculants",
    "eval_charfn",
    "grid_analysis",
    "grid_for_samples",
    "grid_synthesis",
    "is_minimum_phase",
    "minphase_from_power",
    "moments_to_cumulants",
    "parse_spec",
    "poisson_statistic",
    "poisson_test",
    "power_muculants",
    "raw_moment",
    "reconstruct_charfn",
    "reconstruct_sequence",
    "recursive_minphase_muculants",
    "spec_string",
    "support_width",
    "unwrap_phase",
    "validate_pmf",
    "zoo_charfn",
    "zoo_cumulants",
    "zoo_muculants",
    "zoo_pmf",
]
