"""Integer-supported probability mass functions and their moment algebra."""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NegativeMass, NotCausal, NotNormalized

# Entries in [_CLAMP, 0) are treated as floating-point noise and clamped.
_CLAMP = -1e-14
# validate_pmf acceptance window around total mass 1.
_NORM_TOL = 1e-6
# Slack on the stored-mass invariants of the PMF type itself.
_MASS_SLOP = 1e-10
# Root modulus must stay below 1 - margin to count as minimum phase.
_MINPHASE_MARGIN = 1e-10

MAX_MOMENT_ORDER = 12


def _frozen_array(values, dtype=np.float64) -> np.ndarray:
    a = np.array(values, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PMF:
    """Probability mass function on the integers.

    ``probs[i]`` is the probability of the integer ``offset + i``.  The
    vector is trimmed (first and last entries nonzero) and sums to at most
    one; any deficit from one must be covered by ``tail_mass_bound``, the
    recorded upper bound on mass removed by truncating an infinite support.

    Instances are immutable; build them through :func:`validate_pmf` or the
    distribution constructors rather than by hand.
    """

    offset: int
    probs: np.ndarray
    tail_mass_bound: float = 0.0

    def __post_init__(self):
        probs = _frozen_array(self.probs)
        object.__setattr__(self, "probs", probs)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("probs must be a nonempty 1-D vector")
        if not np.all(np.isfinite(probs)):
            raise ValueError("probs must be finite")
        if np.any(probs < 0.0):
            raise NegativeMass("PMF entries must be nonnegative")
        if not 0.0 <= self.tail_mass_bound <= 1.0:
            raise ValueError("tail_mass_bound must lie in [0, 1]")
        s = float(probs.sum())
        if s > 1.0 + _MASS_SLOP:
            raise NotNormalized(f"total mass {s!r} exceeds 1")
        if 1.0 - s > self.tail_mass_bound + _MASS_SLOP:
            raise NotNormalized(
                f"mass deficit {1.0 - s!r} is not covered by tail_mass_bound"
            )
        if probs[0] == 0.0 or probs[-1] == 0.0:
            raise ValueError("PMF must be trimmed: first and last entries nonzero")

    def __len__(self) -> int:
        return len(self.probs)

    @property
    def support(self) -> np.ndarray:
        """Integer points carrying the stored mass."""
        return self.offset + np.arange(len(self.probs))

    @property
    def total_mass(self) -> float:
        return float(self.probs.sum())


@dataclass(frozen=True)
class SignedSequence:
    """Finite real-valued sequence on the integers.

    Unlike a PMF, entries may be negative: truncated coefficient sequences
    reconstruct to signed sequences in general, and whether such a sequence
    is a distribution is a question answered by the caller, not the type.
    """

    offset: int
    values: np.ndarray
    sum: float = field(init=False)

    def __post_init__(self):
        v = _frozen_array(self.values)
        object.__setattr__(self, "values", v)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("values must be a nonempty 1-D vector")
        if not np.all(np.isfinite(v)):
            raise ValueError("values must be finite")
        object.__setattr__(self, "sum", float(v.sum()))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def support(self) -> np.ndarray:
        return self.offset + np.arange(len(self.values))

    def value_at(self, xi: int) -> float:
        """Entry at integer ``xi``; zero outside the stored window."""
        i = xi - self.offset
        if 0 <= i < len(self.values):
            return float(self.values[i])
        return 0.0


@dataclass(frozen=True)
class CumulantVector:
    """Cumulants kappa_1 .. kappa_K, stored zero-indexed."""

    values: np.ndarray

    def __post_init__(self):
        v = _frozen_array(self.values)
        object.__setattr__(self, "values", v)
        if v.ndim != 1 or v.size == 0:
            raise ValueError("need at least one cumulant")
        if not np.all(np.isfinite(v)):
            raise ValueError("cumulants must be finite")

    def __len__(self) -> int:
        return len(self.values)

    def kappa(self, k: int) -> float:
        if not 1 <= k <= len(self.values):
            raise ValueError(f"order {k} outside stored range 1..{len(self.values)}")
        return float(self.values[k - 1])


def validate_pmf(offset: int, values) -> PMF:
    """Build a canonical PMF from raw values.

    Entries in ``[-1e-14, 0)`` are clamped to zero as floating-point noise;
    anything more negative raises :class:`NegativeMass`.  The total mass
    must lie within ``1e-6`` of one, otherwise :class:`NotNormalized`.
    Excess above one (always fp accumulation) is rescaled away; a deficit
    is kept and recorded as ``tail_mass_bound``.  Leading or trailing
    zeros are folded into ``offset``.
    """
    v = np.array(values, dtype=np.float64)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("values must be a nonempty 1-D vector")
    if not np.all(np.isfinite(v)):
        raise ValueError("values must be finite")
    if np.any(v < _CLAMP):
        raise NegativeMass(f"entry {float(v.min())!r} below the -1e-14 noise floor")
    v[v < 0.0] = 0.0
    s = float(v.sum())
    if not (1.0 - _NORM_TOL <= s <= 1.0 + _NORM_TOL):
        raise NotNormalized(f"total mass {s!r} outside [1 - 1e-6, 1 + 1e-6]")
    if s > 1.0:
        v /= s
    nonzero = np.nonzero(v)[0]
    v = v[nonzero[0] : nonzero[-1] + 1]
    deficit = max(0.0, 1.0 - float(v.sum()))
    return PMF(int(offset) + int(nonzero[0]), v, tail_mass_bound=deficit)


def convolve(f: PMF, g: PMF) -> PMF:
    """PMF of the sum of independent variables distributed as ``f`` and ``g``."""
    probs = np.convolve(f.probs, g.probs)
    bound = min(1.0, f.tail_mass_bound + g.tail_mass_bound)
    return PMF(f.offset + g.offset, probs, tail_mass_bound=bound)


def autocorrelation(f: PMF) -> PMF:
    """Law of the difference of two independent copies of ``f``.

    Even around zero by construction; the fp residue of the convolution is
    symmetrized away so the mirror equality holds index-wise exactly.
    """
    c = np.convolve(f.probs, f.probs[::-1])
    c = 0.5 * (c + c[::-1])
    return PMF(-(len(f) - 1), c, tail_mass_bound=min(1.0, 2.0 * f.tail_mass_bound))


def raw_moment(f: PMF, k: int) -> float:
    """E[X^k] from the stored mass.  Orders above 12 amplify truncation noise
    past anything the downstream tolerances can absorb, so they are refused."""
    if not 1 <= k <= MAX_MOMENT_ORDER:
        raise ValueError(f"moment order must be in 1..{MAX_MOMENT_ORDER}")
    xi = f.support.astype(np.float64)
    return float(np.sum(xi**k * f.probs))


def moments_to_cumulants(moments) -> CumulantVector:
    """Cumulants from raw moments mu'_1 .. mu'_K.

    Standard triangular recursion:
    kappa_k = mu'_k - sum_{i=1}^{k-1} C(k-1, i-1) kappa_i mu'_{k-i}.
    """
    mu = np.asarray(moments, dtype=np.float64)
    if mu.ndim != 1 or mu.size == 0:
        raise ValueError("need at least the first raw moment")
    kappa = np.empty(len(mu))
    for k in range(1, len(mu) + 1):
        acc = mu[k - 1]
        for i in range(1, k):
            acc -= math.comb(k - 1, i - 1) * kappa[i - 1] * mu[k - i - 1]
        kappa[k - 1] = acc
    return CumulantVector(kappa)


def is_minimum_phase(f: PMF) -> bool:
    """Whether every zero of the support polynomial sum_xi f[xi] w^(L-xi)
    lies strictly inside the unit circle (modulus below 1 - 1e-10).

    Requires a causal PMF (offset >= 0); raises :class:`NotCausal` otherwise.
    """
    if f.offset < 0:
        raise NotCausal("minimum-phase test requires offset >= 0")
    if len(f) == 1:
        return True
    roots = np.roots(f.probs)
    return bool(np.all(np.abs(roots) < 1.0 - _MINPHASE_MARGIN))
