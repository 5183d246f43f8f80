"""Characteristic functions on a uniform frequency grid, and their complex log.

The grid is mu_k = -pi + 2*pi*k/N for k = 0..N-1 with N a power of two, so
mu = 0 sits exactly at index N/2 and -pi is on the grid while +pi is not
(they are the same point of the circle).
"""

from dataclasses import dataclass

import numpy as np

from .errors import CharFnVanishes, EmptySample, GridTooCoarse
from .pmf import PMF

DEFAULT_GRID_SIZE = 4096

# |charfn| below this and the complex log is numerically undefined.
VANISH_TOL = 1e-8

# Hermitian-symmetry slack for sampled charfns.
_HERMITIAN_TOL = 1e-10

_SOURCES = ("exact-from-pmf", "empirical", "reconstructed")


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform grid of N frequencies mu_k = -pi + 2*pi*k/N, N a power of two >= 64."""

    n_points: int

    def __post_init__(self):
        n = self.n_points
        if not isinstance(n, (int, np.integer)) or n < 64 or n & (n - 1):
            raise ValueError("n_points must be a power of two, at least 64")
        object.__setattr__(self, "n_points", int(n))

    @property
    def points(self) -> np.ndarray:
        n = self.n_points
        return -np.pi + 2.0 * np.pi * np.arange(n) / n

    @property
    def zero_index(self) -> int:
        return self.n_points // 2

    @classmethod
    def for_width(cls, width: int, minimum: int = 64) -> "FrequencyGrid":
        """Smallest admissible grid with at least ``4 * width`` points."""
        n = max(minimum, 4 * int(width), 64)
        return cls(1 << (n - 1).bit_length())


def support_width(f: PMF) -> int:
    """Length of the smallest integer interval containing the support and 0.

    The origin is included because the linear phase of the offset is part of
    what the grid must resolve.
    """
    lo = min(f.offset, 0)
    hi = max(f.offset + len(f) - 1, 0)
    return hi - lo + 1


def _alternating(n: int) -> np.ndarray:
    alt = np.ones(n)
    alt[1::2] = -1.0
    return alt


def grid_synthesis(coeffs, offset: int, grid: FrequencyGrid) -> np.ndarray:
    """sum_i coeffs[i] * exp(j * mu_k * (offset + i)) at every grid point.

    Computed by folding indices modulo N and one inverse FFT.  Exact for any
    support length: exp(j * mu_k * xi) is N-periodic in xi on this grid
    (N even), so folding changes nothing.
    """
    n = grid.n_points
    c = np.asarray(coeffs, dtype=np.float64)
    folded = np.zeros(n)
    idx = (int(offset) + np.arange(len(c))) % n
    np.add.at(folded, idx, c)
    return np.fft.ifft(folded * _alternating(n)) * n


def grid_analysis(values: np.ndarray, ns) -> np.ndarray:
    """Trapezoidal Fourier coefficients (1/2pi) * integral(values * e^{-j mu n})
    of a grid-sampled 2pi-periodic function, for the integer indices ``ns``."""
    v = np.asarray(values)
    n = len(v)
    ns = np.asarray(ns, dtype=np.int64)
    if np.any(np.abs(ns) > n // 2):
        raise ValueError("requested index beyond the grid's unaliased range")
    coef = np.fft.fft(v) / n
    signs = np.where(ns % 2 == 0, 1.0, -1.0)
    return signs * coef[ns % n]


@dataclass(frozen=True)
class CharFnSamples:
    """Characteristic function sampled on a :class:`FrequencyGrid`.

    ``source`` records provenance: "exact-from-pmf" (modulus capped at one),
    "empirical" (value 1 at mu = 0 by construction, modulus not clipped), or
    "reconstructed" (synthesized from a truncated coefficient sequence, whose
    modulus may legitimately exceed one).
    """

    grid: FrequencyGrid
    values: np.ndarray
    source: str

    def __post_init__(self):
        v = np.array(self.values, dtype=np.complex128)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        if v.shape != (self.grid.n_points,):
            raise ValueError("values must match the grid length")
        if self.source not in _SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if not np.all(np.isfinite(v)):
            raise ValueError("values must be finite")
        # Hermitian symmetry: value at -mu_k conjugates the value at mu_k.
        partner = np.concatenate([v[:1], v[1:][::-1]])
        if np.max(np.abs(v - np.conj(partner))) > _HERMITIAN_TOL:
            raise ValueError("samples are not Hermitian within 1e-10")
        if self.source == "exact-from-pmf" and np.max(np.abs(v)) > 1.0 + 1e-10:
            raise ValueError("charfn modulus exceeds one")


@dataclass(frozen=True)
class LogCharFnSamples:
    """log magnitude and continuous (unwrapped) phase of sampled charfn values.

    The phase is exactly zero at mu = 0 and exactly odd about it; ``min_abs``
    records how close the input came to the vanishing threshold.
    """

    grid: FrequencyGrid
    log_magnitude: np.ndarray
    phase: np.ndarray
    min_abs: float

    def __post_init__(self):
        lm = np.array(self.log_magnitude, dtype=np.float64)
        ph = np.array(self.phase, dtype=np.float64)
        lm.setflags(write=False)
        ph.setflags(write=False)
        object.__setattr__(self, "log_magnitude", lm)
        object.__setattr__(self, "phase", ph)
        n = self.grid.n_points
        if lm.shape != (n,) or ph.shape != (n,):
            raise ValueError("log_magnitude and phase must match the grid length")
        if not (np.all(np.isfinite(lm)) and np.all(np.isfinite(ph))):
            raise ValueError("log values must be finite")


def eval_charfn(f: PMF, grid: FrequencyGrid) -> CharFnSamples:
    """Evaluate Phi(mu) = sum_xi f[xi] e^{j mu xi} on the grid.

    Zero-padded DFT with the offset folded in as part of the index lattice.
    Requires ``N >= 4 * support_width(f)``: that keeps the true phase
    increment per grid step below pi, so the downstream unwrap cannot skip
    a wrap.  Raises :class:`GridTooCoarse` otherwise.
    """
    w = support_width(f)
    if grid.n_points < 4 * w:
        raise GridTooCoarse(
            f"support width {w} needs at least {4 * w} grid points, "
            f"got {grid.n_points}"
        )
    vals = grid_synthesis(f.probs, f.offset, grid)
    return CharFnSamples(grid, vals, "exact-from-pmf")


def empirical_charfn(samples, grid: FrequencyGrid) -> CharFnSamples:
    """Empirical characteristic function (1/m) sum_i e^{j mu X_i}.

    Samples must be integers; the sum is evaluated exactly at the grid
    points through a bin count (no aliasing guard is needed because the
    grid kernel is periodic in the sample values).  Not clipped to the unit
    disk: the estimate may exceed one in modulus and that is informative.
    """
    x = np.asarray(samples)
    if x.size == 0:
        raise EmptySample("no samples")
    if x.ndim != 1:
        raise ValueError("samples must be a 1-D vector")
    xi = np.asarray(x, dtype=np.int64)
    if not np.array_equal(xi, x):
        raise ValueError("samples must be integers")
    lo = int(xi.min())
    weights = np.bincount(xi - lo) / xi.size
    vals = np.array(grid_synthesis(weights, lo, grid))
    vals[grid.zero_index] = 1.0  # exact by construction
    return CharFnSamples(grid, vals, "empirical")


def unwrap_phase(principal) -> np.ndarray:
    """Resolve 2*pi jumps in a sequence of principal arguments.

    The first element is kept; each later element is shifted by the integer
    multiple of 2*pi that brings the consecutive difference into [-pi, pi].
    """
    p = np.asarray(principal, dtype=np.float64)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("need a nonempty 1-D sequence")
    if np.max(np.abs(p)) > np.pi + 1e-9:
        raise ValueError("inputs must be principal values in (-pi, pi]")
    d = np.diff(p)
    corrections = -2.0 * np.pi * np.cumsum(np.round(d / (2.0 * np.pi)))
    out = p.copy()
    out[1:] += corrections
    return out


def complex_log(
    samples: CharFnSamples, *, vanish_tol: float = VANISH_TOL
) -> LogCharFnSamples:
    """Complex logarithm with a continuous phase.

    The phase is unwrapped along mu in [0, pi] (the value at pi is the
    sample at -pi, the same point of the circle), pinned to zero at mu = 0,
    and extended to negative mu by odd symmetry.  That preserves the
    Hermitian structure exactly, which is what makes the downstream
    coefficients real.  Raises :class:`CharFnVanishes` when any sample
    modulus falls below ``vanish_tol``.

    When the charfn winds around the origin (shifted laws, Bernoulli with
    p > 1/2) the odd phase has a 2*pi*m jump across +-pi; the sample at
    -pi is then set to the jump midpoint, which oddness forces to zero.
    Sampling either one-sided limit there instead would inject a delta
    into the analysis and a pi/N imaginary residue downstream.
    """
    v = samples.values
    n = samples.grid.n_points
    mods = np.abs(v)
    min_abs = float(mods.min())
    if min_abs < vanish_tol:
        raise CharFnVanishes(
            f"|charfn| reaches {min_abs:.3e}, below the {vanish_tol:.0e} floor"
        )
    log_mag = np.log(mods)
    half = np.concatenate([v[n // 2 :], v[:1]])  # mu = 0, ..., pi
    ph = unwrap_phase(np.angle(half))
    ph -= ph[0]
    phase = np.empty(n)
    phase[n // 2 :] = ph[:-1]
    phase[0] = 0.0  # jump midpoint at -pi; see docstring
    phase[1 : n // 2] = -ph[1 : n // 2][::-1]
    return LogCharFnSamples(samples.grid, log_mag, phase, min_abs)
