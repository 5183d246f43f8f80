"""Homomorphic splitting of a law into minimum-phase and allpass factors.

The modulus of the charfn pins down a unique causal minimum-phase factor;
whatever phase is left over goes into an allpass remainder.  A left-sided
geometric law makes the point nicely: its modulus is that of the ordinary
right-sided geometric, so that is exactly what the minimum-phase factor
turns out to be, and the remainder is a two-tap allpass that is manifestly
not a probability mass function (it has a negative entry) yet still sums
to one.
"""

import numpy as np

from muculants import Geometric, allpass_sum, decompose, validate_pmf, zoo_pmf

p = 0.2
right = zoo_pmf(Geometric(p))
left = validate_pmf(-(len(right) - 1), right.probs[::-1])
print(f"input: geometric(p={p}) reflected onto the nonpositive integers")
print(f"  support [{left.offset}, {left.offset + len(left) - 1}], mass {left.total_mass:.12f}")

d = decompose(left, 100)

print("\nminimum-phase factor (first entries vs the right-sided geometric):")
for xi in range(5):
    print(f"  xi={xi}:  {d.minphase_seq.value_at(xi):.12f}   truth {right.probs[xi]:.12f}")
print(f"  flagged as PMF: {d.minphase_is_pmf}")

print("\nallpass factor:")
for xi in range(-1, 3):
    print(f"  xi={xi}:  {d.allpass_seq.value_at(xi):+.12f}")
print(f"  flagged as PMF: {d.allpass_is_pmf}   sum {allpass_sum(d):.12f}")

# sanity: the two factors convolve back to the input
conv = np.convolve(d.minphase_seq.values, d.allpass_seq.values)
offset = d.minphase_seq.offset + d.allpass_seq.offset
worst = 0.0
for idx, v in enumerate(conv):
    xi = offset + idx
    j = xi - left.offset
    truth = left.probs[j] if 0 <= j < len(left.probs) else 0.0
    worst = max(worst, abs(v - truth))
print(f"\nconvolving the factors back together: max deviation {worst:.2e}")
