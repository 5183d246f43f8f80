"""Cumulants straight from the coefficient sequence.

The coefficients of the log charfn carry the same information as the
cumulant generating function, so a short weighted sum over them recovers
kappa_1, kappa_2, ... without ever differentiating anything.  The catch is
that the sum only converges when the coefficients decay fast enough; a
point mass is the canonical offender, and the read-off refuses it rather
than returning garbage.
"""

from muculants import (
    Degenerate,
    FrequencyGrid,
    Geometric,
    MuculantError,
    Poisson,
    complex_log,
    complex_muculants,
    cumulants_from_muculants,
    eval_charfn,
    spec_string,
    zoo_cumulants,
    zoo_pmf,
)

grid = FrequencyGrid(4096)
N_MAX = 60


def bridge(spec, order):
    f = zoo_pmf(spec)
    seq = complex_muculants(complex_log(eval_charfn(f, grid)), N_MAX)
    return cumulants_from_muculants(seq, order)


for spec in (Poisson(3.0), Geometric(0.5)):
    got = bridge(spec, 4)
    want = zoo_cumulants(spec, 4)
    print(spec_string(spec))
    for k in range(1, 5):
        print(f"  kappa_{k}:  read-off {got.kappa(k):+.9f}   closed form {want.kappa(k):+.9f}")
    print()

# the point mass: coefficients decay like 1/n, so no order is safe
spec = Degenerate(2)
print(f"{spec_string(spec)}: coefficients decay like 1/n, the weighted tail never settles")
for order in (1, 3):
    try:
        bridge(spec, order)
        print(f"  order {order}: accepted (unexpected)")
    except MuculantError as err:
        print(f"  order {order} refused: {err.code}")
