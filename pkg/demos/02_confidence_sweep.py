"""
Tolerance versus allowed exceedance level
=========================================

Each probabilistic method turns an exceedance level rho into a tolerance
half-width t with P(|output| > t) <= rho.  Sweeping rho over a geometric
grid shows how much interval width each extra "nine" of confidence costs,
and how the methods rank: the Chernoff inversion is always the tightest,
its Lipschitz and Quadratic relaxations come next, and the closed-form
Hoeffding answer is the most conservative.
"""

import numpy as np

from stacktol import (
    Method,
    StackChain,
    chernov_t,
    hoeffding_t,
    lipschitz_t,
    quadratic_t,
    t_rss,
    t_wc,
)

chain = StackChain.from_bounds((5.0, 4.0, 3.0, 2.0, 1.0))
print(f"chain bounds {chain.weighted_bounds}")
print(f"wc = {t_wc(chain):.3f}, rss = {t_rss(chain):.3f}")
print()

header = f"{'rho':>10}  {'chernov':>9} {'quadratic':>9} {'lipschitz':>9} {'hoeffding':>9}"
print(header)
for rho in np.geomspace(1e-4, 0.1, 13):
    rho = float(rho)
    row = [
        chernov_t(chain, rho).t,
        quadratic_t(chain, rho).t,
        lipschitz_t(chain, rho).t,
        hoeffding_t(chain, rho).t,
    ]
    print(f"{rho:>10.2e}  " + " ".join(f"{t:>9.4f}" for t in row))

# The raw Hoeffding width can exceed the worst case at tiny rho -- the
# clamped field caps it, since the output physically cannot leave [-wc, wc].
res = hoeffding_t(chain, 1e-6)
print()
print(f"rho=1e-6 raw hoeffding t = {res.t:.3f}, clamped = {res.t_clamped:.3f}")

# The shape coefficient f = t / (l_rho * t_rss) is reported alongside each
# bound; f = 3 is exactly the Hoeffding answer, smaller is tighter.
for method, res in (
    (Method.CHERNOV, chernov_t(chain, 0.0027)),
    (Method.HOEFFDING, hoeffding_t(chain, 0.0027)),
):
    print(f"{method.value:>10}: f = {res.f:.4f}")
