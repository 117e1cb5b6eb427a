"""
Checking the analytic bounds against seeded simulation
======================================================

The Monte Carlo sampler is the ground truth the bounds are measured
against: contributors are drawn uniformly on [-w_i, w_i] and summed.
Every estimate is seeded and chunked deterministically, so a rerun -- or
the same run split across worker threads -- reproduces identical bits.
"""

import numpy as np

from stacktol import (
    McConfig,
    StackChain,
    chernov_t,
    hoeffding_t,
    mc_prob,
    mc_quantile,
    sample_output,
    t_wc,
)

chain = StackChain.from_bounds((5.0, 4.0, 3.0, 2.0, 1.0))
cfg = McConfig(draws=200_000, seed=4242)

# Raw output sample: symmetric, supported on [-wc, wc].
sample = sample_output(chain, cfg)
print(f"sample mean {sample.mean():+.4f}, extremes "
      f"[{sample.min():.3f}, {sample.max():.3f}], wc = {t_wc(chain):.1f}")

# Estimated 99.73% two-sided quantile versus the bounds it must sit under.
rho = 0.0027
quant = mc_quantile(chain, rho, cfg)
t_c = chernov_t(chain, rho).t
t_h = hoeffding_t(chain, rho).t
print(f"mc quantile  t = {quant.value:.4f} +/- {quant.stderr:.4f}")
print(f"chernov      t = {t_c:.4f}")
print(f"hoeffding    t = {t_h:.4f}")

# The exceedance probability realized at the Chernoff width stays below
# the requested level (the bound is conservative, not exact).
exceed = mc_prob(chain, t_c, cfg)
print(f"P(|Y| >= chernov t) ~= {exceed.value:.5f} +/- {exceed.stderr:.5f} "
      f"(target {rho})")

# Determinism: serial and 4-thread sampling agree to the last bit.
parallel = sample_output(chain, cfg, workers=4)
print(f"serial == 4 workers: {np.array_equal(sample, parallel)}")
rerun = mc_quantile(chain, rho, cfg)
print(f"rerun identical: {rerun.value == quant.value}")
