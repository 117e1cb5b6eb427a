"""
Analyzing a single tolerance stack chain
========================================

A stack chain is a list of contributors, each with a tolerance half-width
and an optional influence coefficient.  This script builds the
ten-contributor assembly used throughout the package tests, prints the
classical Worst Case / RSS results, and then the full method table at the
6-sigma exceedance level rho = 0.0027.
"""

import sys

from stacktol import (
    Contributor,
    StackChain,
    analyze_all,
    balance_report,
    t_rss,
    t_wc,
    write_results,
)

# A real-ish assembly: one dominant frame, a tail of small shims.
chain = StackChain(
    contributors=(
        Contributor("frame 1", 1.0),
        Contributor("frame 2", 0.5),
        Contributor("bracket L", 0.25),
        Contributor("bracket R", 0.23),
        Contributor("shim A", 0.2),
        Contributor("shim B", 0.2),
        Contributor("rail", 0.15),
        Contributor("clip", 0.13),
        Contributor("pad", 0.1),
        Contributor("washer", 0.09),
    )
)

# The two classical answers: stacking every bound (never exceeded) versus
# the root-sum-of-squares convention (3-sigma Gaussian reading).
print(f"worst case  t = {t_wc(chain):.4f}")
print(f"rss         t = {t_rss(chain):.4f}")

# Balance diagnostics.  s1 is zero only when all weighted bounds are equal;
# d_factor is the industrial ratio (max - mean) / sum.
report = balance_report(chain)
print(f"s1 = {report.s1:.4f}   d_factor = {report.d_factor:.4f}")
print()

# Every method at once.  WC/RSS/AIRBUS carry no exceedance level; the
# probabilistic bounds guarantee P(|output| > t) <= rho.
write_results(analyze_all(chain, rho=0.0027), fmt="table", destination=sys.stdout)
