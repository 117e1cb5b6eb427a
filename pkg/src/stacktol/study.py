"""Batch studies over randomly generated stack chains.

A study draws ``n_chains`` chains with half-widths uniform on
[bound_lo, bound_hi], evaluates the requested tolerance methods at one
confidence level, records balance diagnostics, and optionally attaches a
Monte Carlo quantile per chain.  Everything derives from the single study
seed: chain i uses substream (0, i), its Monte Carlo run substream (1, i),
so results are reproducible row by row and independent of the worker
count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .bounds import ConfidenceLevel, Method, gaussian_l, tolerance
from .chain import Contributor, StackChain, balance_report, t_rss
from .montecarlo import McConfig, mc_quantile

__all__ = ["StudySpec", "StudyRow", "random_chain", "run_study"]

_DEFAULT_METHODS = (
    Method.HOEFFDING,
    Method.CHERNOV,
    Method.LIPSCHITZ,
    Method.QUADRATIC,
)

# canonical column order for methods in study output
_METHOD_ORDER = (
    Method.WC,
    Method.RSS,
    Method.GAUSSIAN,
    Method.HOEFFDING,
    Method.CHERNOV,
    Method.LIPSCHITZ,
    Method.QUADRATIC,
    Method.AIRBUS,
)


@dataclass(frozen=True, kw_only=True)
class StudySpec:
    """Parameters of one batch study.

    ``methods`` may contain any analytic method; the Monte Carlo column is
    controlled separately by ``mc_cfg`` (None disables it).  When
    ``mc_cfg`` is set, its seed is the base entropy from which per-chain
    sampling seeds are derived.
    """

    n_inputs: int = 5
    bound_lo: float = 1.0
    bound_hi: float = 5.0
    n_chains: int
    rho: float
    seed: int
    methods: tuple[Method, ...] = _DEFAULT_METHODS
    mc_cfg: Optional[McConfig] = None

    def __post_init__(self) -> None:
        if self.n_inputs < 1:
            raise ValueError(f"n_inputs must be >= 1, got {self.n_inputs}")
        if not (
            math.isfinite(self.bound_lo)
            and math.isfinite(self.bound_hi)
            and 0.0 < self.bound_lo < self.bound_hi
        ):
            raise ValueError(
                f"bounds must satisfy 0 < lo < hi, got [{self.bound_lo}, {self.bound_hi}]"
            )
        if self.n_chains < 1:
            raise ValueError(f"n_chains must be >= 1, got {self.n_chains}")
        ConfidenceLevel(self.rho)
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        ordered = tuple(m for m in _METHOD_ORDER if m in set(self.methods))
        if len(ordered) != len(set(self.methods)):
            raise ValueError("methods must be analytic (Monte Carlo is controlled by mc_cfg)")
        if not ordered:
            raise ValueError("methods must be nonempty")
        object.__setattr__(self, "methods", ordered)


@dataclass(frozen=True)
class StudyRow:
    """One chain's diagnostics and per-method results.

    ``ts`` and ``fs`` map each requested method to its half-width t and
    shape coefficient f = t / (l_rho * T_RSS); f uses the study's rho for
    every method so rows are comparable across methods.  ``mc_t`` is None
    when the study ran without Monte Carlo.
    """

    chain_id: int
    s1: float
    d_factor: float
    ts: dict[Method, float] = field(repr=False)
    fs: dict[Method, float] = field(repr=False)
    mc_t: Optional[float] = None


def random_chain(n: int, lo: float, hi: float, rng: np.random.Generator) -> StackChain:
    """Chain of n contributors with half-widths i.i.d. uniform on [lo, hi]."""
    if not (0.0 < lo < hi):
        raise ValueError(f"bounds must satisfy 0 < lo < hi, got [{lo}, {hi}]")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    widths = rng.uniform(lo, hi, n)
    return StackChain(
        tuple(Contributor(name=f"x{i + 1}", half_width=float(w)) for i, w in enumerate(widths))
    )


def _chain_rng(seed: int, chain_id: int) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(0, chain_id))
    return np.random.Generator(np.random.PCG64(ss))


def _mc_seed(base_seed: int, chain_id: int) -> int:
    ss = np.random.SeedSequence(entropy=base_seed, spawn_key=(1, chain_id))
    return int(ss.generate_state(2, np.uint64)[0])


def _one_row(spec: StudySpec, chain_id: int) -> StudyRow:
    chain = random_chain(
        spec.n_inputs, spec.bound_lo, spec.bound_hi, _chain_rng(spec.seed, chain_id)
    )
    rep = balance_report(chain)
    scale = gaussian_l(spec.rho) * t_rss(chain)
    ts: dict[Method, float] = {}
    fs: dict[Method, float] = {}
    for m in spec.methods:
        res = tolerance(chain, m, spec.rho)
        ts[m] = res.t
        fs[m] = res.t / scale
    mc_t = None
    if spec.mc_cfg is not None:
        cfg = McConfig(draws=spec.mc_cfg.draws, seed=_mc_seed(spec.mc_cfg.seed, chain_id))
        mc_t = mc_quantile(chain, spec.rho, cfg).value
    return StudyRow(
        chain_id=chain_id,
        s1=rep.s1,
        d_factor=rep.d_factor,
        ts=ts,
        fs=fs,
        mc_t=mc_t,
    )


def run_study(spec: StudySpec, workers: int = 1) -> list[StudyRow]:
    """Evaluate every chain of the study; rows ordered by chain_id.

    Each row depends only on (spec, chain_id), so the output is identical
    for any ``workers`` value.
    """
    ids = range(spec.n_chains)
    if workers <= 1:
        return [_one_row(spec, i) for i in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: _one_row(spec, i), ids))
