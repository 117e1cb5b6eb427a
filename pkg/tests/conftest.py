import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stacktol import Contributor, StackChain

# Five-contributor demonstration chain used throughout: bounds 5,4,3,2,1.
TABLE_BOUNDS = (5.0, 4.0, 3.0, 2.0, 1.0)

# Ten-contributor industrial case: one dominant bound and a tail of small ones.
CASE_BOUNDS = (1.0, 0.5, 0.25, 0.23, 0.2, 0.2, 0.15, 0.13, 0.1, 0.09)
CASE_NAMES = (
    "Frame 1",
    "Frame 2",
    "Bracket L",
    "Bracket R",
    "Shim A",
    "Shim B",
    "Rail",
    "Clip",
    "Pad",
    "Washer",
)


@pytest.fixture
def table_chain() -> StackChain:
    return StackChain.from_bounds(TABLE_BOUNDS)


@pytest.fixture
def case_chain() -> StackChain:
    return StackChain(
        tuple(
            Contributor(name=name, half_width=w)
            for name, w in zip(CASE_NAMES, CASE_BOUNDS)
        )
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def random_bounds(rng: np.random.Generator, n_lo=2, n_hi=8, w_lo=0.1, w_hi=10.0):
    n = int(rng.integers(n_lo, n_hi + 1))
    return tuple(float(x) for x in rng.uniform(w_lo, w_hi, n))
