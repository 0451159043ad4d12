"""Deterministic seed derivation.

Every random decision in the package is keyed by a master seed plus a path of
nonnegative integer components (cell index, trial index, example id, restart
index, ...).  Two mechanisms are provided:

* :func:`derive_rng` builds an independent numpy Generator for a path; used
  for data sampling and anything consumed sequentially.
* :func:`chain` / :func:`to_uniform` / :func:`to_sign` give counter-style
  randomness computed directly from the path with vectorized 64-bit mixing.
  Attack drivers use these so that per-example / per-restart draws are
  identical no matter how the batch is split or ordered.
"""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def mix64(z):
    """splitmix64 finalizer; accepts scalars or uint64 arrays."""
    with np.errstate(over="ignore"):
        z = np.asarray(z).astype(np.uint64)
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))


def chain(seed, *components):
    """Fold integer components into 64-bit states, broadcasting over arrays."""
    with np.errstate(over="ignore"):
        state = mix64(np.uint64(int(seed) & 0xFFFFFFFFFFFFFFFF) + _GOLDEN)
        for comp in components:
            comp = np.asarray(comp).astype(np.uint64)
            state = mix64(state + _GOLDEN + comp)
        return state


def derive_seed(seed, *components) -> int:
    return int(chain(seed, *components))


def derive_rng(seed, *components) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, *components))


def to_uniform(bits) -> np.ndarray:
    """Map uint64 bits to doubles in [0, 1)."""
    return (np.asarray(bits, dtype=np.uint64) >> np.uint64(11)) * 2.0**-53


def to_sign(bits) -> np.ndarray:
    """Map uint64 bits to +/-1 doubles (top bit)."""
    top = np.asarray(bits, dtype=np.uint64) >> np.uint64(63)
    return np.where(top == 1, 1.0, -1.0)
