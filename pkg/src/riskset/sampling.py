"""Deterministic sampling utilities.

All randomness in audits flows from a single integer seed through a
counter-based generator (Philox), so every witness is reproducible from
the (seed, label) pair printed in reports.
"""

from __future__ import annotations

import zlib

import numpy as np

from .errors import ValidationError

VALUE_LO = -10.0
VALUE_HI = 10.0


def rng_for(seed: int, label: str) -> np.random.Generator:
    """Child generator for a named sub-stream of the run seed."""
    key = zlib.crc32(label.encode("utf-8"))
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(key,))
    return np.random.Generator(np.random.Philox(ss))


def uniform_matrix(rng: np.random.Generator, n: int, d: int,
                   lo: float = VALUE_LO, hi: float = VALUE_HI) -> np.ndarray:
    return rng.uniform(lo, hi, size=(n, d))


def symmetric_pairing(probabilities: np.ndarray, tol: float = 1e-12):
    """Match outcomes into pairs of equal probability.

    Returns (pairs, leftovers). Assigning +a to one member of a pair and
    -a to the other (and 0 to leftovers) produces a random variable whose
    law is symmetric under negation on this space.
    """
    order = np.argsort(probabilities, kind="stable")
    pairs: list[tuple[int, int]] = []
    leftovers: list[int] = []
    i = 0
    idx = list(order)
    while i < len(idx):
        if i + 1 < len(idx) and abs(probabilities[idx[i]] - probabilities[idx[i + 1]]) <= tol:
            pairs.append((int(idx[i]), int(idx[i + 1])))
            i += 2
        else:
            leftovers.append(int(idx[i]))
            i += 1
    return pairs, leftovers


def sample_symmetric_values(rng: np.random.Generator, probabilities: np.ndarray,
                            scale: float = VALUE_HI, unit: bool = False) -> np.ndarray:
    """A random variable with negation-symmetric law on the given space.

    With ``unit=True`` every pair amplitude is exactly 1 (the canonical
    probe; on a uniform two-outcome space this is the vector (-1, +1)).
    """
    pairs, leftovers = symmetric_pairing(probabilities)
    z = np.zeros(len(probabilities))
    for a, b in pairs:
        amp = 1.0 if unit else float(rng.uniform(0.0, scale))
        lo, hi = (a, b) if a < b else (b, a)
        z[lo] = -amp
        z[hi] = amp
    for k in leftovers:
        z[k] = 0.0
    return z


def require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(message)
