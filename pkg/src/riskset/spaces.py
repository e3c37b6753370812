"""Finite probability spaces, random vectors, partitions and couplings.

Outcomes with zero mass are rejected at construction, so almost-sure
statements reduce to plain entry-wise statements and every audit in the
package can compare arrays directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, ValidationError

PROB_SUM_TOL = 1e-12
LAW_VALUE_TOL = 1e-12


@dataclass(frozen=True)
class FiniteProbabilitySpace:
    """Strictly positive probabilities summing to one."""

    probabilities: np.ndarray

    def __post_init__(self) -> None:
        p = np.asarray(self.probabilities, dtype=float)
        object.__setattr__(self, "probabilities", p)
        if p.ndim != 1 or p.size == 0:
            raise ValidationError("probabilities must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(p)):
            raise ValidationError("probabilities must be finite")
        if np.any(p <= 0.0):
            raise ValidationError("every outcome must have strictly positive probability")
        if abs(float(p.sum()) - 1.0) > PROB_SUM_TOL:
            raise ValidationError(f"probabilities sum to {p.sum()!r}, expected 1 within {PROB_SUM_TOL}")

    @property
    def n_outcomes(self) -> int:
        return int(self.probabilities.size)

    @property
    def min_probability(self) -> float:
        return float(self.probabilities.min())

    def expect(self, values: np.ndarray) -> np.ndarray | float:
        """Probability-weighted mean along the outcome axis (axis 0)."""
        values = np.asarray(values, dtype=float)
        if values.shape[0] != self.n_outcomes:
            raise DimensionMismatch("values length does not match outcome count")
        out = np.tensordot(self.probabilities, values, axes=(0, 0))
        return float(out) if np.ndim(out) == 0 else out

    def same_as(self, other: "FiniteProbabilitySpace") -> bool:
        return self is other or np.array_equal(self.probabilities, other.probabilities)


def make_space(probabilities: Sequence[float]) -> FiniteProbabilitySpace:
    """Validated space from a probability sequence."""
    return FiniteProbabilitySpace(np.asarray(probabilities, dtype=float))


def uniform_space(n: int) -> FiniteProbabilitySpace:
    if n < 1:
        raise ValidationError("need at least one outcome")
    return make_space(np.full(n, 1.0 / n))


@dataclass(frozen=True)
class RandomVector:
    """An outcomes x N table of finite reals on a fixed space."""

    values: np.ndarray
    space: FiniteProbabilitySpace

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=float)
        if v.ndim == 1:
            v = v[:, None]
        object.__setattr__(self, "values", v)
        if v.ndim != 2:
            raise ValidationError("values must be an outcomes x N table")
        if v.shape[0] != self.space.n_outcomes:
            raise DimensionMismatch(
                f"row count {v.shape[0]} does not match outcome count {self.space.n_outcomes}")
        if not np.all(np.isfinite(v)):
            raise ValidationError("random vectors must have finite entries")

    @property
    def dim(self) -> int:
        return int(self.values.shape[1])

    def component(self, i: int) -> np.ndarray:
        return self.values[:, i]

    def expectation(self) -> np.ndarray:
        return np.asarray(self.space.expect(self.values))

    @classmethod
    def constant(cls, m: Sequence[float], space: FiniteProbabilitySpace) -> "RandomVector":
        m = np.atleast_1d(np.asarray(m, dtype=float))
        return cls(np.tile(m, (space.n_outcomes, 1)), space)

    @classmethod
    def from_columns(cls, columns: Sequence[np.ndarray], space: FiniteProbabilitySpace) -> "RandomVector":
        return cls(np.column_stack([np.asarray(c, dtype=float) for c in columns]), space)

    def _coerce(self, other) -> np.ndarray:
        if isinstance(other, RandomVector):
            if not self.space.same_as(other.space):
                raise DimensionMismatch("operands live on different spaces")
            if other.dim != self.dim:
                raise DimensionMismatch("operands have different dimensions")
            return other.values
        arr = np.asarray(other, dtype=float)
        if arr.ndim == 0:
            return arr
        if arr.ndim == 1 and arr.size == self.dim:
            return arr[None, :]
        raise DimensionMismatch("cannot combine random vector with this operand")

    def __add__(self, other) -> "RandomVector":
        return RandomVector(self.values + self._coerce(other), self.space)

    __radd__ = __add__

    def __sub__(self, other) -> "RandomVector":
        return RandomVector(self.values - self._coerce(other), self.space)

    def __mul__(self, scalar) -> "RandomVector":
        return RandomVector(self.values * float(scalar), self.space)

    __rmul__ = __mul__

    def __neg__(self) -> "RandomVector":
        return RandomVector(-self.values, self.space)


def as_leq(x: RandomVector, y: RandomVector) -> bool:
    """Entry-wise order: true iff every entry of x is <= the matching entry of y."""
    if not x.space.same_as(y.space) or x.dim != y.dim:
        raise DimensionMismatch("as_leq needs operands on the same space with equal dimension")
    return bool(np.all(x.values <= y.values))


def law(values: np.ndarray, space: FiniteProbabilitySpace,
        tol: float = LAW_VALUE_TOL) -> list[tuple[float, float]]:
    """The distribution of a univariate variable as merged (value, mass) atoms."""
    values = np.asarray(values, dtype=float)
    order = np.argsort(values, kind="stable")
    atoms: list[tuple[float, float]] = []
    for idx in order:
        v, p = float(values[idx]), float(space.probabilities[idx])
        if atoms and abs(atoms[-1][0] - v) <= tol:
            atoms[-1] = (atoms[-1][0], atoms[-1][1] + p)
        else:
            atoms.append((v, p))
    return atoms


def laws_equal(a: np.ndarray, space_a: FiniteProbabilitySpace,
               b: np.ndarray, space_b: FiniteProbabilitySpace,
               tol: float = LAW_VALUE_TOL) -> bool:
    la, lb = law(a, space_a, tol), law(b, space_b, tol)
    if len(la) != len(lb):
        return False
    return all(abs(x[0] - y[0]) <= tol and abs(x[1] - y[1]) <= tol for x, y in zip(la, lb))


def comonotone_pair(z: Sequence[float], space: FiniteProbabilitySpace) -> RandomVector:
    """The two-column vector (Z, Z): both components move together."""
    z = np.asarray(z, dtype=float)
    if z.shape != (space.n_outcomes,):
        raise DimensionMismatch("Z length must equal the outcome count")
    return RandomVector.from_columns([z, z.copy()], space)


def countermonotone_pair(z: Sequence[float], space: FiniteProbabilitySpace) -> RandomVector:
    """The two-column vector (Z, -Z); requires the law of Z to be symmetric.

    Symmetry of the law guarantees the second component has the same
    marginal as in the comonotone pair, so the two couplings differ only
    in their dependence structure.
    """
    z = np.asarray(z, dtype=float)
    if z.shape != (space.n_outcomes,):
        raise DimensionMismatch("Z length must equal the outcome count")
    if not laws_equal(z, space, -z, space):
        raise ValidationError("law of Z is not symmetric under negation; marginals would differ")
    return RandomVector.from_columns([z, -z], space)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty cells of outcome indices covering the whole space."""

    cells: tuple[tuple[int, ...], ...]
    n_outcomes: int

    def __post_init__(self) -> None:
        cells = tuple(tuple(sorted(int(i) for i in c)) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise ValidationError("partition needs at least one cell")
        seen: set[int] = set()
        for c in cells:
            if not c:
                raise ValidationError("partition cells must be nonempty")
            for i in c:
                if i < 0 or i >= self.n_outcomes:
                    raise ValidationError(f"outcome index {i} out of range")
                if i in seen:
                    raise ValidationError(f"outcome index {i} appears in two cells")
                seen.add(i)
        if len(seen) != self.n_outcomes:
            raise ValidationError("partition cells must cover every outcome")

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    def cell_indices(self, k: int) -> np.ndarray:
        return np.asarray(self.cells[k], dtype=int)

    def label_of(self) -> np.ndarray:
        """Cell label per outcome."""
        lab = np.empty(self.n_outcomes, dtype=int)
        for k, c in enumerate(self.cells):
            lab[list(c)] = k
        return lab

    def event_mask(self, cell_ids: Iterable[int]) -> np.ndarray:
        """Boolean outcome mask of a union of cells (a measurable event)."""
        mask = np.zeros(self.n_outcomes, dtype=bool)
        for k in cell_ids:
            mask[list(self.cells[k])] = True
        return mask

    def refines(self, coarser: "Partition") -> bool:
        """True iff every cell of self lies inside one cell of ``coarser``."""
        if self.n_outcomes != coarser.n_outcomes:
            return False
        lab = coarser.label_of()
        return all(len({int(lab[i]) for i in c}) == 1 for c in self.cells)

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        return cls((tuple(range(n)),), n)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple((i,) for i in range(n)), n)


def conditional_expectation(x: RandomVector, g: Partition) -> RandomVector:
    """Cell-wise probability-weighted average, constant on each cell."""
    if g.n_outcomes != x.space.n_outcomes:
        raise DimensionMismatch("partition and random vector live on different spaces")
    p = x.space.probabilities
    out = np.empty_like(x.values)
    for c in g.cells:
        idx = list(c)
        w = p[idx]
        out[idx, :] = np.tensordot(w, x.values[idx, :], axes=(0, 0)) / w.sum()
    return RandomVector(out, x.space)
