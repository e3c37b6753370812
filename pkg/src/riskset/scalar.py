"""Univariate monetary risk measures and their axiom audit.

Four closed-form families are provided (entropic, worst-case, negative
expectation, average value at risk) plus a wrapper for arbitrary callables
so the audit harness can also exhibit failures on non-risk-measures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np
from scipy.special import logsumexp

from .errors import ValidationError
from .report import CheckRecord
from .sampling import rng_for, uniform_matrix
from .spaces import FiniteProbabilitySpace

CLOSED_FORM_TOL = 1e-9
EXACT_TOL = 1e-12

# Axioms a functional may claim; audits verify observed behaviour against these.
SCALAR_PROPERTIES = (
    "monotonicity",
    "cash_additivity",
    "cash_subadditivity",
    "cash_preserving",
    "convexity",
    "positive_homogeneity",
)


class ScalarRiskFunctional:
    """Base class: a named map from univariate random variables to reals."""

    name: str = "scalar"
    claims: Mapping[str, bool] = {}

    def evaluate(self, values: np.ndarray, space: FiniteProbabilitySpace) -> float:
        raise NotImplementedError

    def __call__(self, values: np.ndarray, space: FiniteProbabilitySpace) -> float:
        return self.evaluate(np.asarray(values, dtype=float), space)

    def get_params(self) -> dict:
        return {}

    def spec_string(self) -> str:
        params = self.get_params()
        if not params:
            return self.name
        inner = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
        return f"{self.name}:{inner}"


@dataclass(frozen=True)
class Entropic(ScalarRiskFunctional):
    """(1/beta) * log E[exp(-beta X)].

    Convex, monotone and cash-additive for every beta > 0; not positively
    homogeneous (it interpolates between -E[X] as beta -> 0 and the worst
    case as beta -> infinity).
    """

    beta: float

    name = "entropic"
    claims = {
        "monotonicity": True,
        "cash_additivity": True,
        "cash_subadditivity": True,
        "cash_preserving": True,
        "convexity": True,
        "positive_homogeneity": False,
    }

    def __post_init__(self) -> None:
        if not (self.beta > 0.0 and math.isfinite(self.beta)):
            raise ValidationError("entropic requires beta > 0")

    def evaluate(self, values: np.ndarray, space: FiniteProbabilitySpace) -> float:
        return float(logsumexp(-self.beta * values, b=space.probabilities)) / self.beta

    def get_params(self) -> dict:
        return {"beta": self.beta}


@dataclass(frozen=True)
class WorstCase(ScalarRiskFunctional):
    """max over outcomes of -X."""

    name = "worst_case"
    claims = {p: True for p in SCALAR_PROPERTIES}

    def evaluate(self, values: np.ndarray, space: FiniteProbabilitySpace) -> float:
        if values.shape[0] != space.n_outcomes:
            raise ValidationError("values length does not match outcome count")
        return float(np.max(-values))


@dataclass(frozen=True)
class NegExpectation(ScalarRiskFunctional):
    """-E[X]: the linear (risk-neutral) case."""

    name = "neg_expectation"
    claims = {p: True for p in SCALAR_PROPERTIES}

    def evaluate(self, values: np.ndarray, space: FiniteProbabilitySpace) -> float:
        return -float(space.expect(values))


@dataclass(frozen=True)
class AVaR(ScalarRiskFunctional):
    """Average of -X over its worst alpha-mass tail.

    The boundary atom is split fractionally (continuous-tail convention),
    which makes the functional exactly convex and cash-additive on finite
    spaces. alpha = 1 recovers -E[X].
    """

    alpha: float

    name = "avar"
    claims = {p: True for p in SCALAR_PROPERTIES}

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha <= 1.0):
            raise ValidationError("avar requires 0 < alpha <= 1")

    def evaluate(self, values: np.ndarray, space: FiniteProbabilitySpace) -> float:
        if values.shape[0] != space.n_outcomes:
            raise ValidationError("values length does not match outcome count")
        losses = -values
        order = np.argsort(-losses, kind="stable")
        l_sorted = losses[order]
        p_sorted = space.probabilities[order]
        cum_before = np.cumsum(p_sorted) - p_sorted
        take = np.clip(self.alpha - cum_before, 0.0, p_sorted)
        return float(np.dot(take, l_sorted) / self.alpha)

    def get_params(self) -> dict:
        return {"alpha": self.alpha}


@dataclass(frozen=True)
class CustomScalar(ScalarRiskFunctional):
    """Arbitrary callable, audited as a black box (no claims)."""

    label: str
    fn: Callable[[np.ndarray, FiniteProbabilitySpace], float]
    declared: Mapping[str, bool] = field(default_factory=dict)

    @property
    def name(self) -> str:  # type: ignore[override]
        return self.label

    @property
    def claims(self) -> Mapping[str, bool]:  # type: ignore[override]
        return self.declared

    def evaluate(self, values: np.ndarray, space: FiniteProbabilitySpace) -> float:
        return float(self.fn(values, space))


def eval_scalar(rho: ScalarRiskFunctional, values: np.ndarray,
                space: FiniteProbabilitySpace) -> float:
    return rho(values, space)


def _witness(trial: int, **arrays) -> dict:
    w: dict = {"trial": trial}
    for k, v in arrays.items():
        w[k] = np.asarray(v).tolist() if hasattr(v, "__len__") else v
    return w


def audit_scalar_property(rho: ScalarRiskFunctional, prop: str,
                          space: FiniteProbabilitySpace, trials: int, seed: int,
                          tol: float = CLOSED_FORM_TOL,
                          lambdas: tuple[float, ...] = (0.0, 1.0, 2.0)) -> CheckRecord:
    """Sampled check of one axiom; returns a violating witness on failure.

    monotonicity      X <= Y  implies rho(X) >= rho(Y)
    cash_additivity   rho(X + m) = rho(X) - m
    cash_subadditivity rho(X + m) <= rho(X) - m
    cash_preserving   rho(m) = -m on constants
    convexity         rho(lam X + (1-lam) Y) <= lam rho(X) + (1-lam) rho(Y)
    positive_homogeneity rho(lam X) = lam rho(X) for lam in ``lambdas``
    """
    if prop not in SCALAR_PROPERTIES:
        raise ValidationError(f"unknown scalar property {prop!r}")
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    rng = rng_for(seed, f"scalar/{prop}/{rho.name}")
    n = space.n_outcomes
    worst = 0.0
    witness = None

    for t in range(trials):
        x = uniform_matrix(rng, n, 1)[:, 0]
        if prop == "monotonicity":
            y = x + rng.uniform(0.0, 5.0, size=n)
            resid = rho(y, space) - rho(x, space)  # must be <= 0
        elif prop in ("cash_additivity", "cash_subadditivity"):
            m = float(rng.uniform(-10.0, 10.0))
            lhs = rho(x + m, space)
            rhs = rho(x, space) - m
            resid = abs(lhs - rhs) if prop == "cash_additivity" else lhs - rhs
        elif prop == "cash_preserving":
            m = float(rng.uniform(-10.0, 10.0))
            resid = abs(rho(np.full(n, m), space) + m)
        elif prop == "convexity":
            y = uniform_matrix(rng, n, 1)[:, 0]
            lam = float(rng.uniform(0.0, 1.0))
            resid = rho(lam * x + (1 - lam) * y, space) - (
                lam * rho(x, space) + (1 - lam) * rho(y, space))
        else:  # positive_homogeneity
            resid = 0.0
            for lam in lambdas:
                r = abs(rho(lam * x, space) - lam * rho(x, space))
                if r > resid:
                    resid = r
        if resid > worst:
            worst = resid
            witness = _witness(t, X=x)
        if worst > tol and witness is not None and "X" in witness:
            break

    ok = worst <= tol
    return CheckRecord(
        check=f"scalar/{prop}",
        subject=rho.spec_string(),
        verdict="pass" if ok else "fail",
        ok=ok,
        trials=trials,
        max_residual=float(worst),
        tolerance=tol,
        witness=None if ok else witness,
    )
