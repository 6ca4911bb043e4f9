"""Steering criteria and bounds.

Two detectors are provided:

* SCG — the steering criterion from the generalized (Tsallis) entropic
  uncertainty relation.  A state is flagged steerable when the left-hand
  side falls strictly below the bound.  Both the probability form and the
  conditional-entropy-plus-correction form are implemented and agree to
  machine precision.
* LSC — the linear steering criterion sqrt(sum_i c_i^2) <= 1 over the three
  same-axis correlations; violation (strictly above 1) flags steering.

The entropic index is accepted on (0, 2], the range where the mutually
unbiased bound applies; q = 1 is routed to the Shannon forms, where the
dimension-parity bound replaces the generic one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import qentropy
from .measure import AXES, JointDistribution, correlation, joint_distribution
from .qmat import make_werner_like

Q_MAX = 2.0

SCG = "SCG"
LSC = "LSC"

LSC_BOUND = 1.0

MONOTONE_SAMPLES = 21
BISECTION_MAX_ITER = 200


class SolverError(ArithmeticError):
    """The threshold solver's preconditions failed (non-monotone profile, ...)."""


def _check_q_range(q: float) -> float:
    q = float(q)
    if not math.isfinite(q) or q <= 0.0 or q > Q_MAX:
        raise ValueError(f"entropic index q must lie in (0, {Q_MAX:g}], got {q!r}")
    return q


def _check_settings(joints: Sequence[JointDistribution]) -> None:
    if not 1 <= len(joints) <= 3:
        raise ValueError(f"expected 1 to 3 measurement settings, got {len(joints)}")
    axes = [jd.axis for jd in joints]
    if len(set(axes)) != len(axes):
        raise ValueError(f"duplicate measurement axes: {[a.value for a in axes]}")


def scg_lhs_cells(p: np.ndarray, marginal: np.ndarray, q: float) -> np.ndarray:
    """Vectorized SCG left-hand side from probability arrays.

    p has shape (..., S, 2, 2) with normalized joints along the trailing
    axes; marginal has shape (..., S, 2).  Returns shape (...).  Zero cells
    follow the 0^q convention; zero marginals force their whole row to zero.
    """
    p = np.asarray(p, dtype=float)
    marginal = np.asarray(marginal, dtype=float)
    if qentropy.is_shannon(q):
        safe_p = np.where(p > 0.0, p, 1.0)
        joint_h = -np.sum(p * np.log(safe_p), axis=(-1, -2))
        safe_m = np.where(marginal > 0.0, marginal, 1.0)
        marg_h = -np.sum(marginal * np.log(safe_m), axis=-1)
        return np.sum(joint_h - marg_h, axis=-1)
    safe_m = np.where(marginal > 0.0, marginal, 1.0)[..., :, np.newaxis]
    terms = np.where(p > 0.0, p ** q * safe_m ** (1.0 - q), 0.0)
    inner = np.sum(terms, axis=(-1, -2))
    return np.sum((1.0 - inner) / (q - 1.0), axis=-1)


def scg_lhs(joints: Sequence[JointDistribution], q: float) -> float:
    """SCG left-hand side in the probability form.

    (1/(q-1)) sum_k [1 - sum_ij p_ij^q / p_i^(q-1)]; the q = 1 route returns
    the summed Shannon conditional entropies.
    """
    q = _check_q_range(q)
    _check_settings(joints)
    p = np.stack([jd.p for jd in joints])
    marginal = np.stack([jd.alice_marginal for jd in joints])
    return float(scg_lhs_cells(p, marginal, q))


def scg_lhs_entropic(joints: Sequence[JointDistribution], q: float) -> float:
    """SCG left-hand side as sum_k [S_q(B|A) + (1-q) C(A, B)].

    Algebraically identical to scg_lhs; kept as an independent route.
    """
    q = _check_q_range(q)
    _check_settings(joints)
    if qentropy.is_shannon(q):
        return float(sum(qentropy.conditional_tsallis(jd, 1.0) for jd in joints))
    total = 0.0
    for jd in joints:
        total += qentropy.conditional_tsallis(jd, q)
        total += (1.0 - q) * qentropy.correction_term(jd, q)
    return total


def mub_bound(d: int, m: int, q: float) -> float:
    """m * ln_q(m d / (d + m - 1)) for m mutually unbiased bases in dimension d."""
    q = _check_q_range(q)
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    if not 1 <= m <= d + 1:
        raise ValueError(f"number of bases must lie in [1, d+1], got {m}")
    return m * qentropy.ln_q(m * d / (d + m - 1), q)


def shannon_bound(d: int) -> float:
    """Shannon-limit bound for a complete set of MUBs; parity-dependent in d."""
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    if d % 2 == 1:
        return (d + 1) * math.log((d + 1) / 2.0)
    return (d / 2.0) * math.log(d / 2.0) + (d / 2.0 + 1.0) * math.log(d / 2.0 + 1.0)


def scg_bound(q: float, d: int = 2, m: int = 3) -> float:
    """Bound used for SCG verdicts: the MUB bound, or the parity bound at q = 1."""
    q = _check_q_range(q)
    if qentropy.is_shannon(q) and m == d + 1:
        return shannon_bound(d)
    return mub_bound(d, m, q)


def lsc_value(correlations: Sequence[float]) -> float:
    """Euclidean norm of the three same-axis correlations."""
    arr = np.asarray(correlations, dtype=float)
    if arr.shape != (3,):
        raise ValueError("expected exactly three correlations")
    if np.any(np.abs(arr) > 1.0 + 1e-9):
        raise ValueError(f"correlation outside [-1, 1]: {arr}")
    return float(np.linalg.norm(arr))


@dataclass(frozen=True)
class CriterionReport:
    """One criterion evaluation: value, bound, verdict, optional error bar."""

    criterion: str           # SCG or LSC
    q: Optional[float]       # entropic index (None for LSC)
    lhs: float
    bound: float
    steerable: bool
    error_bar: Optional[float] = None


def verdict(criterion: str, lhs: float, bound: float, q: Optional[float] = None,
            error_bar: Optional[float] = None) -> CriterionReport:
    """Strict-violation verdict; a value exactly at the bound is not steerable."""
    if not (math.isfinite(lhs) and math.isfinite(bound)):
        raise ValueError("verdict requires finite lhs and bound")
    if criterion == SCG:
        steerable = lhs < bound
    elif criterion == LSC:
        steerable = lhs > bound
    else:
        raise ValueError(f"unknown criterion {criterion!r}")
    return CriterionReport(criterion, q, lhs, bound, steerable, error_bar)


def analytic_joints(theta: float, chi: float):
    """The three same-axis joint distributions of a Werner-like state."""
    rho = make_werner_like(theta, chi)
    return tuple(joint_distribution(rho, axis) for axis in AXES)


def _analytic_lhs_fn(theta: float, criterion: str, q: Optional[float]):
    if criterion == SCG:
        if q is None:
            raise ValueError("SCG threshold requires an entropic index q")
        bound = scg_bound(q)

        def f(chi: float) -> float:
            return scg_lhs(analytic_joints(theta, chi), q) - bound

        return f, -1  # violation side: lhs below bound
    if criterion == LSC:

        def f(chi: float) -> float:
            joints = analytic_joints(theta, chi)
            return lsc_value([correlation(jd) for jd in joints]) - LSC_BOUND

        return f, +1  # violation side: lhs above bound
    raise ValueError(f"unknown criterion {criterion!r}")


class ChiThreshold(NamedTuple):
    chi: float
    crossed: bool  # False when the criterion is never violated on [0, 1]


def chi_threshold(theta: float, criterion: str = SCG, q: Optional[float] = 2.0,
                  tol: float = 1e-6) -> ChiThreshold:
    """Smallest mixing weight chi at which the criterion is violated.

    Samples the analytic profile at 21 points to verify strict monotonicity,
    then bisects lhs(chi) = bound on [0, 1].  When no violation occurs on the
    interval the result is (1.0, crossed=False).
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    f, violation_sign = _analytic_lhs_fn(theta, criterion, q)

    label = f"{criterion}(q={q:g})" if criterion == SCG else criterion
    samples = [f(c) for c in np.linspace(0.0, 1.0, MONOTONE_SAMPLES)]
    diffs = np.diff(samples)
    if not (np.all(diffs > 0.0) or np.all(diffs < 0.0)):
        raise SolverError(
            f"{label}: profile over chi is not strictly monotone; "
            "bisection preconditions do not hold"
        )

    def violated(value: float) -> bool:
        return value * violation_sign > 0.0

    f0, f1 = samples[0], samples[-1]
    if violated(f0):
        return ChiThreshold(0.0, True)
    if not violated(f1):
        return ChiThreshold(1.0, False)

    lo, hi = 0.0, 1.0  # f not violated at lo, violated at hi
    for _ in range(BISECTION_MAX_ITER):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2.0
        if violated(f(mid)):
            hi = mid
        else:
            lo = mid
    return ChiThreshold((lo + hi) / 2.0, True)
