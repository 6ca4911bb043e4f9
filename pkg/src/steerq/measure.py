"""Pauli measurement statistics on two-qubit states.

Joint outcome distributions for the X, Y, Z mutually unbiased settings,
same-axis correlations, Poisson coincidence-count simulation, and probability
estimation from counts.

Reproducibility: every stochastic routine draws from a PCG64 generator keyed
by ``SeedSequence((seed, stream))``.  Distinct stream indices under one master
seed give statistically independent, scheduling-independent draws; the same
(seed, stream) pair always reproduces the same counts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .qmat import I2, SIGMA_X, SIGMA_Y, SIGMA_Z, DensityMatrix

PROBABILITY_TOL = 1e-10


class Axis(enum.Enum):
    X = "x"
    Y = "y"
    Z = "z"


AXES = (Axis.X, Axis.Y, Axis.Z)
_PAULI_BY_AXIS = {Axis.X: SIGMA_X, Axis.Y: SIGMA_Y, Axis.Z: SIGMA_Z}


def spawn_generator(seed: int, stream: int = 0) -> np.random.Generator:
    """PCG64 generator for the (seed, stream) pair."""
    if seed < 0 or stream < 0:
        raise ValueError("seed and stream index must be non-negative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, stream))))


def pauli_projectors(axis: Axis):
    """Rank-1 eigenprojectors (outcome 0 <-> eigenvalue +1, outcome 1 <-> -1)."""
    sigma = _PAULI_BY_AXIS[axis]
    return (I2 + sigma) / 2.0, (I2 - sigma) / 2.0


@dataclass(frozen=True)
class JointDistribution:
    """Outcome probabilities p[i, j] for one same-axis setting, i = Alice."""

    axis: Axis
    p: np.ndarray               # shape (2, 2)
    alice_marginal: np.ndarray  # shape (2,)

    @classmethod
    def from_cells(cls, axis: Axis, cells) -> "JointDistribution":
        p = np.asarray(cells, dtype=float).reshape(2, 2)
        if np.any(p < -PROBABILITY_TOL):
            raise ValueError(f"negative cell probability: {p.min()}")
        p = np.clip(p, 0.0, None)
        total = float(p.sum())
        if abs(total - 1.0) > PROBABILITY_TOL:
            raise ValueError(f"cell probabilities sum to {total}, not 1")
        p.setflags(write=False)
        marginal = p.sum(axis=1)
        marginal.setflags(write=False)
        return cls(axis, p, marginal)


@dataclass(frozen=True)
class CountRecord:
    """Coincidence counts n[i, j] for one setting."""

    axis: Axis
    counts: np.ndarray  # shape (2, 2), non-negative integers

    def __post_init__(self):
        arr = np.asarray(self.counts, dtype=np.int64).reshape(2, 2)
        if np.any(arr < 0):
            raise ValueError("counts must be non-negative")
        arr.setflags(write=False)
        object.__setattr__(self, "counts", arr)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def joint_distribution(rho: DensityMatrix, axis: Axis) -> JointDistribution:
    """p_ij = tr(rho  Pi_i x Pi_j) for the given axis."""
    if rho.dim != 4:
        raise ValueError("joint_distribution requires a two-qubit state")
    p0, p1 = pauli_projectors(axis)
    projs = (p0, p1)
    cells = np.empty((2, 2))
    for i in range(2):
        for j in range(2):
            val = complex(np.trace(rho.matrix @ np.kron(projs[i], projs[j])))
            cells[i, j] = val.real
    return JointDistribution.from_cells(axis, cells)


def correlation(jd: JointDistribution) -> float:
    """Same-axis correlation estimate p00 - p01 - p10 + p11."""
    p = jd.p
    return float(p[0, 0] - p[0, 1] - p[1, 0] + p[1, 1])


def simulate_counts(jd: JointDistribution, mean_total: int, seed: int,
                    stream: int = 0) -> CountRecord:
    """Independent Poisson draws with mean mean_total * p_ij per cell.

    The realized total fluctuates around mean_total; cells with zero
    probability always stay exactly zero.
    """
    if mean_total < 1:
        raise ValueError("mean_total must be a positive integer")
    rng = spawn_generator(seed, stream)
    counts = rng.poisson(lam=mean_total * jd.p)
    return CountRecord(jd.axis, counts)


def estimate_distribution(record: CountRecord) -> JointDistribution:
    """Relative frequencies n_ij / total."""
    total = record.total
    if total < 1:
        raise ValueError(f"cannot estimate probabilities from an empty record "
                         f"(axis {record.axis.value}, total 0)")
    return JointDistribution.from_cells(record.axis, record.counts / total)
