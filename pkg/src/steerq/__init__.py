"""steerq: steering detection on two-qubit states.

Evaluates the generalized entropic steering criterion (SCG) and the linear
steering criterion (LSC) on two-qubit states, both analytically from density
matrices and statistically from coincidence-count data with bootstrap error
bars.
"""

from .criteria import (LSC, SCG, ChiThreshold, CriterionReport, SolverError,
                       chi_threshold, lsc_value, mub_bound, scg_bound, scg_lhs,
                       scg_lhs_entropic, shannon_bound, verdict)
from .expio import (CountsFormatError, EvaluationReport, ExperimentRecord,
                    evaluate_record, evaluate_state, parse_counts_csv,
                    report_to_json, reproduce_tables, serialize_counts_csv,
                    simulate_record, sweep_curve)
from .measure import (AXES, Axis, CountRecord, JointDistribution, correlation,
                      estimate_distribution, joint_distribution,
                      pauli_projectors, simulate_counts, spawn_generator)
from .qentropy import (conditional_tsallis, correction_term, ln_q,
                       shannon_entropy, tsallis_entropy)
from .qmat import (BlochDecomposition, DensityMatrix, MatrixValidationError,
                   bell_phi_plus, bloch_decompose, bloch_reconstruct, fidelity,
                   hermitian_eigendecompose, make_werner_like, maximally_mixed,
                   validate_density)

__version__ = "0.1.0"

__all__ = [
    "AXES", "Axis", "BlochDecomposition", "ChiThreshold", "CountRecord",
    "CountsFormatError", "CriterionReport", "DensityMatrix", "EvaluationReport",
    "ExperimentRecord", "JointDistribution", "LSC", "MatrixValidationError",
    "SCG", "SolverError", "bell_phi_plus", "bloch_decompose",
    "bloch_reconstruct", "chi_threshold", "conditional_tsallis",
    "correction_term", "correlation", "estimate_distribution",
    "evaluate_record", "evaluate_state", "fidelity", "hermitian_eigendecompose",
    "joint_distribution", "ln_q", "lsc_value", "make_werner_like",
    "maximally_mixed", "mub_bound", "parse_counts_csv", "pauli_projectors",
    "report_to_json", "reproduce_tables", "scg_bound", "scg_lhs",
    "scg_lhs_entropic", "serialize_counts_csv", "shannon_bound",
    "shannon_entropy", "simulate_counts", "simulate_record", "spawn_generator",
    "sweep_curve", "tsallis_entropy", "validate_density", "verdict",
]
