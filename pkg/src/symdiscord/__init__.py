"""Classical correlation, quantum discord and symmetric discord of two-qubit states."""

from .axis import ProjectiveAxis
from .discord import (CorrelationReport, OptimizationResult, bell_classical_symmetric_analytic,
                      classical_one_sided, classical_symmetric, discord_asymmetry, full_report,
                      quantum_discord, symmetric_discord, x_classical_analytic)
from .errors import InvalidArgumentError, InvalidStateError, OptimizerFailureError
from .information import (bell_mutual_information, mutual_information, von_neumann_entropy,
                          x_mutual_information)
from .measurement import conditional_entropy, lpmm, measure_one_sided
from .states import (BlochState, ClassicalClassicalSpec, bell_diagonal, bell_eigenvalues,
                     classical_classical, to_density, x_eigenvalues, x_state)

__version__ = "0.1.0"

__all__ = [
    "BlochState", "ClassicalClassicalSpec", "CorrelationReport", "InvalidArgumentError",
    "InvalidStateError", "OptimizationResult", "OptimizerFailureError", "ProjectiveAxis",
    "bell_classical_symmetric_analytic", "bell_diagonal", "bell_eigenvalues", "bell_mutual_information",
    "classical_classical", "classical_one_sided", "classical_symmetric", "conditional_entropy",
    "discord_asymmetry", "full_report", "lpmm", "measure_one_sided", "mutual_information",
    "quantum_discord", "symmetric_discord", "to_density", "von_neumann_entropy", "x_classical_analytic",
    "x_eigenvalues", "x_mutual_information", "x_state",
]
