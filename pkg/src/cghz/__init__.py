"""Noise robustness of concatenated GHZ states.

Library layout:

- linalg:   dense complex linear algebra (trace norm, partial transpose, ...)
- states:   GHZ / concatenated-GHZ / DFS constructors, doublet Hadamard
- channels: single-qubit depolarizing channel, scalar transfer coefficients
- analytic: closed-form coherence norms, distillation fidelity, tail fits
- spectral: symmetry-exploiting exact spectra, negativity, Fisher information
- oracle:   dense brute-force ground truth for small systems
- circuits: MS-gate synthesis, phase accounting, simulation, text format
- cli:      eval / sweep / random-compare / synthesize front end
"""

from .errors import ConsistencyError, InputError, ResourceLimitError, ZeroProbabilityError
from .channels import NoiseParameter, TransferCoefficients, transfer_coefficients
from .states import BlockConfig, cghz, dfs_ghz, ghz, logical_hadamard, random_orthogonal_pair
from .analytic import (
    FitResult,
    ThresholdResult,
    coherence_bound,
    coherence_norm,
    coherence_norm_block,
    distill_fidelity,
    distill_threshold,
    fit_exponential_tail,
)
from .spectral import cghz_spectrum, cramer_rao_bound, doublet_algebra, fisher_information, negativity

__version__ = "0.1.0"

__all__ = [
    "BlockConfig",
    "ConsistencyError",
    "FitResult",
    "InputError",
    "NoiseParameter",
    "ResourceLimitError",
    "ThresholdResult",
    "TransferCoefficients",
    "ZeroProbabilityError",
    "cghz",
    "cghz_spectrum",
    "coherence_bound",
    "coherence_norm",
    "coherence_norm_block",
    "cramer_rao_bound",
    "dfs_ghz",
    "distill_fidelity",
    "distill_threshold",
    "doublet_algebra",
    "fisher_information",
    "fit_exponential_tail",
    "ghz",
    "logical_hadamard",
    "negativity",
    "random_orthogonal_pair",
    "transfer_coefficients",
    "__version__",
]
