"""Single-qubit depolarizing (white noise) channel and its scalar transfer form.

The channel with survival probability p acts as

    E(M) = p M + (1-p)/4 * sum_j sigma_j M sigma_j,   j in {I, X, Y, Z},

which keeps populations with weights a = (1+p)/2, b = (1-p)/2 and scales
single-qubit coherences |0><1| by p.  The four-term Pauli sum is applied
literally (identity included); tests assert it agrees with the equivalent
replace-with-I/2 form.  p is the primary parameter everywhere; a rate/time
pair (kappa, t) with p = exp(-kappa t) is converted at the boundary.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .errors import InputError


def check_probability(p):
    p = float(p)
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise InputError(f"survival probability must be in [0, 1], got {p}")
    return p


@dataclass(frozen=True)
class NoiseParameter:
    """Depolarizing survival probability, optionally derived from a rate and a time."""

    p: float
    kappa: float | None = None
    t: float | None = None

    def __post_init__(self):
        check_probability(self.p)
        if (self.kappa is None) != (self.t is None):
            raise InputError("kappa and t must be given together")
        if self.kappa is not None:
            if self.kappa < 0 or self.t < 0:
                raise InputError("kappa and t must be nonnegative")
            if abs(self.p - math.exp(-self.kappa * self.t)) > 1e-12:
                raise InputError("p is inconsistent with exp(-kappa*t)")

    @classmethod
    def from_rate(cls, kappa, t):
        return cls(p=math.exp(-kappa * t), kappa=kappa, t=t)


def survival(p):
    """Accept a bare float or a NoiseParameter; return the validated float p."""
    if isinstance(p, NoiseParameter):
        return p.p
    return check_probability(p)


class TransferCoefficients(NamedTuple):
    """Scalar single-qubit channel action: populations mix (a, b), coherences scale by offdiag."""

    a: float
    b: float
    offdiag: float


def transfer_coefficients(p):
    p = survival(p)
    return TransferCoefficients(a=(1 + p) / 2, b=(1 - p) / 2, offdiag=p)


def depolarize(mat, qubit, p):
    """Apply the depolarizing channel to one qubit of a dense operator.

    Linear, trace preserving, completely positive; accepts non-Hermitian
    input (coherence operators).
    """
    p = survival(p)
    mat = np.asarray(mat, dtype=complex)
    q = linalg.qubit_count(mat.shape[0])
    if not 0 <= qubit < q:
        raise InputError(f"qubit index {qubit} out of range for {q} qubits")
    out = p * mat
    for sigma in linalg.PAULIS:
        out = out + (1 - p) / 4 * linalg.apply_one_qubit(mat, qubit, q, sigma, sigma)
    return out


def depolarize_all(mat, p):
    """Apply the channel to every qubit; channels on distinct qubits commute."""
    mat = np.asarray(mat, dtype=complex)
    q = linalg.qubit_count(mat.shape[0])
    for k in range(q):
        mat = depolarize(mat, k, p)
    return mat
