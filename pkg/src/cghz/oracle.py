"""Dense brute-force ground truth for small systems (up to 12 qubits).

Everything here is built from explicit 2^(Nm)-dimensional matrices: the
decohered state and coherence operator, their trace norms / negativities /
Fisher information, and an exhaustive-outcome simulation of the
projection-and-measurement distillation protocol.  The analytic and
spectral engines are certified against this module on the overlap domain.
"""

import math
from itertools import product

import numpy as np

from . import linalg
from .errors import InputError, ResourceLimitError, ZeroProbabilityError
from .channels import depolarize_all
from .states import BlockConfig, cghz, ghz

FISHER_PAIR_SKIP = 1e-14


def decohered_cghz(cfg: BlockConfig, p):
    """Density matrix of the concatenated GHZ state after white noise on every qubit."""
    linalg.check_qubit_budget(cfg.qubits, what="decohered state")
    psi = cghz(cfg)
    return depolarize_all(np.outer(psi, psi.conj()), p)


def decohered_coherence(cfg: BlockConfig, p):
    """Decohered N-block cross operator E |GHZ^+><GHZ^-|^(x)N (traceless, non-Hermitian)."""
    linalg.check_qubit_budget(cfg.qubits, what="decohered coherence operator")
    plus, minus = ghz(cfg.m, +1), ghz(cfg.m, -1)
    block = np.outer(plus, minus.conj())
    op = linalg.kron_all([block] * cfg.N)
    return depolarize_all(op, p)


def coherence_norm(cfg: BlockConfig, p):
    """Dense trace norm of the decohered coherence operator."""
    return linalg.trace_norm(decohered_coherence(cfg, p))


def generic_coherence_norm(a, b, N, p):
    """||E^(x)m |a><b|||_1^N for an arbitrary orthonormal pair on one block.

    Uses tensor multiplicativity of the trace norm: one dense block, then
    the N-th power.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise InputError(f"state dimensions differ: {a.shape} vs {b.shape}")
    m = linalg.qubit_count(a.shape[0])
    if m > 6:
        raise ResourceLimitError(f"generic coherence norm capped at m <= 6, got m={m}")
    block = linalg.trace_norm(depolarize_all(np.outer(a, b.conj()), p))
    if block == 0.0:
        return 0.0
    return math.exp(N * math.log(block))


def spectrum(cfg: BlockConfig, p):
    """Ascending eigenvalues of the dense decohered state."""
    evals, _ = linalg.eig_hermitian(decohered_cghz(cfg, p))
    return evals


def negativity(cfg: BlockConfig, p):
    """Negativity across one block vs the rest, from the dense partial transpose."""
    rho = decohered_cghz(cfg, p)
    pt = linalg.partial_transpose(rho, range(cfg.m))
    evals, _ = linalg.eig_hermitian(pt)
    return float(-np.sum(evals[evals < 0]))


def block_x_generator(cfg: BlockConfig):
    """sum_k sigma_x^(x)m acting on block k, as a dense matrix."""
    linalg.check_qubit_budget(cfg.qubits, what="generator")
    xm = linalg.kron_all([linalg.PAULI_X] * cfg.m)
    total = np.zeros((2**cfg.qubits, 2**cfg.qubits), dtype=complex)
    for k in range(cfg.N):
        total += linalg.kron_all(
            [np.eye(2 ** (cfg.m * k)), xm, np.eye(2 ** (cfg.m * (cfg.N - 1 - k)))]
        )
    return total


def single_z_generator(n_qubits):
    """sum_j sigma_z^(j) over all physical qubits, as a dense matrix."""
    linalg.check_qubit_budget(n_qubits, what="generator")
    total = np.zeros((2**n_qubits, 2**n_qubits), dtype=complex)
    for j in range(n_qubits):
        total += linalg.kron_all(
            [np.eye(2**j), linalg.PAULI_Z, np.eye(2 ** (n_qubits - 1 - j))]
        )
    return total


def fisher_dense(rho, gen, pair_skip=FISHER_PAIR_SKIP):
    """Fisher information 2 sum_jk (l_k - l_j)^2/(l_k + l_j) |<k|A|j>|^2.

    Pairs with l_k + l_j below `pair_skip` are kernel pairs and contribute
    nothing.  Requires a Hermitian PSD unit-trace rho and a Hermitian
    generator of the same dimension.
    """
    rho = np.asarray(rho, dtype=complex)
    gen = np.asarray(gen, dtype=complex)
    if rho.shape != gen.shape:
        raise InputError(f"shape mismatch: {rho.shape} vs {gen.shape}")
    evals, evecs = linalg.eig_hermitian(rho)
    if evals[0] < -1e-9 or abs(float(np.sum(evals)) - 1.0) > 1e-9:
        raise InputError("rho must be positive semidefinite with unit trace")
    evals = np.clip(evals, 0.0, None)
    if np.max(np.abs(gen - gen.conj().T)) > linalg.HERMITICITY_TOL:
        raise InputError("generator must be Hermitian")
    a_elems = evecs.conj().T @ gen @ evecs
    lam_sum = evals[:, None] + evals[None, :]
    lam_diff = evals[:, None] - evals[None, :]
    weights = np.where(lam_sum > pair_skip, lam_diff**2 / np.where(lam_sum > 0, lam_sum, 1.0), 0.0)
    return float(2.0 * np.sum(weights * np.abs(a_elems) ** 2))


def fisher(cfg: BlockConfig, p, generator="block-x"):
    """Dense Fisher information of the decohered state for a named generator."""
    rho = decohered_cghz(cfg, p)
    if generator == "block-x":
        gen = block_x_generator(cfg)
    elif generator == "single-z":
        gen = single_z_generator(cfg.qubits)
    else:
        raise InputError(f"unknown generator {generator!r}")
    return fisher_dense(rho, gen)


def _logical_vectors(m):
    zero = np.zeros(2**m, dtype=complex)
    zero[0] = 1.0
    one = np.zeros(2**m, dtype=complex)
    one[-1] = 1.0
    return zero, one


def _project_logical(cfg, rho):
    """Project every block onto span{|0..0>, |1..1>} (unnormalized)."""
    pb = np.zeros((2**cfg.m, 2**cfg.m), dtype=complex)
    pb[0, 0] = 1.0
    pb[-1, -1] = 1.0
    proj = linalg.kron_all([pb] * cfg.N)
    return proj @ rho @ proj


def distill_protocol_fidelity(cfg: BlockConfig, p, kept_pair=(0, 1), outcomes=()):
    """Bell fidelity of the kept pair for one measurement record.

    Projects every block onto the logical span, measures every block except
    the kept pair in the logical basis, applies the parity correction
    (a logical bit flip on the first kept block when the record has odd
    parity), and returns the overlap with (|0_L 0_L> + |1_L 1_L>)/sqrt2.
    """
    _, prob, fid = _protocol_single(cfg, p, kept_pair, tuple(outcomes))
    if prob <= 1e-14:
        raise ZeroProbabilityError(f"outcome {tuple(outcomes)} has probability {prob:.3e}")
    return fid


def distill_protocol_outcomes(cfg: BlockConfig, p, kept_pair=(0, 1)):
    """All measurement records with probabilities and corrected fidelities."""
    if cfg.N < 2:
        raise InputError(f"protocol needs N >= 2, got N={cfg.N}")
    records = []
    for outcome in product((0, 1), repeat=cfg.N - 2):
        records.append(_protocol_single(cfg, p, kept_pair, outcome))
    return records


def distill_protocol_average(cfg: BlockConfig, p, kept_pair=(0, 1)):
    """Outcome-probability-weighted fidelity; equals the closed-form fidelity."""
    records = distill_protocol_outcomes(cfg, p, kept_pair)
    live = [(prob, fid) for _, prob, fid in records if prob > 1e-14]
    total = math.fsum(prob for prob, _ in live)
    return math.fsum(prob * fid for prob, fid in live) / total


def _protocol_single(cfg, p, kept_pair, outcome):
    linalg.check_qubit_budget(cfg.qubits, what="protocol simulation")
    if cfg.N < 2:
        raise InputError(f"protocol needs N >= 2, got N={cfg.N}")
    i, j = kept_pair
    if not (0 <= i < cfg.N and 0 <= j < cfg.N and i != j):
        raise InputError(f"kept pair {kept_pair} invalid for N={cfg.N}")
    kept = sorted((i, j))
    measured = [b for b in range(cfg.N) if b not in kept]
    if len(outcome) != len(measured):
        raise InputError(f"expected {len(measured)} outcome bits, got {len(outcome)}")

    rho = _project_logical(cfg, decohered_cghz(cfg, p))
    weight = float(np.real(np.trace(rho)))

    m = cfg.m
    dim_b = 2**m
    # reorder blocks to (kept..., measured...); the measured logical states
    # |0_L>, |1_L> are computational basis vectors, so conditioning on an
    # outcome record is direct indexing
    order = kept + measured
    axes = order + [cfg.N + b for b in order]
    t = rho.reshape((dim_b,) * (2 * cfg.N)).transpose(axes)
    dk, dm = dim_b**2, dim_b ** (cfg.N - 2)
    t = t.reshape(dk, dm, dk, dm)
    idx = 0
    for bit in outcome:
        idx = idx * dim_b + (dim_b - 1 if bit else 0)
    cond = np.ascontiguousarray(t[:, idx, :, idx])
    prob = float(np.real(np.trace(cond))) / weight if weight > 0 else 0.0
    if prob <= 1e-14:
        return tuple(outcome), prob, float("nan")
    cond = cond / np.trace(cond)
    if sum(outcome) % 2 == 1:
        flip = linalg.kron_all([linalg.PAULI_X] * m)
        corr = np.kron(flip, np.eye(dim_b))
        cond = corr @ cond @ corr.conj().T
    zero, one = _logical_vectors(m)
    bell = (np.kron(zero, zero) + np.kron(one, one)) / np.sqrt(2)
    fid = float(np.real(bell.conj() @ cond @ bell))
    return tuple(outcome), prob, fid
