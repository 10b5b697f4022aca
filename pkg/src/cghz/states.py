"""State constructors: GHZ, concatenated GHZ, DFS-encoded blocks, doublet Hadamard.

A block configuration (N, m) means N logical blocks of m physical qubits.
The concatenated state is the balanced superposition of the N-fold tensor
powers of the two m-qubit GHZ states,

    (1/sqrt2) (|GHZ_m^+>^(x)N + |GHZ_m^->^(x)N).

A *doublet* is the two-dimensional span of a basis string and its bitwise
complement; decohered GHZ-block operators are block diagonal over doublets,
which is what the doublet Hadamard below aligns.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InputError


@dataclass(frozen=True)
class BlockConfig:
    """N logical blocks of m physical qubits each."""

    N: int
    m: int

    def __post_init__(self):
        if self.N < 1 or self.m < 1:
            raise InputError(f"block configuration needs N >= 1 and m >= 1, got {self}")

    @property
    def qubits(self):
        return self.N * self.m


def ghz(m, sign=+1):
    """(|0...0> + sign |1...1>)/sqrt2 on m qubits."""
    if sign not in (+1, -1):
        raise InputError("sign must be +1 or -1")
    linalg.check_qubit_budget(m, what="ghz state")
    v = np.zeros(2**m, dtype=complex)
    v[0] = 1 / np.sqrt(2)
    v[-1] = sign / np.sqrt(2)
    return v


def cghz(cfg):
    """Concatenated GHZ state vector for a block configuration."""
    linalg.check_qubit_budget(cfg.qubits, what="cghz state")
    plus = ghz(cfg.m, +1)
    minus = ghz(cfg.m, -1)
    vp, vm = plus, minus
    for _ in range(cfg.N - 1):
        vp = np.kron(vp, plus)
        vm = np.kron(vm, minus)
    return (vp + vm) / np.sqrt(2)


def dfs_ghz(m, sign=+1):
    """(|01>^(m/2) + sign |10>^(m/2))/sqrt2, invariant under collective dephasing.

    Both branches have equal 0/1 counts, so exp(-i theta sum sigma_z) acts as
    the identity on the state.
    """
    if sign not in (+1, -1):
        raise InputError("sign must be +1 or -1")
    if m % 2 != 0:
        raise InputError(f"DFS encoding needs an even number of qubits, got m={m}")
    linalg.check_qubit_budget(m, what="dfs state")
    zero_one = np.zeros(4, dtype=complex)
    zero_one[0b01] = 1
    one_zero = np.zeros(4, dtype=complex)
    one_zero[0b10] = 1
    va = linalg.kron_all([zero_one] * (m // 2)).reshape(-1)
    vb = linalg.kron_all([one_zero] * (m // 2)).reshape(-1)
    return (va + sign * vb) / np.sqrt(2)


def doublet_representative(k, m):
    """Canonical member of the doublet {k, ~k}: lower Hamming weight, ties by lower integer."""
    comp = (~k) & ((1 << m) - 1)
    wk, wc = bin(k).count("1"), bin(comp).count("1")
    if wk != wc:
        return k if wk < wc else comp
    return min(k, comp)


def logical_hadamard(m):
    """Unitary acting as the 2x2 Hadamard inside every doublet {|k>, |~k>}.

    Maps |GHZ_m^+> to |0>^m and |GHZ_m^-> to |1>^m; squares to the identity.
    The canonical doublet member (see doublet_representative) plays the role
    of |0> in each 2x2 block.
    """
    linalg.check_qubit_budget(m, what="logical hadamard")
    dim = 1 << m
    u = np.zeros((dim, dim), dtype=complex)
    r = 1 / np.sqrt(2)
    for k in range(dim):
        rep = doublet_representative(k, m)
        comp = (~rep) & (dim - 1)
        if k != rep:
            continue
        u[rep, rep] = r
        u[comp, rep] = r
        u[rep, comp] = r
        u[comp, comp] = -r
    return u


def random_orthogonal_pair(m, seed):
    """Two Haar-random orthonormal vectors in 2**m dimensions, deterministic per seed.

    Columns of a complex Gaussian matrix are orthonormalized; the resulting
    two-frame is Haar distributed.
    """
    if m > 6:
        raise InputError(f"random pairs are capped at m <= 6, got m={m}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((2**m, 2)) + 1j * rng.standard_normal((2**m, 2))
    q, r = np.linalg.qr(g)
    # fix the phase ambiguity of QR so results are reproducible across BLAS builds
    phases = r.diagonal() / np.abs(r.diagonal())
    q = q * phases.conj()
    return q[:, 0].copy(), q[:, 1].copy()
