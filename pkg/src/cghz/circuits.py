"""Ion-trap preparation circuits: global MS gates, Z-layer sign conjugation,
Walsh-scheduled intra-block phase synthesis, exact phase accounting, and a
dense state-vector simulator.

Gates
-----
MS(xi)      global Molmer-Sorensen pulse prod_{k<l} exp(i xi X_k X_l); the
            angle is stored as an exact rational multiple of pi.
ZLayer(G)   exp(i (pi/2) sum_{k in G} sigma_z^k).  Conjugating a later MS
            gate by it flips the sign of xi on every pair with exactly one
            member in G, which is how interactions are cancelled.
Local(g, q) named single-qubit gate on qubit q.  Names: I, X, Y, Z, H, S,
            SDG, plus parametric phases "P<r>" with r a rational number,
            meaning diag(1, exp(i pi r)).

Text format (one gate per line, bit-exact round trip):

    QUBITS <n>
    MS <xi/pi as rational>
    Z <qubit> <qubit> ...
    L <name> <qubit>

Synthesis
---------
The block coupler schedules T = 2^ceil(log2 N) global MS pulses of angle
pi/(4T) whose accumulated pair phases follow Walsh sign codes, with a
Z layer between consecutive pulses toggling the blocks whose code bit
flips.  Walsh rows are orthogonal, so inter-block phases cancel exactly
while every intra-block pair accumulates pi/4.  The full preparation is
MS(pi/4), a local layer rotating the resulting product-pair branches onto
the z basis with a phase tuned so the two GHZ branches interleave
correctly, the coupler, and a final local layer that undoes the open
Z layers and rotates each block's branch pair onto the logical basis.
The construction is exact; simulation reproduces the concatenated GHZ
state to machine precision.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import InputError
from .states import BlockConfig, cghz


@dataclass(frozen=True)
class MSGate:
    xi: Fraction  # units of pi


@dataclass(frozen=True)
class ZLayer:
    qubits: tuple


@dataclass(frozen=True)
class LocalGate:
    name: str
    qubit: int


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple

    def __post_init__(self):
        for g in self.gates:
            if isinstance(g, ZLayer):
                bad = [q for q in g.qubits if not 0 <= q < self.n]
            elif isinstance(g, LocalGate):
                bad = [] if 0 <= g.qubit < self.n else [g.qubit]
            else:
                bad = []
            if bad:
                raise InputError(f"gate {g} addresses qubits {bad} outside 0..{self.n - 1}")


@dataclass(frozen=True)
class PhaseMatrix:
    """Symmetric matrix of accumulated pairwise XX phases, exact rationals of pi mod 2."""

    n: int
    xi: tuple  # tuple of tuples of Fraction

    def __getitem__(self, pair):
        k, l = pair
        return self.xi[k][l]


_LOCAL_GATES = {
    "I": np.eye(2, dtype=complex),
    "X": linalg.PAULI_X,
    "Y": linalg.PAULI_Y,
    "Z": linalg.PAULI_Z,
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "SDG": np.array([[1, 0], [0, -1j]], dtype=complex),
}


def local_unitary(name):
    """2x2 matrix for a named local gate, including parametric phases P<r>."""
    if name in _LOCAL_GATES:
        return _LOCAL_GATES[name]
    if name.startswith("P"):
        try:
            frac = Fraction(name[1:])
        except ValueError as exc:
            raise InputError(f"bad phase gate name {name!r}") from exc
        return np.array([[1, 0], [0, np.exp(1j * math.pi * float(frac))]], dtype=complex)
    raise InputError(f"unknown local gate {name!r}")


def phase_matrix(circuit: Circuit):
    """Effective pairwise XX phases of an MS/ZLayer circuit, exact mod 2 pi.

    Each Z layer toggles a per-qubit sign flag; an MS(xi) then contributes
    xi times the product of the two flags to every pair.  Local gates have
    no phase-algebra meaning and are rejected.
    """
    flags = [1] * circuit.n
    xi = [[Fraction(0)] * circuit.n for _ in range(circuit.n)]
    for g in circuit.gates:
        if isinstance(g, LocalGate):
            raise InputError("phase algebra is undefined for circuits with local gates")
        if isinstance(g, ZLayer):
            for q in g.qubits:
                flags[q] = -flags[q]
        else:
            for k in range(circuit.n):
                for l in range(k + 1, circuit.n):
                    xi[k][l] += g.xi * flags[k] * flags[l]
    for k in range(circuit.n):
        for l in range(k + 1, circuit.n):
            xi[k][l] %= 2
            xi[l][k] = xi[k][l]
    return PhaseMatrix(n=circuit.n, xi=tuple(tuple(row) for row in xi))


def _walsh_layers(N):
    """(pulse count T, list of block sets toggled between consecutive pulses)."""
    T = 1
    while T < N:
        T *= 2
    layers = []
    for t in range(1, T):
        mask = (t - 1) ^ t
        layers.append([b for b in range(N) if bin(b & mask).count("1") % 2 == 1])
    return T, layers


def _pair_rotation(k4):
    """Gates mapping the branch pair (|+> +/- nu |->)/sqrt2 to (|0>, |1>), nu = (-i)^k4.

    Returns (gate names in application order, phase picked up by each branch)
    with phases as Fractions of pi.
    """
    k4 = k4 % 4
    if k4 == 0:
        return (), Fraction(0), Fraction(0)
    if k4 == 2:
        return ("X",), Fraction(0), Fraction(0)
    if k4 == 3:  # nu = i: apply S then H
        return ("S", "H"), Fraction(1, 4), Fraction(-1, 4)
    # nu = -i: apply SDG then H
    return ("SDG", "H"), Fraction(-1, 4), Fraction(1, 4)


def synthesize_block_phase(cfg: BlockConfig):
    """Circuit whose pair phases are exactly pi/4 within blocks and 0 across.

    Power-of-two N uses exactly N MS pulses and N-1 Z layers; other N round
    the pulse count up to the next power of two (the Walsh schedule needs
    orthogonal sign rows, which do not exist for odd pulse counts), keeping
    the count linear and the total MS phase at pi/4 regardless.
    """
    N, m = cfg.N, cfg.m
    T, layers = _walsh_layers(N)
    xi = Fraction(1, 4 * T)
    gates = [MSGate(xi)]
    for blocks in layers:
        gates.append(ZLayer(tuple(b * m + j for b in blocks for j in range(m))))
        gates.append(MSGate(xi))
    return Circuit(n=cfg.qubits, gates=tuple(gates))


def correction_layers(cfg: BlockConfig):
    """(intermediate layer, final layer) of local gates for the preparation.

    Derived exactly: the MS(pi/4) pulse leaves each qubit in one of two
    orthogonal branch states depending on the GHZ branch; the intermediate
    layer rotates that pair onto the z basis and adds the per-qubit phase
    that sets the inter-branch phase to N pi/2, which makes the coupler
    output land on the concatenated-GHZ coefficient lattice.  The final
    layer cancels the open Z layers of the coupler, rotates each block's
    branch pair onto the logical basis, and applies the per-qubit phase
    closing the residual logical phase.
    """
    N, m = cfg.N, cfg.m
    n = cfg.qubits
    # intermediate layer: branch rotation for nu = (-i)^n, then phase delta
    rot_a, a_plus, a_minus = _pair_rotation(n)
    delta = (Fraction(N + 1, 2) - n * (a_minus - a_plus)) / n % 2
    mid = []
    for q in range(n):
        for name in rot_a:
            mid.append(LocalGate(name, q))
        if delta:
            mid.append(LocalGate(f"P{delta}", q))
    # final layer: undo open Z layers, rotate block pairs, close logical phase
    T, layers = _walsh_layers(N)
    residual = [0] * N
    for blocks in layers:
        for b in blocks:
            residual[b] += 1
    fin = []
    for b in range(N):
        if residual[b] % 2:
            for j in range(m):
                fin.append(LocalGate("Z", b * m + j))
    rot_c, b_plus, b_minus = _pair_rotation(m)
    for q in range(n):
        for name in rot_c:
            fin.append(LocalGate(name, q))
    beta = (Fraction(-1, 2) - m * (b_minus - b_plus)) % 2
    phase = beta / m % 2
    if phase:
        for q in range(n):
            fin.append(LocalGate(f"P{phase}", q))
    return tuple(mid), tuple(fin)


def synthesize_preparation(cfg: BlockConfig):
    """Full preparation: MS(pi/4), correction layer, block coupler, final layer.

    Total MS phase is exactly pi/2; for power-of-two N the circuit has N+1
    MS pulses and N-1 Z layers.
    """
    mid, fin = correction_layers(cfg)
    coupler = synthesize_block_phase(cfg)
    gates = (MSGate(Fraction(1, 4)),) + mid + coupler.gates + fin
    return Circuit(n=cfg.qubits, gates=gates)


def simulate(circuit: Circuit, state=None):
    """Apply the circuit to a state vector (default |0...0>), exactly, gate by gate."""
    linalg.check_qubit_budget(circuit.n, what="circuit simulation")
    n = circuit.n
    if state is None:
        psi = np.zeros(2**n, dtype=complex)
        psi[0] = 1.0
    else:
        psi = np.asarray(state, dtype=complex).copy()
        if psi.shape != (2**n,):
            raise InputError(f"state has dimension {psi.shape}, circuit needs {2**n}")
    idx = np.arange(2**n)
    for g in circuit.gates:
        if isinstance(g, MSGate):
            xi = float(g.xi) * math.pi
            c, s = math.cos(xi), math.sin(xi)
            for k in range(n):
                for l in range(k + 1, n):
                    flip = (1 << (n - 1 - k)) | (1 << (n - 1 - l))
                    psi = c * psi + 1j * s * psi[idx ^ flip]
        elif isinstance(g, ZLayer):
            phase = np.ones(2**n, dtype=complex)
            for q in g.qubits:
                bit = (idx >> (n - 1 - q)) & 1
                phase *= np.where(bit == 0, 1j, -1j)
            psi = phase * psi
        else:
            u = local_unitary(g.name)
            t = psi.reshape((2,) * n)
            t = np.tensordot(u, t, axes=([1], [g.qubit]))
            psi = np.moveaxis(t, 0, g.qubit).reshape(-1)
    return psi


def preparation_fidelity(cfg: BlockConfig, circuit=None):
    """|<cghz| circuit |0...0>| for the synthesized preparation."""
    if circuit is None:
        circuit = synthesize_preparation(cfg)
    psi = simulate(circuit)
    return float(abs(np.vdot(cghz(cfg), psi)))


def gate_counts(circuit: Circuit):
    """(ms_count, zlayer_count, total_ms_phase) with the phase an exact Fraction of pi."""
    ms = sum(1 for g in circuit.gates if isinstance(g, MSGate))
    zl = sum(1 for g in circuit.gates if isinstance(g, ZLayer))
    phase = sum((abs(g.xi) for g in circuit.gates if isinstance(g, MSGate)), Fraction(0))
    return ms, zl, phase


def export_circuit(circuit: Circuit):
    """Line-oriented text form; parse_circuit inverts it bit-exactly."""
    lines = [f"QUBITS {circuit.n}"]
    for g in circuit.gates:
        if isinstance(g, MSGate):
            lines.append(f"MS {g.xi}")
        elif isinstance(g, ZLayer):
            lines.append("Z " + " ".join(str(q) for q in g.qubits))
        else:
            lines.append(f"L {g.name} {g.qubit}")
    return "\n".join(lines) + "\n"


def parse_circuit(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("QUBITS"):
        raise InputError("circuit text must start with a QUBITS header")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise InputError(f"bad header {lines[0]!r}") from exc
    gates = []
    for ln in lines[1:]:
        parts = ln.split()
        kind = parts[0]
        if kind == "MS":
            if len(parts) != 2:
                raise InputError(f"bad MS line {ln!r}")
            gates.append(MSGate(Fraction(parts[1])))
        elif kind == "Z":
            gates.append(ZLayer(tuple(int(q) for q in parts[1:])))
        elif kind == "L":
            if len(parts) != 3:
                raise InputError(f"bad L line {ln!r}")
            local_unitary(parts[1])  # validate the name
            gates.append(LocalGate(parts[1], int(parts[2])))
        else:
            raise InputError(f"unknown gate line {ln!r}")
    return Circuit(n=n, gates=tuple(gates))
