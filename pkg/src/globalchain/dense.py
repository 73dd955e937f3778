"""Exact state-vector and unitary backend for small chains.

Cell index equals qubit index, and the leftmost cell is the most significant
bit of the state index.  All pulse semantics live here: species-wide 1q gates,
exp(i*angle*ZZ) windows on active adjacent pairs, and the C reset (a channel,
implemented as projection with a product-form check so that an entangled C at
reset time raises instead of silently post-selecting).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import pi, sqrt

import numpy as np

from .layout import ChainLayout
from .pulses import CouplingWindow, PulseSchedule, ResetC, SpeciesUnitary

DENSE_MAX_QUBITS = 14
NORM_TOL = 1e-12
RESET_PRODUCT_TOL = 1e-8

_H = np.array([[1, 1], [1, -1]], dtype=complex) / sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)


def z_rotation(theta: float) -> np.ndarray:
    """exp(i*theta*Z)."""
    return np.array([[np.exp(1j * theta), 0], [0, np.exp(-1j * theta)]], dtype=complex)


def gate_matrix(pulse: SpeciesUnitary) -> np.ndarray:
    if pulse.gate == "H":
        return _H
    if pulse.gate == "X":
        return _X
    return z_rotation(pulse.theta())


class DenseLimitError(ValueError):
    pass


class EntangledResetError(RuntimeError):
    """A C cell was entangled at reset time; the compiler broke the contract
    that C holds a product state at every reset point."""


@dataclass
class StateVector:
    amplitudes: np.ndarray
    n: int

    @classmethod
    def zero(cls, n: int) -> "StateVector":
        amp = np.zeros(2**n, dtype=complex)
        amp[0] = 1.0
        return cls(amp, n)

    @classmethod
    def computational(cls, bits: str) -> "StateVector":
        n = len(bits)
        amp = np.zeros(2**n, dtype=complex)
        amp[int(bits, 2)] = 1.0
        return cls(amp, n)

    @classmethod
    def product(cls, single_qubit_states: list[np.ndarray]) -> "StateVector":
        amp = np.array([1.0], dtype=complex)
        for s in single_qubit_states:
            amp = np.kron(amp, np.asarray(s, dtype=complex))
        n = len(single_qubit_states)
        return cls(amp, n)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "StateVector":
        amp = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
        amp /= np.linalg.norm(amp)
        return cls(amp, n)

    def copy(self) -> "StateVector":
        return StateVector(self.amplitudes.copy(), self.n)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def fidelity(self, other: "StateVector") -> float:
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)) ** 2)


def _bit_values(n: int, cell: int) -> np.ndarray:
    """Bit of each basis index at the given cell (cell 0 = MSB)."""
    idx = np.arange(2**n)
    return (idx >> (n - 1 - cell)) & 1


def _apply_1q(arr: np.ndarray, mat: np.ndarray, cell: int, n: int) -> np.ndarray:
    """Apply a 2x2 matrix on one cell; arr may carry a trailing batch axis."""
    batched = arr.ndim == 2
    cols = arr.shape[1] if batched else 1
    t = arr.reshape([2] * n + ([cols] if batched else []))
    t = np.moveaxis(t, cell, 0)
    shape = t.shape
    t = t.reshape(2, -1)
    t = mat @ t
    t = t.reshape(shape)
    t = np.moveaxis(t, 0, cell)
    return t.reshape(arr.shape)


def _window_phases(layout: ChainLayout, pulse: CouplingWindow) -> np.ndarray:
    """Diagonal of the coupling-window unitary over the full chain."""
    n = len(layout)
    exponent = np.zeros(2**n)
    for pr in pulse.pairs:
        for i, j in layout.adjacent_pairs(pr):
            zi = 1 - 2 * _bit_values(n, i)
            zj = 1 - 2 * _bit_values(n, j)
            exponent = exponent + zi * zj
    return np.exp(1j * pulse.angle * exponent)


def _apply_pulse_array(arr: np.ndarray, pulse, layout: ChainLayout) -> np.ndarray:
    n = len(layout)
    if isinstance(pulse, SpeciesUnitary):
        mat = gate_matrix(pulse)
        for c in layout.cells_of_species(pulse.species):
            arr = _apply_1q(arr, mat, c, n)
        return arr
    if isinstance(pulse, CouplingWindow):
        phases = _window_phases(layout, pulse)
        return arr * (phases[:, None] if arr.ndim == 2 else phases)
    raise TypeError(f"cannot apply pulse {pulse!r} as a unitary")


def _reset_cell(state: StateVector, cell: int, allow_entangled: bool) -> StateVector:
    n = state.n
    t = state.amplitudes.reshape([2] * n)
    t = np.moveaxis(t, cell, 0)
    branch0 = t[0].reshape(-1)
    branch1 = t[1].reshape(-1)
    # 2x2 reduced density matrix of the cell: entanglement check.
    p00 = np.vdot(branch0, branch0)
    p11 = np.vdot(branch1, branch1)
    p01 = np.vdot(branch1, branch0)
    rho = np.array([[p00, p01], [np.conj(p01), p11]], dtype=complex)
    purity = float(np.real(np.trace(rho @ rho)))
    if purity < 1.0 - RESET_PRODUCT_TOL and not allow_entangled:
        raise EntangledResetError(
            f"C cell {cell} entangled at reset (purity {purity:.6f}); "
            "a compiled gadget must keep C in product form at reset points"
        )
    if np.real(p00) >= 1e-24:
        new0 = branch0 / sqrt(np.real(p00))
    else:
        new0 = branch1 / sqrt(np.real(p11))
    out = np.zeros_like(t)
    out[0] = new0.reshape(out[0].shape)
    out = np.moveaxis(out, 0, cell)
    return StateVector(out.reshape(-1), n)


def apply_schedule(
    state: StateVector,
    schedule: PulseSchedule,
    layout: ChainLayout,
    allow_entangled_reset: bool = False,
) -> StateVector:
    """Apply each pulse in order; ResetC acts as the reset channel."""
    if state.n != len(layout):
        raise DenseLimitError(
            f"state of {state.n} qubits does not match layout of {len(layout)} cells"
        )
    out = state.copy()
    for p in schedule.pulses:
        if isinstance(p, ResetC):
            for c in layout.cells_of_species("C"):
                out = _reset_cell(out, c, allow_entangled_reset)
        else:
            out.amplitudes = _apply_pulse_array(out.amplitudes, p, layout)
    return out


def schedule_unitary(schedule: PulseSchedule, layout: ChainLayout) -> np.ndarray:
    """Full 2^n x 2^n matrix of a reset-free schedule."""
    n = len(layout)
    if n > DENSE_MAX_QUBITS:
        raise DenseLimitError(f"{n} qubits exceeds the dense ceiling of {DENSE_MAX_QUBITS}")
    if any(isinstance(p, ResetC) for p in schedule.pulses):
        raise DenseLimitError("schedule contains ResetC, which is not unitary")
    u = np.eye(2**n, dtype=complex)
    for p in schedule.pulses:
        u = _apply_pulse_array(u, p, layout)
    return u


@dataclass
class EquivalenceReport:
    equal_up_to_phase: bool
    max_deviation: float
    phase: float = 0.0
    dressing: list[int] | None = None

    def to_dict(self) -> dict:
        d = {
            "equal_up_to_phase": self.equal_up_to_phase,
            "max_deviation": self.max_deviation,
            "phase": self.phase,
        }
        if self.dressing is not None:
            d["dressing"] = self.dressing
        return d


def equivalent_up_to_phase(u: np.ndarray, v: np.ndarray, tol: float = 1e-10) -> EquivalenceReport:
    """True iff u = e^{i phi} v entrywise within tol, phi fixed by the largest
    entry of v."""
    if u.shape != v.shape:
        raise ValueError("dimension mismatch")
    flat = np.argmax(np.abs(v))
    ref = v.reshape(-1)[flat]
    if abs(ref) < 1e-14:
        dev = float(np.max(np.abs(u - v)))
        return EquivalenceReport(dev <= tol, dev, 0.0)
    phi = np.angle(u.reshape(-1)[flat] / ref)
    dev = float(np.max(np.abs(u - np.exp(1j * phi) * v)))
    return EquivalenceReport(dev <= tol, dev, float(phi))


def states_equal_up_to_phase(a: StateVector, b: StateVector, tol: float = 1e-10) -> bool:
    overlap = abs(np.vdot(a.amplitudes, b.amplitudes))
    return bool(abs(overlap - 1.0) <= tol)


def find_local_z_dressing(
    u: np.ndarray,
    target: np.ndarray,
    sites: list[int],
    n: int,
    tol: float = 1e-10,
) -> EquivalenceReport:
    """Search products of Z(k*pi/4), k in 0..7, on the listed sites such that
    dressing @ u equals target up to global phase."""
    if u.shape != target.shape:
        raise ValueError("dimension mismatch")
    ks = [0] * len(sites)
    best = EquivalenceReport(False, np.inf)
    total = 8 ** len(sites)
    for combo in range(total):
        c = combo
        for idx in range(len(sites)):
            ks[idx] = c % 8
            c //= 8
        d = u.copy()
        for site, k in zip(sites, ks):
            if k:
                d = _apply_1q(d, z_rotation(k * pi / 4), site, n)
        rep = equivalent_up_to_phase(d, target, tol)
        if rep.equal_up_to_phase:
            rep.dressing = list(ks)
            return rep
        if rep.max_deviation < best.max_deviation:
            best = rep
    best.dressing = None
    return best


def embed_local(unitaries: dict[int, np.ndarray], n: int) -> np.ndarray:
    """Tensor the given per-cell 2x2 unitaries (identity elsewhere)."""
    m = np.array([[1.0 + 0j]])
    for j in range(n):
        m = np.kron(m, unitaries.get(j, np.eye(2, dtype=complex)))
    return m


def reversal_permutation_matrix(n: int) -> np.ndarray:
    """Unitary that maps cell j to cell n-1-j."""
    dim = 2**n
    perm = np.zeros(dim, dtype=int)
    for idx in range(dim):
        bits = format(idx, f"0{n}b")
        perm[idx] = int(bits[::-1], 2)
    m = np.zeros((dim, dim), dtype=complex)
    m[perm, np.arange(dim)] = 1.0
    return m
