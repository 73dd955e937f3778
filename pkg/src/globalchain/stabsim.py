"""Stabilizer-tableau and Pauli-frame backends for noisy Clifford schedules.

Two engines share the pulse semantics:

* StabilizerTableau: an Aaronson-Gottesman tableau (destabilizers plus
  stabilizers with phase bits) for exact stabilizer-state evolution, used to
  cross-check the dense backend and to verify encoded-state claims.
* FrameEnsemble: a batch of Pauli error frames propagated through the
  schedule's Clifford conjugation action over GF(2).  Syndrome readout and
  logical-failure flags are commutation questions, so signs are not needed
  and the whole Monte Carlo vectorizes over trials.

Noise: after every pulse each touched qubit independently suffers X, Y or Z
with probability eps/3 each; untouched qubits likewise with eps_idle/3.
A coupling window counts as one operation on each qubit of each active pair;
ResetC clears the C cells' frames.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import pi
from typing import Callable

import numpy as np

from .layout import ChainLayout
from .paulis import Pauli
from .pulses import (
    CouplingWindow,
    PulseSchedule,
    ResetC,
    SpeciesUnitary,
    touched_cells,
)


class NonCliffordError(ValueError):
    pass


def _angle_quarter_turns(angle: float, what: str) -> int:
    k = angle / (pi / 4)
    k_int = round(k)
    if abs(k - k_int) > 1e-9:
        raise NonCliffordError(f"{what} angle {angle} is not a multiple of pi/4")
    return k_int % 8


@dataclass
class NoiseModel:
    eps: float
    eps_idle: float = 0.0
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if not (0.0 <= self.eps <= 1.0 and 0.0 <= self.eps_idle <= 1.0):
            raise ValueError("error probabilities must lie in [0, 1]")


# --------------------------------------------------------------------------
# exact tableau engine

class StabilizerTableau:
    """CHP tableau over n qubits: rows 0..n-1 destabilizers, n..2n-1
    stabilizers; phases r in {0,1,2,3} for the powers of i."""

    def __init__(self, n: int):
        self.n = n
        self.x = np.zeros((2 * n, n), dtype=np.uint8)
        self.z = np.zeros((2 * n, n), dtype=np.uint8)
        self.r = np.zeros(2 * n, dtype=np.uint8)
        for i in range(n):
            self.x[i, i] = 1
            self.z[n + i, i] = 1

    # -- core row operation -------------------------------------------------
    @staticmethod
    def _g(x1, z1, x2, z2):
        """Aaronson-Gottesman per-site phase exponents for R1 * R2 (rows hold
        sitewise true Paulis, phases as powers of i)."""
        x1 = x1.astype(np.int64)
        z1 = z1.astype(np.int64)
        x2 = x2.astype(np.int64)
        z2 = z2.astype(np.int64)
        out = np.zeros_like(x1)
        both = (x1 == 1) & (z1 == 1)
        only_x = (x1 == 1) & (z1 == 0)
        only_z = (x1 == 0) & (z1 == 1)
        out[both] = z2[both] - x2[both]
        out[only_x] = z2[only_x] * (2 * x2[only_x] - 1)
        out[only_z] = x2[only_z] * (1 - 2 * z2[only_z])
        return out

    def _rowmult(self, h: int, i: int) -> None:
        """Row h := (row i) * (row h); valid sign handling for commuting rows."""
        g = self._g(self.x[i], self.z[i], self.x[h], self.z[h])
        self.r[h] = (self.r[h] + self.r[i] + int(np.sum(g))) % 4
        self.x[h] ^= self.x[i]
        self.z[h] ^= self.z[i]

    # -- gates ---------------------------------------------------------------
    def h(self, q: int) -> None:
        self.r = (self.r + 2 * self.x[:, q] * self.z[:, q]) % 4
        self.x[:, q], self.z[:, q] = self.z[:, q].copy(), self.x[:, q].copy()

    def s(self, q: int) -> None:
        self.r = (self.r + 2 * self.x[:, q] * self.z[:, q]) % 4
        self.z[:, q] ^= self.x[:, q]

    def sdg(self, q: int) -> None:
        self.s(q)
        self.s(q)
        self.s(q)

    def zgate(self, q: int) -> None:
        self.s(q)
        self.s(q)

    def xgate(self, q: int) -> None:
        self.h(q)
        self.zgate(q)
        self.h(q)

    def ygate(self, q: int) -> None:
        self.zgate(q)
        self.xgate(q)

    def cnot(self, ctrl: int, tgt: int) -> None:
        self.r = (
            self.r
            + 2 * self.x[:, ctrl] * self.z[:, tgt] * (self.x[:, tgt] ^ self.z[:, ctrl] ^ 1)
        ) % 4
        self.x[:, tgt] ^= self.x[:, ctrl]
        self.z[:, ctrl] ^= self.z[:, tgt]

    def cz(self, a: int, b: int) -> None:
        self.h(b)
        self.cnot(a, b)
        self.h(b)

    def apply_pauli(self, p: Pauli) -> None:
        for j in p.support():
            if p.x[j] and p.z[j]:
                self.ygate(j)
            elif p.x[j]:
                self.xgate(j)
            else:
                self.zgate(j)

    # -- measurement and reset ------------------------------------------------
    def measure(self, q: int, rng: np.random.Generator) -> int:
        n = self.n
        p = None
        for row in range(n, 2 * n):
            if self.x[row, q]:
                p = row
                break
        if p is not None:
            for row in range(2 * n):
                if row != p and self.x[row, q]:
                    self._rowmult(row, p)
            self.x[p - n] = self.x[p].copy()
            self.z[p - n] = self.z[p].copy()
            self.r[p - n] = self.r[p]
            outcome = int(rng.integers(0, 2))
            self.x[p] = 0
            self.z[p] = 0
            self.z[p, q] = 1
            self.r[p] = 2 * outcome
            return outcome
        sx = np.zeros(self.n, dtype=np.uint8)
        sz = np.zeros(self.n, dtype=np.uint8)
        sr = 0
        for j in range(n):
            if self.x[j, q]:
                g = self._g(self.x[n + j], self.z[n + j], sx, sz)
                sr = (sr + int(self.r[n + j]) + int(np.sum(g))) % 4
                sx ^= self.x[n + j]
                sz ^= self.z[n + j]
        return 1 if sr == 2 else 0

    def reset(self, q: int, rng: np.random.Generator) -> None:
        if self.measure(q, rng) == 1:
            self.xgate(q)

    # -- pulse application -----------------------------------------------------
    def apply_pulse(self, pulse, layout: ChainLayout, rng: np.random.Generator) -> None:
        if isinstance(pulse, SpeciesUnitary):
            cells = layout.cells_of_species(pulse.species)
            if pulse.gate == "H":
                for c in cells:
                    self.h(c)
            elif pulse.gate == "X":
                for c in cells:
                    self.xgate(c)
            else:
                k = _angle_quarter_turns(pulse.theta(), "Z rotation")
                for c in cells:
                    for _ in range(k % 4):
                        self.sdg(c)
            return
        if isinstance(pulse, CouplingWindow):
            k = _angle_quarter_turns(pulse.angle, "coupling window")
            for pr in sorted(pulse.pairs):
                for a, b in layout.adjacent_pairs(pr):
                    for _ in range(k):
                        self.cz(a, b)
                        self.sdg(a)
                        self.sdg(b)
            return
        if isinstance(pulse, ResetC):
            for c in layout.cells_of_species("C"):
                self.reset(c, rng)
            return
        raise TypeError(f"unknown pulse {pulse!r}")

    def apply_schedule(self, schedule: PulseSchedule, layout: ChainLayout,
                       rng: np.random.Generator | None = None) -> None:
        rng = rng or np.random.default_rng(0)
        for p in schedule.pulses:
            self.apply_pulse(p, layout, rng)

    def stabilizer_generators(self) -> list[Pauli]:
        """Rows n..2n-1 converted to the X-left-of-Z phase convention."""
        n = self.n
        gens = []
        for i in range(n):
            x = self.x[n + i].copy()
            z = self.z[n + i].copy()
            n_y = int(np.count_nonzero(x & z))
            gens.append(Pauli(x, z, (int(self.r[n + i]) + n_y) % 4))
        return gens

    def stabilizes_dense(self, amplitudes: np.ndarray, tol: float = 1e-8) -> bool:
        """True iff every stabilizer generator fixes the dense state: the
        exact group-equality check between the two backends."""
        for g in self.stabilizer_generators():
            m = g.to_matrix()
            if np.max(np.abs(m @ amplitudes - amplitudes)) > tol:
                return False
        return True


# --------------------------------------------------------------------------
# vectorized Pauli-frame engine

@dataclass
class FrameEnsemble:
    """trials x n error frames over GF(2); signs are irrelevant for syndrome
    and failure questions, which are pure commutation."""

    x: np.ndarray
    z: np.ndarray

    @classmethod
    def zeros(cls, trials: int, n: int) -> "FrameEnsemble":
        return cls(
            np.zeros((trials, n), dtype=np.uint8),
            np.zeros((trials, n), dtype=np.uint8),
        )

    @property
    def trials(self) -> int:
        return self.x.shape[0]

    @property
    def n(self) -> int:
        return self.x.shape[1]

    def inject(self, trial: int, p: Pauli) -> None:
        self.x[trial] ^= p.x
        self.z[trial] ^= p.z

    def conjugate_pulse(self, pulse, layout: ChainLayout) -> None:
        """Frame -> U . frame . U^dagger for the pulse's Clifford U."""
        if isinstance(pulse, SpeciesUnitary):
            cells = layout.cells_of_species(pulse.species)
            if pulse.gate == "H":
                for c in cells:
                    self.x[:, c], self.z[:, c] = self.z[:, c].copy(), self.x[:, c].copy()
            elif pulse.gate == "X":
                pass  # Pauli conjugation changes signs only
            else:
                k = _angle_quarter_turns(pulse.theta(), "Z rotation")
                if k % 2:
                    for c in cells:
                        self.z[:, c] ^= self.x[:, c]
            return
        if isinstance(pulse, CouplingWindow):
            k = _angle_quarter_turns(pulse.angle, "coupling window")
            if k % 2:
                for pr in sorted(pulse.pairs):
                    for a, b in layout.adjacent_pairs(pr):
                        za = self.x[:, a] ^ self.x[:, b]
                        self.z[:, a] ^= za
                        self.z[:, b] ^= za
            return
        if isinstance(pulse, ResetC):
            for c in layout.cells_of_species("C"):
                self.x[:, c] = 0
                self.z[:, c] = 0
            return
        raise TypeError(f"unknown pulse {pulse!r}")

    def add_noise(self, cells: list[int], prob: float, rng: np.random.Generator) -> int:
        """Independent X/Y/Z (prob/3 each) on the given cells, every trial.
        Returns the number of injected faults."""
        if prob <= 0.0 or not cells:
            return 0
        t = self.trials
        hit = rng.random((t, len(cells))) < prob
        kinds = rng.integers(0, 3, size=(t, len(cells)), dtype=np.int8)
        fx = (hit & (kinds != 2)).astype(np.uint8)  # X or Y
        fz = (hit & (kinds != 0)).astype(np.uint8)  # Y or Z
        self.x[:, cells] ^= fx
        self.z[:, cells] ^= fz
        return int(hit.sum())

    def readout_flips(self, cells: list[int], basis: str) -> np.ndarray:
        """Per-trial bit flips relative to the noiseless reference for a
        measurement of the given cells: X-basis outcomes flip where the frame
        has a Z component, Z-basis outcomes where it has an X component."""
        if basis == "X":
            return self.z[:, cells].copy()
        if basis == "Z":
            return self.x[:, cells].copy()
        raise ValueError(f"unknown basis {basis!r}")


# --------------------------------------------------------------------------
# programs: pulse phases interleaved with classical hooks

@dataclass
class PulsePhase:
    schedule: PulseSchedule
    noisy: bool = True


@dataclass
class ReadoutPhase:
    label: str
    cells: list[int]
    basis: str


@dataclass
class DecodePhase:
    # maps {label: trials x cells bit array} -> (corr_x, corr_z) over all cells
    handler: Callable[[dict[str, np.ndarray], int], tuple[np.ndarray, np.ndarray]]


@dataclass
class TrajectoryRecord:
    trials: int
    readouts: dict[str, np.ndarray]
    history: dict[str, list[np.ndarray]]
    final_x: np.ndarray
    final_z: np.ndarray
    fault_count: int
    pulse_count: int


def sample_noise(noise: NoiseModel, pulse, layout: ChainLayout,
                 rng: np.random.Generator) -> list[tuple[int, str]]:
    """Single-trial draw of the post-pulse errors: (cell, pauli) pairs."""
    out: list[tuple[int, str]] = []
    touched = set(touched_cells(pulse, layout))
    for c in range(len(layout)):
        p = noise.eps if c in touched else noise.eps_idle
        if p > 0 and rng.random() < p:
            out.append((c, "XYZ"[int(rng.integers(0, 3))]))
    return out


def run_program(
    phases: list,
    layout: ChainLayout,
    noise: NoiseModel,
    trials: int,
    rng: np.random.Generator | None = None,
    initial_frames: FrameEnsemble | None = None,
) -> TrajectoryRecord:
    """Propagate error frames through the program, injecting noise after every
    pulse of every noisy phase and running the classical hooks in order."""
    rng = rng or np.random.default_rng(noise.rng_seed)
    n = len(layout)
    frames = initial_frames or FrameEnsemble.zeros(trials, n)
    if frames.n != n:
        raise ValueError("frame width does not match layout")
    readouts: dict[str, np.ndarray] = {}
    history: dict[str, list[np.ndarray]] = {}
    faults = 0
    pulse_count = 0
    all_cells = list(range(n))
    for phase in phases:
        if isinstance(phase, PulsePhase):
            for pulse in phase.schedule.pulses:
                frames.conjugate_pulse(pulse, layout)
                pulse_count += 1
                if phase.noisy and noise.eps > 0:
                    cells = touched_cells(pulse, layout)
                    faults += frames.add_noise(cells, noise.eps, rng)
                    if noise.eps_idle > 0:
                        idle = [c for c in all_cells if c not in set(cells)]
                        faults += frames.add_noise(idle, noise.eps_idle, rng)
        elif isinstance(phase, ReadoutPhase):
            bits = frames.readout_flips(phase.cells, phase.basis)
            readouts[phase.label] = bits  # latest wins; decoders read this
            history.setdefault(phase.label, []).append(bits)
        elif isinstance(phase, DecodePhase):
            corr_x, corr_z = phase.handler(readouts, trials)
            frames.x ^= corr_x
            frames.z ^= corr_z
        else:
            raise TypeError(f"unknown phase {phase!r}")
    return TrajectoryRecord(
        trials=trials,
        readouts=readouts,
        history=history,
        final_x=frames.x,
        final_z=frames.z,
        fault_count=faults,
        pulse_count=pulse_count,
    )


def logical_failure(residual: Pauli, code) -> dict[str, bool]:
    """Failure flags of a residual frame: decode its syndrome perfectly, then
    test anticommutation with the logical operators (stabilizer-equivalent
    residuals therefore never count)."""
    from .qec import decode, syndrome_of

    dec = decode(code, syndrome_of(code, residual))
    res = dec.correction * residual
    return {
        "z_memory_failure": not res.commutes(code.logical_z),
        "x_memory_failure": not res.commutes(code.logical_x),
    }
