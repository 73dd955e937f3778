"""Fault-tolerant error-correction round, compiled to global pulses.

Geometry.  One logical qubit occupies an interleaved chain of two-cell blocks,
one data cell and one ancilla cell each, separated by interconnects:

    [d0 a0] C B B C [d1 a1] C B B C ... [d6 a6]

Every adjacent A-A pair is one (data, ancilla) partner pair, so a single
coupling window plus the species dressing is an exact transversal CZ between
the data bank and the ancilla bank; no pulse ever addresses a site.

Extraction (Steane style).  With the ancilla bank prepared in the encoded
|+> state of the same self-dual code, transversal CZ followed by an X-basis
readout of the ancilla cells yields bits whose parity over each check-row
support is deterministic in the absence of errors and flips under data X
errors (or readout Z junk, which only adds syndrome noise).  One round
therefore corrects the X-error side and protects a logical-Z memory; the
dual round is the same pulses conjugated by the transversal Hadamard.

Fault containment.  Data cells interact only through the disjoint partner
windows: any single fault leaves at most a weight-one X error on the data
bank plus ancilla junk, so two faults are needed for a logical flip, which is
what the quadratic suppression measurement relies on.

Preparation of the encoded ancilla bank (and of the initial data state) is
initial-state machinery, not pulses: the paper defers in-block encoding to
the universal-computation layer, and the simulators prepare those states
directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import pi

import numpy as np

from .gadgets import CompileError, _meta, _swap_pulses, _z, _h
from .layout import ChainLayout, LayoutConfig, build_layout
from .pulses import CouplingWindow, PulseSchedule, ResetC, SpeciesUnitary
from .qec import CodeSpec
from .stabsim import (
    DecodePhase,
    FrameEnsemble,
    NoiseModel,
    PulsePhase,
    ReadoutPhase,
    run_program,
)


def ec_round_layout(code: CodeSpec) -> ChainLayout:
    """Interleaved (data, ancilla) chain for one logical qubit of the code."""
    return build_layout(
        LayoutConfig(
            n_comp=2,
            level=0,
            blocks=code.n_physical,
            code_id=code.name if code.name in ("bare", "steane") else "bare",
            role_scheme="comb",
        )
    )


@dataclass
class EcRoundProgram:
    """Compiled round: pulse phases plus classical readout/decode hooks."""

    phases: list
    schedule: PulseSchedule  # all pulses concatenated (legality, costing)
    layout: ChainLayout
    code: CodeSpec
    data_cells: list[int]
    anc_cells: list[int]
    claimed_action: dict
    basis: str = "Z"


def _decode_handler(code: CodeSpec, layout_n: int, data_cells, label: str,
                    correction_component: str):
    """Vectorized lookup decode: ancilla readout bits -> data corrections."""
    h = code.check_matrix
    table = code._x_table
    weights = 1 << np.arange(h.shape[0])

    def handler(readouts: dict[str, np.ndarray], trials: int):
        bits = readouts[label]
        syndromes = (bits @ h.T) % 2
        s_int = syndromes @ weights
        rows = table[s_int]  # trials x n_physical
        corr_x = np.zeros((trials, layout_n), dtype=np.uint8)
        corr_z = np.zeros((trials, layout_n), dtype=np.uint8)
        target = corr_x if correction_component == "X" else corr_z
        target[:, data_cells] ^= rows
        return corr_x, corr_z

    return handler


def compile_ec_round(
    code: CodeSpec,
    level: int,
    layout: ChainLayout | None = None,
    basis: str = "Z",
    include_reset: bool = True,
):
    """One fault-tolerant EC round protecting the logical-|basis| memory.

    basis "Z" corrects X errors; basis "X" runs the transversal-H conjugated
    twin and corrects Z errors.  The returned program interleaves pulse phases
    with the readout and lookup-decode hooks; recovery is applied as a tracked
    Pauli frame, never as extra pulses.
    """
    if level > 0:
        from .gadgets import _lift

        return _lift("ec_round", level, {"code": code.name, "basis": basis})
    if basis not in ("Z", "X"):
        raise CompileError("basis must be Z or X")
    if code.check_matrix is None or code.check_matrix.size == 0:
        if code.name != "bare":
            raise CompileError(f"code {code.name!r} has no check matrix")
    layout = layout or ec_round_layout(code)
    data_cells = layout.data_cells
    anc_cells = layout.ancilla_cells
    if len(data_cells) != code.n_physical or len(anc_cells) != code.n_physical:
        raise CompileError(
            f"layout provides {len(data_cells)} data / {len(anc_cells)} ancilla "
            f"cells, code needs {code.n_physical} of each"
        )

    transversal_cz = [CouplingWindow(["A-A"], pi / 4), _z("A", -pi / 4)]
    phases: list = []
    pulses: list = []

    def add_pulses(ps: list) -> None:
        phases.append(PulsePhase(PulseSchedule(ps, _meta("ec_round", 0))))
        pulses.extend(ps)

    if basis == "X":
        add_pulses([_h("A")])
    if code.name == "bare":
        # trivial code: nothing to extract; one idle step so the memory is
        # still exposed to per-operation noise
        add_pulses([_z("A", 0.0)])
    else:
        add_pulses(list(transversal_cz))
        phases.append(ReadoutPhase("anc_bits", anc_cells, "X"))
        comp = "X" if basis == "Z" else "Z"
        phases.append(
            DecodePhase(
                _decode_handler(code, len(layout), data_cells, "anc_bits", comp)
            )
        )
    if basis == "X":
        add_pulses([_h("A")])
    if include_reset:
        # erase the interconnect cells: ferry the C contents nowhere, just
        # clear the entropy sinks; the in-block ancilla bank is refreshed by
        # the preparation layer between rounds.
        add_pulses([ResetC()])

    sched = PulseSchedule(pulses, _meta("ec_round", 0, {"basis": basis, "code": code.name}))
    claimed = {
        "kind": "ec_round",
        "code": code.name,
        "basis": basis,
        "protects": f"logical {basis} memory",
        "corrects": "X errors" if basis == "Z" else "Z errors",
        "data_cells": data_cells,
        "anc_cells": anc_cells,
        "ancilla_prep": "encoded |+> bank supplied by the preparation layer",
    }
    return EcRoundProgram(
        phases=phases,
        schedule=sched,
        layout=layout,
        code=code,
        data_cells=data_cells,
        anc_cells=anc_cells,
        claimed_action=claimed,
        basis=basis,
    )


# --------------------------------------------------------------------------
# memory experiment harness

@dataclass
class MemoryResult:
    trials: int
    rounds: int
    failures: int
    fault_count: int
    pulse_count: int
    syndrome_histories: dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def failure_rate(self) -> float:
        return self.failures / self.trials if self.trials else 0.0


def final_perfect_decode(code: CodeSpec, frames_x: np.ndarray, frames_z: np.ndarray,
                         data_cells) -> dict[str, np.ndarray]:
    """Noiseless terminal round: decode the residual frame exactly, then test
    the corrected residual against the logical operators."""
    x = frames_x[:, data_cells] % 2
    z = frames_z[:, data_cells] % 2
    if code.check_matrix is not None and code.check_matrix.size:
        h = code.check_matrix
        weights = 1 << np.arange(h.shape[0])
        sx = ((x @ h.T) % 2) @ weights
        sz = ((z @ h.T) % 2) @ weights
        x = x ^ code._x_table[sx]
        z = z ^ code._z_table[sz]
    zbar = code.logical_z.z.astype(np.uint8)
    xbar = code.logical_x.x.astype(np.uint8)
    z_memory_fail = (x @ zbar) % 2 == 1  # residual anticommutes with logical Z
    x_memory_fail = (z @ xbar) % 2 == 1
    return {"z_memory": z_memory_fail.astype(bool), "x_memory": x_memory_fail.astype(bool)}


def run_memory_experiment(
    code: CodeSpec,
    noise: NoiseModel,
    trials: int,
    rounds: int = 1,
    basis: str = "Z",
    injections: list | None = None,
    seed: int | None = None,
) -> MemoryResult:
    """Noisy rounds of the compiled EC round on an encoded memory, closed by
    a perfect terminal decode; failures count flips of the protected logical.

    injections: optional per-trial Pauli (on the full chain) applied before
    the first round, used by the deterministic soundness checks.
    """
    program = compile_ec_round(code, 0, basis=basis)
    layout = program.layout
    rng = np.random.default_rng(noise.rng_seed if seed is None else seed)
    frames = FrameEnsemble.zeros(trials, len(layout))
    if injections is not None:
        for t, p in enumerate(injections):
            if p is not None:
                frames.inject(t, p)
    phases = list(program.phases) * rounds
    record = run_program(phases, layout, noise, trials, rng, initial_frames=frames)
    flags = final_perfect_decode(code, record.final_x, record.final_z, program.data_cells)
    key = "z_memory" if basis == "Z" else "x_memory"
    failures = int(flags[key].sum())
    return MemoryResult(
        trials=trials,
        rounds=rounds,
        failures=failures,
        fault_count=record.fault_count,
        pulse_count=record.pulse_count,
        syndrome_histories={k: np.stack(v) for k, v in record.history.items()},
    )
