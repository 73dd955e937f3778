"""Stabilizer code definitions, lookup decoding, and the EC-round reference.

The architecture leaves the inner code open; we ship the trivial single-qubit
"code" for machinery tests and the [[7,1,3]] self-dual CSS code, whose
transversal controlled-phase is what the intra-block gadget relies on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .paulis import Pauli, paulis_span_contains


@dataclass
class CodeSpec:
    name: str
    n_physical: int
    k_logical: int
    stabilizers: list[Pauli]
    logical_x: Pauli
    logical_z: Pauli
    distance: int
    transversal_cz: bool
    # CSS check matrix rows (same matrix for X- and Z-type checks here)
    check_matrix: np.ndarray | None = None
    # lookup tables: syndrome integer -> correction bit row, plus a flag for
    # entries that required weight above floor((d-1)/2)
    _x_table: np.ndarray | None = field(default=None, repr=False)
    _z_table: np.ndarray | None = field(default=None, repr=False)
    _flag_table: np.ndarray | None = field(default=None, repr=False)

    @property
    def n_stabilizers(self) -> int:
        return len(self.stabilizers)

    def x_type_indices(self) -> list[int]:
        return [i for i, g in enumerate(self.stabilizers) if not g.z.any()]

    def z_type_indices(self) -> list[int]:
        return [i for i, g in enumerate(self.stabilizers) if not g.x.any()]


class CodeError(ValueError):
    pass


def _binary_check_matrix_713() -> np.ndarray:
    """Rows are parity checks; column j is the binary expansion of j+1."""
    h = np.zeros((3, 7), dtype=np.uint8)
    for col in range(7):
        v = col + 1
        for row in range(3):
            h[row, col] = (v >> row) & 1
    return h


def _build_lookup(h: np.ndarray, n: int, t: int) -> tuple[np.ndarray, np.ndarray]:
    """Minimal-weight lookup table over all syndromes of the binary code.

    Returns (table, flags): table[s] is the correction bit row for syndrome
    integer s; flags[s] marks entries that needed weight beyond t.  Ties break
    on the lexicographically first support (deterministic decoding).
    """
    m = h.shape[0]
    table = np.zeros((2**m, n), dtype=np.uint8)
    flags = np.zeros(2**m, dtype=bool)
    seen = {0}
    for w in range(1, n + 1):
        for supp in combinations(range(n), w):
            e = np.zeros(n, dtype=np.uint8)
            e[list(supp)] = 1
            s = 0
            for row in range(m):
                bit = int(np.dot(h[row], e)) & 1
                s |= bit << row
            if s not in seen:
                table[s] = e
                flags[s] = w > t
                seen.add(s)
        if len(seen) == 2**m:
            break
    return table, flags


def builtin_code(code_id: str) -> CodeSpec:
    if code_id == "bare":
        return CodeSpec(
            name="bare",
            n_physical=1,
            k_logical=1,
            stabilizers=[],
            logical_x=Pauli.from_string("X"),
            logical_z=Pauli.from_string("Z"),
            distance=1,
            transversal_cz=True,
            check_matrix=np.zeros((0, 1), dtype=np.uint8),
        )
    if code_id == "steane":
        h = _binary_check_matrix_713()
        gens: list[Pauli] = []
        for row in h:
            gens.append(Pauli.from_string("".join("X" if b else "I" for b in row)))
        for row in h:
            gens.append(Pauli.from_string("".join("Z" if b else "I" for b in row)))
        x_table, flags = _build_lookup(h, 7, t=1)
        code = CodeSpec(
            name="steane",
            n_physical=7,
            k_logical=1,
            stabilizers=gens,
            logical_x=Pauli.from_string("XXXXXXX"),
            logical_z=Pauli.from_string("ZZZZZZZ"),
            distance=3,
            transversal_cz=True,
            check_matrix=h,
        )
        code._x_table = x_table
        code._z_table = x_table.copy()  # self-dual: same matrix both sides
        code._flag_table = flags
        return code
    raise CodeError(f"unknown code id {code_id!r}")


def syndrome_of(code: CodeSpec, error: Pauli) -> tuple[int, ...]:
    """Bit per generator: 1 iff the error anticommutes with it."""
    if error.n != code.n_physical:
        raise CodeError("error length mismatch")
    return tuple(0 if error.commutes(g) else 1 for g in code.stabilizers)


@dataclass
class Decoded:
    correction: Pauli
    beyond_guarantee: bool


def decode(code: CodeSpec, syndrome) -> Decoded:
    """Minimal-weight table lookup; deterministic; flags syndromes whose best
    match needed weight beyond the code's correction guarantee."""
    syndrome = tuple(int(b) for b in syndrome)
    if len(syndrome) != code.n_stabilizers:
        raise CodeError(
            f"syndrome length {len(syndrome)} != {code.n_stabilizers} generators"
        )
    n = code.n_physical
    if not code.stabilizers:
        return Decoded(Pauli.identity(n), False)
    xi = code.x_type_indices()
    zi = code.z_type_indices()
    # X-type generators flag Z errors and vice versa.
    s_for_z = sum(syndrome[g] << k for k, g in enumerate(xi))
    s_for_x = sum(syndrome[g] << k for k, g in enumerate(zi))
    x_bits = code._x_table[s_for_x]
    z_bits = code._z_table[s_for_z]
    flag = bool(code._flag_table[s_for_x] or code._flag_table[s_for_z])
    corr = Pauli(x_bits.copy(), z_bits.copy(), 0)
    return Decoded(corr, flag)


@dataclass
class ReferenceOutcome:
    syndrome: tuple[int, ...]
    correction: Pauli
    residual: Pauli
    z_memory_failure: bool  # residual anticommutes with logical Z
    x_memory_failure: bool  # residual anticommutes with logical X


def ec_round_reference(code: CodeSpec, injected: Pauli) -> ReferenceOutcome:
    """Circuit-free oracle: syndrome of the injected Pauli, lookup decode,
    compose, and test the logical action of the residual."""
    syn = syndrome_of(code, injected)
    dec = decode(code, syn)
    residual = dec.correction * injected
    return ReferenceOutcome(
        syndrome=syn,
        correction=dec.correction,
        residual=residual,
        z_memory_failure=not residual.commutes(code.logical_z),
        x_memory_failure=not residual.commutes(code.logical_x),
    )


def verify_code(code: CodeSpec) -> list[str]:
    """Structural checks; returns a list of violations (empty = sound)."""
    problems = []
    for i, g in enumerate(code.stabilizers):
        for j, h in enumerate(code.stabilizers[i + 1:], start=i + 1):
            if not g.commutes(h):
                problems.append(f"generators {i} and {j} anticommute")
    for name, op in (("X", code.logical_x), ("Z", code.logical_z)):
        for i, g in enumerate(code.stabilizers):
            if not op.commutes(g):
                problems.append(f"logical {name} anticommutes with generator {i}")
    if code.logical_x.commutes(code.logical_z):
        problems.append("logical X and Z commute")
    return problems


def transversal_cz_preserves_code(code: CodeSpec) -> bool:
    """Direct computation that pairwise CZ between two code blocks maps the
    joint stabilizer group to itself.

    Under CZ on pair j, X_j of one block picks up Z_j of the other; so an
    X-type generator g maps to g times the Z string on supp(g) in the partner
    block, which must lie in the partner's Z-stabilizer group.  Z-type
    generators are untouched.
    """
    if not code.stabilizers:
        return True
    z_gens = [code.stabilizers[i] for i in code.z_type_indices()]
    # include the logical Z: CZ must preserve the code space, and the logical
    # X picks up the full Z string of the partner block
    z_group_basis = z_gens + [code.logical_z]
    for i in code.x_type_indices():
        g = code.stabilizers[i]
        induced = Pauli(np.zeros(code.n_physical, np.uint8), g.x.copy(), 0)
        if not paulis_span_contains(z_group_basis, induced):
            return False
    induced_logical = Pauli(
        np.zeros(code.n_physical, np.uint8), code.logical_x.x.copy(), 0
    )
    if not paulis_span_contains(z_group_basis, induced_logical):
        return False
    return True
