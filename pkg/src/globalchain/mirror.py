"""Mirror-cycle oracle: how many automaton steps reverse a subchain.

One step of the mirror cellular automaton on an n-cell chain is
S = H-bar . CZ-bar with CZ-bar the exact controlled-Z on every adjacent pair.
The oracle iterates the step's Clifford conjugation action exactly (signs
included) and records the smallest k with S^k = spatial reversal together
with the residual local frame.  Nothing here assumes a value from prior work:
the table is measured, then cross-checked densely in the tests for small n.

Measured behaviour (and what the table will contain): k_mirror(n) = n + 1
with the identity frame, except n = 1 where a single step is the frame H.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .paulis import Pauli, conjugate_by_cz, conjugate_by_hadamard

MIRROR_TABLE_MAX_N = 16
_KMAX_FACTOR = 6  # search ceiling k <= _KMAX_FACTOR * (n + 1)


@dataclass(frozen=True)
class MirrorEntry:
    n: int
    k: int
    frame: tuple[str, ...]  # per-site frame labels, "I" or "H"


def _step_conjugate(p: Pauli, n: int) -> Pauli:
    """Heisenberg action of one exact automaton step: P -> S P S^dagger."""
    q = p
    for i in range(n - 1):
        q = conjugate_by_cz(q, i, i + 1)
    return conjugate_by_hadamard(q, np.arange(n))


def _is_reversal(paulis_x: list[Pauli], paulis_z: list[Pauli], n: int) -> bool:
    """True iff X_j -> +X_{n-1-j} and Z_j -> +Z_{n-1-j} for every j."""
    for j in range(n):
        tx = Pauli.identity(n)
        tx.x[n - 1 - j] = 1
        tz = Pauli.identity(n)
        tz.z[n - 1 - j] = 1
        if paulis_x[j] != tx or paulis_z[j] != tz:
            return False
    return True


@lru_cache(maxsize=None)
def mirror_entry(n: int) -> MirrorEntry:
    """Smallest k >= 1 with S^k = (local frame) x reversal, plus the frame."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        # S = H; one step "reverses" the singleton with frame H.
        return MirrorEntry(1, 1, ("H",))
    xs = []
    zs = []
    for j in range(n):
        px = Pauli.identity(n)
        px.x[j] = 1
        pz = Pauli.identity(n)
        pz.z[j] = 1
        xs.append(px)
        zs.append(pz)
    kmax = _KMAX_FACTOR * (n + 1)
    for k in range(1, kmax + 1):
        xs = [_step_conjugate(p, n) for p in xs]
        zs = [_step_conjugate(p, n) for p in zs]
        if _is_reversal(xs, zs, n):
            return MirrorEntry(n, k, tuple("I" for _ in range(n)))
    raise RuntimeError(f"no mirror found for n={n} within k<={kmax}")


def k_mirror(n: int) -> int:
    return mirror_entry(n).k


def mirror_table(max_n: int = MIRROR_TABLE_MAX_N) -> dict[int, MirrorEntry]:
    """Measured k_mirror and frames for 1 <= n <= max_n."""
    return {n: mirror_entry(n) for n in range(1, max_n + 1)}
