"""Exploratory: does the compiled S = H-bar . CZ-bar step mirror a chain?

Compiled S on an n-cell single-species chain:
    [ CouplingWindow({A-A}, pi/4), Z-bar(-pi/4), H-bar ]
The window+dressing equals exact CZ on every adjacent pair only at the chain
ends (degree 1); interior cells pick up an extra e^{i pi/4 Z}.  Question:
for which k is S^k = (local frame) x (spatial reversal)?
"""
import sys

sys.path.insert(0, "src")
import numpy as np

from globalchain.layout import LayoutConfig, build_layout
from globalchain.pulses import CouplingWindow, PulseSchedule, ScheduleMeta, SpeciesUnitary
from globalchain.dense import (
    reversal_permutation_matrix,
    schedule_unitary,
    equivalent_up_to_phase,
)

np.set_printoptions(linewidth=200, precision=3, suppress=True)


def compiled_S(n):
    layout = build_layout(LayoutConfig(n_comp=n, blocks=1, code_id="bare"))
    sched = PulseSchedule(
        [
            CouplingWindow(["A-A"], np.pi / 4),
            SpeciesUnitary("A", ("Z", -np.pi / 4)),
            SpeciesUnitary("A", "H"),
        ],
        ScheduleMeta("S", 0),
    )
    return schedule_unitary(sched, layout)


def true_S(n):
    """H-bar times exact CZ on every adjacent pair."""
    layout = build_layout(LayoutConfig(n_comp=n, blocks=1, code_id="bare"))
    dim = 2**n
    cz_all = np.ones(dim, dtype=complex)
    for i in range(n - 1):
        bi = (np.arange(dim) >> (n - 1 - i)) & 1
        bj = (np.arange(dim) >> (n - 1 - (i + 1))) & 1
        cz_all = cz_all * np.where((bi & bj) == 1, -1.0, 1.0)
    h = PulseSchedule([SpeciesUnitary("A", "H")], ScheduleMeta())
    hbar = schedule_unitary(h, layout)
    return hbar @ np.diag(cz_all)


def try_factor_local(M, n, tol=1e-8):
    """If M = V_1 x ... x V_n (up to phase), return the list of 2x2 factors."""
    rest = M.copy()
    factors = []
    dim_rest = 2**n
    for j in range(n):
        m = dim_rest // 2
        blocks = rest.reshape(2, m, 2, m)
        # choose reference indices from the largest entry
        flat = np.argmax(np.abs(blocks))
        a0, r0, b0, c0 = np.unravel_index(flat, blocks.shape)
        V = blocks[:, r0, :, c0].copy()
        nrm = np.linalg.norm(V) / np.sqrt(2)
        if nrm < 1e-12:
            return None
        V = V / nrm
        sub = blocks[a0, :, b0, :] / V[a0, b0]
        approx = np.einsum("ab,rc->arbc", V, sub).reshape(rest.shape)
        if np.max(np.abs(approx - rest)) > tol * max(1.0, np.max(np.abs(rest))):
            return None
        factors.append(V)
        rest = sub
        dim_rest = m
    return factors


def find_mirror(U, n, kmax):
    R = reversal_permutation_matrix(n)
    acc = np.eye(2**n, dtype=complex)
    hits = []
    for k in range(1, kmax + 1):
        acc = U @ acc
        fac = try_factor_local(acc @ R, n)
        if fac is not None:
            hits.append((k, fac))
    return hits


for n in range(2, 7):
    U = compiled_S(n)
    hits = find_mirror(U, n, 6 * (n + 1))
    print(f"compiled n={n}: mirror k values: {[k for k, _ in hits]}")
    if hits:
        k, fac = hits[0]
        print(f"  first k={k}, frames:")
        for j, V in enumerate(fac):
            print(f"   site {j}: ", np.round(V, 3).tolist())

print()
for n in range(2, 7):
    U = true_S(n)
    hits = find_mirror(U, n, 6 * (n + 1))
    print(f"true     n={n}: mirror k values: {[k for k, _ in hits]}")
    if hits:
        k, fac = hits[0]
        print(f"  first k={k}, frames:")
        for j, V in enumerate(fac):
            print(f"   site {j}: ", np.round(V, 3).tolist())
