"""Pauli-string algebra in the binary symplectic representation.

A Pauli on n qubits is stored as two length-n bit vectors (x, z) plus a
phase exponent r, meaning i^r * prod_j X_j^x[j] Z_j^z[j] with the X factor
written to the left of the Z factor on each site.  This module is shared by
the stabilizer simulator, the mirror-cycle oracle, and the code machinery.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_CHAR_TO_XZ = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_XZ_TO_CHAR = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}

# Dense 2x2 matrices, used when cross-checking against the state-vector backend.
PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass
class Pauli:
    """Phased Pauli string: i^r * X^x Z^z (sitewise)."""

    x: np.ndarray
    z: np.ndarray
    r: int = 0  # phase exponent mod 4

    @classmethod
    def identity(cls, n: int) -> "Pauli":
        return cls(np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8), 0)

    @classmethod
    def from_string(cls, s: str) -> "Pauli":
        """Parse e.g. 'IXZY' or '-XZ' or 'iXX'; leftmost char = qubit 0."""
        r = 0
        if s.startswith("-i"):
            r, s = 3, s[2:]
        elif s.startswith("i"):
            r, s = 1, s[1:]
        elif s.startswith("-"):
            r, s = 2, s[1:]
        elif s.startswith("+"):
            s = s[1:]
        x = np.zeros(len(s), dtype=np.uint8)
        z = np.zeros(len(s), dtype=np.uint8)
        for j, c in enumerate(s):
            if c not in _CHAR_TO_XZ:
                raise ValueError(f"bad Pauli character {c!r}")
            x[j], z[j] = _CHAR_TO_XZ[c]
            # Y = iXZ, so each Y contributes a phase i to match the (x,z) form.
            if c == "Y":
                r = (r + 1) % 4
        return cls(x, z, r)

    @property
    def n(self) -> int:
        return len(self.x)

    def copy(self) -> "Pauli":
        return Pauli(self.x.copy(), self.z.copy(), self.r)

    def weight(self) -> int:
        return int(np.count_nonzero(self.x | self.z))

    def support(self) -> list[int]:
        return [int(j) for j in np.nonzero(self.x | self.z)[0]]

    def phase(self) -> complex:
        return 1j ** (self.r % 4)

    def __mul__(self, other: "Pauli") -> "Pauli":
        """Operator product self * other with exact phase tracking."""
        if self.n != other.n:
            raise ValueError("length mismatch")
        # Moving other's X factors left past self's Z factors: ZX = -XZ.
        anti = int(np.dot(self.z.astype(int), other.x.astype(int)))
        r = (self.r + other.r + 2 * anti) % 4
        return Pauli(self.x ^ other.x, self.z ^ other.z, r)

    def commutes(self, other: "Pauli") -> bool:
        a = int(np.dot(self.x.astype(int), other.z.astype(int)))
        b = int(np.dot(self.z.astype(int), other.x.astype(int)))
        return (a + b) % 2 == 0

    def to_string(self, with_sign: bool = True) -> str:
        # Undo the Y-phase convention so Y prints as Y, not iXZ.
        r = self.r
        chars = []
        for j in range(self.n):
            c = _XZ_TO_CHAR[(int(self.x[j]), int(self.z[j]))]
            if c == "Y":
                r = (r - 1) % 4
            chars.append(c)
        sign = {0: "+", 1: "i", 2: "-", 3: "-i"}[r % 4]
        body = "".join(chars)
        return (sign + body) if with_sign else body

    def __repr__(self) -> str:  # pragma: no cover
        return f"Pauli({self.to_string()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pauli):
            return NotImplemented
        return (
            bool(np.array_equal(self.x, other.x))
            and bool(np.array_equal(self.z, other.z))
            and self.r % 4 == other.r % 4
        )

    def equal_up_to_phase(self, other: "Pauli") -> bool:
        return bool(np.array_equal(self.x, other.x)) and bool(
            np.array_equal(self.z, other.z)
        )

    def to_matrix(self) -> np.ndarray:
        """Dense 2^n x 2^n matrix of i^r * prod X^x Z^z; qubit 0 is the most
        significant tensor factor."""
        m = np.array([[self.phase()]], dtype=complex)
        for j in range(self.n):
            site = PAULI_MATS["X"] if self.x[j] else PAULI_MATS["I"]
            if self.z[j]:
                site = site @ PAULI_MATS["Z"]
            m = np.kron(m, site)
        return m


def conjugate_by_hadamard(p: Pauli, sites: np.ndarray) -> Pauli:
    """H on the given sites: X<->Z, Y -> -Y."""
    q = p.copy()
    xs = q.x[sites].copy()
    zs = q.z[sites].copy()
    # Y sites pick up a sign: HYH = -Y.
    flips = int(np.count_nonzero(xs & zs))
    q.x[sites], q.z[sites] = zs, xs
    q.r = (q.r + 2 * flips) % 4
    return q


def conjugate_by_phase_gate(p: Pauli, sites: np.ndarray, dagger: bool = False) -> Pauli:
    """S on the given sites: X -> Y, Y -> -X, Z -> Z (S = diag(1, i)).

    With dagger=True applies S^-1: X -> -Y, Y -> X.
    """
    q = p.copy()
    xs = q.x[sites]
    zs = q.z[sites]
    if dagger:
        # S† X S = -Y ; S† Y S = X
        flips = int(np.count_nonzero(xs & ~zs.astype(bool)))
    else:
        # S X S† = Y ; S Y S† = -X
        flips = int(np.count_nonzero(xs & zs))
    q.z[sites] = zs ^ xs
    q.r = (q.r + 2 * flips) % 4
    return q


def conjugate_by_cz(p: Pauli, a: int, b: int) -> Pauli:
    """CZ on pair (a, b): X_a -> X_a Z_b, X_b -> X_b Z_a, Z untouched.

    Sign rule: CZ (X⊗X) CZ = -(Y⊗Y), equivalently a -1 appears iff both
    sites carry an X component.
    """
    q = p.copy()
    if q.x[a] and q.x[b]:
        q.r = (q.r + 2) % 4
    if q.x[a]:
        q.z[b] ^= 1
    if q.x[b]:
        q.z[a] ^= 1
    return q


def symplectic_product(p: Pauli, q: Pauli) -> int:
    """0 if commuting, 1 if anticommuting."""
    a = int(np.dot(p.x.astype(int), q.z.astype(int)))
    b = int(np.dot(p.z.astype(int), q.x.astype(int)))
    return (a + b) % 2


def paulis_span_contains(basis: list[Pauli], target: Pauli) -> bool:
    """GF(2) membership of target's (x|z) vector in the span of basis vectors."""
    if not basis:
        return target.weight() == 0
    rows = np.array([np.concatenate([b.x, b.z]) for b in basis], dtype=np.uint8)
    t = np.concatenate([target.x, target.z]).astype(np.uint8)
    m = rows.copy()
    vec = t.copy()
    pivot_cols: list[int] = []
    r = 0
    for c in range(m.shape[1]):
        rr = None
        for i in range(r, m.shape[0]):
            if m[i, c]:
                rr = i
                break
        if rr is None:
            continue
        m[[r, rr]] = m[[rr, r]]
        for i in range(m.shape[0]):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        pivot_cols.append(c)
        r += 1
        if r == m.shape[0]:
            break
    # reduce the target vector
    r = 0
    for c in pivot_cols:
        if vec[c]:
            vec ^= m[r]
        r += 1
    return not vec.any()
