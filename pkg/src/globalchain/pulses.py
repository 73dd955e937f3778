"""Global-pulse vocabulary, schedules, legality checks and serialization.

Exactly three pulse forms exist, and none of them can address an individual
site: a species-wide single-qubit gate, a coupling window that evolves every
adjacent cell pair of the chosen species pairs under exp(i*angle*ZZ), and the
species-C reset.  Everything the compiler emits is a sequence of these.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Union

from .layout import ChainLayout

# Unordered species pairs a coupling window may activate.  Same-species pairs
# are physically un-refocusable (a species-wide X flips both partners, leaving
# ZZ invariant), so they are part of the vocabulary: mirror cycles run on them.
CANONICAL_PAIRS = ("A-A", "A-B", "A-C", "B-B", "B-C", "C-C")


def canonical_pair(a: str, b: str = "") -> str:
    if not b:
        a, b = a.split("-")
    lo, hi = sorted((a, b))
    return f"{lo}-{hi}"


@dataclass(frozen=True)
class SpeciesUnitary:
    """The same single-qubit gate applied to every cell of one species.

    gate is "H", "X", or ("Z", theta) meaning exp(i*theta*Z).
    """

    species: str
    gate: Union[str, tuple[str, float]]

    def gate_name(self) -> str:
        return self.gate if isinstance(self.gate, str) else self.gate[0]

    def theta(self) -> float:
        if isinstance(self.gate, str):
            raise ValueError(f"gate {self.gate} carries no angle")
        return self.gate[1]


@dataclass(frozen=True)
class CouplingWindow:
    """exp(i*angle*ZZ) on every adjacent cell pair whose species pair is
    active; all other adjacent pairs are decoupled for the duration."""

    pairs: frozenset[str]
    angle: float

    def __init__(self, pairs: Iterable[str], angle: float):
        object.__setattr__(
            self, "pairs", frozenset(canonical_pair(p) for p in pairs)
        )
        object.__setattr__(self, "angle", float(angle))


@dataclass(frozen=True)
class ResetC:
    """Project every C cell to |0>, regardless of its prior state."""


GlobalPulse = Union[SpeciesUnitary, CouplingWindow, ResetC]


@dataclass(frozen=True)
class _SiteAddressedPulse:
    """Deliberately illegal pulse used only to exercise the validator."""

    site: int
    gate: str


@dataclass
class ScheduleMeta:
    gadget: str = ""
    level: int = 0
    params: dict = field(default_factory=dict)


@dataclass
class PulseSchedule:
    pulses: tuple
    meta: ScheduleMeta = field(default_factory=ScheduleMeta)

    def __init__(self, pulses: Iterable[GlobalPulse], meta: ScheduleMeta | None = None):
        self.pulses = tuple(pulses)
        self.meta = meta or ScheduleMeta()

    def __len__(self) -> int:
        return len(self.pulses)

    def __add__(self, other: "PulseSchedule") -> "PulseSchedule":
        return PulseSchedule(self.pulses + other.pulses, self.meta)

    def inverse(self) -> "PulseSchedule":
        """Reversed pulse order with negated angles; H and X are involutions.

        Raises on ResetC, which has no inverse.
        """
        inv: list[GlobalPulse] = []
        for p in reversed(self.pulses):
            if isinstance(p, ResetC):
                raise ValueError("ResetC is not invertible")
            if isinstance(p, SpeciesUnitary):
                if isinstance(p.gate, tuple):
                    inv.append(SpeciesUnitary(p.species, ("Z", -p.gate[1])))
                else:
                    inv.append(p)
            elif isinstance(p, CouplingWindow):
                inv.append(CouplingWindow(p.pairs, -p.angle))
            else:
                inv.append(p)
        meta = ScheduleMeta(self.meta.gadget + "_inverse", self.meta.level, dict(self.meta.params))
        return PulseSchedule(inv, meta)


@dataclass
class ValidationReport:
    legal: bool
    violations: list[tuple[int, str]] = field(default_factory=list)
    warnings: list[tuple[int, str]] = field(default_factory=list)


def validate_schedule(schedule: PulseSchedule) -> ValidationReport:
    """Syntactic legality: only the three global forms, no site addressing."""
    violations: list[tuple[int, str]] = []
    warnings: list[tuple[int, str]] = []
    for i, p in enumerate(schedule.pulses):
        if isinstance(p, ResetC):
            continue
        if isinstance(p, SpeciesUnitary):
            if p.species not in ("A", "B", "C"):
                violations.append((i, f"unknown species {p.species!r}"))
            if isinstance(p.gate, str):
                if p.gate not in ("H", "X"):
                    violations.append((i, f"unknown gate {p.gate!r}"))
            elif isinstance(p.gate, tuple) and len(p.gate) == 2 and p.gate[0] == "Z":
                theta = p.gate[1]
                if not math.isfinite(theta):
                    violations.append((i, "non-finite angle"))
                elif abs(theta) > 2 * math.pi:
                    warnings.append((i, "Z angle beyond 2*pi (normalization)"))
            else:
                violations.append((i, f"malformed gate {p.gate!r}"))
            continue
        if isinstance(p, CouplingWindow):
            if not p.pairs:
                violations.append((i, "empty pair set"))
            for pr in p.pairs:
                if pr not in CANONICAL_PAIRS:
                    violations.append((i, f"unknown species pair {pr!r}"))
            if not math.isfinite(p.angle):
                violations.append((i, "non-finite angle"))
            continue
        if hasattr(p, "site"):
            violations.append((i, "site addressing"))
        else:
            violations.append((i, f"unknown pulse kind {type(p).__name__}"))
    return ValidationReport(not violations, violations, warnings)


def touched_cells(pulse: GlobalPulse, layout: ChainLayout) -> list[int]:
    """Cells on which the pulse acts nontrivially."""
    if isinstance(pulse, ResetC):
        return layout.cells_of_species("C")
    if isinstance(pulse, SpeciesUnitary):
        return layout.cells_of_species(pulse.species)
    if isinstance(pulse, CouplingWindow):
        cells: set[int] = set()
        for pr in pulse.pairs:
            for i, j in layout.adjacent_pairs(pr):
                cells.add(i)
                cells.add(j)
        return sorted(cells)
    raise TypeError(f"not a global pulse: {pulse!r}")


@dataclass
class CostRecord:
    total_pulses: int
    per_qubit: list[int]

    def max_per_qubit(self) -> int:
        return max(self.per_qubit) if self.per_qubit else 0


def schedule_cost(schedule: PulseSchedule, layout: ChainLayout) -> CostRecord:
    """Pulse count plus, per cell, the number of pulses touching it."""
    per = [0] * len(layout)
    for p in schedule.pulses:
        for c in touched_cells(p, layout):
            per[c] += 1
    return CostRecord(len(schedule.pulses), per)


def _pulse_to_dict(p: GlobalPulse) -> dict:
    if isinstance(p, SpeciesUnitary):
        gate = p.gate if isinstance(p.gate, str) else {"Z": p.gate[1]}
        return {"op": "species_unitary", "species": p.species, "gate": gate}
    if isinstance(p, CouplingWindow):
        return {"op": "coupling", "pairs": sorted(p.pairs), "angle": p.angle}
    if isinstance(p, ResetC):
        return {"op": "reset_c"}
    raise TypeError(f"cannot serialize pulse {p!r}")


def serialize(schedule: PulseSchedule) -> str:
    doc = {
        "meta": {
            "gadget": schedule.meta.gadget,
            "level": schedule.meta.level,
            "params": schedule.meta.params,
        },
        "pulses": [_pulse_to_dict(p) for p in schedule.pulses],
    }
    return json.dumps(doc, sort_keys=True)


class ParseError(ValueError):
    pass


def _pulse_from_dict(d: dict) -> GlobalPulse:
    op = d.get("op")
    if op == "species_unitary":
        species = d.get("species")
        gate = d.get("gate")
        if species not in ("A", "B", "C"):
            raise ParseError(f"unknown species {species!r}")
        if gate in ("H", "X"):
            return SpeciesUnitary(species, gate)
        if isinstance(gate, dict) and set(gate) == {"Z"}:
            theta = gate["Z"]
            if not isinstance(theta, (int, float)) or not math.isfinite(theta):
                raise ParseError("non-finite Z angle")
            return SpeciesUnitary(species, ("Z", float(theta)))
        raise ParseError(f"unknown gate {gate!r}")
    if op == "coupling":
        pairs = d.get("pairs")
        angle = d.get("angle")
        if not isinstance(pairs, list) or not pairs:
            raise ParseError("coupling needs a nonempty pair list")
        for pr in pairs:
            if pr not in CANONICAL_PAIRS:
                raise ParseError(f"unknown species pair {pr!r}")
        if not isinstance(angle, (int, float)) or not math.isfinite(angle):
            raise ParseError("non-finite coupling angle")
        return CouplingWindow(pairs, float(angle))
    if op == "reset_c":
        return ResetC()
    raise ParseError(f"unknown pulse kind {op!r}")


def parse(text: str) -> PulseSchedule:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    if "pulses" not in doc:
        raise ParseError("missing pulses field")
    meta_doc = doc.get("meta", {})
    meta = ScheduleMeta(
        gadget=meta_doc.get("gadget", ""),
        level=int(meta_doc.get("level", 0)),
        params=meta_doc.get("params", {}),
    )
    pulses = [_pulse_from_dict(d) for d in doc["pulses"]]
    return PulseSchedule(pulses, meta)
