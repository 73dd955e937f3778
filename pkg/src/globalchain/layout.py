"""Recursive three-species chain geometry.

The chain is built from computational blocks of one species (A at the top
level) joined by interconnects.  Writing A~k for the level-k block, B~k for
the same block with the roles of species A and B exchanged, and D~k for the
level-k interconnect:

    A~0  = n_comp bare A spins
    A~-1 = two bare A spins          (likewise B~-1; used only inside D~0)
    D~k  = C  (+)  B~(k-1)  (+)  C
    A~k  = (A~(k-1) (+) D~(k-1)) ** (n_comp - 1)  (+)  A~(k-1)     k >= 1

and the full chain at level L is  A~L (+) (D~L (+) A~L) ** (blocks - 1).
The two C spins of an interconnect never multiply with the level, which is
what keeps interface costs level-independent.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

SPECIES = ("A", "B", "C")
ROLES = ("data", "syndrome", "ancilla", "wire", "reset")

# physical qubits per logical, stabilizer count -- what the role map needs.
CODE_INTERIOR = {"bare": (1, 0), "steane": (7, 6)}


class LayoutError(ValueError):
    """Raised for configurations that violate the geometry contract."""


@dataclass(frozen=True)
class LayoutConfig:
    """Chain geometry parameters.

    n_comp:       cells per computational block.
    level:        concatenation level of the top-level blocks (>= 0).
    blocks:       number of top-level computational blocks.
    code_id:      which code's interior role map to apply ("bare", "steane").
    syndrome_pad: extra edge syndrome/ancilla cells per half-block, beyond the
                  code's stabilizer count (bare blocks with reset-test roles).
    role_scheme:  "monolithic" packs each logical qubit's cells contiguously
                  with syndromes at the block edges; "comb" interleaves one
                  data and one ancilla cell per two-cell block (used by the
                  fault-tolerant EC round).
    """

    n_comp: int
    level: int = 0
    blocks: int = 1
    code_id: str = "bare"
    syndrome_pad: int = 0
    role_scheme: str = "monolithic"


@dataclass
class LayoutNode:
    kind: str  # "A-block" | "B-block" | "interconnect" | "C-cell" | "leaf-spin"
    level: int
    span: tuple[int, int]  # half-open [lo, hi)
    species: str | None = None  # for leaf-spin / C-cell
    children: list["LayoutNode"] = field(default_factory=list)

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind, "level": self.level, "span": list(self.span)}
        if self.species is not None:
            d["species"] = self.species
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d


@dataclass
class ChainLayout:
    cells: list[tuple[str, str]]  # (species, role) per chain position
    root: LayoutNode
    config: LayoutConfig
    mirror_symmetric: bool = True
    data_cells: list[int] = field(default_factory=list)
    syndrome_cells: list[int] = field(default_factory=list)
    ancilla_cells: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def species_string(self) -> str:
        return "".join(s for s, _ in self.cells)

    def cells_of_species(self, species: str) -> list[int]:
        return [i for i, (s, _) in enumerate(self.cells) if s == species]

    def adjacent_pairs(self, pair: str) -> list[tuple[int, int]]:
        """Adjacent index pairs whose species set matches e.g. 'A-C'."""
        want = frozenset(pair.split("-"))
        out = []
        for i in range(len(self.cells) - 1):
            if frozenset((self.cells[i][0], self.cells[i + 1][0])) == want:
                out.append((i, i + 1))
        return out

    def to_json(self) -> str:
        doc = {
            "config": {
                "n_comp": self.config.n_comp,
                "level": self.config.level,
                "blocks": self.config.blocks,
                "code_id": self.config.code_id,
                "syndrome_pad": self.config.syndrome_pad,
                "role_scheme": self.config.role_scheme,
            },
            "cells": [{"species": s, "role": r} for s, r in self.cells],
            "tree": self.root.to_dict(),
        }
        return json.dumps(doc, indent=1, sort_keys=True)


def _build_block(species: str, level: int, n_comp: int, start: int) -> LayoutNode:
    """Block of the given species at the given level, spans start onward."""
    other = "B" if species == "A" else "A"
    kind = f"{species}-block"
    if level == -1:
        leaves = [
            LayoutNode("leaf-spin", -1, (start + j, start + j + 1), species)
            for j in range(2)
        ]
        return LayoutNode(kind, -1, (start, start + 2), species, leaves)
    if level == 0:
        leaves = [
            LayoutNode("leaf-spin", 0, (start + j, start + j + 1), species)
            for j in range(n_comp)
        ]
        return LayoutNode(kind, 0, (start, start + n_comp), species, leaves)
    children: list[LayoutNode] = []
    pos = start
    for rep in range(n_comp):
        child = _build_block(species, level - 1, n_comp, pos)
        children.append(child)
        pos = child.span[1]
        if rep < n_comp - 1:
            inter = _build_interconnect(other, level - 1, n_comp, pos)
            children.append(inter)
            pos = inter.span[1]
    return LayoutNode(kind, level, (start, pos), species, children)


def _build_interconnect(inner_species: str, level: int, n_comp: int, start: int) -> LayoutNode:
    """D~level: C (+) inner-block at level-1 (+) C."""
    left = LayoutNode("C-cell", level, (start, start + 1), "C")
    inner = _build_block(inner_species, level - 1, n_comp, start + 1)
    pos = inner.span[1]
    right = LayoutNode("C-cell", level, (pos, pos + 1), "C")
    return LayoutNode("interconnect", level, (start, pos + 1), None, [left, inner, right])


def _flatten_species(node: LayoutNode, out: list[str]) -> None:
    if node.kind in ("leaf-spin", "C-cell"):
        out.append(node.species or "C")
        return
    for c in node.children:
        _flatten_species(c, out)


def _half_block_roles(code_id: str, syndrome_pad: int, half: int) -> list[str]:
    n_phys, n_stab = CODE_INTERIOR[code_id]
    n_syn = n_stab + syndrome_pad if code_id != "bare" else syndrome_pad
    n_data = half - n_syn
    if n_data < n_phys:
        raise LayoutError(
            f"n_comp too small for code {code_id!r}: half-block has {half} cells, "
            f"needs {n_phys} data + {n_syn} syndrome"
        )
    extra = n_data - n_phys
    # syndromes packed at the block edge (adjacent to the C spins), then any
    # spare cells as ancillae, then the data cells toward the block center.
    return ["syndrome"] * n_syn + ["ancilla"] * extra + ["data"] * n_phys


def _block_roles(config: LayoutConfig) -> list[str]:
    n = config.n_comp
    if config.role_scheme == "comb":
        if n != 2:
            raise LayoutError("comb role scheme requires two-cell blocks")
        return ["data", "ancilla"]
    if config.code_id == "bare" and config.syndrome_pad == 0:
        return ["data"] * n
    if n % 2 != 0:
        raise LayoutError("mirror-symmetric interior needs an even n_comp")
    half = _half_block_roles(config.code_id, config.syndrome_pad, n // 2)
    return half + half[::-1]


def build_layout(config: LayoutConfig) -> ChainLayout:
    """Build the chain for the given configuration and assign cell roles."""
    if config.n_comp < 1:
        raise LayoutError("n_comp must be positive")
    if config.level < 0:
        raise LayoutError("level must be >= 0")
    if config.blocks < 1:
        raise LayoutError("blocks must be positive")
    if config.code_id not in CODE_INTERIOR:
        raise LayoutError(f"unknown code_id {config.code_id!r}")
    if config.role_scheme not in ("monolithic", "comb"):
        raise LayoutError(f"unknown role_scheme {config.role_scheme!r}")

    block_roles = _block_roles(config)  # validates sizes

    children: list[LayoutNode] = []
    pos = 0
    for rep in range(config.blocks):
        blk = _build_block("A", config.level, config.n_comp, pos)
        children.append(blk)
        pos = blk.span[1]
        if rep < config.blocks - 1:
            inter = _build_interconnect("B", config.level, config.n_comp, pos)
            children.append(inter)
            pos = inter.span[1]
    if config.blocks == 1:
        root = children[0]
    else:
        root = LayoutNode("chain", config.level, (0, pos), None, children)

    species: list[str] = []
    _flatten_species(root, species)

    # Role assignment: C cells reset; bare interconnect pairs carry the wire
    # role for species B and ancilla for species A (role-swapped interconnects);
    # level-0 encoding blocks take the code's mirror-symmetric interior map.
    roles = ["data"] * len(species)

    def assign(node: LayoutNode) -> None:
        if node.kind == "C-cell":
            roles[node.span[0]] = "reset"
            return
        if node.kind.endswith("-block") and node.level == -1:
            r = "wire" if node.species == "B" else "ancilla"
            for j in range(*node.span):
                roles[j] = r
            return
        if node.kind.endswith("-block") and node.level == 0:
            lo, hi = node.span
            for j, r in enumerate(block_roles):
                roles[lo + j] = r
            return
        for c in node.children:
            assign(c)

    assign(root)

    cells = list(zip(species, roles))
    mirror = config.role_scheme != "comb"
    layout = ChainLayout(
        cells=cells,
        root=root,
        config=config,
        mirror_symmetric=mirror,
        data_cells=[i for i, (_, r) in enumerate(cells) if r == "data"],
        syndrome_cells=[i for i, (_, r) in enumerate(cells) if r == "syndrome"],
        ancilla_cells=[i for i, (_, r) in enumerate(cells) if r == "ancilla"],
    )
    return layout


def fragment_layout(species: str, roles: list[str] | None = None) -> ChainLayout:
    """Hand-built chain from a species string like 'ACBBCA'.

    Used for gadget verification instances that are not products of the block
    recursion (a lone interface pair, a capped wire, ...).  Roles default to
    reset on C, wire on B, data on A.
    """
    n = len(species)
    if roles is None:
        roles = [
            {"A": "data", "B": "wire", "C": "reset"}[s] for s in species
        ]
    if len(roles) != n:
        raise LayoutError("roles length mismatch")
    leaves = [
        LayoutNode("leaf-spin", 0, (i, i + 1), s) for i, s in enumerate(species)
    ]
    root = LayoutNode("fragment", 0, (0, n), None, leaves)
    cells = list(zip(species, roles))
    return ChainLayout(
        cells=cells,
        root=root,
        config=LayoutConfig(n_comp=n, level=0, blocks=1, code_id="bare"),
        mirror_symmetric=False,
        data_cells=[i for i, (_, r) in enumerate(cells) if r == "data"],
        syndrome_cells=[i for i, (_, r) in enumerate(cells) if r == "syndrome"],
        ancilla_cells=[i for i, (_, r) in enumerate(cells) if r == "ancilla"],
    )


def cell_at(layout: ChainLayout, index: int) -> tuple[str, str]:
    if not 0 <= index < len(layout):
        raise IndexError(f"cell index {index} outside chain of length {len(layout)}")
    return layout.cells[index]


def spans_of(layout: ChainLayout, kind: str, level: int | None = None) -> list[tuple[int, int]]:
    """Ordered spans of every node matching kind (and level, if given)."""
    out: list[tuple[int, int]] = []

    def walk(node: LayoutNode) -> None:
        if node.kind == kind and (level is None or node.level == level):
            out.append(node.span)
        for c in node.children:
            walk(c)

    walk(layout.root)
    return out


@dataclass
class LayoutReport:
    ok: bool
    violation: str | None = None


def verify_layout_invariants(layout: ChainLayout) -> LayoutReport:
    """Check tiling, recursion shape, interconnect pattern and mirror symmetry."""

    def check_tiling(node: LayoutNode) -> str | None:
        if not node.children:
            if node.span[1] - node.span[0] != 1:
                return "leaf span length"
            return None
        pos = node.span[0]
        for c in node.children:
            if c.span[0] != pos:
                return "tiling gap"
            pos = c.span[1]
            err = check_tiling(c)
            if err:
                return err
        if pos != node.span[1]:
            return "tiling mismatch"
        return None

    err = check_tiling(layout.root)
    if err:
        return LayoutReport(False, err)

    # interconnect pattern: C, inner block, C; at level 0 that flattens to CBBC
    for node_kind in ("interconnect",):
        def walk(node: LayoutNode) -> str | None:
            if node.kind == node_kind:
                kinds = [c.kind for c in node.children]
                if len(kinds) != 3 or kinds[0] != "C-cell" or kinds[2] != "C-cell":
                    return "interconnect pattern"
                if not kinds[1].endswith("-block"):
                    return "interconnect pattern"
                if node.level == 0:
                    seq = layout.species_string[node.span[0]:node.span[1]]
                    if not (seq[0] == "C" and seq[-1] == "C" and len(seq) == 4):
                        return "interconnect pattern"
            for c in node.children:
                sub = walk(c)
                if sub:
                    return sub
            return None

        err = walk(layout.root)
        if err:
            return LayoutReport(False, err)

    flat: list[str] = []
    _flatten_species(layout.root, flat)
    if flat != [s for s, _ in layout.cells]:
        return LayoutReport(False, "flattening mismatch")

    if layout.mirror_symmetric:
        seq = layout.species_string
        if seq != seq[::-1]:
            return LayoutReport(False, "species mirror symmetry")
        roles = [r for _, r in layout.cells]
        if roles != roles[::-1]:
            return LayoutReport(False, "role mirror symmetry")

    return LayoutReport(True, None)


def layout_from_json(text: str) -> ChainLayout:
    doc = json.loads(text)
    cfg = LayoutConfig(**doc["config"])
    layout = build_layout(cfg)
    cells = [(c["species"], c["role"]) for c in doc["cells"]]
    if cells != layout.cells:
        raise LayoutError("serialized cells disagree with rebuilt layout")
    return layout
